#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "censet/element.hpp"
#include "censet/error.hpp"

namespace censet {

// Uniform carrier for the three supported backends:
//   * finite   — carrier {0..n-1} with an explicit n x n operation table,
//                associativity checked over all n^3 triples at load;
//   * naturals — (N,+) with N = {1,2,...} (a semigroup, not a monoid);
//   * free     — nonempty words over a k-letter alphabet under concatenation.
// The commutativity flag is always computed, never taken from input.
class GroundSemigroup {
 public:
  static GroundSemigroup finite(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    if (n == 0) fail(ErrorKind::invalid_input, "finite semigroup needs a nonempty table");
    if (n > 64) fail(ErrorKind::invalid_input, "finite carrier capped at 64 elements");
    GroundSemigroup sg;
    sg.backend_ = Backend::finite;
    sg.size_ = n;
    sg.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n)
        fail(ErrorKind::invalid_input, "operation table is not square");
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n)
          fail(ErrorKind::invalid_input, "table entry out of carrier range");
        sg.table_[a * n + b] = table[a][b];
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (sg.at(sg.at(a, b), c) != sg.at(a, sg.at(b, c)))
            fail(ErrorKind::invalid_input,
                 "table is not associative at (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
    sg.commutative_ = true;
    for (std::size_t a = 0; a < n && sg.commutative_; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (sg.at(a, b) != sg.at(b, a)) {
          sg.commutative_ = false;
          break;
        }
    return sg;
  }

  static GroundSemigroup naturals() {
    GroundSemigroup sg;
    sg.backend_ = Backend::naturals;
    sg.commutative_ = true;
    return sg;
  }

  static GroundSemigroup free_semigroup(std::size_t alphabet) {
    if (alphabet == 0 || alphabet > 26)
      fail(ErrorKind::invalid_input, "free semigroup alphabet must be in 1..26");
    GroundSemigroup sg;
    sg.backend_ = Backend::free_words;
    sg.alphabet_ = alphabet;
    sg.commutative_ = alphabet <= 1;
    return sg;
  }

  Backend backend() const { return backend_; }
  bool commutative() const { return commutative_; }

  std::size_t carrier_size() const {
    if (backend_ != Backend::finite)
      fail(ErrorKind::invalid_input, "carrier_size is a finite-backend query");
    return size_;
  }

  std::size_t alphabet_size() const {
    if (backend_ != Backend::free_words)
      fail(ErrorKind::invalid_input, "alphabet_size is a free-backend query");
    return alphabet_;
  }

  bool valid(const Element& e) const {
    if (e.backend() != backend_) return false;
    switch (backend_) {
      case Backend::finite: return e.index() < size_;
      case Backend::naturals: return e.value() >= 1;
      case Backend::free_words:
        for (char c : e.letters())
          if (c < 'a' || static_cast<std::size_t>(c - 'a') >= alphabet_) return false;
        return !e.letters().empty();
    }
    return false;
  }

  void check(const Element& e, const char* what) const {
    if (!valid(e))
      fail(ErrorKind::invalid_input,
           std::string(what) + " is not a valid " + backend_name(backend_) + " element");
  }

  Element apply(const Element& a, const Element& b) const {
    check(a, "left operand");
    check(b, "right operand");
    switch (backend_) {
      case Backend::finite: return Element::finite(at(a.index(), b.index()));
      case Backend::naturals: return Element::nat(a.value() + b.value());
      case Backend::free_words: return Element::word(a.letters() + b.letters());
    }
    fail(ErrorKind::invalid_input, "unknown backend");
  }

  // First `count` carrier elements in canonical order: the whole carrier for
  // finite, 1..count for N, the shortlex prefix of the word enumeration for
  // free.  This is the single source of candidate order for bounded scans.
  std::vector<Element> window_elements(std::size_t count) const {
    std::vector<Element> out;
    switch (backend_) {
      case Backend::finite:
        for (std::size_t i = 0; i < size_ && out.size() < count; ++i)
          out.push_back(Element::finite(i));
        break;
      case Backend::naturals:
        for (std::uint64_t v = 1; out.size() < count; ++v)
          out.push_back(Element::nat(v));
        break;
      case Backend::free_words: {
        std::string w;
        while (out.size() < count) {
          // advance w to the next word in shortlex order
          std::size_t i = w.size();
          while (i > 0 && w[i - 1] == static_cast<char>('a' + alphabet_ - 1)) {
            w[i - 1] = 'a';
            --i;
          }
          if (i == 0)
            w.insert(w.begin(), 'a');
          else
            ++w[i - 1];
          out.push_back(Element::word(w));
        }
        break;
      }
    }
    return out;
  }

  std::vector<Element> carrier() const {
    if (backend_ != Backend::finite)
      fail(ErrorKind::invalid_input, "carrier() only enumerates finite backends");
    return window_elements(size_);
  }

 private:
  std::size_t at(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }

  Backend backend_ = Backend::naturals;
  std::size_t size_ = 0;
  std::size_t alphabet_ = 0;
  std::vector<std::size_t> table_;
  bool commutative_ = true;
};

// Fold of f(t) over t in H in ascending index order.  H is 1-based into
// `values` (values[i-1] = f(i)).  Empty H is rejected: the backends carry no
// identity element.
inline Element aggregate(const GroundSemigroup& sg, const std::vector<Element>& values,
                         const std::vector<std::size_t>& H) {
  if (H.empty()) fail(ErrorKind::invalid_input, "aggregate over empty index set");
  for (std::size_t j = 0; j + 1 < H.size(); ++j)
    if (H[j] >= H[j + 1])
      fail(ErrorKind::invalid_input, "index set must be strictly increasing");
  if (H.front() < 1 || H.back() > values.size())
    fail(ErrorKind::invalid_input, "index set escapes the sequence domain");
  Element acc = values[H[0] - 1];
  sg.check(acc, "sequence value");
  for (std::size_t j = 1; j < H.size(); ++j) acc = sg.apply(acc, values[H[j] - 1]);
  return acc;
}

} // namespace censet
