#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "censet/error.hpp"

namespace censet {

enum class Backend { finite, naturals, free_words };

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::finite: return "finite";
    case Backend::naturals: return "nat";
    case Backend::free_words: return "free";
  }
  return "unknown";
}

// One carrier value: an index into a finite carrier (0-based), a positive
// integer of (N,+), or a nonempty word over a fixed alphabet.  Ordering is
// numeric for the first two and shortlex for words; every deterministic
// search in the library leans on this order.
class Element {
 public:
  Element() = default;

  static Element finite(std::size_t index) {
    Element e;
    e.backend_ = Backend::finite;
    e.num_ = index;
    return e;
  }

  static Element nat(std::uint64_t value) {
    if (value == 0) fail(ErrorKind::invalid_input, "nat element must be >= 1");
    Element e;
    e.backend_ = Backend::naturals;
    e.num_ = value;
    return e;
  }

  static Element word(std::string letters) {
    if (letters.empty())
      fail(ErrorKind::invalid_input, "free-semigroup element must be a nonempty word");
    Element e;
    e.backend_ = Backend::free_words;
    e.str_ = std::move(letters);
    return e;
  }

  Backend backend() const { return backend_; }

  std::size_t index() const {
    require(Backend::finite);
    return static_cast<std::size_t>(num_);
  }

  std::uint64_t value() const {
    require(Backend::naturals);
    return num_;
  }

  const std::string& letters() const {
    require(Backend::free_words);
    return str_;
  }

  std::string display() const {
    switch (backend_) {
      case Backend::finite:
      case Backend::naturals: return std::to_string(num_);
      case Backend::free_words: return str_;
    }
    return {};
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.backend_ == b.backend_ && a.num_ == b.num_ && a.str_ == b.str_;
  }

  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  friend bool operator<(const Element& a, const Element& b) {
    if (a.backend_ != b.backend_) return a.backend_ < b.backend_;
    if (a.backend_ == Backend::free_words) {
      if (a.str_.size() != b.str_.size()) return a.str_.size() < b.str_.size();
      return a.str_ < b.str_;
    }
    return a.num_ < b.num_;
  }

  friend bool operator>(const Element& a, const Element& b) { return b < a; }
  friend bool operator<=(const Element& a, const Element& b) { return !(b < a); }
  friend bool operator>=(const Element& a, const Element& b) { return !(a < b); }

 private:
  void require(Backend b) const {
    if (backend_ != b)
      fail(ErrorKind::invalid_input,
           std::string("element is ") + backend_name(backend_) + ", expected " +
               backend_name(b));
  }

  Backend backend_ = Backend::naturals;
  std::uint64_t num_ = 1;
  std::string str_;
};

} // namespace censet
