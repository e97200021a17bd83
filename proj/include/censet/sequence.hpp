#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/semigroup.hpp"

namespace censet {

// A named total map {1..T} -> S, stored as the list of its first T values.
struct Sequence {
  std::string name;
  std::vector<Element> values; // values[i-1] = f(i)

  const Element& at(std::size_t i) const {
    if (i < 1 || i > values.size())
      fail(ErrorKind::invalid_input,
           "sequence index " + std::to_string(i) + " outside 1.." +
               std::to_string(values.size()));
    return values[i - 1];
  }
};

class SequenceFamily {
 public:
  SequenceFamily(const GroundSemigroup& sg, std::vector<Sequence> seqs) {
    if (seqs.empty()) fail(ErrorKind::invalid_input, "sequence family must be nonempty");
    truncation_ = seqs.front().values.size();
    if (truncation_ == 0)
      fail(ErrorKind::invalid_input, "sequences must carry at least one value");
    for (const Sequence& s : seqs) {
      if (s.values.size() != truncation_)
        fail(ErrorKind::invalid_input, "sequences disagree on truncation length");
      for (const Element& e : s.values) sg.check(e, ("value of " + s.name).c_str());
    }
    seqs_ = std::move(seqs);
  }

  std::size_t size() const { return seqs_.size(); }
  std::size_t truncation() const { return truncation_; }
  // 1-based, matching the convention for index sets
  const Sequence& seq(std::size_t i) const {
    if (i < 1 || i > seqs_.size())
      fail(ErrorKind::invalid_input, "sequence index out of range");
    return seqs_[i - 1];
  }
  const std::vector<Sequence>& all() const { return seqs_; }

  // Family restricted to the 1-based member indices in `pick` (kept in order).
  SequenceFamily subfamily(const GroundSemigroup& sg,
                           const std::vector<std::size_t>& pick) const {
    std::vector<Sequence> sub;
    for (std::size_t i : pick) {
      if (i < 1 || i > seqs_.size())
        fail(ErrorKind::invalid_input, "subfamily index out of range");
      sub.push_back(seqs_[i - 1]);
    }
    return SequenceFamily(sg, std::move(sub));
  }

  // Trim every sequence to its first t values.
  SequenceFamily truncated(const GroundSemigroup& sg, std::size_t t) const {
    if (t < 1 || t > truncation_)
      fail(ErrorKind::invalid_input, "truncation override outside 1..T");
    std::vector<Sequence> sub = seqs_;
    for (Sequence& s : sub) s.values.resize(t);
    return SequenceFamily(sg, std::move(sub));
  }

 private:
  std::size_t truncation_ = 0;
  std::vector<Sequence> seqs_;
};

} // namespace censet
