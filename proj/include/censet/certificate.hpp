#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "censet/element.hpp"

namespace censet {

enum class Property { syndetic, thick, piecewise_syndetic };

inline const char* property_name(Property p) {
  switch (p) {
    case Property::syndetic: return "syndetic";
    case Property::thick: return "thick";
    case Property::piecewise_syndetic: return "piecewise-syndetic";
  }
  return "unknown";
}

enum class Verdict { yes, no, window_qualified };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::window_qualified: return "window-qualified";
  }
  return "unknown";
}

// Evidence for thickness: either a concrete x with S.x (or the probed
// prefix of it) inside A, or the run length found inside a window.
struct ThickEvidence {
  std::optional<Element> x;
  std::optional<std::size_t> run_length;
};

struct Certificate {
  Property property = Property::syndetic;
  Verdict verdict = Verdict::no;
  std::vector<Element> translates;   // finite F with union of t^{-1}A covering
  ThickEvidence thick;
  std::string note;                  // human-readable justification
};

} // namespace censet
