#pragma once

#include <string>

#include "syminv/error.hpp"

namespace syminv {

// Symmetry class of a symbol's coefficient forms.
enum class Mode { general, self_adjoint, skew };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::general: return "general";
    case Mode::self_adjoint: return "self-adjoint";
    case Mode::skew: return "skew";
  }
  return "?";
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "general") return Mode::general;
  if (s == "self-adjoint") return Mode::self_adjoint;
  if (s == "skew") return Mode::skew;
  throw ParseError("unknown mode: '" + s + "'");
}

}  // namespace syminv
