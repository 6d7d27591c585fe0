#include "soeinstein/poly/var.hpp"

namespace soe::poly {

std::string_view name(Var v) {
  switch (v) {
    case Var::x2: return "x2";
    case Var::x3: return "x3";
    case Var::x12: return "x12";
    case Var::k: return "k";
    case Var::l: return "l";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view text) {
  for (Var v : {Var::x2, Var::x3, Var::x12, Var::k, Var::l}) {
    if (name(v) == text) return v;
  }
  return std::nullopt;
}

}  // namespace soe::poly
