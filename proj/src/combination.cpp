#include "superhopf/combination.hpp"

namespace superhopf {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Mnc: return "Mnc";
    case Basis::Q: return "Q";
    case Basis::m: return "m";
    case Basis::MonF: return "MonF";
    case Basis::Mc: return "Mc";
    case Basis::L: return "L";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::Mnc, Basis::Q, Basis::m, Basis::MonF, Basis::Mc, Basis::L}) {
    if (basis_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown basis '" + name + "' (expected Mnc, Q, m, MonF, Mc or L)");
}

bool is_commutative(Basis b) noexcept { return b == Basis::Mc || b == Basis::L; }

}  // namespace superhopf
