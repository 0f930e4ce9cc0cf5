#pragma once

#include <string>
#include <vector>

#include "k3ord/lattice.hpp"

namespace k3ord {

// Numerical classes on a K3 Picard lattice, given in lattice coordinates.
using DivisorClass = IntVector;

Integer genus(const Lattice& l, const DivisorClass& c);
bool is_nodal_class(const Lattice& l, const DivisorClass& c);

struct PairCheck {
  std::size_t index = 0;
  Integer s_dot_gen;       // s . s_i
  Integer s_dot_residual;  // s . (s - s_i)
  Integer residual_square; // (s - s_i)^2
};

struct AmpleCertificate {
  DivisorClass s;
  Integer self_int;
  std::vector<PairCheck> pair_checks;
  std::vector<std::string> assumptions;
  bool pass = false;
  std::string reason;  // empty on pass
};

// Numerical Nakai-Moishezon certificate against a spanning family of effective generators.
AmpleCertificate nakai_certificate(const Lattice& l, const DivisorClass& s, const std::vector<DivisorClass>& gens);

enum class Effectivity { Effective, AntiEffective, Zero };
std::string_view to_string(Effectivity e);

// Riemann-Roch dichotomy for c with c^2 >= -2, decided by the sign of s . c.
Effectivity effectivity(const Lattice& l, const DivisorClass& c, const AmpleCertificate& ample);

}  // namespace k3ord
