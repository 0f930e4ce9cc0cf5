#include "k3ord/divisors.hpp"

namespace k3ord {

Integer genus(const Lattice& l, const DivisorClass& c) {
  Integer sq = pair(l, c, c);
  if (sq % 2 != 0) throw Error(ErrorCode::OddSelfIntersection, "genus needs an even self-intersection");
  return sq / 2 + 1;
}

bool is_nodal_class(const Lattice& l, const DivisorClass& c) { return pair(l, c, c) == -2; }

AmpleCertificate nakai_certificate(const Lattice& l, const DivisorClass& s, const std::vector<DivisorClass>& gens) {
  if (s.size() != l.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from lattice rank");
  for (const auto& g : gens)
    if (g.size() != l.rank()) throw Error(ErrorCode::DimensionMismatch, "generator length differs from lattice rank");
  if (gens.empty() || rank(IntMatrix::from_columns(gens, l.rank())) != l.rank())
    throw Error(ErrorCode::GensDoNotSpan, "generators do not span the lattice over Q");

  AmpleCertificate cert;
  cert.s = s;
  cert.self_int = pair(l, s, s);
  cert.assumptions.push_back("h0(s - s_i) > 0 assumed for every generator s_i");
  if (cert.self_int <= 0) cert.reason = "s^2 = " + cert.self_int.get_str() + " is not positive";

  for (std::size_t i = 0; i < gens.size(); ++i) {
    DivisorClass residual(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) residual[k] = s[k] - gens[i][k];
    PairCheck pc{i, pair(l, s, gens[i]), pair(l, s, residual), pair(l, residual, residual)};
    if (cert.reason.empty()) {
      const std::string tag = "generator " + std::to_string(i + 1) + ": ";
      if (pc.s_dot_gen <= 0)
        cert.reason = tag + "s . s_i = " + pc.s_dot_gen.get_str() + " is not positive";
      else if (pc.s_dot_residual <= 0)
        cert.reason = tag + "s . (s - s_i) = " + pc.s_dot_residual.get_str() + " is not positive";
      else if (pc.residual_square < -2)
        cert.reason = tag + "(s - s_i)^2 = " + pc.residual_square.get_str() + " < -2, Riemann-Roch gives no section";
    }
    cert.pair_checks.push_back(pc);
  }
  cert.pass = cert.reason.empty();
  return cert;
}

std::string_view to_string(Effectivity e) {
  switch (e) {
    case Effectivity::Effective: return "Effective";
    case Effectivity::AntiEffective: return "AntiEffective";
    case Effectivity::Zero: return "Zero";
  }
  return "?";
}

Effectivity effectivity(const Lattice& l, const DivisorClass& c, const AmpleCertificate& ample) {
  if (!ample.pass) throw Error(ErrorCode::NotAmple, "ample class has no passing certificate");
  if (is_zero(c)) return Effectivity::Zero;
  if (pair(l, c, c) < -2) throw Error(ErrorCode::SquareTooNegative, "c^2 < -2");
  Integer sc = pair(l, ample.s, c);
  if (sc > 0) return Effectivity::Effective;
  if (sc < 0) return Effectivity::AntiEffective;
  throw Error(ErrorCode::AmbiguousZeroPairing, "nonzero class orthogonal to the ample class");
}

}  // namespace k3ord
