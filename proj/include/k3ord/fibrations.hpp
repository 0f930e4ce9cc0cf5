#pragma once

#include <string>
#include <vector>

#include "k3ord/cohomology.hpp"

namespace k3ord {

// free Z^r  +  finite cyclic Z/m_j  +  e divisible elliptic summands.
// An elliptic summand is modelled by Q.P + (Q/Z)^2: a generic point P of infinite order
// plus torsion coordinates, which is enough for "[m] is onto and E[m] = (Z/m)^2".
struct AbGroupModel {
  std::size_t free_rank = 0;
  std::vector<Integer> finite_cyclic;
  std::size_t elliptic_count = 0;
};

// sigma maps elliptic summand i to summand `target` scaled by `sign`.
struct EllipticMap {
  int sign = 1;
  std::size_t target = 0;
};

struct BlockEndo {
  IntMatrix free_action;              // r x r
  std::vector<Integer> finite_action; // multiplier on each finite summand
  std::vector<EllipticMap> elliptic_action;
  unsigned order = 1;
};

struct EllipticPoint {
  Rational generic;  // multiple of the generic point
  Rational t1;       // torsion coordinates, read mod 1
  Rational t2;
};

struct GroupElement {
  IntVector free;
  std::vector<Integer> finite;
  std::vector<EllipticPoint> elliptic;
};

GroupElement zero_element(const AbGroupModel& m);
GroupElement apply(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s);
GroupElement add(const AbGroupModel& m, const GroupElement& x, const GroupElement& y);
GroupElement negate(const AbGroupModel& m, const GroupElement& x);
bool is_zero(const AbGroupModel& m, const GroupElement& x);

struct H1Component {
  std::string summand;  // "free", "finite[j]" or "elliptic"
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  std::vector<GroupElement> generators;
};

struct StructuredH1 {
  std::vector<Integer> invariant_factors;  // canonical d1 | d2 | ... of the direct sum
  std::size_t free_rank = 0;
  std::vector<H1Component> components;
};

// Throws UnsupportedAction for anything outside the block model, InvalidGroupAction when
// sigma^order is not the identity.
void validate(const AbGroupModel& m, const BlockEndo& a);

StructuredH1 h1_structured(const AbGroupModel& m, const BlockEndo& a);
bool cocycle_check(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s);
// Membership in im(1 - sigma). Requires a cocycle.
bool coboundary_check(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s);
// Triviality of the class of s, computed through the H^1 presentations (elliptic part via
// the connecting map to ker(1 - sigma) / im N on Z^e).
bool class_is_trivial(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s);

// --- sections of a trivial fibration Z = E x C -> C ---

struct TrivialFibration {
  std::string fibre = "E";
  std::string base = "C";
  std::string zero = "e0";
};

enum class SectionKind { Zero, Horizontal, Vertical, Graph };

struct SectionSymbol {
  SectionKind kind = SectionKind::Zero;
  std::string name;                        // point e, point c, or map phi
  std::vector<std::string> zero_preimages; // graphs: the points c_i with phi(c_i) = e0
};

struct SectionExpr {
  std::vector<std::pair<Integer, SectionSymbol>> terms;
};

struct FormalDivisor {
  std::vector<std::pair<std::string, Integer>> terms;  // in order of appearance, no zero terms
  void add(const std::string& symbol, const Integer& coefficient);
  bool is_trivial() const { return terms.empty(); }
  std::string to_string() const;
};

FormalDivisor section_line_bundle(const SectionExpr& s, const TrivialFibration& model);

// Group law on Bl9 P2 in the basis H, E1..E9: S1 + S2 - S0 + alpha F with F = -K.
IntVector mw_sum_rational_elliptic(const IntVector& c1, const IntVector& c2, const IntVector& s0);

}  // namespace k3ord
