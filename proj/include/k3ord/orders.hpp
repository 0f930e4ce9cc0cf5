#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3ord/cohomology.hpp"

namespace k3ord {

using QDivisor = RatVector;

// Numerical Picard model of a surface with its canonical class.
struct SurfaceModel {
  std::string name;
  Lattice pic;
  QDivisor k_class;
  std::vector<std::string> labels;
  // Classes used as the test family for the numerical del Pezzo check.
  std::vector<IntVector> effective_generators;
};

SurfaceModel surface_p2();
SurfaceModel surface_quadric();
SurfaceModel surface_hirzebruch(int n);
SurfaceModel surface_ruled_elliptic(int deg_e);
SurfaceModel surface_rational_elliptic();

enum class Tristate { Yes, No, Unknown };

struct RamifiedDivisor {
  QDivisor d_class;
  unsigned e = 2;
  Tristate cover_irreducible = Tristate::Unknown;
};

struct OrderDescriptor {
  SurfaceModel surface;
  std::vector<RamifiedDivisor> ramification;
  unsigned cover_degree = 1;
};

Rational intersect(const SurfaceModel& model, const QDivisor& a, const QDivisor& b);

// K_Z + sum (1 - 1/e_i) D_i
QDivisor canonical_order_class(const OrderDescriptor& o);
bool is_numerically_trivial(const SurfaceModel& model, const QDivisor& q);

enum class OrderClass { NumericallyCalabiYau, DelPezzo, Other };
std::string_view to_string(OrderClass c);

struct Classification {
  OrderClass kind = OrderClass::Other;
  QDivisor k_order;
  Rational anticanonical_square;             // (-K_A)^2
  std::vector<Rational> anticanonical_pairings;  // -K_A . g for each effective generator
};

Classification classify_order(const OrderDescriptor& o);

// Sorted ramification indices, one per ramified divisor of the cover.
std::vector<unsigned> ramification_transfer(const std::vector<std::pair<std::string, unsigned>>& cover_profile);

// lcm(indices) == n; the empty list has lcm 1.
bool overlap_applicable(const std::vector<unsigned>& indices, unsigned n);

struct RestrictionClass {
  IntVector cls;
  unsigned claimed_torsion = 1;
  std::string note;
};

// sum_{i<d} sigma^i L, torsion n/d. Uses d summands; see the note in the result.
RestrictionClass untot_restriction(const GLattice& gl, const IntVector& l, unsigned d);

enum class Maximality { Maximal, Azumaya, Unknown };
std::string_view to_string(Maximality m);
Maximality maximality_check(const OrderDescriptor& o);

// h0(O(a C0 + b F)) on F2 via 1 - a^2 + ab + b. Where C0 is a fixed component
// (b < 2a) it is peeled off first, since the closed formula only holds for b >= 2a - 1.
Integer h0_hirzebruch2(long a, long b);

// Order on the split degree-0 ruled surface over an elliptic curve: each distinct index e
// with multiplicity m becomes one divisor numerically m C0.
OrderDescriptor ruled_elliptic_order(const std::vector<unsigned>& ramification_vector);

}  // namespace k3ord
