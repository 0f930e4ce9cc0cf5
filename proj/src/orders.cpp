#include "k3ord/orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace k3ord {
namespace {

QDivisor qdiv(std::initializer_list<long> v) {
  QDivisor q;
  for (long x : v) q.emplace_back(x);
  return q;
}

// Ruled-surface style model with basis (C0, F).
SurfaceModel ruled(std::string name, long c0_square, QDivisor k) {
  SurfaceModel m;
  m.name = std::move(name);
  m.pic = Lattice(IntMatrix{{c0_square, 1}, {1, 0}});
  m.k_class = std::move(k);
  m.labels = {"C0", "F"};
  m.effective_generators = {unit_vector(2, 0), unit_vector(2, 1)};
  return m;
}

}  // namespace

SurfaceModel surface_p2() {
  SurfaceModel m;
  m.name = "P2";
  m.pic = Lattice(IntMatrix{{1}});
  m.k_class = qdiv({-3});
  m.labels = {"H"};
  m.effective_generators = {unit_vector(1, 0)};
  return m;
}

SurfaceModel surface_quadric() {
  SurfaceModel m;
  m.name = "P1xP1";
  m.pic = Lattice(IntMatrix{{0, 1}, {1, 0}});
  m.k_class = qdiv({-2, -2});
  m.labels = {"L1", "L2"};
  m.effective_generators = {unit_vector(2, 0), unit_vector(2, 1)};
  return m;
}

SurfaceModel surface_hirzebruch(int n) {
  if (n < 0) throw Error(ErrorCode::UnsupportedParameter, "Hirzebruch index must be >= 0");
  // K = -2 C0 - (n + 2) F, so -2K is 4 C0 + 8 F on F2.
  return ruled("F" + std::to_string(n), -n, qdiv({-2, -(n + 2)}));
}

SurfaceModel surface_ruled_elliptic(int deg_e) {
  if (deg_e == 0) return ruled("ruled-elliptic-split", 0, qdiv({-2, 0}));
  if (deg_e == 1) return ruled("ruled-elliptic-indecomposable", 1, qdiv({-2, 1}));
  throw Error(ErrorCode::UnsupportedParameter, "ruled surfaces over an elliptic curve: degree 0 or 1 only");
}

SurfaceModel surface_rational_elliptic() {
  SurfaceModel m;
  m.name = "Bl9P2";
  IntMatrix g(10, 10);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < 10; ++i) g(i, i) = -1;
  m.pic = Lattice(g);
  m.k_class = QDivisor(10, Rational(1));
  m.k_class[0] = -3;
  m.labels = {"H"};
  for (int i = 1; i <= 9; ++i) m.labels.push_back("E" + std::to_string(i));
  for (std::size_t i = 0; i < 10; ++i) m.effective_generators.push_back(unit_vector(10, i));
  return m;
}

Rational intersect(const SurfaceModel& model, const QDivisor& a, const QDivisor& b) {
  const std::size_t r = model.pic.rank();
  if (a.size() != r || b.size() != r) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from model rank");
  Rational s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s += a[i] * model.pic.gram()(i, j) * b[j];
  return s;
}

QDivisor canonical_order_class(const OrderDescriptor& o) {
  QDivisor k = o.surface.k_class;
  for (const auto& d : o.ramification) {
    if (d.e < 2) throw Error(ErrorCode::UnsupportedParameter, "ramification index must be >= 2");
    if (d.d_class.size() != k.size()) throw Error(ErrorCode::DimensionMismatch, "divisor length differs from model rank");
    Rational w = 1 - Rational(Integer(1), Integer(d.e));
    w.canonicalize();
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += w * d.d_class[i];
  }
  return k;
}

bool is_numerically_trivial(const SurfaceModel& model, const QDivisor& q) {
  for (std::size_t i = 0; i < model.pic.rank(); ++i) {
    QDivisor e(model.pic.rank());
    e[i] = 1;
    if (intersect(model, q, e) != 0) return false;
  }
  return true;
}

std::string_view to_string(OrderClass c) {
  switch (c) {
    case OrderClass::NumericallyCalabiYau: return "NCY";
    case OrderClass::DelPezzo: return "DelPezzo";
    case OrderClass::Other: return "Other";
  }
  return "?";
}

Classification classify_order(const OrderDescriptor& o) {
  Classification c;
  c.k_order = canonical_order_class(o);
  QDivisor anti = c.k_order;
  for (auto& x : anti) x = -x;
  c.anticanonical_square = intersect(o.surface, anti, anti);
  bool positive = c.anticanonical_square > 0;
  for (const auto& g : o.surface.effective_generators) {
    QDivisor gq(g.begin(), g.end());
    Rational p = intersect(o.surface, anti, gq);
    c.anticanonical_pairings.push_back(p);
    if (p <= 0) positive = false;
  }
  if (is_numerically_trivial(o.surface, c.k_order))
    c.kind = OrderClass::NumericallyCalabiYau;
  else if (positive)
    c.kind = OrderClass::DelPezzo;
  return c;
}

std::vector<unsigned> ramification_transfer(const std::vector<std::pair<std::string, unsigned>>& cover_profile) {
  std::vector<unsigned> out;
  for (const auto& [name, e] : cover_profile) {
    if (e < 2) throw Error(ErrorCode::UnsupportedParameter, "ramification index of " + name + " must be >= 2");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool overlap_applicable(const std::vector<unsigned>& indices, unsigned n) {
  unsigned long l = 1;
  for (unsigned e : indices) l = std::lcm(l, static_cast<unsigned long>(e));
  return l == n;
}

RestrictionClass untot_restriction(const GLattice& gl, const IntVector& l, unsigned d) {
  if (d == 0 || gl.order % d != 0)
    throw Error(ErrorCode::DNotDividing, std::to_string(d) + " does not divide " + std::to_string(gl.order));
  if (l.size() != gl.lattice.rank()) throw Error(ErrorCode::DimensionMismatch, "class length differs from lattice rank");
  RestrictionClass r;
  r.cls = IntVector(l.size());
  IntVector term = l;
  for (unsigned i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < l.size(); ++k) r.cls[k] += term[k];
    term = gl.sigma * term;
  }
  r.claimed_torsion = gl.order / d;
  r.note = "sum of d = " + std::to_string(d) +
           " conjugates sigma^0 L .. sigma^(d-1) L (local generator z^d); a product with d + 1 factors is not used";
  return r;
}

std::string_view to_string(Maximality m) {
  switch (m) {
    case Maximality::Maximal: return "Maximal";
    case Maximality::Azumaya: return "Azumaya";
    case Maximality::Unknown: return "Unknown";
  }
  return "?";
}

Maximality maximality_check(const OrderDescriptor& o) {
  if (o.ramification.empty()) return Maximality::Azumaya;
  for (const auto& d : o.ramification)
    if (d.cover_irreducible != Tristate::Yes) return Maximality::Unknown;
  return Maximality::Maximal;
}

Integer h0_hirzebruch2(long a, long b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::OutOfAssertedRange, "h0 formula is asserted for a, b >= 0 only");
  // (a C0 + b F) . C0 = b - 2a; when negative, C0 is in the base locus.
  while (a > 0 && b < 2 * a) --a;
  Integer A = a, B = b;
  return 1 - A * A + A * B + B;
}

OrderDescriptor ruled_elliptic_order(const std::vector<unsigned>& ramification_vector) {
  OrderDescriptor o;
  o.surface = surface_ruled_elliptic(0);
  std::map<unsigned, long> multiplicity;
  unsigned long l = 1;
  for (unsigned e : ramification_vector) {
    ++multiplicity[e];
    l = std::lcm(l, static_cast<unsigned long>(e));
  }
  for (const auto& [e, m] : multiplicity) o.ramification.push_back(RamifiedDivisor{qdiv({m, 0}), e, Tristate::Unknown});
  o.cover_degree = static_cast<unsigned>(l);
  return o;
}

}  // namespace k3ord
