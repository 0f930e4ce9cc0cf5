#include "k3ord/fibrations.hpp"

namespace k3ord {
namespace {

Rational frac_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void check_shape(const AbGroupModel& m, const GroupElement& s) {
  if (s.free.size() != m.free_rank || s.finite.size() != m.finite_cyclic.size() ||
      s.elliptic.size() != m.elliptic_count)
    throw Error(ErrorCode::DimensionMismatch, "element shape differs from the group model");
}

// Signed permutation matrix of the elliptic block; column i carries sign_i in row target_i.
IntMatrix elliptic_matrix(const BlockEndo& a) {
  const std::size_t e = a.elliptic_action.size();
  IntMatrix p(e, e);
  for (std::size_t i = 0; i < e; ++i) p(a.elliptic_action[i].target, i) = a.elliptic_action[i].sign;
  return p;
}

// Applies an integer matrix to one rational coordinate slot of the elliptic summands.
template <typename Get>
RatVector slot(const std::vector<EllipticPoint>& pts, Get get) {
  RatVector v;
  for (const auto& p : pts) v.push_back(get(p));
  return v;
}

GroupElement norm(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s) {
  GroupElement total = zero_element(m);
  GroupElement term = s;
  for (unsigned i = 0; i < a.order; ++i) {
    total = add(m, total, term);
    term = apply(m, a, term);
  }
  return total;
}

}  // namespace

GroupElement zero_element(const AbGroupModel& m) {
  return GroupElement{IntVector(m.free_rank), std::vector<Integer>(m.finite_cyclic.size()),
                      std::vector<EllipticPoint>(m.elliptic_count)};
}

GroupElement add(const AbGroupModel& m, const GroupElement& x, const GroupElement& y) {
  check_shape(m, x);
  check_shape(m, y);
  GroupElement z = zero_element(m);
  for (std::size_t i = 0; i < m.free_rank; ++i) z.free[i] = x.free[i] + y.free[i];
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) z.finite[j] = mod(x.finite[j] + y.finite[j], m.finite_cyclic[j]);
  for (std::size_t k = 0; k < m.elliptic_count; ++k) {
    z.elliptic[k].generic = x.elliptic[k].generic + y.elliptic[k].generic;
    z.elliptic[k].t1 = frac_part(x.elliptic[k].t1 + y.elliptic[k].t1);
    z.elliptic[k].t2 = frac_part(x.elliptic[k].t2 + y.elliptic[k].t2);
  }
  return z;
}

GroupElement negate(const AbGroupModel& m, const GroupElement& x) {
  check_shape(m, x);
  GroupElement z = zero_element(m);
  for (std::size_t i = 0; i < m.free_rank; ++i) z.free[i] = -x.free[i];
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) z.finite[j] = mod(-x.finite[j], m.finite_cyclic[j]);
  for (std::size_t k = 0; k < m.elliptic_count; ++k) {
    z.elliptic[k].generic = -x.elliptic[k].generic;
    z.elliptic[k].t1 = frac_part(-x.elliptic[k].t1);
    z.elliptic[k].t2 = frac_part(-x.elliptic[k].t2);
  }
  return z;
}

bool is_zero(const AbGroupModel& m, const GroupElement& x) {
  check_shape(m, x);
  if (!k3ord::is_zero(x.free)) return false;
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j)
    if (mod(x.finite[j], m.finite_cyclic[j]) != 0) return false;
  for (const auto& p : x.elliptic)
    if (p.generic != 0 || frac_part(p.t1) != 0 || frac_part(p.t2) != 0) return false;
  return true;
}

GroupElement apply(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s) {
  check_shape(m, s);
  GroupElement z = zero_element(m);
  z.free = a.free_action * s.free;
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j)
    z.finite[j] = mod(a.finite_action[j] * s.finite[j], m.finite_cyclic[j]);
  for (std::size_t i = 0; i < m.elliptic_count; ++i) {
    const auto& map = a.elliptic_action[i];
    EllipticPoint& out = z.elliptic[map.target];
    out.generic = map.sign * s.elliptic[i].generic;
    out.t1 = frac_part(map.sign * s.elliptic[i].t1);
    out.t2 = frac_part(map.sign * s.elliptic[i].t2);
  }
  return z;
}

void validate(const AbGroupModel& m, const BlockEndo& a) {
  if (a.order == 0) throw Error(ErrorCode::InvalidGroupAction, "order must be at least 1");
  for (const auto& mod_j : m.finite_cyclic)
    if (mod_j < 2) throw Error(ErrorCode::UnsupportedParameter, "finite cyclic moduli must be >= 2");
  if (a.free_action.rows() != m.free_rank || a.free_action.cols() != m.free_rank)
    throw Error(ErrorCode::UnsupportedAction, "free action must be square of the free rank");
  if (a.finite_action.size() != m.finite_cyclic.size())
    throw Error(ErrorCode::UnsupportedAction, "one multiplier per finite summand");
  if (a.elliptic_action.size() != m.elliptic_count)
    throw Error(ErrorCode::UnsupportedAction, "one signed target per elliptic summand");
  std::vector<bool> hit(m.elliptic_count, false);
  for (const auto& map : a.elliptic_action) {
    if (map.sign != 1 && map.sign != -1) throw Error(ErrorCode::UnsupportedAction, "elliptic signs must be +1 or -1");
    if (map.target >= m.elliptic_count || hit[map.target])
      throw Error(ErrorCode::UnsupportedAction, "elliptic targets must form a permutation");
    hit[map.target] = true;
  }
  if (matrix_power(a.free_action, a.order) != IntMatrix::identity(m.free_rank))
    throw Error(ErrorCode::InvalidGroupAction, "free action has the wrong order");
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) {
    Integer p;
    Integer base = mod(a.finite_action[j], m.finite_cyclic[j]);
    mpz_powm_ui(p.get_mpz_t(), base.get_mpz_t(), a.order, m.finite_cyclic[j].get_mpz_t());
    if (mod(p - 1, m.finite_cyclic[j]) != 0) throw Error(ErrorCode::InvalidGroupAction, "finite action has the wrong order");
  }
  if (matrix_power(elliptic_matrix(a), a.order) != IntMatrix::identity(m.elliptic_count))
    throw Error(ErrorCode::InvalidGroupAction, "elliptic action has the wrong order");
}

StructuredH1 h1_structured(const AbGroupModel& m, const BlockEndo& a) {
  validate(m, a);
  StructuredH1 out;
  std::vector<Integer> all;

  if (m.free_rank > 0) {
    Subquotient q = h1_presentation(a.free_action, a.order);
    H1Component c{"free", q.result().invariant_factors, q.result().free_rank, {}};
    for (const auto& g : q.result().generators) {
      GroupElement x = zero_element(m);
      x.free = g;
      c.generators.push_back(x);
    }
    out.free_rank += c.free_rank;
    all.insert(all.end(), c.invariant_factors.begin(), c.invariant_factors.end());
    out.components.push_back(c);
  }

  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) {
    const Integer& mj = m.finite_cyclic[j];
    const Integer& u = a.finite_action[j];
    Integer n_u = 0, power = 1;
    for (unsigned i = 0; i < a.order; ++i) {
      n_u += power;
      power = mod(power * u, mj);
    }
    Integer g_ker = gcd(n_u, mj);       // |ker N|
    Integer g_im = gcd(1 - u, mj);      // |Z/m / im(1 - u)|
    Integer order = g_ker * g_im / mj;  // ker N and im(1-u) are subgroups of a cyclic group
    H1Component c{"finite[" + std::to_string(j) + "]", {}, 0, {}};
    if (order > 1) {
      c.invariant_factors.push_back(order);
      GroupElement x = zero_element(m);
      x.finite[j] = mj / g_ker;  // generates ker N, hence the quotient
      c.generators.push_back(x);
      all.push_back(order);
    }
    out.components.push_back(c);
  }

  if (m.elliptic_count > 0) {
    // H^1(G, (Q/Z)^e) = ker(1 - sigma) / im N on Z^e, once per torsion coordinate.
    auto nd = norm_and_diff(elliptic_matrix(a), a.order);
    Subquotient tate(nd.diff, nd.norm);
    H1Component c{"elliptic", {}, 0, {}};
    for (int copy = 0; copy < 2; ++copy)
      for (std::size_t i = 0; i < tate.result().invariant_factors.size(); ++i) {
        c.invariant_factors.push_back(tate.result().invariant_factors[i]);
        GroupElement x = zero_element(m);
        const IntVector& fixed = tate.result().generators[i];
        for (std::size_t k = 0; k < m.elliptic_count; ++k) {
          Rational t(fixed[k], Integer(a.order));
          t.canonicalize();
          (copy == 0 ? x.elliptic[k].t1 : x.elliptic[k].t2) = frac_part(t);
        }
        c.generators.push_back(x);
      }
    all.insert(all.end(), c.invariant_factors.begin(), c.invariant_factors.end());
    out.components.push_back(c);
  }

  if (!all.empty()) {
    IntMatrix d(all.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) d(i, i) = all[i];
    for (const auto& f : snf(d).diagonal())
      if (f > 1) out.invariant_factors.push_back(f);
  }
  return out;
}

bool cocycle_check(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s) {
  validate(m, a);
  return is_zero(m, norm(m, a, s));
}

bool coboundary_check(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s) {
  if (!cocycle_check(m, a, s)) throw Error(ErrorCode::NotACocycle, "coboundary test needs a cocycle");
  if (m.free_rank > 0 && !solve_integer(IntMatrix::identity(m.free_rank) - a.free_action, s.free)) return false;
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j)
    if (mod(s.finite[j], gcd(1 - a.finite_action[j], m.finite_cyclic[j])) != 0) return false;
  if (m.elliptic_count > 0) {
    // (1 - P) is onto each coordinate where its Smith diagonal is nonzero (divisibility);
    // elsewhere the U-transformed coordinate must vanish.
    SmithForm sf = snf(IntMatrix::identity(m.elliptic_count) - elliptic_matrix(a));
    RatMatrix u = to_rational(sf.U);
    RatVector g = u * slot(s.elliptic, [](const EllipticPoint& p) { return p.generic; });
    RatVector t1 = u * slot(s.elliptic, [](const EllipticPoint& p) { return p.t1; });
    RatVector t2 = u * slot(s.elliptic, [](const EllipticPoint& p) { return p.t2; });
    for (std::size_t i = sf.rank; i < m.elliptic_count; ++i)
      if (g[i] != 0 || frac_part(t1[i]) != 0 || frac_part(t2[i]) != 0) return false;
  }
  return true;
}

bool class_is_trivial(const AbGroupModel& m, const BlockEndo& a, const GroupElement& s) {
  if (!cocycle_check(m, a, s)) throw Error(ErrorCode::NotACocycle, "class of a non-cocycle");
  if (m.free_rank > 0 && !h1_presentation(a.free_action, a.order).is_trivial_class(s.free)) return false;
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) {
    const Integer& mj = m.finite_cyclic[j];
    bool hit = false;
    for (Integer t = 0; t < mj && !hit; ++t) hit = mod((1 - a.finite_action[j]) * t - s.finite[j], mj) == 0;
    if (!hit) return false;
  }
  if (m.elliptic_count > 0) {
    auto nd = norm_and_diff(elliptic_matrix(a), a.order);
    RatMatrix n = to_rational(nd.norm);
    for (int copy = 0; copy < 2; ++copy) {
      RatVector lift;
      for (const auto& p : s.elliptic) lift.push_back(frac_part(copy == 0 ? p.t1 : p.t2));
      RatVector image = n * lift;
      IntVector z;
      for (const auto& q : image) {
        if (q.get_den() != 1) throw Error(ErrorCode::NotACocycle, "norm of the lift is not integral");
        z.push_back(q.get_num());
      }
      if (!solve_integer(nd.norm, z)) return false;
    }
  }
  return true;
}

void FormalDivisor::add(const std::string& symbol, const Integer& coefficient) {
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (it->first == symbol) {
      it->second += coefficient;
      if (it->second == 0) terms.erase(it);
      return;
    }
  if (coefficient != 0) terms.emplace_back(symbol, coefficient);
}

std::string FormalDivisor::to_string() const {
  if (terms.empty()) return "O_Z";
  std::string s = "O_Z(";
  bool first = true;
  for (const auto& [sym, c] : terms) {
    Integer mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    s += sym;
    first = false;
  }
  return s + ")";
}

FormalDivisor section_line_bundle(const SectionExpr& s, const TrivialFibration& model) {
  if (s.terms.size() != 1 || s.terms.front().first != 1)
    throw Error(ErrorCode::NotASingleSection, "the map is defined on single section symbols");
  const SectionSymbol& sym = s.terms.front().second;
  auto horizontal = [&](const std::string& e) { return "{" + e + "}x" + model.base; };
  auto vertical = [&](const std::string& c) { return model.fibre + "x{" + c + "}"; };
  FormalDivisor d;
  switch (sym.kind) {
    case SectionKind::Zero:
      break;
    case SectionKind::Horizontal:
      d.add(horizontal(sym.name), 1);
      d.add(horizontal(model.zero), -1);
      break;
    case SectionKind::Graph:
      d.add("Gamma_" + sym.name, 1);
      d.add(horizontal(model.zero), -1);
      for (const auto& c : sym.zero_preimages) d.add(vertical(c), -1);
      break;
    case SectionKind::Vertical:
      throw Error(ErrorCode::NotASingleSection, "a vertical curve is not a section");
  }
  return d;
}

IntVector mw_sum_rational_elliptic(const IntVector& c1, const IntVector& c2, const IntVector& s0) {
  IntMatrix g(10, 10);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < 10; ++i) g(i, i) = -1;
  Lattice pic(g);
  IntVector f(10, Integer(-1));
  f[0] = 3;
  for (const IntVector* c : {&c1, &c2, &s0}) {
    if (c->size() != 10) throw Error(ErrorCode::DimensionMismatch, "classes live in the rank-10 model");
    if (pair(pic, *c, *c) != -1 || pair(pic, *c, f) != 1)
      throw Error(ErrorCode::NotANumericalSection, "need E^2 = -1 and E.F = 1");
  }
  IntVector c12(10);
  for (std::size_t i = 0; i < 10; ++i) c12[i] = c1[i] + c2[i];
  Integer alpha = pair(pic, c12, s0) - pair(pic, c1, c2) + 1;
  IntVector out(10);
  for (std::size_t i = 0; i < 10; ++i) out[i] = c12[i] - s0[i] + alpha * f[i];
  return out;
}

}  // namespace k3ord
