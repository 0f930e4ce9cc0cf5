#include "support.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "k3ord/cohomology.hpp"
#include "k3ord/isometry.hpp"
#include "k3ord/linalg.hpp"
#include "k3ord/orders.hpp"
#include "k3ord/reference_data.hpp"

namespace k3ord::testing {

std::filesystem::path corpus_dir() { return K3ORD_CORPUS_DIR; }

nlohmann::ordered_json load_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return nlohmann::ordered_json::parse(in);
}

IntMatrix json_matrix(const nlohmann::ordered_json& j) {
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    IntVector v;
    for (const auto& x : r) v.emplace_back(x.is_string() ? x.get<std::string>() : x.dump());
    rows.push_back(v);
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

namespace {

// P and P^-1 built from the same moves.
struct UnimodularPair {
  IntMatrix p, inv;
};

UnimodularPair random_unimodular_pair(Rng& rng, std::size_t n, int moves) {
  UnimodularPair u{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 0) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 3), mult(-2, 2);
  for (int k = 0; k < moves; ++k) {
    const std::size_t a = idx(rng), b = idx(rng);
    switch (kind(rng)) {
      case 0:
      case 1:
        if (a != b) {
          const Integer f = mult(rng);
          u.p.add_col_multiple(a, b, f);     // P E with E = I + f e_b e_a^T
          u.inv.add_row_multiple(b, a, -f);  // E^-1 P^-1
        }
        break;
      case 2:
        u.p.swap_cols(a, b);
        u.inv.swap_rows(a, b);
        break;
      default:
        u.p.negate_col(a);
        u.inv.negate_row(a);
    }
  }
  return u;
}

std::vector<std::vector<long>> mul(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<std::vector<long>> eye(std::size_t n) {
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  return c;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

std::string show(const IntMatrix& m) { return to_string(m); }

void record(SuiteOutcome& s, bool ok, const std::string& what) {
  ++s.trials;
  if (ok) return;
  if (s.failures++ == 0) s.first_failure = what;
}

}  // namespace

IntMatrix random_unimodular(Rng& rng, std::size_t n, int moves) { return random_unimodular_pair(rng, n, moves).p; }

Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer term = a(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols(), kmax = std::min(m, n);
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        IntMatrix sub(k, k);
        for (std::size_t i = 0, si = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          for (std::size_t j = 0, sj = 0; j < n; ++j)
            if (csel[j]) sub(si, sj++) = a(i, j);
          ++si;
        }
        g = gcd(g, cofactor_det(sub));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    out.push_back(abs(g));
  }
  return out;
}

double float_det(const IntMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_d();
  return m.partialPivLu().determinant();
}

FloatSignature eigen_signature(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  Eigen::MatrixXd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gram(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
  FloatSignature s;
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  for (double ev : solver.eigenvalues()) {
    if (ev > 1e-9 * scale)
      ++s.positive;
    else if (ev < -1e-9 * scale)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

std::vector<std::size_t> h1_torsion_counts(const std::vector<std::vector<long>>& sigma, unsigned order, long box) {
  const std::size_t r = sigma.size();
  const long n = order;
  auto norm = std::vector<std::vector<long>>(r, std::vector<long>(r, 0));
  auto power = eye(r);
  for (unsigned i = 0; i < order; ++i) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) norm[a][b] += power[a][b];
    power = mul(power, sigma);
  }
  std::size_t cells = 1;
  for (std::size_t i = 0; i < r; ++i) cells *= static_cast<std::size_t>(n);
  auto encode = [&](const std::vector<long>& x) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < r; ++i) code = code * n + static_cast<std::size_t>(mod(x[i], n));
    return code;
  };
  auto decode = [&](std::size_t code) {
    std::vector<long> x(r);
    for (std::size_t i = r; i-- > 0;) {
      x[i] = static_cast<long>(code % n);
      code /= n;
    }
    return x;
  };
  auto apply = [&](const std::vector<std::vector<long>>& m, const std::vector<long>& x) {
    std::vector<long> y(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) y[i] += m[i][j] * x[j];
    return y;
  };

  // im(1 - sigma) mod n: exact, since D(y + n z) = D y mod n.
  std::vector<bool> in_image(cells, false);
  for (std::size_t c = 0; c < cells; ++c) {
    auto y = decode(c);
    auto sy = apply(sigma, y);
    for (std::size_t i = 0; i < r; ++i) y[i] -= sy[i];
    in_image[encode(y)] = true;
  }

  // ker N mod n: subgroup generated by the kernel vectors in the box.
  std::vector<bool> in_kernel(cells, false);
  in_kernel[0] = true;
  std::vector<std::size_t> members = {0};
  std::vector<long> x(r, -box);
  for (;;) {
    auto nx = apply(norm, x);
    if (std::all_of(nx.begin(), nx.end(), [](long v) { return v == 0; })) {
      const std::size_t g = encode(x);
      if (!in_kernel[g]) {
        // Close up under adding g.
        std::vector<std::size_t> frontier = members;
        for (std::size_t k = 0; k < frontier.size(); ++k) {
          auto s = decode(frontier[k]);
          auto gx = decode(g);
          for (std::size_t i = 0; i < r; ++i) s[i] += gx[i];
          const std::size_t code = encode(s);
          if (!in_kernel[code]) {
            in_kernel[code] = true;
            members.push_back(code);
            frontier.push_back(code);
          }
        }
      }
    }
    std::size_t i = 0;
    while (i < r && x[i] == box) x[i++] = -box;
    if (i == r) break;
    ++x[i];
  }

  std::size_t image_size = 0;
  for (std::size_t c = 0; c < cells; ++c) image_size += in_image[c] ? 1 : 0;
  std::vector<std::size_t> counts;
  for (long d = 1; d <= n; ++d) {
    std::size_t hits = 0;
    for (std::size_t c : members) {
      auto y = decode(c);
      for (auto& v : y) v *= d;
      if (in_image[encode(y)]) ++hits;
    }
    counts.push_back(hits / image_size);
  }
  return counts;
}

std::vector<std::size_t> torsion_counts_from_factors(const std::vector<Integer>& factors, unsigned order) {
  std::vector<std::size_t> counts;
  for (unsigned d = 1; d <= order; ++d) {
    std::size_t c = 1;
    for (const auto& f : factors) c *= Integer(gcd(Integer(d), f)).get_ui();
    counts.push_back(c);
  }
  return counts;
}

Integer h0_pushforward(long a, long b) {
  Integer total = 0;
  for (long i = 0; i <= a; ++i) total += std::max(0L, b - 2 * i + 1);
  return total;
}

// --- property suites ---

SuiteOutcome snf_suite(std::size_t trials) {
  SuiteOutcome s{"Smith form U*A*V = D on random matrices"};
  Rng rng(kSeed);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t m = dim(rng), n = dim(rng);
    IntMatrix a = random_matrix(rng, m, n, 9);
    if (coin(rng) == 0) {
      // Force a rank drop some of the time.
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(m, n))(rng);
      a = random_matrix(rng, m, k, 3) * random_matrix(rng, k, n, 3);
    }
    SmithForm f = snf(a);
    bool ok = f.U * a * f.V == f.D && abs(cofactor_det(f.U)) == 1 && abs(cofactor_det(f.V)) == 1;
    const auto diag = f.diagonal();
    for (std::size_t i = 0; ok && i < m; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        if (i != j && f.D(i, j) != 0) ok = false;
    for (std::size_t i = 0; ok && i < diag.size(); ++i) {
      if (diag[i] < 0) ok = false;
      if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) ok = false;
      if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) ok = false;
    }
    // Prefix products of the diagonal are the determinantal divisors.
    const auto dd = determinantal_divisors(a);
    Integer prod = 1;
    for (std::size_t k = 0; ok && k < diag.size(); ++k) {
      prod *= diag[k];
      if (prod != dd[k]) ok = false;
    }
    record(s, ok, "A = " + show(a));
  }
  return s;
}

SuiteOutcome signature_suite(std::size_t trials) {
  SuiteOutcome s{"signature invariant under unimodular congruence"};
  Rng rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = dim(rng);
    IntMatrix b = random_matrix(rng, n, n, 5);
    IntMatrix g = b + b.transpose();
    IntMatrix p = random_unimodular(rng, n);
    const Signature before = signature(g), after = signature(p.transpose() * g * p);
    const FloatSignature oracle = eigen_signature(g);
    const bool ok = before == after && before.positive == oracle.positive && before.negative == oracle.negative &&
                    before.zero == oracle.zero;
    record(s, ok, "G = " + show(g));
  }
  return s;
}

SuiteOutcome h1_conjugation_suite(std::size_t trials) {
  SuiteOutcome s{"H^1 invariant under unimodular change of basis"};
  Rng rng(kSeed + 2);
  std::vector<reference::CoverCase> cases;
  for (std::size_t n = 3; n <= 18; ++n) cases.push_back(reference::sextic_case(n));
  cases.push_back(reference::quadric_case());
  cases.push_back(reference::hirzebruch2_case());
  // One named nontrivial class per case, in the original basis.
  auto named = [](const reference::CoverCase& c) {
    const std::size_t n = c.pic.rank();
    IntVector v(n);
    if (c.name == "quadric") {
      v[1] = 1, v[3] = -1;
    } else if (c.name == "f2") {
      v[2] = 1, v[4] = -1;
    } else {
      v[0] = 1, v[2] = -1;
    }
    return v;
  };
  std::uniform_int_distribution<std::size_t> pick(0, cases.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& c = cases[pick(rng)];
    const std::size_t n = c.pic.rank();
    auto u = random_unimodular_pair(rng, n, 3 * static_cast<int>(n));
    GLattice base = make_glattice(c.pic, c.action, 2);
    GLattice moved = make_glattice(Lattice(u.p.transpose() * c.pic.gram() * u.p), u.inv * c.action * u.p, 2);
    const CohResult a = h1(base), b = h1(moved);
    Subquotient q = h1_presentation(moved.sigma, 2);
    const IntVector x = u.inv * named(c);
    const bool ok = a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank && q.in_kernel(x) &&
                    !q.is_trivial_class(x);
    record(s, ok, c.name + " with P = " + show(u.p));
  }
  return s;
}

SuiteOutcome extension_basis_suite(std::size_t trials) {
  SuiteOutcome s{"extension independent of the complement basis"};
  Rng rng(kSeed + 3);
  const Lattice k3 = build_K3();
  std::uniform_int_distribution<std::size_t> pick(3, 20);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = pick(rng);
    const reference::CoverCase c = k <= 18 ? reference::sextic_case(k)
                                           : (k == 19 ? reference::quadric_case() : reference::hirzebruch2_case());
    Embedding e{c.pic, k3, c.embedding};
    const IntMatrix t0 = orthogonal_complement(e).complement.matrix;
    const IntMatrix rebased = t0 * random_unimodular(rng, t0.cols(), 3 * static_cast<int>(t0.cols()));
    const ExtensionResult a = extend_by_minus_one(k3, e, c.action);
    const ExtensionResult b = extend_by_minus_one(k3, e, c.action, rebased);
    record(s, a.phi == b.phi && a.integral == b.integral, c.name);
  }
  return s;
}

SuiteOutcome h1_exhaustive_suite() {
  SuiteOutcome s{"H^1 against the brute-force oracle, rank <= 3, entries in [-2,2], n <= 4"};
  constexpr long kBox = 4;
  for (std::size_t r = 1; r <= 3; ++r) {
    const std::size_t entries = r * r;
    std::vector<long> e(entries, -2);
    for (;;) {
      std::vector<std::vector<long>> sigma(r, std::vector<long>(r));
      for (std::size_t i = 0; i < entries; ++i) sigma[i / r][i % r] = e[i];
      // Smallest k <= 4 with sigma^k = I.
      unsigned ord = 0;
      auto p = sigma;
      for (unsigned k = 1; k <= 4; ++k) {
        if (p == eye(r)) {
          ord = k;
          break;
        }
        p = mul(p, sigma);
      }
      for (unsigned n = 1; ord != 0 && n <= 4; ++n) {
        if (n % ord != 0) continue;
        IntMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) m(i, j) = sigma[i][j];
        const CohResult got = h1_presentation(m, n).result();
        const bool ok = got.free_rank == 0 &&
                        torsion_counts_from_factors(got.invariant_factors, n) == h1_torsion_counts(sigma, n, kBox);
        record(s, ok, "sigma = " + show(m) + ", n = " + std::to_string(n));
      }
      std::size_t i = 0;
      while (i < entries && e[i] == 2) e[i++] = -2;
      if (i == entries) break;
      ++e[i];
    }
  }
  return s;
}

SuiteOutcome h0_grid_suite() {
  SuiteOutcome s{"h0 on F2 against the pushforward oracle, 0 <= a <= 4, 0 <= b <= 8"};
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 8; ++b)
      record(s, h0_hirzebruch2(a, b) == h0_pushforward(a, b), "a = " + std::to_string(a) + ", b = " + std::to_string(b));
  return s;
}

}  // namespace k3ord::testing
