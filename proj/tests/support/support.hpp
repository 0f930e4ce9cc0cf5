#pragma once

// Independent oracles and randomized property suites shared by the unit tests and
// the acceptance runner. Oracles deliberately avoid the library's Smith/Hermite code.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3ord/lattice.hpp"

namespace k3ord::testing {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kSeed = 20240611;

std::filesystem::path corpus_dir();
nlohmann::ordered_json load_json(const std::filesystem::path& p);

IntMatrix json_matrix(const nlohmann::ordered_json& j);

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
// Product of random elementary moves, permutations and sign flips.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int moves = 12);

// Laplace expansion; fine for the small sizes used in tests.
Integer cofactor_det(const IntMatrix& a);
// d_k = gcd of all k x k minors, k = 1..min(rows, cols).
std::vector<Integer> determinantal_divisors(const IntMatrix& a);

// Floating-point determinant, for cross-checking large unimodular frames.
double float_det(const IntMatrix& a);

// Signature from floating-point eigenvalues of the Gram matrix.
struct FloatSignature {
  std::size_t positive = 0, negative = 0, zero = 0;
};
FloatSignature eigen_signature(const IntMatrix& gram);

// |H^1[d]| for each d in 1..order of the cyclic action on Z^r, computed as
// (ker N mod n) / (im D mod n). Kernel vectors come from a box search of radius `box`.
std::vector<std::size_t> h1_torsion_counts(const std::vector<std::vector<long>>& sigma, unsigned order, long box);
// Same counts from a list of invariant factors.
std::vector<std::size_t> torsion_counts_from_factors(const std::vector<Integer>& factors, unsigned order);

// h0 on F2 as the sum of h0(P1, O(b - 2i)) over i = 0..a.
Integer h0_pushforward(long a, long b);

struct SuiteOutcome {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

SuiteOutcome snf_suite(std::size_t trials);
SuiteOutcome signature_suite(std::size_t trials);
SuiteOutcome h1_conjugation_suite(std::size_t trials);
SuiteOutcome extension_basis_suite(std::size_t trials);
SuiteOutcome h1_exhaustive_suite();
SuiteOutcome h0_grid_suite();

}  // namespace k3ord::testing
