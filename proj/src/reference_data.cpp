#include "k3ord/reference_data.hpp"

#include <sstream>
#include <string_view>

namespace k3ord::reference {
namespace {

// Transcribed row by row.
constexpr std::string_view kSexticRows = R"(
-2  3  0  1  1  1  1  1  1  1  1  1  1  1  1  1  1  1
 3 -2  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0
 0  1 -2  1  0  0  0  0  0  0  0  0  0  0  0  0  0  0
 1  0  1 -2  1  0  0  0  0  0  0  0  0  0  0  0  0  0
 1  0  0  1 -2  1  0  0  0  0  0  0  0  0  0  0  0  0
 1  0  0  0  1 -2  1  0  0  0  0  0  0  0  0  0  0  0
 1  0  0  0  0  1 -2  1  0  0  0  0  0  0  0  0  0  0
 1  0  0  0  0  0  1 -2  0  0  0  0  0  0  0  0  0  0
 1  0  0  0  0  0  0  0 -2  0  0  1  0  0  0  0  0  0
 1  0  0  0  0  0  0  0  0 -2  1  0  0  0  0  0  0  0
 1  0  0  0  0  0  0  0  0  1 -2  1  0  0  0  0  0  0
 1  0  0  0  0  0  0  0  1  0  1 -2  1  0  0  0  0  0
 1  0  0  0  0  0  0  0  0  0  0  1 -2  1  0  0  0  0
 1  0  0  0  0  0  0  0  0  0  0  0  1 -2  1  0  0  0
 1  0  0  0  0  0  0  0  0  0  0  0  0  1 -2  1  0  0
 1  0  0  0  0  0  0  0  0  0  0  0  0  0  1 -2  0  0
 1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -2  0
 1  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0  0 -2
)";

IntMatrix parse_square(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long v = 0;
      in >> v;
      m(i, j) = v;
    }
  return m;
}

IntMatrix columns_to_matrix(const std::vector<IntVector>& cols) {
  return IntMatrix::from_columns(cols, cols.empty() ? 0 : cols.front().size());
}

// Images of s1..s18 in the K3 lattice.
std::vector<IntVector> sextic_images() {
  std::vector<IntVector> cols = {
      k3_vector({{"lambda1", 1}, {"mu1", 1}}),
      k3_vector({{"lambda2", 1}, {"mu2", 3}}),
      k3_vector({{"lambda3", 1}}),
      k3_vector({{"lambda4", 1}}),
  };
  for (int i = 5; i <= 8; ++i) cols.push_back(k3_vector({{"lambda" + std::to_string(i), 1}, {"mu2", 1}}));
  for (int i = 1; i <= 8; ++i) cols.push_back(k3_vector({{"lambda" + std::to_string(i) + "'", 1}, {"mu2", 1}}));
  cols.push_back(k3_vector({{"mu2", 1}, {"mu1'", 1}, {"mu2'", -1}}));
  cols.push_back(k3_vector({{"mu2", 1}, {"mu1''", 1}, {"mu2''", -1}}));
  return cols;
}

IntVector basis_combination(std::size_t rank, const std::vector<std::pair<std::size_t, long>>& terms) {
  IntVector v(rank);
  for (auto [i, c] : terms) v.at(i) += c;
  return v;
}

}  // namespace

const IntMatrix& sextic_gram_full() {
  static const IntMatrix q = parse_square(kSexticRows, 18);
  return q;
}

IntMatrix sextic_gram(std::size_t n) {
  if (n < 3 || n > 18) throw Error(ErrorCode::UnsupportedParameter, "sextic family needs 3 <= n <= 18");
  return sextic_gram_full().block(0, 0, n, n);
}

std::uint64_t gram_checksum(const IntMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::string text;
  for (const auto& v : m.data()) text += v.get_str() + ",";
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

IntVector k3_vector(const std::vector<std::pair<std::string, long>>& terms) {
  static const Lattice k3 = build_K3();
  IntVector v(k3.rank());
  for (const auto& [label, c] : terms) v[k3.index_of(label)] += c;
  return v;
}

CoverCase sextic_case(std::size_t n) {
  CoverCase c;
  c.name = "sextic-n" + std::to_string(n);
  c.pic = Lattice(sextic_gram(n));
  auto images = sextic_images();
  images.resize(n);
  c.embedding = columns_to_matrix(images);
  // s_i -> s_1 + s_2 - s_i
  c.action = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    c.action(0, j) += 1;
    c.action(1, j) += 1;
    c.action(j, j) -= 1;
  }
  c.ample = basis_combination(n, {{0, 1}, {1, 1}});
  for (std::size_t i = 0; i < n; ++i) c.curve_generators.push_back(unit_vector(n, i));
  if (n == 18) c.completing_labels = {"mu1", "mu2", "mu1'", "mu1''"};
  return c;
}

CoverCase quadric_case() {
  CoverCase c;
  c.name = "quadric";
  c.pic = Lattice(IntMatrix{{0, 1, 1, 1}, {1, -2, 2, 0}, {1, 2, -2, 0}, {1, 0, 0, -2}});
  c.embedding = columns_to_matrix({
      k3_vector({{"mu1", 1}, {"mu1'", 1}}),
      k3_vector({{"lambda1", 1}, {"mu2", 1}, {"mu1''", 1}}),
      k3_vector({{"lambda4", 1}, {"mu2", 1}, {"mu2''", 1}}),
      k3_vector({{"lambda2", 1}, {"mu2", 1}}),
  });
  c.action = IntMatrix{{1, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 0, -1}};
  c.ample = basis_combination(4, {{0, 1}, {1, 1}, {2, 1}});
  for (std::size_t i = 0; i < 4; ++i) c.curve_generators.push_back(unit_vector(4, i));
  c.curve_generators.push_back(basis_combination(4, {{1, 1}, {2, 1}, {3, -1}}));
  c.completing_labels = {"lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "lambda6",
                         "lambda7", "lambda8", "lambda1'", "lambda2'", "lambda3'", "lambda4'",
                         "lambda5'", "lambda6'", "lambda7'", "lambda8'", "mu1", "mu2'"};
  return c;
}

CoverCase hirzebruch2_case() {
  CoverCase c;
  c.name = "f2";
  c.pic = Lattice(IntMatrix{{-2, 0, 1, 0, 1},
                            {0, -2, 0, 1, 0},
                            {1, 0, -2, 2, 0},
                            {0, 1, 2, -2, 0},
                            {1, 0, 0, 0, -2}});
  c.embedding = columns_to_matrix({
      k3_vector({{"lambda4", 1}}),
      k3_vector({{"lambda2", 1}, {"mu1", 1}}),
      k3_vector({{"lambda1", 1}, {"mu1", 2}}),
      k3_vector({{"lambda7", 1}, {"mu2", 1}}),
      k3_vector({{"lambda5", 1}}),
  });
  c.action = IntMatrix{{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 0, -1}};
  c.ample = basis_combination(5, {{0, 1}, {1, 1}, {2, 3}, {3, 3}});
  for (std::size_t i = 0; i < 5; ++i) c.curve_generators.push_back(unit_vector(5, i));
  c.curve_generators.push_back(basis_combination(5, {{2, 1}, {3, 1}, {4, -1}}));
  c.completing_labels = {"lambda3",  "lambda6",  "lambda7",  "lambda8",  "lambda1'", "lambda2'",
                         "lambda3'", "lambda4'", "lambda5'", "lambda6'", "lambda7'", "lambda8'",
                         "mu1",      "mu1'",     "mu2'",     "mu1''",    "mu2''"};
  return c;
}

}  // namespace k3ord::reference
