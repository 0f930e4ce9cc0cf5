#include "k3ord/lattice.hpp"

namespace k3ord {

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_square()) throw Error(ErrorCode::NonSquare, "Gram matrix must be square");
  if (!is_symmetric(gram_)) throw Error(ErrorCode::NotSymmetric, "Gram matrix must be symmetric");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw Error(ErrorCode::DimensionMismatch, "one label per basis vector");
}

std::size_t Lattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::DimensionMismatch, "no basis vector labelled " + label);
}

Lattice build_E8() {
  // Negative definite, with vertex 1 attached to vertex 4 of the chain 2-3-4-5-6-7-8.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 3}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("lambda" + std::to_string(i));
  return Lattice(g, labels);
}

Lattice build_H() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, {"mu1", "mu2"}); }

namespace {
Lattice relabel(const Lattice& l, const std::string& suffix) {
  std::vector<std::string> labels;
  for (const auto& s : l.labels()) labels.push_back(s + suffix);
  return Lattice(l.gram(), labels);
}
}  // namespace

Lattice build_K3() {
  Lattice l = direct_sum(build_E8(), relabel(build_E8(), "'"));
  l = direct_sum(l, build_H());
  l = direct_sum(l, relabel(build_H(), "'"));
  return direct_sum(l, relabel(build_H(), "''"));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    auto push = [&](const Lattice& l, const char* prefix) {
      for (std::size_t i = 0; i < l.rank(); ++i)
        labels.push_back(l.labels().empty() ? prefix + std::to_string(i + 1) : l.labels()[i]);
    };
    push(a, "a");
    push(b, "b");
  }
  return Lattice(block_diagonal(a.gram(), b.gram()), labels);
}

Integer pair(const Lattice& l, const IntVector& x, const IntVector& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from lattice rank");
  return dot(x, l.gram() * y);
}

bool is_even(const Lattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) % 2 != 0) return false;
  return true;
}

}  // namespace k3ord
