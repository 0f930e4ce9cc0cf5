#include "k3ord/embedding.hpp"

namespace k3ord {

bool check_isometric(const Embedding& e) {
  if (e.matrix.rows() != e.target.rank() || e.matrix.cols() != e.source.rank())
    throw Error(ErrorCode::DimensionMismatch, "embedding matrix must be target.rank x source.rank");
  return e.matrix.transpose() * e.target.gram() * e.matrix == e.source.gram();
}

bool is_primitive(const Embedding& e) {
  SmithForm s = snf(e.matrix);
  if (s.rank != e.matrix.cols()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

std::optional<IntMatrix> extend_to_basis(const Embedding& e) {
  const IntMatrix& p = e.matrix;
  const std::size_t n = p.rows();
  const std::size_t r = p.cols();
  // Row Hermite form U P = [T; 0]. The trailing columns of U^-1 complete P, and
  // det [P | C] = +-det T, so the completion is a basis exactly when T is unimodular.
  HermiteForm h = hnf(p);
  if (h.rank != r) return std::nullopt;
  auto u_inv = inverse(to_rational(h.U));
  IntMatrix u_inv_int;
  if (!u_inv || !to_integer(*u_inv, u_inv_int)) return std::nullopt;
  IntMatrix completion = u_inv_int.block(0, r, n, n - r);
  Integer d = det(hstack(p, completion));
  if (d != 1 && d != -1) return std::nullopt;
  return completion;
}

ComplementResult orthogonal_complement(const Embedding& e) {
  IntMatrix t = integer_kernel(e.matrix.transpose() * e.target.gram());
  Lattice source(t.transpose() * e.target.gram() * t);
  IntMatrix frame = hstack(e.matrix, t);
  Integer d = frame.is_square() ? det(frame) : Integer(0);
  return ComplementResult{Embedding{source, e.target, t}, d};
}

}  // namespace k3ord
