#include "k3ord/cohomology.hpp"

namespace k3ord {

GLattice make_glattice(Lattice lattice, IntMatrix sigma, unsigned order) {
  if (order == 0) throw Error(ErrorCode::InvalidGroupAction, "order must be at least 1");
  if (sigma.rows() != lattice.rank() || sigma.cols() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch, "sigma must be rank x rank");
  if (matrix_power(sigma, order) != IntMatrix::identity(lattice.rank()))
    throw Error(ErrorCode::InvalidGroupAction, "sigma^order is not the identity");
  if (sigma.transpose() * lattice.gram() * sigma != lattice.gram())
    throw Error(ErrorCode::InvalidGroupAction, "sigma is not an isometry");
  return GLattice{std::move(lattice), std::move(sigma), order};
}

NormAndDiff norm_and_diff(const IntMatrix& sigma, unsigned order) {
  const std::size_t r = sigma.rows();
  IntMatrix norm(r, r);
  IntMatrix power = IntMatrix::identity(r);
  for (unsigned i = 0; i < order; ++i) {
    norm = norm + power;
    power = power * sigma;
  }
  return NormAndDiff{norm, IntMatrix::identity(r) - sigma};
}

NormAndDiff norm_and_diff(const GLattice& gl) { return norm_and_diff(gl.sigma, gl.order); }

Subquotient::Subquotient(const IntMatrix& kernel_of, const IntMatrix& image_of)
    : a_(kernel_of), b_(image_of), kernel_(integer_kernel(kernel_of)) {
  const std::size_t k = kernel_.cols();
  // Coordinates of the image generators in the kernel basis.
  IntMatrix coords(k, b_.cols());
  for (std::size_t j = 0; j < b_.cols(); ++j) {
    auto c = solve_integer(kernel_, b_.column(j));
    if (!c) throw Error(ErrorCode::DimensionMismatch, "image is not contained in the kernel");
    coords.set_column(j, *c);
  }
  SmithForm s = snf(coords);
  change_ = s.U;
  diagonal_.assign(k, Integer(0));
  for (std::size_t i = 0; i < s.rank; ++i) diagonal_[i] = s.D(i, i);

  IntMatrix change_inv;
  to_integer(*inverse(to_rational(change_)), change_inv);
  for (std::size_t i = 0; i < k; ++i) {
    if (diagonal_[i] == 1) continue;
    if (diagonal_[i] == 0) {
      ++result_.free_rank;
      continue;
    }
    result_.invariant_factors.push_back(diagonal_[i]);
    result_.generators.push_back(kernel_ * change_inv.column(i));
  }
}

bool Subquotient::in_kernel(const IntVector& x) const { return is_zero(a_ * x); }

bool Subquotient::in_image(const IntVector& x) const { return solve_integer(b_, x).has_value(); }

std::vector<Integer> Subquotient::class_of(const IntVector& x) const {
  auto c = solve_integer(kernel_, x);
  if (!c) throw Error(ErrorCode::NotACocycle, "vector is not in the kernel");
  IntVector y = change_ * *c;
  std::vector<Integer> torsion;
  std::vector<Integer> free;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (diagonal_[i] == 0) {
      free.push_back(y[i]);
    } else if (diagonal_[i] != 1) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), diagonal_[i].get_mpz_t());
      torsion.push_back(r);
    }
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

bool Subquotient::is_trivial_class(const IntVector& x) const {
  for (const auto& c : class_of(x))
    if (c != 0) return false;
  return true;
}

bool Subquotient::generates(const std::vector<IntVector>& vectors) const {
  const auto& tf = result_.invariant_factors;
  const std::size_t t = tf.size();
  const std::size_t dim = t + result_.free_rank;
  if (dim == 0) return true;
  // Columns: class coordinates of the vectors, then the relations d_i e_i.
  IntMatrix m(dim, vectors.size() + t);
  for (std::size_t j = 0; j < vectors.size(); ++j) m.set_column(j, class_of(vectors[j]));
  for (std::size_t i = 0; i < t; ++i) m(i, vectors.size() + i) = tf[i];
  SmithForm s = snf(m);
  if (s.rank != dim) return false;
  for (std::size_t i = 0; i < dim; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

Subquotient h1_presentation(const IntMatrix& sigma, unsigned order) {
  auto nd = norm_and_diff(sigma, order);
  return Subquotient(nd.norm, nd.diff);
}

CohResult h1(const GLattice& gl) { return h1_presentation(gl.sigma, gl.order).result(); }

Embedding fixed_sublattice(const GLattice& gl) {
  const std::size_t r = gl.lattice.rank();
  IntMatrix k = integer_kernel(IntMatrix::identity(r) - gl.sigma);
  Lattice source(k.transpose() * gl.lattice.gram() * k);
  return Embedding{source, gl.lattice, k};
}

Lattice half_gram_quotient(const GLattice& gl) {
  if (gl.order != 2) throw Error(ErrorCode::InvalidGroupAction, "half-Gram quotient needs an involution");
  const Embedding fixed = fixed_sublattice(gl);
  const IntMatrix& g = fixed.source.gram();
  IntMatrix half(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j) % 2 != 0) throw Error(ErrorCode::OddEntry, "fixed sublattice form has an odd entry");
      half(i, j) = g(i, j) / 2;
    }
  return Lattice(half);
}

}  // namespace k3ord
