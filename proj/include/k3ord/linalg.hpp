#pragma once

#include <optional>

#include "k3ord/matrix.hpp"

namespace k3ord {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  // Diagonal entries of D, including trailing zeros (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

// H = U * A in row echelon form: positive pivots, entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

SmithForm snf(const IntMatrix& a);
HermiteForm hnf(const IntMatrix& a);

// Columns form a saturated basis of {x : A x = 0}, in canonical (Hermite-reduced) form.
IntMatrix integer_kernel(const IntMatrix& a);

// Some x with A x = b, or nullopt when no integer solution exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const IntMatrix& gram);

bool is_symmetric(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace k3ord
