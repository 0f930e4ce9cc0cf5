#include "k3ord/isometry.hpp"

namespace k3ord {

namespace {
const char* kHodgeAssumption =
    "lattice-side conditions only: the fixed ample class and -1 on the complement are certified; "
    "preservation of the holomorphic 2-form period is assumed, not checked";
}

ExtensionResult extend_by_minus_one(const Lattice& target, const Embedding& pic, const IntMatrix& action) {
  if (!(target == pic.target)) throw Error(ErrorCode::DimensionMismatch, "embedding targets a different lattice");
  return extend_by_minus_one(target, pic, action, orthogonal_complement(pic).complement.matrix);
}

ExtensionResult extend_by_minus_one(const Lattice& target, const Embedding& pic, const IntMatrix& action,
                                    const IntMatrix& complement_basis) {
  if (!(target == pic.target)) throw Error(ErrorCode::DimensionMismatch, "embedding targets a different lattice");
  if (!check_isometric(pic)) throw Error(ErrorCode::DimensionMismatch, "embedding is not isometric");
  const std::size_t r = pic.source.rank();
  if (action.rows() != r || action.cols() != r)
    throw Error(ErrorCode::DimensionMismatch, "action must be square of the Picard rank");
  if (action.transpose() * pic.source.gram() * action != pic.source.gram())
    throw Error(ErrorCode::ActionNotIsometric, "action does not preserve the Picard form");
  if (complement_basis.rows() != target.rank())
    throw Error(ErrorCode::DimensionMismatch, "complement basis lives in the wrong lattice");

  IntMatrix frame = hstack(pic.matrix, complement_basis);
  if (!frame.is_square() || det(frame) == 0)
    throw Error(ErrorCode::SingularFrame, "Picard image and complement do not span over Q");

  const std::size_t n = target.rank();
  IntMatrix block = block_diagonal(action, -IntMatrix::identity(n - r));
  RatMatrix a = to_rational(frame);
  RatMatrix phi = a * to_rational(block) * *inverse(a);

  ExtensionResult res;
  res.phi = phi;
  IntMatrix phi_int;
  res.integral = to_integer(phi, phi_int);
  if (res.integral) res.phi_integer = phi_int;
  RatMatrix g = to_rational(target.gram());
  res.orthogonal = phi.transpose() * g * phi == g;
  res.involutive = phi * phi == RatMatrix::identity(n);
  res.assumptions.push_back(kHodgeAssumption);
  return res;
}

bool fixes_vector(const ExtensionResult& res, const IntVector& v_in_pic_coords, const Embedding& pic) {
  IntVector image = pic.matrix * v_in_pic_coords;
  RatVector x(image.begin(), image.end());
  return res.phi * x == x;
}

}  // namespace k3ord
