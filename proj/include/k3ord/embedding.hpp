#pragma once

#include <optional>

#include "k3ord/lattice.hpp"

namespace k3ord {

// Columns of `matrix` are the images of the source basis in target coordinates.
struct Embedding {
  Lattice source;
  Lattice target;
  IntMatrix matrix;
};

struct ComplementResult {
  Embedding complement;
  Integer pic_plus_t_det;  // det [P | T]
};

bool check_isometric(const Embedding& e);

// target / image is torsion-free: every invariant factor of the matrix equals 1.
bool is_primitive(const Embedding& e);

// Target vectors completing the image to a Z-basis, or nullopt when the image is not a
// direct summand. Independent route to primitivity, certified by a determinant.
std::optional<IntMatrix> extend_to_basis(const Embedding& e);

ComplementResult orthogonal_complement(const Embedding& e);

}  // namespace k3ord
