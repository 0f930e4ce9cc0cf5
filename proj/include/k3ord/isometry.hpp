#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3ord/embedding.hpp"

namespace k3ord {

struct ExtensionResult {
  RatMatrix phi;  // acts on target coordinate columns
  bool integral = false;
  bool orthogonal = false;
  bool involutive = false;
  std::optional<IntMatrix> phi_integer;
  std::vector<std::string> assumptions;
};

// Extends `action` on the embedded lattice by -1 on its orthogonal complement.
// phi = A diag(action, -I) A^-1 with A = [P | T], computed over Q.
ExtensionResult extend_by_minus_one(const Lattice& target, const Embedding& pic, const IntMatrix& action);

// Same, with a caller-chosen basis of the complement (used to test basis independence).
ExtensionResult extend_by_minus_one(const Lattice& target, const Embedding& pic, const IntMatrix& action,
                                    const IntMatrix& complement_basis);

bool fixes_vector(const ExtensionResult& res, const IntVector& v_in_pic_coords, const Embedding& pic);

}  // namespace k3ord
