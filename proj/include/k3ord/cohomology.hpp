#pragma once

#include <vector>

#include "k3ord/embedding.hpp"

namespace k3ord {

// A lattice with an automorphism sigma of order dividing `order`.
struct GLattice {
  Lattice lattice;
  IntMatrix sigma;  // acts on coordinate columns
  unsigned order = 1;
};

// Validates sigma^order = I and sigma^T G sigma = G; throws InvalidGroupAction otherwise.
GLattice make_glattice(Lattice lattice, IntMatrix sigma, unsigned order);

struct NormAndDiff {
  IntMatrix norm;  // 1 + sigma + ... + sigma^(n-1)
  IntMatrix diff;  // 1 - sigma
};

NormAndDiff norm_and_diff(const IntMatrix& sigma, unsigned order);
NormAndDiff norm_and_diff(const GLattice& gl);

struct CohResult {
  std::vector<Integer> invariant_factors;  // each > 1, d1 | d2 | ...
  std::size_t free_rank = 0;
  std::vector<IntVector> generators;  // one cocycle per invariant factor
};

// ker(A) / im(B) for integer matrices with A B = 0, with explicit coordinates.
class Subquotient {
 public:
  Subquotient(const IntMatrix& kernel_of, const IntMatrix& image_of);

  const CohResult& result() const noexcept { return result_; }
  bool in_kernel(const IntVector& x) const;
  bool in_image(const IntVector& x) const;
  // Coordinates of the class of x: residues mod each invariant factor, then free coordinates.
  // Throws NotACocycle when x is outside the kernel.
  std::vector<Integer> class_of(const IntVector& x) const;
  bool is_trivial_class(const IntVector& x) const;
  // True when the classes of `vectors` generate the whole quotient.
  bool generates(const std::vector<IntVector>& vectors) const;

 private:
  IntMatrix a_;
  IntMatrix b_;
  IntMatrix kernel_;       // columns: saturated basis of ker A
  IntMatrix change_;       // U from the Smith form of the image coordinates
  std::vector<Integer> diagonal_;  // length = kernel rank; 0 marks a free coordinate
  CohResult result_;
};

// H^1 = ker N / im D for the cyclic group generated by sigma.
CohResult h1(const GLattice& gl);
Subquotient h1_presentation(const IntMatrix& sigma, unsigned order);

Embedding fixed_sublattice(const GLattice& gl);

// Fixed sublattice with its form halved; requires order 2 and an even fixed Gram.
Lattice half_gram_quotient(const GLattice& gl);

}  // namespace k3ord
