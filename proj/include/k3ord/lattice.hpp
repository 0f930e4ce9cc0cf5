#pragma once

#include <string>
#include <vector>

#include "k3ord/linalg.hpp"

namespace k3ord {

// Free Z-module with a symmetric integral form. Labels are metadata only.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Index of a basis label; throws DimensionMismatch when absent.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

Lattice build_E8();
Lattice build_H();
// E8 + E8 + H + H + H, basis lambda1..8, lambda1'..8', mu1, mu2, mu1', mu2', mu1'', mu2''.
Lattice build_K3();

Lattice direct_sum(const Lattice& a, const Lattice& b);
Integer pair(const Lattice& l, const IntVector& x, const IntVector& y);
bool is_even(const Lattice& l);

}  // namespace k3ord
