#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "k3ord/lattice.hpp"

namespace k3ord::reference {

// The 18x18 Gram matrix whose leading n x n blocks are the Picard lattices of the
// double planes branched along a sextic with n - 1 tritangents.
const IntMatrix& sextic_gram_full();
IntMatrix sextic_gram(std::size_t n);  // 3 <= n <= 18

// FNV-1a over the comma-joined row-major entries; guards the transcription.
std::uint64_t gram_checksum(const IntMatrix& m);
inline constexpr std::uint64_t kSexticGramChecksum = 0x70051ada7e58cf05ULL;

// Vector in the K3 lattice from (basis label, coefficient) pairs.
IntVector k3_vector(const std::vector<std::pair<std::string, long>>& terms);

// A Picard lattice embedded in the K3 lattice together with its involution and ample data.
struct CoverCase {
  std::string name;
  Lattice pic;
  IntMatrix embedding;  // 22 x rank, columns are images of the basis
  IntMatrix action;     // columns are images of the basis
  IntVector ample;
  std::vector<IntVector> curve_generators;
  // Basis labels of K3 vectors that complete the image of the embedding to a Z-basis.
  std::vector<std::string> completing_labels;
};

CoverCase sextic_case(std::size_t n);  // 3 <= n <= 18
CoverCase quadric_case();
CoverCase hirzebruch2_case();

}  // namespace k3ord::reference
