#pragma once

#include "ftop/complex.hpp"
#include "ftop/poset.hpp"
#include "ftop/smith.hpp"

#include <cstddef>
#include <vector>

namespace ftop {

enum class Ring { Integer, Binary };

/// Simplicial chain complex with lexicographically ordered bases.
/// boundaries[d] maps C_d to C_{d-1}; boundaries[0] is the 0 x n0 matrix.
struct ChainComplexData {
  Ring ring = Ring::Integer;
  std::vector<std::vector<Simplex>> bases;
  std::vector<IntegerMatrix> boundaries;
};

/// Signs follow the sorted-vertex orientation: removing vertex i gives (-1)^i.
/// Throws EmptyComplex.
ChainComplexData boundary_matrices(const SimplicialComplex& complex, Ring ring = Ring::Integer);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologyResult {
  bool reduced = true;
  /// The input was empty; reduced homology is then concentrated in degree -1.
  bool empty = false;
  /// Degrees 0..dim, trailing trivial groups trimmed.
  std::vector<HomologyGroup> degrees;

  /// Zero in every degree (reduced: acyclic). Never true for an empty input.
  bool is_trivial() const;
  /// Trivial in every degree k > 0.
  bool vanishes_above_zero() const;
  const HomologyGroup& degree(std::size_t k) const;
  std::size_t betti(std::size_t k) const { return degree(k).betti; }

  bool operator==(const HomologyResult& other) const {
    return reduced == other.reduced && empty == other.empty && degrees == other.degrees;
  }
};

/// Integral homology via Smith normal form. Throws EmptyComplex.
HomologyResult reduced_homology(const SimplicialComplex& complex);
HomologyResult homology(const SimplicialComplex& complex);
/// Reduced homology of the order complex. Throws EmptySpace.
HomologyResult homology_of_poset(const Poset& poset);
/// Marker result for empty inputs.
HomologyResult empty_homology(bool reduced = true);

/// Betti numbers over the two-element field, degrees 0..dim (untrimmed).
std::vector<std::size_t> betti_numbers_mod2(const SimplicialComplex& complex, bool reduced);

}  // namespace ftop
