#pragma once

#include "ftop/complex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ftop {

/// Half-open interval [birth, death) of filtration steps, numbered from 1.
struct Bar {
  int degree = 0;
  std::size_t birth = 0;
  std::optional<std::size_t> death;  // nullopt: never dies

  bool operator==(const Bar&) const = default;
};

struct PersistenceDiagram {
  /// Labels of the filtration steps (for cover filtrations, the index sets).
  std::vector<std::vector<std::string>> filtration;
  /// Bars sorted by (degree, birth, death); zero-length pairs are dropped.
  std::vector<Bar> bars;

  std::vector<Bar> bars_in_degree(int degree) const;
  /// Number of bars of the given degree alive at `step`.
  std::size_t alive(int degree, std::size_t step) const;
};

/**
 * Standard column reduction over the two-element field for a nested
 * sequence K_1 ⊆ K_2 ⊆ ... ⊆ K_T. Simplices enter at their first step and
 * are ordered by (step, dimension, lexicographic). Degree-0 bars use the
 * unreduced convention, so every non-empty filtration has one infinite
 * degree-0 bar per connected component of K_T.
 *
 * Throws NotAChain if some K_t is not a subcomplex of K_{t+1}.
 */
PersistenceDiagram persistence_of_filtration(const std::vector<SimplicialComplex>& filtration);

}  // namespace ftop
