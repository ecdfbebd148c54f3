#pragma once

#include "ftop/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ftop {

/// Non-empty, sorted, duplicate-free list of vertex ids.
using Simplex = std::vector<std::string>;

/// Sorts and deduplicates; throws InvalidInput for an empty vertex list.
Simplex make_simplex(std::vector<std::string> vertices);
inline int simplex_dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }
/// Printable id "{a,b,c}", used for face-poset elements.
std::string simplex_id(const Simplex& s);
/// Dimension first, then lexicographic.
bool simplex_order(const Simplex& a, const Simplex& b);
bool is_face_of(const Simplex& face, const Simplex& simplex);
/// All codimension-one faces, in lexicographic order of the removed vertex.
std::vector<Simplex> boundary_faces(const Simplex& s);

/**
 * Finite abstract simplicial complex stored by its facets.
 *
 * Facets are kept sorted lexicographically; the empty complex has no
 * vertices and dimension -1. Simplices are materialized on demand.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Accepts any generating list of simplices and keeps the maximal ones.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  static SimplicialComplex simplex(const Simplex& s) { return from_simplices({s}); }

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return facets_.empty(); }
  int dimension() const;

  bool contains(const Simplex& s) const;
  /// Every simplex, ordered by dimension then lexicographically.
  std::vector<Simplex> simplices(std::optional<int> max_dim = std::nullopt) const;
  std::vector<std::vector<Simplex>> simplices_by_dimension() const;
  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

  SimplicialComplex intersect(const SimplicialComplex& other) const;
  SimplicialComplex unite(const SimplicialComplex& other) const;
  /// Simplices whose vertices all lie in `vertex_set`.
  SimplicialComplex full_subcomplex(const std::vector<std::string>& vertex_set) const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

 private:
  std::vector<Simplex> facets_;
  std::vector<std::string> vertices_;
};

/// K(X): simplices are the non-empty chains, facets the maximal chains.
SimplicialComplex order_complex(const Poset& poset);

/// χ(K): all simplices ordered by inclusion, element ids from simplex_id().
Poset face_poset(const SimplicialComplex& complex);

}  // namespace ftop
