#pragma once

#include "ftop/complex.hpp"
#include "ftop/cover.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/poset.hpp"
#include "ftop/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ftop::gen {

/// Every element gets a random level in [0, height_cap]; a < b is drawn with
/// probability 0.45 whenever level(a) < level(b). Ids are prefix + zero-padded
/// index. size == 0 gives the empty poset.
Poset generate_poset(Rng& rng, std::size_t size, int height_cap, const std::string& prefix = "x");
Poset generate_poset(std::uint64_t seed, std::size_t size, int height_cap, const std::string& prefix = "x");

/// Each pair (x, y) independently with probability `density`.
Relation generate_relation(Rng& rng, const Poset& x, const Poset& y, double density);
Relation generate_relation(std::uint64_t seed, const Poset& x, const Poset& y, double density);

/// Random order-preserving map; falls back to a constant map after repeated
/// dead ends. Throws EmptySpace when the target is empty.
MonotoneMap generate_map(Rng& rng, const Poset& source, const Poset& target);

/// Random complex on at most `max_vertices` vertices v0.., facets of dimension
/// at most `max_dim`.
SimplicialComplex generate_complex(Rng& rng, std::size_t max_vertices, int max_dim = 3);

struct StrongGoodParams {
  std::size_t max_members = 6;
  std::size_t max_facets = 40;
  std::size_t max_clusters = 3;
  std::size_t attempts = 50;
};

struct GeneratedCover {
  SimplicialComplex complex;
  Cover cover;
  std::uint64_t seed = 0;
  /// Candidates rejected by classify_cover before this one was accepted.
  std::size_t rejected = 0;
};

/**
 * Members are cones a_c * L over a shared apex a_c per cluster, where L is a
 * few random vertices and edges from the cluster's private vertex pool.
 * Clusters are glued in a tree, each tree edge along its own glue vertex, so
 * every intersection is a cone or a single vertex. Each candidate is run
 * through classify_cover and kept only when strong-good is Yes. Throws
 * GenerationExhausted.
 */
GeneratedCover generate_strong_good_cover(std::uint64_t seed, const StrongGoodParams& params = {});

/// R1 ⊆ X × Y and R2 ⊆ Y × Z with R2 ∘ R1 = {(x, z) : x <= m(z)} for a
/// monotone m : Z → X, plus noise on Y outside the image of z ↦ g(z).
struct CompositeInstance {
  Relation r1;
  Relation r2;
  MonotoneMap m;
};

CompositeInstance generate_composite(std::uint64_t seed, std::size_t max_size = 6);

/// Surjective monotone maps between chains of sizes k+1 ≥ k ≥ ... (k in {2,3}),
/// returned as graph relations with alternating direction tags.
std::vector<Relation> generate_chain_relations(std::uint64_t seed, std::size_t length);

struct GeneratedPosetCover {
  Cover cover;
  std::size_t rejected = 0;
};

/// Down-set cover (U_x for every maximal x plus a few extra U_x) of a random
/// poset, kept only when every non-empty intersection has a one-point core.
/// Throws GenerationExhausted.
GeneratedPosetCover generate_good_poset_cover(std::uint64_t seed, std::size_t max_size = 9,
                                              std::size_t attempts = 500);

}  // namespace ftop::gen
