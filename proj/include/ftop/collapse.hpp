#pragma once

#include "ftop/complex.hpp"
#include "ftop/homology.hpp"
#include "ftop/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ftop {

/// Ordered so that std::min is the aggregate over a family of checks.
enum class Verdict { No = 0, Unknown = 1, Yes = 2 };

std::string_view to_string(Verdict v);
inline Verdict meet(Verdict a, Verdict b) { return a < b ? a : b; }

enum class PointKind { DownBeat, UpBeat, DownWeak, UpWeak };

std::string_view to_string(PointKind k);
/// Throws InvalidInput for an unrecognised name.
PointKind point_kind_from_string(std::string_view name);

struct PointRemoval {
  std::string element;
  PointKind kind;
  bool operator==(const PointRemoval&) const = default;
};

struct FreeFacePair {
  Simplex face;
  Simplex coface;
  bool operator==(const FreeFacePair&) const = default;
};

using CollapseStep = std::variant<PointRemoval, FreeFacePair>;

/// Explicit witness of a collapse: replaying the steps from the start object
/// must reach a point or the declared target.
struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  bool operator==(const CollapseCertificate&) const = default;
};

/// Answer of a semi-decision. Yes carries a certificate, No a homology
/// witness; Unknown carries only a note.
struct TriStateResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<CollapseCertificate> certificate;
  std::optional<HomologyResult> witness;
  std::string note;

  static TriStateResult yes(CollapseCertificate certificate, std::string note = {});
  static TriStateResult no(HomologyResult witness, std::string note = {});
  static TriStateResult unknown(std::string note);
};

struct CollapseOptions {
  /// Seeded random restarts attempted after the deterministic pass gets stuck.
  int restarts = 8;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Finite spaces. Functions taking `alive` work on the subspace of `poset`
// induced by that subset, which avoids materializing intermediate posets.

bool has_maximum(const Poset& poset, const ElementSet& subset);
bool has_minimum(const Poset& poset, const ElementSet& subset);
/// Down-beat takes precedence when x is both.
std::optional<PointKind> beat_kind(const Poset& poset, const ElementSet& alive, std::size_t x);
std::optional<PointKind> weak_kind(const Poset& poset, const ElementSet& alive, std::size_t x);
bool is_contractible(const Poset& poset, const ElementSet& alive);
/// Iterated beat-point removal, smallest id first. Appends to `steps` if given.
ElementSet core_of(const Poset& poset, ElementSet alive, std::vector<CollapseStep>* steps = nullptr);

struct TaggedPoint {
  std::string element;
  PointKind kind;
  bool operator==(const TaggedPoint&) const = default;
};

/// An element that is both down- and up-beat (or weak) is listed twice.
std::vector<TaggedPoint> beat_points(const Poset& poset);
std::vector<TaggedPoint> weak_points(const Poset& poset);
/// γ-point verdict for every element: is its link Û_x ∪ F̂_x homotopically trivial?
std::vector<std::pair<std::string, TriStateResult>> gamma_points(const Poset& poset,
                                                                 const CollapseOptions& options = {});

struct CoreResult {
  Poset core;
  CollapseCertificate certificate;
};
CoreResult core(const Poset& poset);

/// Exact. Throws EmptySpace.
bool is_contractible_space(const Poset& poset);

/// Weak-point removals along the linear extension (optionally never removing
/// target elements). Yes when a point, or exactly the target, remains; No when
/// homology rules the collapse out; Unknown otherwise.
TriStateResult greedy_collapse_space(const Poset& poset, const CollapseOptions& options = {});
TriStateResult greedy_collapse_space(const Poset& poset, const ElementSet& target,
                                     const CollapseOptions& options = {});
/// Throws TargetNotInduced unless `target` is an induced subposet of `poset`.
TriStateResult greedy_collapse_space(const Poset& poset, const Poset& target,
                                     const CollapseOptions& options = {});

/// Throws EmptyObject.
TriStateResult is_homotopically_trivial(const Poset& poset, const CollapseOptions& options = {});

// ---------------------------------------------------------------------------
// Simplicial complexes.

enum class CollapseStrategy {
  Greedy,          ///< deterministic pass only
  Restarts,        ///< deterministic pass, then seeded random restarts
};

/// Pairs (τ, σ) where τ lies in exactly one other simplex σ; lowest dimension
/// first, then lexicographic.
std::vector<FreeFacePair> free_faces(const SimplicialComplex& complex);

/// Throws EmptyComplex.
TriStateResult greedy_collapse_complex(const SimplicialComplex& complex,
                                       CollapseStrategy strategy = CollapseStrategy::Restarts,
                                       const CollapseOptions& options = {});
/// Staged strategy for a ∪ b: a ∪ b ↘ b ↘ a ∩ b ↘ point, each stage with
/// restarts. The certificate concatenates the three stages.
TriStateResult staged_union_collapse(const SimplicialComplex& a, const SimplicialComplex& b,
                                     const CollapseOptions& options = {});
/// Collapse onto a subcomplex: only pairs outside `target` are removed.
/// Throws InvalidInput when target is not a subcomplex.
TriStateResult collapse_onto(const SimplicialComplex& complex, const SimplicialComplex& target,
                             const CollapseOptions& options = {});

/// Throws EmptyObject.
TriStateResult is_homotopically_trivial(const SimplicialComplex& complex,
                                        const CollapseOptions& options = {});

// ---------------------------------------------------------------------------
// Certificate replay.

struct ReplayOutcome {
  bool ok = false;
  std::string message;
  std::size_t steps_applied = 0;
};

/// Replays point removals; with no target the result must be a single point.
ReplayOutcome replay(const Poset& start, const CollapseCertificate& certificate,
                     const std::optional<ElementSet>& target = std::nullopt);
/// Replays free-face pairs; with no target the result must be a single vertex.
ReplayOutcome replay(const SimplicialComplex& start, const CollapseCertificate& certificate,
                     const std::optional<SimplicialComplex>& target = std::nullopt);

}  // namespace ftop
