#pragma once

#include "ftop/collapse.hpp"
#include "ftop/poset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ftop {

/// Position of a relation inside a sequence X_0, ..., X_n: R_i goes right
/// when R_i ⊆ X_i × X_{i+1} and left when R_i ⊆ X_{i+1} × X_i.
enum class Direction { Right, Left };

std::string_view to_string(Direction d);
/// Throws InvalidInput.
Direction direction_from_string(std::string_view name);

/// R ⊆ source × target, pairs stored as sorted index pairs.
class Relation {
 public:
  Relation() = default;
  /// Throws UnknownElement when a pair names an element outside its poset.
  Relation(Poset source, Poset target, const std::vector<ElementPair>& pairs,
           Direction direction = Direction::Right);
  Relation(Poset source, Poset target, std::vector<IndexPair> pairs, Direction direction = Direction::Right);

  const Poset& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }
  std::vector<ElementPair> named_pairs() const;
  Direction direction() const noexcept { return direction_; }
  Relation with_direction(Direction d) const;

  bool related(std::size_t x, std::size_t y) const;
  /// R(A) ⊆ target.
  ElementSet image(const ElementSet& a) const;
  /// R⁻¹(B) ⊆ source.
  ElementSet preimage(const ElementSet& b) const;
  /// Swaps source and target; the direction tag is kept.
  Relation inverse() const;

 private:
  Poset source_;
  Poset target_;
  std::vector<IndexPair> pairs_;
  Direction direction_ = Direction::Right;
};

/// {(x, z) : x R1 y and y R2 z for some y}. Throws MismatchedSpaces.
Relation compose(const Relation& r1, const Relation& r2);
/// R_{n-1} ∘ ... ∘ R_0 for relations given in order R_0, ..., R_{n-1}.
Relation compose_chain(const std::vector<Relation>& relations);

/// Order-preserving map, stored as target index per source index.
struct MonotoneMap {
  Poset source;
  Poset target;
  std::vector<std::size_t> image;

  /// Throws UnknownElement for a partial or ill-typed assignment and
  /// NotOrderPreserving when x <= x' but f(x) is not <= f(x').
  static MonotoneMap from_assignment(Poset source, Poset target,
                                     const std::map<std::string, std::string>& assignment);
  /// The graph relation x R f(x).
  Relation graph(Direction direction = Direction::Right) const;
};

/// A cylinder together with the position of every copy inside it. Element
/// ids are tagged "i:id" where i is the copy number.
struct Cylinder {
  Poset poset;
  /// copies[i][j] = index in `poset` of element j of X_i.
  std::vector<std::vector<std::size_t>> copies;

  static std::string tag(std::size_t copy, std::string_view id);
  ElementSet copy(std::size_t i) const;
  /// Indices in `poset` of a subset of X_i.
  ElementSet embed(std::size_t i, const ElementSet& subset) const;
  /// Cross pairs (x, y), x < y with x and y in different copies, as tagged ids.
  std::vector<ElementPair> cross_pairs() const;
};

/// B(R): X ⊔ Y with x <= y iff x <= x' R y' <= y for some x', y'.
/// The direction tag of R is ignored; X is copy 0 and Y copy 1.
Cylinder relation_cylinder(const Relation& r);

/// B(f) built directly from x <= y iff f(x) <= y.
Cylinder mapping_cylinder(const MonotoneMap& f);

struct MapStep {
  MonotoneMap map;
  Direction direction = Direction::Right;
};

/// Multiple non-Hausdorff mapping cylinder B(f_0, ..., f_{n-1}; X_0, ..., X_n).
/// Throws MalformedSpec when a map does not connect its neighbours.
Cylinder multiple_mapping_cylinder(const std::vector<Poset>& spaces, const std::vector<MapStep>& maps);

struct CylinderSpec {
  std::vector<Poset> spaces;
  std::vector<Relation> relations;  // R_i with its direction tag

  /// Throws MalformedSpec.
  void validate() const;
};

/**
 * Multiple cylinder of relations. Even-indexed copies sit below their odd
 * neighbours: each relation is first normalized to (lower, upper) pairs,
 * whichever orientation it is stored in, and x <= y across copies iff
 * x <= x' and y' <= y for a normalized pair (x', y').
 */
Cylinder multiple_cylinder(const CylinderSpec& spec);

/// underline{R⁻¹(U_y)} ⊆ source.
ElementSet underline_preimage(const Relation& r, std::size_t y);
/// overline{R(F_x)} ⊆ target.
ElementSet overline_image(const Relation& r, std::size_t x);

struct ElementCheck {
  std::string element;
  /// The underline / overline set, as ids of the opposite space.
  std::vector<std::string> set;
  TriStateResult triviality;
  TriStateResult collapsibility;
};

/**
 * Hypotheses and certified collapse of B(R) onto one end.
 *
 * Left side: for every y, underline{R⁻¹(U_y)} is checked and, if every
 * collapsibility verdict is Yes, the elements of Y are removed along a
 * linear extension. Before each removal the strict down-set of y in the
 * current space is compared with the underline set (they must be equal) and
 * y must be a weak point. Right side is dual, removing X from the top.
 */
struct CollapseReport {
  std::string claim;
  std::vector<ElementCheck> checks;
  Verdict triviality = Verdict::Yes;
  Verdict collapsibility = Verdict::Yes;
  Cylinder cylinder;
  /// Copy of the cylinder the certificate collapses onto.
  std::size_t target_copy = 0;
  /// Yes only when the certificate was built and replays onto the target copy.
  Verdict certified = Verdict::Unknown;
  std::optional<CollapseCertificate> certificate;
  std::string note;
};

CollapseReport check_collapse_left(const Relation& r, const CollapseOptions& options = {});
CollapseReport check_collapse_right(const Relation& r, const CollapseOptions& options = {});

enum class Side { Left, Right };

/**
 * Left: hypotheses on R1 and on R2 ∘ R1, certifying B(R2 ∘ R1) ↘ X and
 * B(R1) ↘ X with bound n = h(X). Right: hypotheses on R2 and on R2 ∘ R1,
 * certifying collapses onto Z with n = h(Z).
 */
struct IntermediateReport {
  Side side = Side::Left;
  CollapseReport single;
  CollapseReport composite;
  Verdict verdict = Verdict::Yes;
  int bound = 0;
  std::string note;
};

/// Throws MismatchedSpaces.
IntermediateReport check_intermediate(const Relation& r1, const Relation& r2, Side side,
                                      const CollapseOptions& options = {});

/// Both ends of the composite of a chain R_0, ..., R_{n-1}; bound n = h(B(R)).
struct ChainReport {
  CollapseReport left;
  CollapseReport right;
  Verdict verdict = Verdict::Yes;
  int bound = 0;
  std::string note;
};

ChainReport check_chain(const std::vector<Relation>& relations, const CollapseOptions& options = {});

/// Text attached to every report that mentions a bounded deformation.
extern const char* const kBoundNote;

}  // namespace ftop
