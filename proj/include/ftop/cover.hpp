#pragma once

#include "ftop/collapse.hpp"
#include "ftop/complex.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/homology.hpp"
#include "ftop/persistence.hpp"
#include "ftop/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftop {

/// Index set J ⊆ I as a bit mask over the member order (at most 64 members).
using MemberMask = std::uint64_t;

/**
 * A finite cover of a simplicial complex by subcomplexes, or of a finite
 * space by open subspaces (down-sets). Members keep their input order; index
 * sets are reported as sorted lists of member names.
 */
class Cover {
 public:
  /// Throws InvalidCover (no members, duplicate names, a member that is not
  /// a subcomplex, or members whose union is not the parent).
  static Cover of_complex(SimplicialComplex parent,
                          std::vector<std::pair<std::string, SimplicialComplex>> members);
  /// Throws InvalidCover also for members that are not open.
  static Cover of_poset(Poset parent, const std::vector<std::pair<std::string, std::vector<std::string>>>& members);
  static Cover of_poset(Poset parent, std::vector<std::pair<std::string, ElementSet>> members);

  bool is_complex() const noexcept { return is_complex_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const SimplicialComplex& parent_complex() const { return parent_complex_; }
  const Poset& parent_poset() const { return parent_poset_; }
  const SimplicialComplex& member_complex(std::size_t i) const { return complexes_.at(i); }
  const ElementSet& member_set(std::size_t i) const { return sets_.at(i); }

  /// Throws UnknownMember.
  std::size_t index_of(std::string_view name) const;
  MemberMask mask_of(const std::vector<std::string>& names) const;
  /// Sorted member names of J.
  Simplex label(MemberMask mask) const;
  MemberMask full_mask() const;

 private:
  bool is_complex_ = true;
  std::vector<std::string> names_;
  SimplicialComplex parent_complex_;
  std::vector<SimplicialComplex> complexes_;
  Poset parent_poset_;
  std::vector<ElementSet> sets_;
};

/// I_J for a non-empty J: a subcomplex, or a subset of the parent poset.
struct CoverObject {
  bool empty = true;
  SimplicialComplex complex;
  ElementSet elements;
};

CoverObject intersection(const Cover& cover, MemberMask mask);

/// Every J with non-empty intersection (depth-first, increasing masks).
std::vector<std::pair<MemberMask, CoverObject>> nonempty_intersections(const Cover& cover);

struct IntersectionRecord {
  MemberMask mask = 0;
  Simplex index_set;
  CoverObject object;
  TriStateResult triviality;
  TriStateResult collapsibility;
  /// Reduced homology vanishes: the computable shadow of contractibility.
  bool acyclic = false;
};

struct ClassifyOptions {
  CollapseOptions collapse;
  /// Every J is listed when |I| is at most this; otherwise only nerve simplices.
  std::size_t max_subsets = 20;
  bool nerve_only = false;
};

struct CoverClassification {
  /// Sorted by (|J|, names). Empty intersections appear only in exhaustive mode.
  std::vector<IntersectionRecord> records;
  bool exhaustive = true;
  Verdict good = Verdict::Yes;
  /// Every non-empty intersection is acyclic.
  Verdict good_shadow = Verdict::Yes;
  Verdict strong_good = Verdict::Yes;
  std::vector<Simplex> unknown_triviality;
  std::vector<Simplex> unknown_collapsibility;
  std::string note;
  /// Position of each record by mask.
  std::map<MemberMask, std::size_t> by_mask;

  const IntersectionRecord* find(MemberMask mask) const;
};

/// Throws InvalidCover if strong-good Yes were ever reported without good Yes.
CoverClassification classify_cover(const Cover& cover, const ClassifyOptions& options = {});

/// N(U), vertices named after the members.
SimplicialComplex nerve(const Cover& cover);
/// χ(U) = χ(N(U)).
Poset non_hausdorff_nerve(const Cover& cover);

/// One element of the reduced nerve: an intersection together with the
/// largest index set producing it.
struct ReducedElement {
  std::string id;
  MemberMask closed_mask = 0;
  CoverObject object;
};

/**
 * Distinct non-empty intersections, equal intersections identified. Each is
 * named by its closed index set J̄ = {i : I_J ⊆ U_i}; J̄ ⊆ J̄' exactly when
 * I_J̄' ⊆ I_J̄, so the order is reverse inclusion of intersections.
 */
struct ReducedNerve {
  Poset poset;
  std::vector<ReducedElement> elements;  // aligned with poset indices
};

ReducedNerve reduced_nerve(const Cover& cover);
SimplicialComplex reduced_nerve_complex(const Cover& cover);

enum class NerveMode { Trivial, Collapsible };
std::string_view to_string(NerveMode mode);
/// Throws InvalidInput.
NerveMode nerve_mode_from_string(std::string_view name);

/// N₀(U) or Ñ₀(U): the subspace of verified intersections. Unknown verdicts
/// are excluded and listed, never treated as Yes.
struct NZero {
  Poset poset;
  /// Parallel to poset indices.
  std::vector<MemberMask> masks;
  std::vector<std::string> excluded_unknown;
  std::vector<std::string> excluded_no;
  bool reduced = false;
  NerveMode mode = NerveMode::Trivial;
};

NZero n_zero_subspace(const Cover& cover, const CoverClassification& classification, NerveMode mode,
                      bool reduced = false);

/// Simplices J of N(U) all of whose faces have verdict Yes.
SimplicialComplex n_zero_complex(const Cover& cover, const CoverClassification& classification,
                                 NerveMode mode);

/// I_x: elements of N₀ whose intersection contains x. Throws UnknownElement.
Poset containing_intersections(const Cover& cover, const NZero& n_zero, std::string_view x);

/// S_σ. Non-reduced: the simplices J of `n_zero_complex` with σ ⊆ I_J.
/// Reduced: the order complex of the elements of Ñ₀ containing σ.
/// Throws UnknownSimplex.
SimplicialComplex chains_containing(const Cover& cover, const SimplicialComplex& n_zero_complex,
                                    const Simplex& sigma);
SimplicialComplex chains_containing(const Cover& cover, const NZero& reduced_n_zero, const Simplex& sigma);

/// K_J = union of the members in J. Throws UnknownMember.
SimplicialComplex subunion(const Cover& cover, const std::vector<std::string>& members);
SimplicialComplex subunion(const Cover& cover, MemberMask mask);

/// Throws NotAChain unless the index sets strictly increase.
PersistenceDiagram persistence_over_chain(const Cover& cover, const std::vector<std::vector<std::string>>& chain);

enum class NerveFlavor { Good, StrongGood, SpaceTrivial, SpaceCollapsible, ComplexContractible, ReducedSpace, ReducedComplex };
std::string_view to_string(NerveFlavor flavor);
/// Throws InvalidInput.
NerveFlavor nerve_flavor_from_string(std::string_view name);

struct HypothesisCheck {
  std::string subject;
  std::string condition;
  Verdict verdict = Verdict::Unknown;
  std::string note;
};

struct NerveReport {
  NerveFlavor flavor = NerveFlavor::Good;
  std::string nerve_object;
  std::vector<HypothesisCheck> hypotheses;
  Verdict hypothesis = Verdict::Yes;
  /// Height / dimension bound n for the reduced flavors.
  std::optional<int> bound;
  HomologyResult parent_homology;
  HomologyResult nerve_homology;
  bool homology_equal = false;
  CoverClassification classification;
  std::vector<std::string> notes;
};

/// The conclusion check (equal reduced homology in every degree) always runs.
/// Throws InvalidInput when the flavor does not match the cover kind.
NerveReport check_nerve_theorem(const Cover& cover, NerveFlavor flavor, const ClassifyOptions& options = {});

struct TruncationFailure {
  Simplex index_set;
  HomologyResult homology;
};

struct TruncationReport {
  CoverClassification classification;
  HomologyResult parent_homology;  // unreduced
  HomologyResult nerve_homology;   // unreduced
  bool part1 = false;
  std::size_t subsets_checked = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::vector<TruncationFailure> failures;
  bool part2 = false;
  std::string status;
  std::vector<std::string> notes;
};

struct TruncationOptions {
  ClassifyOptions classify;
  /// Every J is checked up to this many members; beyond it, nerve simplices
  /// plus `sample` random index sets.
  std::size_t exhaustive_limit = 12;
  std::size_t sample = 256;
};

/// Throws InvalidCover for covers of finite spaces.
TruncationReport check_truncation_theorem(const Cover& cover, const TruncationOptions& options = {});

/// Hypotheses of the cover-plus-relations statement for X_0, ..., X_n: I_x
/// for x in X_0, the per-relation underline/overline sets, and both ends of
/// the composite. Conclusion: reduced homology of every X_i against N₀(U).
struct RelationNerveReport {
  std::vector<HypothesisCheck> hypotheses;
  Verdict hypothesis = Verdict::Yes;
  HomologyResult n_zero_homology;
  std::vector<HomologyResult> space_homology;
  std::vector<bool> homology_equal;
  std::vector<std::string> notes;
};

/// `cover` must be a cover of relations.front().source(). Throws
/// MismatchedSpaces otherwise.
RelationNerveReport check_relation_nerve(const Cover& cover, const std::vector<Relation>& relations,
                                         const ClassifyOptions& options = {});

}  // namespace ftop
