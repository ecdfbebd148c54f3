#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftop {

/// Subset of a poset, indexed by the parent's element positions.
using ElementSet = boost::dynamic_bitset<>;
using ElementPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * A finite T0-space, stored as a partial order on opaque string ids.
 *
 * Elements are kept sorted lexicographically, so element indices double as
 * the deterministic tie-break order used by every algorithm in the library.
 * The strict order is precomputed as one bitset per element in each
 * direction; the Hasse diagram is the transitive reduction of that order.
 *
 * Open sets are down-sets: the minimal open set of x is U_x = {y : y <= x}
 * and its closure is F_x = {y : y >= x}.
 */
class Poset {
 public:
  Poset() = default;

  /// Builds the order generated by `relations` (pairs (a, b) read as a <= b).
  /// Throws CycleDetected, DuplicateElement or UnknownElement.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<ElementPair>& relations);

  /// Same as build() but with relations given as indices into `elements`
  /// after they have been sorted; `elements` must already be sorted and unique.
  static Poset from_sorted(std::vector<std::string> elements,
                           const std::vector<IndexPair>& relations);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& id(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownElement.
  std::size_t index_of(std::string_view id) const;

  bool less(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Û_x and F̂_x.
  const ElementSet& strictly_below(std::size_t x) const { return below_.at(x); }
  const ElementSet& strictly_above(std::size_t x) const { return above_.at(x); }

  ElementSet down_set(std::size_t x, bool strict = false) const;
  ElementSet up_set(std::size_t x, bool strict = false) const;
  ElementSet down_set(std::string_view x, bool strict = false) const {
    return down_set(index_of(x), strict);
  }
  ElementSet up_set(std::string_view x, bool strict = false) const {
    return up_set(index_of(x), strict);
  }

  /// Union of F_a over a in A.
  ElementSet closure(const ElementSet& subset) const;
  /// Union of U_a over a in A.
  ElementSet open_hull(const ElementSet& subset) const;
  bool is_open(const ElementSet& subset) const;
  bool is_closed(const ElementSet& subset) const;

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet(size()).set(); }
  /// Throws UnknownElement.
  ElementSet subset(const std::vector<std::string>& ids) const;
  std::vector<std::string> names(const ElementSet& subset) const;

  /// Covering pairs (a, b), a < b, sorted.
  const std::vector<IndexPair>& hasse() const noexcept { return hasse_; }
  std::vector<ElementPair> hasse_pairs() const;
  /// Every strict pair a < b, sorted.
  std::vector<IndexPair> order_pairs() const;

  /// Length (edge count) of the longest chain; 0 for a single point and -1
  /// for the empty poset.
  int height() const;
  /// Length of the longest chain ending at x.
  int height_of(std::size_t x) const { return heights_.at(x); }

  /// Kahn's algorithm, smallest available id first.
  std::vector<std::size_t> linear_extension() const;
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  Poset opposite() const;
  /// The subspace on `subset` with the restricted order.
  Poset induced(const ElementSet& subset) const;

  bool operator==(const Poset& other) const {
    return elements_ == other.elements_ && hasse_ == other.hasse_;
  }

 private:
  static Poset from_order(std::vector<std::string> elements, std::vector<ElementSet> below);

  std::vector<std::string> elements_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
  std::vector<IndexPair> hasse_;
  std::vector<int> heights_;
};

}  // namespace ftop
