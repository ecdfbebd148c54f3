#pragma once

// Brute-force reference implementations used by the tests. None of them call
// into the algorithms they check; they only read the input structures.

#include "ftop/complex.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/poset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using boost::multiprecision::cpp_int;

/// Order as adjacency bit masks: below[x] has bit y set iff y < x.
struct SmallOrder {
  std::size_t n = 0;
  std::vector<Mask> below;
  std::vector<Mask> above;

  explicit SmallOrder(const ftop::Poset& p) : n(p.size()), below(n, 0), above(n, 0) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && p.leq(a, b)) {
          below[b] |= Mask{1} << a;
          above[a] |= Mask{1} << b;
        }
  }
};

inline bool has_max(const SmallOrder& o, Mask s) {
  if (s == 0) return false;
  for (std::size_t y = 0; y < o.n; ++y)
    if ((s >> y & 1) && (s & ~(o.below[y] | Mask{1} << y)) == 0) return true;
  return false;
}

inline bool has_min(const SmallOrder& o, Mask s) {
  if (s == 0) return false;
  for (std::size_t y = 0; y < o.n; ++y)
    if ((s >> y & 1) && (s & ~(o.above[y] | Mask{1} << y)) == 0) return true;
  return false;
}

inline bool is_beat(const SmallOrder& o, Mask alive, std::size_t x) {
  return has_max(o, o.below[x] & alive) || has_min(o, o.above[x] & alive);
}

/// Does some order of beat-point removals from `alive` reach one point?
/// Explores every reachable subspace.
inline bool contractible_by_search(const SmallOrder& o, Mask alive, std::unordered_map<Mask, bool>& memo) {
  if (std::popcount(alive) == 1) return true;
  if (auto it = memo.find(alive); it != memo.end()) return it->second;
  bool found = false;
  for (std::size_t x = 0; x < o.n && !found; ++x)
    if ((alive >> x & 1) && is_beat(o, alive, x)) found = contractible_by_search(o, alive & ~(Mask{1} << x), memo);
  memo[alive] = found;
  return found;
}

inline bool contractible_by_search(const ftop::Poset& p) {
  const SmallOrder o(p);
  std::unordered_map<Mask, bool> memo;
  return contractible_by_search(o, (p.size() >= 32 ? ~Mask{0} : (Mask{1} << p.size()) - 1), memo);
}

// ---------------------------------------------------------------------------
// Chains and complexes

/// Maximal chains by depth-first extension from minimal elements.
inline std::set<std::vector<std::string>> maximal_chains(const ftop::Poset& p) {
  std::set<std::vector<std::string>> out;
  std::vector<std::size_t> current;
  std::function<void()> extend = [&]() {
    bool extended = false;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (current.empty()) {
        bool minimal = true;
        for (std::size_t z = 0; z < p.size(); ++z)
          if (z != y && p.leq(z, y)) minimal = false;
        if (!minimal) continue;
      } else {
        const std::size_t x = current.back();
        if (x == y || !p.leq(x, y)) continue;
        bool cover = true;
        for (std::size_t z = 0; z < p.size(); ++z)
          if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) cover = false;
        if (!cover) continue;
      }
      extended = true;
      current.push_back(y);
      extend();
      current.pop_back();
    }
    if (!extended && !current.empty()) {
      std::vector<std::string> ids;
      for (std::size_t i : current) ids.push_back(p.id(i));
      std::sort(ids.begin(), ids.end());
      out.insert(ids);
    }
  };
  extend();
  return out;
}

/// Every face of every facet, grouped by dimension, sorted.
inline std::vector<std::vector<std::vector<std::string>>> all_faces(const ftop::SimplicialComplex& k) {
  std::set<std::vector<std::string>> faces;
  for (const auto& f : k.facets()) {
    const std::size_t n = f.size();
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      std::vector<std::string> s;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::vector<std::vector<std::vector<std::string>>> out;
  for (const auto& s : faces) {
    if (out.size() < s.size()) out.resize(s.size());
    out[s.size() - 1].push_back(s);
  }
  return out;
}

/// Fraction-free (Bareiss) rank of an integer matrix over the rationals.
inline std::size_t rational_rank(std::vector<std::vector<cpp_int>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Rank over the two-element field, rows packed as bit vectors.
inline std::size_t binary_rank(std::vector<std::vector<bool>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !a[pivot][c]) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c])
        for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] != a[rank][k];
    ++rank;
  }
  return rank;
}

/// Boundary matrix C_d → C_{d-1} for the face lists from all_faces().
inline std::vector<std::vector<cpp_int>> boundary(const std::vector<std::vector<std::string>>& lower,
                                                  const std::vector<std::vector<std::string>>& upper) {
  std::map<std::vector<std::string>, std::size_t> row;
  for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
  std::vector<std::vector<cpp_int>> m(lower.size(), std::vector<cpp_int>(upper.size(), 0));
  for (std::size_t j = 0; j < upper.size(); ++j)
    for (std::size_t drop = 0; drop < upper[j].size(); ++drop) {
      auto face = upper[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      m[row.at(face)][j] = drop % 2 ? -1 : 1;
    }
  return m;
}

/// Unreduced betti numbers over the rationals, or over the two-element field.
inline std::vector<std::size_t> betti(const ftop::SimplicialComplex& k, bool binary = false) {
  const auto faces = all_faces(k);
  const std::size_t top = faces.size();
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t d = 1; d < top; ++d) {
    const auto m = boundary(faces[d - 1], faces[d]);
    if (binary) {
      std::vector<std::vector<bool>> b(m.size(), std::vector<bool>(m.empty() ? 0 : m[0].size()));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) b[i][j] = m[i][j] != 0;
      rank[d] = binary_rank(b);
    } else {
      rank[d] = rational_rank(m);
    }
  }
  std::vector<std::size_t> out(top);
  for (std::size_t d = 0; d < top; ++d) out[d] = faces[d].size() - rank[d] - rank[d + 1];
  return out;
}

// ---------------------------------------------------------------------------
// Cylinders

/// Direct evaluation of the cross-pair law of B(R): x <= y iff some x' >= x
/// and y' <= y have x' R y'. Pairs are returned with "0:"/"1:" tags.
inline std::set<std::pair<std::string, std::string>> relation_cylinder_cross(const ftop::Relation& r) {
  std::set<std::pair<std::string, std::string>> out;
  const auto& x = r.source();
  const auto& y = r.target();
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b)
      for (auto [a2, b2] : r.pairs())
        if (x.leq(a, a2) && y.leq(b2, b)) {
          out.emplace("0:" + x.id(a), "1:" + y.id(b));
          break;
        }
  return out;
}

/// Multiple cylinder by explicit generating pairs on adjacent copies and
/// Warshall closure. Returns every strict pair of the resulting order.
inline std::set<std::pair<std::string, std::string>> multiple_cylinder_order(const ftop::CylinderSpec& spec) {
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < spec.spaces.size(); ++i) {
    offset.push_back(ids.size());
    for (const auto& e : spec.spaces[i].elements()) {
      index[std::to_string(i) + ":" + e] = ids.size();
      ids.push_back(std::to_string(i) + ":" + e);
    }
  }
  const std::size_t n = ids.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < spec.spaces.size(); ++i)
    for (std::size_t a = 0; a < spec.spaces[i].size(); ++a)
      for (std::size_t b = 0; b < spec.spaces[i].size(); ++b)
        if (spec.spaces[i].leq(a, b)) le[offset[i] + a][offset[i] + b] = true;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const auto& r = spec.relations[i];
    // Stored orientation: right means R ⊆ X_i × X_{i+1}.
    const bool right = r.direction() == ftop::Direction::Right;
    const std::size_t src = right ? i : i + 1, dst = right ? i + 1 : i;
    for (auto [a, b] : r.pairs()) {
      std::size_t u = offset[src] + a, v = offset[dst] + b;
      const std::size_t u_copy = src;
      // Even copies sit below odd ones.
      if (u_copy % 2 == 1) std::swap(u, v);
      le[u][v] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j]) out.emplace(ids[i], ids[j]);
  return out;
}

}  // namespace oracle
