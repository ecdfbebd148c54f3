#include "ftop/poset.hpp"

#include "ftop/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace ftop {

namespace {

// Returns one directed cycle among the vertices Kahn's algorithm could not
// schedule. Every such vertex has an unscheduled predecessor, so walking
// predecessors must revisit a vertex.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& preds,
                                    const std::vector<int>& indegree) {
  std::size_t start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<int> seen_at(preds.size(), -1);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    auto it = std::find_if(preds[v].begin(), preds[v].end(),
                           [&](std::size_t u) { return indegree[u] > 0; });
    v = *it;
  }
  std::vector<std::size_t> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

Poset Poset::build(std::vector<std::string> elements, const std::vector<ElementPair>& relations) {
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) {
    throw Error(ErrorKind::DuplicateElement, "element '" + *dup + "' listed twice");
  }
  auto lookup = [&](const std::string& id) {
    auto it = std::lower_bound(elements.begin(), elements.end(), id);
    if (it == elements.end() || *it != id) {
      throw Error(ErrorKind::UnknownElement, "relation mentions unknown element '" + id + "'");
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<IndexPair> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations) pairs.emplace_back(lookup(a), lookup(b));
  return from_sorted(std::move(elements), pairs);
}

Poset Poset::from_sorted(std::vector<std::string> elements, const std::vector<IndexPair>& relations) {
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> succs(n), preds(n);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "relation index out of range");
    if (a == b) continue;  // reflexive pairs carry no information
    succs[a].push_back(b);
    preds[b].push_back(a);
  }

  std::vector<int> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = static_cast<int>(preds[v].size());
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succs[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != n) {
    auto cycle = find_cycle(preds, indegree);
    std::string msg = "relations contain the cycle ";
    for (std::size_t v : cycle) msg += elements[v] + " < ";
    msg += elements[cycle.front()];
    throw Error(ErrorKind::CycleDetected, msg);
  }

  std::vector<ElementSet> below(n, ElementSet(n));
  for (std::size_t v : order) {
    for (std::size_t u : preds[v]) {
      below[v] |= below[u];
      below[v].set(u);
    }
  }
  return from_order(std::move(elements), std::move(below));
}

Poset Poset::from_order(std::vector<std::string> elements, std::vector<ElementSet> below) {
  Poset p;
  const std::size_t n = elements.size();
  p.elements_ = std::move(elements);
  p.below_ = std::move(below);
  p.above_.assign(n, ElementSet(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = p.below_[b].find_first(); a != ElementSet::npos; a = p.below_[b].find_next(a))
      p.above_[a].set(b);

  for (std::size_t b = 0; b < n; ++b) {
    ElementSet covered = p.below_[b];
    for (std::size_t c = p.below_[b].find_first(); c != ElementSet::npos; c = p.below_[b].find_next(c))
      covered -= p.below_[c];
    for (std::size_t a = covered.find_first(); a != ElementSet::npos; a = covered.find_next(a))
      p.hasse_.emplace_back(a, b);
  }
  std::sort(p.hasse_.begin(), p.hasse_.end());

  p.heights_.assign(n, 0);
  for (std::size_t x : p.linear_extension())
    for (std::size_t c = p.below_[x].find_first(); c != ElementSet::npos; c = p.below_[x].find_next(c))
      p.heights_[x] = std::max(p.heights_[x], p.heights_[c] + 1);
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == elements_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Poset::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::UnknownElement, "no element '" + std::string(id) + "'");
  return *i;
}

ElementSet Poset::down_set(std::size_t x, bool strict) const {
  if (x >= size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  ElementSet s = below_[x];
  if (!strict) s.set(x);
  return s;
}

ElementSet Poset::up_set(std::size_t x, bool strict) const {
  if (x >= size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  ElementSet s = above_[x];
  if (!strict) s.set(x);
  return s;
}

ElementSet Poset::closure(const ElementSet& subset) const {
  ElementSet out = subset;
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    out |= above_[a];
  return out;
}

ElementSet Poset::open_hull(const ElementSet& subset) const {
  ElementSet out = subset;
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    out |= below_[a];
  return out;
}

bool Poset::is_open(const ElementSet& subset) const {
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    if (!below_[a].is_subset_of(subset)) return false;
  return true;
}

bool Poset::is_closed(const ElementSet& subset) const {
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    if (!above_[a].is_subset_of(subset)) return false;
  return true;
}

ElementSet Poset::subset(const std::vector<std::string>& ids) const {
  ElementSet s(size());
  for (const auto& id : ids) s.set(index_of(id));
  return s;
}

std::vector<std::string> Poset::names(const ElementSet& subset) const {
  std::vector<std::string> out;
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    out.push_back(elements_[a]);
  return out;
}

std::vector<ElementPair> Poset::hasse_pairs() const {
  std::vector<ElementPair> out;
  out.reserve(hasse_.size());
  for (auto [a, b] : hasse_) out.emplace_back(elements_[a], elements_[b]);
  return out;
}

std::vector<IndexPair> Poset::order_pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = above_[a].find_first(); b != ElementSet::npos; b = above_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

int Poset::height() const {
  if (empty()) return -1;
  return *std::max_element(heights_.begin(), heights_.end());
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = below_[v].count();
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w = above_[v].find_first(); w != ElementSet::npos; w = above_[v].find_next(w))
      if (--pending[w] == 0) ready.push(w);
  }
  return order;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (below_[v].none()) out.push_back(v);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v)
    if (above_[v].none()) out.push_back(v);
  return out;
}

Poset Poset::opposite() const { return from_order(elements_, above_); }

Poset Poset::induced(const ElementSet& subset) const {
  std::vector<std::size_t> keep;
  for (std::size_t a = subset.find_first(); a != ElementSet::npos; a = subset.find_next(a))
    keep.push_back(a);
  const std::size_t m = keep.size();
  std::vector<std::string> elements;
  elements.reserve(m);
  for (std::size_t a : keep) elements.push_back(elements_[a]);
  std::vector<ElementSet> below(m, ElementSet(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (below_[keep[i]].test(keep[j])) below[i].set(j);
  return from_order(std::move(elements), std::move(below));
}

}  // namespace ftop
