#include "ftop/cylinder.hpp"

#include "ftop/error.hpp"

#include <algorithm>
#include <tuple>

namespace ftop {

const char* const kBoundNote =
    "bounded deformation not certified: only the one-sided collapses are certified, the bound n is reported";

std::string_view to_string(Direction d) { return d == Direction::Right ? "right" : "left"; }

Direction direction_from_string(std::string_view name) {
  if (name == "right") return Direction::Right;
  if (name == "left") return Direction::Left;
  throw Error(ErrorKind::InvalidInput, "direction must be 'right' or 'left', got '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(Poset source, Poset target, const std::vector<ElementPair>& pairs, Direction direction)
    : source_(std::move(source)), target_(std::move(target)), direction_(direction) {
  pairs_.reserve(pairs.size());
  for (const auto& [x, y] : pairs) pairs_.emplace_back(source_.index_of(x), target_.index_of(y));
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation::Relation(Poset source, Poset target, std::vector<IndexPair> pairs, Direction direction)
    : source_(std::move(source)), target_(std::move(target)), pairs_(std::move(pairs)), direction_(direction) {
  for (auto [x, y] : pairs_)
    if (x >= source_.size() || y >= target_.size())
      throw Error(ErrorKind::UnknownElement, "relation pair index out of range");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::vector<ElementPair> Relation::named_pairs() const {
  std::vector<ElementPair> out;
  out.reserve(pairs_.size());
  for (auto [x, y] : pairs_) out.emplace_back(source_.id(x), target_.id(y));
  return out;
}

Relation Relation::with_direction(Direction d) const {
  Relation out = *this;
  out.direction_ = d;
  return out;
}

bool Relation::related(std::size_t x, std::size_t y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), IndexPair{x, y});
}

ElementSet Relation::image(const ElementSet& a) const {
  ElementSet out = target_.none();
  for (auto [x, y] : pairs_)
    if (a.test(x)) out.set(y);
  return out;
}

ElementSet Relation::preimage(const ElementSet& b) const {
  ElementSet out = source_.none();
  for (auto [x, y] : pairs_)
    if (b.test(y)) out.set(x);
  return out;
}

Relation Relation::inverse() const {
  std::vector<IndexPair> swapped;
  swapped.reserve(pairs_.size());
  for (auto [x, y] : pairs_) swapped.emplace_back(y, x);
  return Relation(target_, source_, std::move(swapped), direction_);
}

Relation compose(const Relation& r1, const Relation& r2) {
  if (!(r1.target() == r2.source()))
    throw Error(ErrorKind::MismatchedSpaces, "target of the first relation differs from source of the second");
  std::vector<std::vector<std::size_t>> next(r2.source().size());
  for (auto [y, z] : r2.pairs()) next[y].push_back(z);
  std::vector<IndexPair> pairs;
  for (auto [x, y] : r1.pairs())
    for (std::size_t z : next[y]) pairs.emplace_back(x, z);
  return Relation(r1.source(), r2.target(), std::move(pairs));
}

Relation compose_chain(const std::vector<Relation>& relations) {
  if (relations.empty()) throw Error(ErrorKind::InvalidInput, "empty relation chain");
  Relation out = relations.front().with_direction(Direction::Right);
  for (std::size_t i = 1; i < relations.size(); ++i) out = compose(out, relations[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Maps

MonotoneMap MonotoneMap::from_assignment(Poset source, Poset target,
                                         const std::map<std::string, std::string>& assignment) {
  MonotoneMap f{std::move(source), std::move(target), {}};
  f.image.reserve(f.source.size());
  for (const auto& x : f.source.elements()) {
    auto it = assignment.find(x);
    if (it == assignment.end()) throw Error(ErrorKind::UnknownElement, "map has no value at '" + x + "'");
    f.image.push_back(f.target.index_of(it->second));
  }
  if (assignment.size() != f.source.size())
    throw Error(ErrorKind::UnknownElement, "map assigns values outside its source");
  for (auto [a, b] : f.source.hasse())
    if (!f.target.leq(f.image[a], f.image[b]))
      throw Error(ErrorKind::NotOrderPreserving, f.source.id(a) + " <= " + f.source.id(b) + " but " +
                                                     f.target.id(f.image[a]) + " is not <= " +
                                                     f.target.id(f.image[b]));
  return f;
}

Relation MonotoneMap::graph(Direction direction) const {
  std::vector<IndexPair> pairs;
  pairs.reserve(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) pairs.emplace_back(x, image[x]);
  return Relation(source, target, std::move(pairs), direction);
}

// ---------------------------------------------------------------------------
// Cylinders

namespace {

struct CrossEdge {
  std::size_t lower_copy, lower, upper_copy, upper;
};

Cylinder assemble(const std::vector<const Poset*>& spaces, const std::vector<CrossEdge>& cross) {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> names;
  for (std::size_t c = 0; c < spaces.size(); ++c)
    for (std::size_t j = 0; j < spaces[c]->size(); ++j) names.emplace_back(Cylinder::tag(c, spaces[c]->id(j)), c, j);
  std::sort(names.begin(), names.end());

  Cylinder out;
  out.copies.resize(spaces.size());
  for (std::size_t c = 0; c < spaces.size(); ++c) out.copies[c].resize(spaces[c]->size());
  std::vector<std::string> elements;
  elements.reserve(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto& [name, c, j] = names[k];
    out.copies[c][j] = k;
    elements.push_back(name);
  }

  std::vector<IndexPair> relations;
  for (std::size_t c = 0; c < spaces.size(); ++c)
    for (auto [a, b] : spaces[c]->hasse()) relations.emplace_back(out.copies[c][a], out.copies[c][b]);
  for (const auto& e : cross)
    relations.emplace_back(out.copies[e.lower_copy][e.lower], out.copies[e.upper_copy][e.upper]);
  out.poset = Poset::from_sorted(std::move(elements), relations);
  return out;
}

}  // namespace

std::string Cylinder::tag(std::size_t copy, std::string_view id) {
  return std::to_string(copy) + ":" + std::string(id);
}

ElementSet Cylinder::copy(std::size_t i) const {
  ElementSet out = poset.none();
  for (std::size_t k : copies.at(i)) out.set(k);
  return out;
}

ElementSet Cylinder::embed(std::size_t i, const ElementSet& subset) const {
  ElementSet out = poset.none();
  for (std::size_t j = subset.find_first(); j != ElementSet::npos; j = subset.find_next(j))
    out.set(copies.at(i).at(j));
  return out;
}

std::vector<ElementPair> Cylinder::cross_pairs() const {
  std::vector<std::size_t> owner(poset.size());
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (std::size_t k : copies[c]) owner[k] = c;
  std::vector<ElementPair> out;
  for (auto [a, b] : poset.order_pairs())
    if (owner[a] != owner[b]) out.emplace_back(poset.id(a), poset.id(b));
  return out;
}

Cylinder relation_cylinder(const Relation& r) {
  // Cross pairs evaluated one by one rather than through the closure.
  const Poset& x = r.source();
  const Poset& y = r.target();
  std::vector<CrossEdge> cross;
  for (std::size_t a = 0; a < x.size(); ++a) {
    const ElementSet reach = r.image(x.up_set(a));
    const ElementSet above = y.closure(reach);
    for (std::size_t b = above.find_first(); b != ElementSet::npos; b = above.find_next(b))
      cross.push_back({0, a, 1, b});
  }
  return assemble({&x, &y}, cross);
}

Cylinder mapping_cylinder(const MonotoneMap& f) {
  std::vector<CrossEdge> cross;
  for (std::size_t a = 0; a < f.source.size(); ++a)
    for (std::size_t b = 0; b < f.target.size(); ++b)
      if (f.target.leq(f.image[a], b)) cross.push_back({0, a, 1, b});
  return assemble({&f.source, &f.target}, cross);
}

Cylinder multiple_mapping_cylinder(const std::vector<Poset>& spaces, const std::vector<MapStep>& maps) {
  if (spaces.size() < 2 || maps.size() + 1 != spaces.size())
    throw Error(ErrorKind::MalformedSpec, "need n+1 spaces for n maps, n >= 1");
  std::vector<CrossEdge> cross;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& [f, dir] = maps[i];
    const std::size_t from = dir == Direction::Right ? i : i + 1;
    const std::size_t to = dir == Direction::Right ? i + 1 : i;
    if (!(f.source == spaces[from]) || !(f.target == spaces[to]))
      throw Error(ErrorKind::MalformedSpec, "map " + std::to_string(i) + " does not connect X_" +
                                                std::to_string(from) + " to X_" + std::to_string(to));
    const std::size_t lower = i % 2 == 0 ? i : i + 1;
    const std::size_t upper = i % 2 == 0 ? i + 1 : i;
    const Poset& lo = spaces[lower];
    const Poset& up = spaces[upper];
    for (std::size_t x = 0; x < lo.size(); ++x)
      for (std::size_t y = 0; y < up.size(); ++y) {
        // f(x) <= y when f maps the lower copy up, x <= f(y) otherwise.
        const bool below = from == lower ? up.leq(f.image[x], y) : lo.leq(x, f.image[y]);
        if (below) cross.push_back({lower, x, upper, y});
      }
  }
  std::vector<const Poset*> ptrs;
  for (const auto& s : spaces) ptrs.push_back(&s);
  return assemble(ptrs, cross);
}

void CylinderSpec::validate() const {
  if (spaces.size() < 2) throw Error(ErrorKind::MalformedSpec, "a cylinder needs at least two spaces");
  if (relations.size() + 1 != spaces.size())
    throw Error(ErrorKind::MalformedSpec, std::to_string(spaces.size()) + " spaces need " +
                                              std::to_string(spaces.size() - 1) + " relations, got " +
                                              std::to_string(relations.size()));
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    const bool right = r.direction() == Direction::Right;
    const Poset& from = spaces[right ? i : i + 1];
    const Poset& to = spaces[right ? i + 1 : i];
    if (!(r.source() == from) || !(r.target() == to))
      throw Error(ErrorKind::MalformedSpec, "relation " + std::to_string(i) + " goes " +
                                                std::string(to_string(r.direction())) +
                                                " but does not connect the matching spaces");
  }
}

Cylinder multiple_cylinder(const CylinderSpec& spec) {
  spec.validate();
  std::vector<CrossEdge> cross;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const auto& r = spec.relations[i];
    const std::size_t from = r.direction() == Direction::Right ? i : i + 1;
    const std::size_t to = r.direction() == Direction::Right ? i + 1 : i;
    const std::size_t lower = i % 2 == 0 ? i : i + 1;
    for (auto [s, t] : r.pairs()) {
      if (from == lower)
        cross.push_back({from, s, to, t});
      else
        cross.push_back({to, t, from, s});
    }
  }
  std::vector<const Poset*> ptrs;
  for (const auto& s : spec.spaces) ptrs.push_back(&s);
  return assemble(ptrs, cross);
}

ElementSet underline_preimage(const Relation& r, std::size_t y) {
  return r.source().open_hull(r.preimage(r.target().down_set(y)));
}

ElementSet overline_image(const Relation& r, std::size_t x) {
  return r.target().closure(r.image(r.source().up_set(x)));
}

// ---------------------------------------------------------------------------
// Hypothesis checkers

namespace {

ElementCheck evaluate(const std::string& element, const Poset& space, const ElementSet& set,
                      const CollapseOptions& options) {
  ElementCheck out;
  out.element = element;
  out.set = space.names(set);
  if (set.none()) {
    out.triviality = TriStateResult::no(empty_homology(), "empty set is not homotopically trivial");
    out.collapsibility = out.triviality;
    return out;
  }
  const Poset sub = space.induced(set);
  out.triviality = is_homotopically_trivial(sub, options);
  out.collapsibility = greedy_collapse_space(sub, options);
  return out;
}

CollapseReport check_collapse(const Relation& r, bool left, const CollapseOptions& options) {
  CollapseReport report;
  report.cylinder = relation_cylinder(r);
  report.target_copy = left ? 0 : 1;
  const std::size_t removed_copy = left ? 1 : 0;
  const Poset& removed = left ? r.target() : r.source();
  const Poset& kept = left ? r.source() : r.target();
  report.claim = left ? "B(R) collapses to the source X" : "B(R) collapses to the target Y";

  std::vector<ElementSet> sets;
  for (std::size_t e = 0; e < removed.size(); ++e) {
    sets.push_back(left ? underline_preimage(r, e) : overline_image(r, e));
    report.checks.push_back(evaluate(removed.id(e), kept, sets.back(), options));
    report.triviality = meet(report.triviality, report.checks.back().triviality.verdict);
    report.collapsibility = meet(report.collapsibility, report.checks.back().collapsibility.verdict);
  }

  if (report.collapsibility != Verdict::Yes) {
    report.certified = Verdict::Unknown;
    report.note = "hypotheses not all Yes; no collapse claimed";
    return report;
  }

  // Down from the bottom of Y for the left side, up from the top of X for the right.
  std::vector<std::size_t> order = removed.linear_extension();
  if (!left) std::reverse(order.begin(), order.end());
  const Poset& b = report.cylinder.poset;
  ElementSet alive = b.all();
  CollapseCertificate certificate;
  for (std::size_t e : order) {
    const std::size_t k = report.cylinder.copies[removed_copy][e];
    const ElementSet link = (left ? b.strictly_below(k) : b.strictly_above(k)) & alive;
    if (link != report.cylinder.embed(report.target_copy, sets[e])) {
      report.certified = Verdict::No;
      report.note = "link of " + removed.id(e) + " in the partial cylinder differs from its hypothesis set";
      return report;
    }
    if (!is_contractible(b, link)) {
      report.certified = Verdict::Unknown;
      report.note = removed.id(e) + " has a collapsible but non-contractible link, so it is not a weak point";
      return report;
    }
    certificate.steps.push_back(PointRemoval{b.id(k), left ? PointKind::DownWeak : PointKind::UpWeak});
    alive.reset(k);
  }

  const ReplayOutcome replayed = replay(b, certificate, report.cylinder.copy(report.target_copy));
  if (!replayed.ok) {
    report.certified = Verdict::No;
    report.note = "certificate replay failed: " + replayed.message;
    return report;
  }
  report.certified = Verdict::Yes;
  report.certificate = std::move(certificate);
  return report;
}

}  // namespace

CollapseReport check_collapse_left(const Relation& r, const CollapseOptions& options) {
  return check_collapse(r, true, options);
}

CollapseReport check_collapse_right(const Relation& r, const CollapseOptions& options) {
  return check_collapse(r, false, options);
}

IntermediateReport check_intermediate(const Relation& r1, const Relation& r2, Side side,
                                      const CollapseOptions& options) {
  const Relation composite = compose(r1, r2);
  IntermediateReport out;
  out.side = side;
  if (side == Side::Left) {
    out.single = check_collapse_left(r1, options);
    out.composite = check_collapse_left(composite, options);
    out.bound = r1.source().height();
  } else {
    out.single = check_collapse_right(r2, options);
    out.composite = check_collapse_right(composite, options);
    out.bound = r2.target().height();
  }
  out.verdict = meet(out.single.certified, out.composite.certified);
  out.note = kBoundNote;
  return out;
}

ChainReport check_chain(const std::vector<Relation>& relations, const CollapseOptions& options) {
  const Relation composite = compose_chain(relations);
  ChainReport out;
  out.left = check_collapse_left(composite, options);
  out.right = check_collapse_right(composite, options);
  out.verdict = meet(out.left.certified, out.right.certified);
  out.bound = out.left.cylinder.poset.height();
  out.note = kBoundNote;
  return out;
}

}  // namespace ftop
