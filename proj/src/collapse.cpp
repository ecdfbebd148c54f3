#include "ftop/collapse.hpp"

#include "ftop/error.hpp"
#include "ftop/rng.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace ftop {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::DownBeat: return "down-beat";
    case PointKind::UpBeat: return "up-beat";
    case PointKind::DownWeak: return "down-weak";
    case PointKind::UpWeak: return "up-weak";
  }
  return "?";
}

PointKind point_kind_from_string(std::string_view name) {
  for (PointKind k : {PointKind::DownBeat, PointKind::UpBeat, PointKind::DownWeak, PointKind::UpWeak})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidInput, "unknown point kind '" + std::string(name) + "'");
}

TriStateResult TriStateResult::yes(CollapseCertificate certificate, std::string note) {
  TriStateResult r;
  r.verdict = Verdict::Yes;
  r.certificate = std::move(certificate);
  r.note = std::move(note);
  return r;
}

TriStateResult TriStateResult::no(HomologyResult witness, std::string note) {
  TriStateResult r;
  r.verdict = Verdict::No;
  r.witness = std::move(witness);
  r.note = std::move(note);
  return r;
}

TriStateResult TriStateResult::unknown(std::string note) {
  TriStateResult r;
  r.verdict = Verdict::Unknown;
  r.note = std::move(note);
  return r;
}

// ---------------------------------------------------------------------------
// Finite spaces

bool has_maximum(const Poset& poset, const ElementSet& subset) {
  for (std::size_t y = subset.find_first(); y != ElementSet::npos; y = subset.find_next(y)) {
    ElementSet rest = subset - poset.strictly_below(y);
    rest.reset(y);
    if (rest.none()) return true;
  }
  return false;
}

bool has_minimum(const Poset& poset, const ElementSet& subset) {
  for (std::size_t y = subset.find_first(); y != ElementSet::npos; y = subset.find_next(y)) {
    ElementSet rest = subset - poset.strictly_above(y);
    rest.reset(y);
    if (rest.none()) return true;
  }
  return false;
}

std::optional<PointKind> beat_kind(const Poset& poset, const ElementSet& alive, std::size_t x) {
  if (has_maximum(poset, poset.strictly_below(x) & alive)) return PointKind::DownBeat;
  if (has_minimum(poset, poset.strictly_above(x) & alive)) return PointKind::UpBeat;
  return std::nullopt;
}

ElementSet core_of(const Poset& poset, ElementSet alive, std::vector<CollapseStep>* steps) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t x = alive.find_first(); x != ElementSet::npos; x = alive.find_next(x)) {
      if (alive.count() == 1) break;
      if (auto kind = beat_kind(poset, alive, x)) {
        alive.reset(x);
        if (steps) steps->push_back(PointRemoval{poset.id(x), *kind});
        progress = true;
      }
    }
  }
  return alive;
}

bool is_contractible(const Poset& poset, const ElementSet& alive) {
  if (alive.none()) return false;
  if (has_maximum(poset, alive) || has_minimum(poset, alive)) return true;
  return core_of(poset, alive).count() == 1;
}

std::optional<PointKind> weak_kind(const Poset& poset, const ElementSet& alive, std::size_t x) {
  if (is_contractible(poset, poset.strictly_below(x) & alive)) return PointKind::DownWeak;
  if (is_contractible(poset, poset.strictly_above(x) & alive)) return PointKind::UpWeak;
  return std::nullopt;
}

std::vector<TaggedPoint> beat_points(const Poset& poset) {
  std::vector<TaggedPoint> out;
  const ElementSet alive = poset.all();
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (has_maximum(poset, poset.strictly_below(x))) out.push_back({poset.id(x), PointKind::DownBeat});
    if (has_minimum(poset, poset.strictly_above(x))) out.push_back({poset.id(x), PointKind::UpBeat});
  }
  return out;
}

std::vector<TaggedPoint> weak_points(const Poset& poset) {
  std::vector<TaggedPoint> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (is_contractible(poset, poset.strictly_below(x))) out.push_back({poset.id(x), PointKind::DownWeak});
    if (is_contractible(poset, poset.strictly_above(x))) out.push_back({poset.id(x), PointKind::UpWeak});
  }
  return out;
}

std::vector<std::pair<std::string, TriStateResult>> gamma_points(const Poset& poset,
                                                                 const CollapseOptions& options) {
  std::vector<std::pair<std::string, TriStateResult>> out;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    const ElementSet link = poset.strictly_below(x) | poset.strictly_above(x);
    if (link.none()) {
      out.emplace_back(poset.id(x), TriStateResult::no(empty_homology(), "empty link"));
      continue;
    }
    out.emplace_back(poset.id(x), is_homotopically_trivial(poset.induced(link), options));
  }
  return out;
}

CoreResult core(const Poset& poset) {
  CoreResult out;
  const ElementSet kept = core_of(poset, poset.all(), &out.certificate.steps);
  out.core = poset.induced(kept);
  return out;
}

bool is_contractible_space(const Poset& poset) {
  if (poset.empty()) throw Error(ErrorKind::EmptySpace, "contractibility of the empty space");
  return is_contractible(poset, poset.all());
}

namespace {

// Weak-point removal loop shared by the deterministic and randomized passes.
struct SpaceCollapse {
  const Poset& poset;
  const ElementSet& target;  // never removed; empty means "down to a point"
  bool to_point;

  bool done(const ElementSet& alive) const { return to_point ? alive.count() == 1 : alive == target; }

  bool removable(const ElementSet& alive, std::size_t x) const {
    return alive.test(x) && !target.test(x);
  }

  // Sweeps the linear extension repeatedly, removing each weak point met.
  bool deterministic(std::vector<CollapseStep>& steps) const {
    ElementSet alive = poset.all();
    const auto order = poset.linear_extension();
    bool progress = true;
    while (!done(alive) && progress) {
      progress = false;
      for (std::size_t x : order) {
        if (done(alive)) break;
        if (!removable(alive, x)) continue;
        if (auto kind = weak_kind(poset, alive, x)) {
          alive.reset(x);
          steps.push_back(PointRemoval{poset.id(x), *kind});
          progress = true;
        }
      }
    }
    return done(alive);
  }

  bool randomized(Rng& rng, std::vector<CollapseStep>& steps) const {
    ElementSet alive = poset.all();
    while (!done(alive)) {
      std::vector<std::pair<std::size_t, PointKind>> options;
      for (std::size_t x = alive.find_first(); x != ElementSet::npos; x = alive.find_next(x))
        if (removable(alive, x))
          if (auto kind = weak_kind(poset, alive, x)) options.emplace_back(x, *kind);
      if (options.empty()) return false;
      auto [x, kind] = options[rng.below(options.size())];
      alive.reset(x);
      steps.push_back(PointRemoval{poset.id(x), kind});
    }
    return true;
  }
};

TriStateResult run_space_collapse(const Poset& poset, const ElementSet& target, bool to_point,
                                  const CollapseOptions& options) {
  if (poset.empty()) throw Error(ErrorKind::EmptyObject, "collapse of the empty space");
  SpaceCollapse job{poset, target, to_point};
  std::vector<CollapseStep> steps;
  // Beat points are weak points, so a contractible space always has a
  // certificate; try the exact route first.
  if (to_point && core_of(poset, poset.all(), &steps).count() == 1)
    return TriStateResult::yes({std::move(steps)}, "contractible: core is a point");
  steps.clear();
  if (job.deterministic(steps)) return TriStateResult::yes({std::move(steps)});

  const HomologyResult h = homology_of_poset(poset);
  if (to_point) {
    if (!h.is_trivial()) return TriStateResult::no(h, "non-trivial reduced homology");
  } else {
    const HomologyResult ht = homology_of_poset(poset.induced(target));
    if (!(h == ht)) return TriStateResult::no(h, "reduced homology differs from the target's");
  }

  Rng rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    steps.clear();
    if (job.randomized(rng, steps))
      return TriStateResult::yes({std::move(steps)}, "found by random restart " + std::to_string(r + 1));
  }
  return TriStateResult::unknown("weak-point removal got stuck after " + std::to_string(options.restarts) +
                                 " restarts; homology gives no obstruction");
}

}  // namespace

TriStateResult greedy_collapse_space(const Poset& poset, const CollapseOptions& options) {
  return run_space_collapse(poset, poset.none(), true, options);
}

TriStateResult greedy_collapse_space(const Poset& poset, const ElementSet& target,
                                     const CollapseOptions& options) {
  if (target.size() != poset.size() || target.none())
    throw Error(ErrorKind::TargetNotInduced, "collapse target must be a non-empty subset of the space");
  return run_space_collapse(poset, target, false, options);
}

TriStateResult greedy_collapse_space(const Poset& poset, const Poset& target, const CollapseOptions& options) {
  ElementSet subset = poset.none();
  for (const auto& id : target.elements()) {
    auto i = poset.find(id);
    if (!i) throw Error(ErrorKind::TargetNotInduced, "target element '" + id + "' is not in the space");
    subset.set(*i);
  }
  if (!(poset.induced(subset) == target))
    throw Error(ErrorKind::TargetNotInduced, "target order differs from the restricted order");
  return greedy_collapse_space(poset, subset, options);
}

TriStateResult is_homotopically_trivial(const Poset& poset, const CollapseOptions& options) {
  if (poset.empty()) throw Error(ErrorKind::EmptyObject, "homotopical triviality of the empty space");
  return greedy_collapse_space(poset, options);
}

// ---------------------------------------------------------------------------
// Simplicial complexes

namespace {

class ComplexCollapser {
 public:
  explicit ComplexCollapser(const SimplicialComplex& complex) : simplices_(complex.simplices()) {
    const std::size_t n = simplices_.size();
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(simplices_[i], i);
    faces_.resize(n);
    cofaces_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& f : boundary_faces(simplices_[i])) {
        std::size_t j = index.at(f);
        faces_[i].push_back(j);
        cofaces_[j].push_back(i);
      }
    index_ = std::move(index);
  }

  std::size_t size() const { return simplices_.size(); }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  std::optional<std::size_t> find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Runs one collapse attempt; `blocked` simplices are never removed.
  /// Returns true when only the blocked set (or one vertex) remains.
  bool run(const std::vector<bool>& blocked, std::size_t keep, Rng* rng, std::vector<CollapseStep>& steps) {
    reset();
    std::set<std::size_t> candidates;
    for (std::size_t i = 0; i < size(); ++i)
      if (!blocked[i] && coface_if_free(i)) candidates.insert(i);

    std::vector<std::size_t> stamp(size(), 0);
    std::size_t round = 0;
    while (alive_count_ > keep && !candidates.empty()) {
      auto it = candidates.begin();
      if (rng) std::advance(it, static_cast<long>(rng->below(candidates.size())));
      const std::size_t face = *it;
      const std::size_t coface = *coface_if_free(face);
      remove(face);
      remove(coface);
      steps.push_back(FreeFacePair{simplices_[face], simplices_[coface]});
      candidates.erase(face);
      candidates.erase(coface);

      // Only proper faces of the removed coface can change status.
      ++round;
      std::vector<std::size_t> stack = faces_[coface];
      while (!stack.empty()) {
        std::size_t s = stack.back();
        stack.pop_back();
        if (stamp[s] == round) continue;
        stamp[s] = round;
        if (alive_[s] && !blocked[s] && coface_if_free(s))
          candidates.insert(s);
        else
          candidates.erase(s);
        stack.insert(stack.end(), faces_[s].begin(), faces_[s].end());
      }
    }
    return alive_count_ == keep;
  }

  std::vector<FreeFacePair> free_pairs() {
    reset();
    std::vector<FreeFacePair> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (auto c = coface_if_free(i)) out.push_back({simplices_[i], simplices_[*c]});
    return out;
  }

 private:
  void reset() {
    alive_.assign(size(), true);
    alive_count_ = size();
    up_count_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) up_count_[i] = cofaces_[i].size();
  }

  void remove(std::size_t i) {
    alive_[i] = false;
    --alive_count_;
    for (std::size_t f : faces_[i]) --up_count_[f];
  }

  std::optional<std::size_t> coface_if_free(std::size_t i) const {
    if (!alive_[i] || up_count_[i] != 1) return std::nullopt;
    for (std::size_t c : cofaces_[i])
      if (alive_[c]) return up_count_[c] == 0 ? std::optional<std::size_t>(c) : std::nullopt;
    return std::nullopt;
  }

  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::size_t>> cofaces_;
  std::vector<bool> alive_;
  std::vector<std::size_t> up_count_;
  std::size_t alive_count_ = 0;
};

TriStateResult run_complex_collapse(const SimplicialComplex& complex, const SimplicialComplex* target,
                                    bool restarts, const CollapseOptions& options) {
  if (complex.empty()) throw Error(ErrorKind::EmptyComplex, "collapse of the empty complex");
  ComplexCollapser engine(complex);
  std::vector<bool> blocked(engine.size(), false);
  std::size_t keep = 1;
  if (target) {
    if (target->empty() || !target->is_subcomplex_of(complex))
      throw Error(ErrorKind::InvalidInput, "collapse target must be a non-empty subcomplex");
    keep = 0;
    for (const auto& s : target->simplices()) {
      blocked[*engine.find(s)] = true;
      ++keep;
    }
  }

  std::vector<CollapseStep> steps;
  if (engine.run(blocked, keep, nullptr, steps)) return TriStateResult::yes({std::move(steps)});

  const HomologyResult h = reduced_homology(complex);
  if (!target && !h.is_trivial()) return TriStateResult::no(h, "non-trivial reduced homology");
  if (target && !(h == reduced_homology(*target)))
    return TriStateResult::no(h, "reduced homology differs from the target's");
  if (!restarts) return TriStateResult::unknown("greedy pass stuck; homology gives no obstruction");

  Rng rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    steps.clear();
    if (engine.run(blocked, keep, &rng, steps))
      return TriStateResult::yes({std::move(steps)}, "found by random restart " + std::to_string(r + 1));
  }
  return TriStateResult::unknown("greedy collapse stuck after " + std::to_string(options.restarts) +
                                 " restarts; homology gives no obstruction");
}

}  // namespace

std::vector<FreeFacePair> free_faces(const SimplicialComplex& complex) {
  if (complex.empty()) return {};
  ComplexCollapser engine(complex);
  return engine.free_pairs();
}

TriStateResult greedy_collapse_complex(const SimplicialComplex& complex, CollapseStrategy strategy,
                                       const CollapseOptions& options) {
  return run_complex_collapse(complex, nullptr, strategy == CollapseStrategy::Restarts, options);
}

TriStateResult collapse_onto(const SimplicialComplex& complex, const SimplicialComplex& target,
                             const CollapseOptions& options) {
  return run_complex_collapse(complex, &target, true, options);
}

TriStateResult staged_union_collapse(const SimplicialComplex& a, const SimplicialComplex& b,
                                     const CollapseOptions& options) {
  const SimplicialComplex whole = a.unite(b);
  const SimplicialComplex common = a.intersect(b);
  if (common.empty()) {
    const HomologyResult h = reduced_homology(whole);
    if (!h.is_trivial()) return TriStateResult::no(h, "disjoint parts: union is disconnected");
  }
  auto stage = [&](const SimplicialComplex& from, const SimplicialComplex* onto) {
    return onto ? collapse_onto(from, *onto, options) : greedy_collapse_complex(from, CollapseStrategy::Restarts, options);
  };
  std::vector<CollapseStep> steps;
  const TriStateResult stages[] = {
      stage(whole, &b),
      common.empty() ? TriStateResult::unknown("empty intersection") : stage(b, &common),
      common.empty() ? TriStateResult::unknown("empty intersection") : stage(common, nullptr),
  };
  for (std::size_t i = 0; i < 3; ++i) {
    if (stages[i].verdict != Verdict::Yes) {
      const HomologyResult h = reduced_homology(whole);
      if (!h.is_trivial()) return TriStateResult::no(h, "non-trivial reduced homology");
      return TriStateResult::unknown("staged collapse failed at stage " + std::to_string(i + 1) + ": " +
                                     stages[i].note);
    }
    const auto& s = stages[i].certificate->steps;
    steps.insert(steps.end(), s.begin(), s.end());
  }
  return TriStateResult::yes({std::move(steps)}, "staged: union onto B, B onto intersection, intersection to a point");
}

TriStateResult is_homotopically_trivial(const SimplicialComplex& complex, const CollapseOptions& options) {
  if (complex.empty()) throw Error(ErrorKind::EmptyObject, "homotopical triviality of the empty complex");
  return greedy_collapse_complex(complex, CollapseStrategy::Restarts, options);
}

// ---------------------------------------------------------------------------
// Replay

ReplayOutcome replay(const Poset& start, const CollapseCertificate& certificate,
                     const std::optional<ElementSet>& target) {
  ReplayOutcome out;
  ElementSet alive = start.all();
  for (const auto& step : certificate.steps) {
    const auto* removal = std::get_if<PointRemoval>(&step);
    if (!removal) {
      out.message = "step " + std::to_string(out.steps_applied + 1) + " is not a point removal";
      return out;
    }
    auto x = start.find(removal->element);
    if (!x || !alive.test(*x)) {
      out.message = "step " + std::to_string(out.steps_applied + 1) + ": '" + removal->element +
                    "' is not present";
      return out;
    }
    const ElementSet below = start.strictly_below(*x) & alive;
    const ElementSet above = start.strictly_above(*x) & alive;
    bool valid = false;
    switch (removal->kind) {
      case PointKind::DownBeat: valid = has_maximum(start, below); break;
      case PointKind::UpBeat: valid = has_minimum(start, above); break;
      case PointKind::DownWeak: valid = is_contractible(start, below); break;
      case PointKind::UpWeak: valid = is_contractible(start, above); break;
    }
    if (!valid) {
      out.message = "step " + std::to_string(out.steps_applied + 1) + ": '" + removal->element +
                    "' is not a " + std::string(to_string(removal->kind)) + " point";
      return out;
    }
    alive.reset(*x);
    ++out.steps_applied;
  }
  if (target) {
    if (alive != *target) {
      out.message = "replay ended on a different subspace than the target";
      return out;
    }
  } else if (alive.count() != 1) {
    out.message = "replay ended with " + std::to_string(alive.count()) + " points";
    return out;
  }
  out.ok = true;
  return out;
}

ReplayOutcome replay(const SimplicialComplex& start, const CollapseCertificate& certificate,
                     const std::optional<SimplicialComplex>& target) {
  ReplayOutcome out;
  auto all = start.simplices();
  std::set<Simplex> alive(all.begin(), all.end());
  for (const auto& step : certificate.steps) {
    const std::string where = "step " + std::to_string(out.steps_applied + 1);
    const auto* pair = std::get_if<FreeFacePair>(&step);
    if (!pair) {
      out.message = where + " is not a free-face pair";
      return out;
    }
    if (!alive.count(pair->face) || !alive.count(pair->coface)) {
      out.message = where + ": face or coface not present";
      return out;
    }
    if (pair->coface.size() != pair->face.size() + 1 || !is_face_of(pair->face, pair->coface)) {
      out.message = where + ": coface is not a codimension-one coface";
      return out;
    }
    std::size_t containing = 0;
    for (const auto& s : alive)
      if (s.size() > pair->face.size() && is_face_of(pair->face, s)) ++containing;
    if (containing != 1) {
      out.message = where + ": " + simplex_id(pair->face) + " lies in " + std::to_string(containing) +
                    " simplices, so it is not free";
      return out;
    }
    alive.erase(pair->face);
    alive.erase(pair->coface);
    ++out.steps_applied;
  }
  if (target) {
    auto t = target->simplices();
    if (std::set<Simplex>(t.begin(), t.end()) != alive) {
      out.message = "replay ended on a different subcomplex than the target";
      return out;
    }
  } else if (alive.size() != 1) {
    out.message = "replay ended with " + std::to_string(alive.size()) + " simplices";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace ftop
