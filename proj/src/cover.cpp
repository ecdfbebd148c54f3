#include "ftop/cover.hpp"

#include "ftop/error.hpp"
#include "ftop/rng.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace ftop {

namespace {

constexpr std::size_t kMaxMembers = 64;

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorKind::InvalidCover, "a cover needs at least one member");
  if (names.size() > kMaxMembers) throw Error(ErrorKind::InvalidCover, "at most 64 members are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorKind::InvalidCover, "member names must be non-empty");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidCover, "duplicate member name '" + n + "'");
  }
}

std::string object_key(const CoverObject& o) {
  if (o.empty) return "";
  if (o.elements.size() > 0) {
    std::string s;
    boost::to_string(o.elements, s);
    return s;
  }
  std::string s;
  for (const auto& f : o.complex.facets()) s += simplex_id(f);
  return s;
}

bool in_mask(MemberMask mask, std::size_t i) { return (mask >> i) & 1U; }

}  // namespace

// ---------------------------------------------------------------------------
// Cover

Cover Cover::of_complex(SimplicialComplex parent, std::vector<std::pair<std::string, SimplicialComplex>> members) {
  Cover c;
  c.is_complex_ = true;
  for (auto& [name, member] : members) c.names_.push_back(name);
  check_names(c.names_);
  SimplicialComplex unite;
  for (auto& [name, member] : members) {
    if (member.empty()) throw Error(ErrorKind::InvalidCover, "member '" + name + "' is empty");
    if (!member.is_subcomplex_of(parent))
      throw Error(ErrorKind::InvalidCover, "member '" + name + "' is not a subcomplex of the parent");
    unite = unite.unite(member);
    c.complexes_.push_back(std::move(member));
  }
  if (!(unite == parent)) throw Error(ErrorKind::InvalidCover, "the members do not cover the parent");
  c.parent_complex_ = std::move(parent);
  return c;
}

Cover Cover::of_poset(Poset parent, const std::vector<std::pair<std::string, std::vector<std::string>>>& members) {
  std::vector<std::pair<std::string, ElementSet>> sets;
  for (const auto& [name, ids] : members) {
    try {
      sets.emplace_back(name, parent.subset(ids));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidCover, "member '" + name + "': " + e.what());
    }
  }
  return of_poset(std::move(parent), std::move(sets));
}

Cover Cover::of_poset(Poset parent, std::vector<std::pair<std::string, ElementSet>> members) {
  Cover c;
  c.is_complex_ = false;
  for (auto& [name, member] : members) c.names_.push_back(name);
  check_names(c.names_);
  ElementSet unite = parent.none();
  for (auto& [name, member] : members) {
    if (member.size() != parent.size()) throw Error(ErrorKind::InvalidCover, "member '" + name + "' has the wrong size");
    if (member.none()) throw Error(ErrorKind::InvalidCover, "member '" + name + "' is empty");
    if (!parent.is_open(member)) throw Error(ErrorKind::InvalidCover, "member '" + name + "' is not open");
    unite |= member;
    c.sets_.push_back(std::move(member));
  }
  if (!unite.all()) throw Error(ErrorKind::InvalidCover, "the members do not cover the parent");
  c.parent_poset_ = std::move(parent);
  return c;
}

std::size_t Cover::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorKind::UnknownMember, "no cover member named '" + std::string(name) + "'");
}

MemberMask Cover::mask_of(const std::vector<std::string>& names) const {
  MemberMask m = 0;
  for (const auto& n : names) m |= MemberMask{1} << index_of(n);
  return m;
}

Simplex Cover::label(MemberMask mask) const {
  Simplex out;
  for (std::size_t i = 0; i < size(); ++i)
    if (in_mask(mask, i)) out.push_back(names_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

MemberMask Cover::full_mask() const {
  return size() == 64 ? ~MemberMask{0} : (MemberMask{1} << size()) - 1;
}

namespace {

CoverObject member_object(const Cover& cover, std::size_t i) {
  CoverObject o;
  o.empty = false;
  if (cover.is_complex())
    o.complex = cover.member_complex(i);
  else
    o.elements = cover.member_set(i);
  return o;
}

CoverObject meet_object(const Cover& cover, const CoverObject& o, std::size_t i) {
  CoverObject out;
  if (cover.is_complex()) {
    out.complex = o.complex.intersect(cover.member_complex(i));
    out.empty = out.complex.empty();
  } else {
    out.elements = o.elements & cover.member_set(i);
    out.empty = out.elements.none();
  }
  return out;
}

bool object_within(const Cover& cover, const CoverObject& o, std::size_t i) {
  if (cover.is_complex()) return o.complex.is_subcomplex_of(cover.member_complex(i));
  return (o.elements - cover.member_set(i)).none();
}

}  // namespace

CoverObject intersection(const Cover& cover, MemberMask mask) {
  if (mask == 0 || (mask & ~cover.full_mask()) != 0)
    throw Error(ErrorKind::InvalidInput, "intersection needs a non-empty set of members");
  const std::size_t first = static_cast<std::size_t>(std::countr_zero(mask));
  CoverObject o = member_object(cover, first);
  for (std::size_t i = first + 1; i < cover.size() && !o.empty; ++i)
    if (in_mask(mask, i)) o = meet_object(cover, o, i);
  return o;
}

std::vector<std::pair<MemberMask, CoverObject>> nonempty_intersections(const Cover& cover) {
  std::vector<std::pair<MemberMask, CoverObject>> out;
  std::function<void(MemberMask, std::size_t, const CoverObject&)> extend =
      [&](MemberMask mask, std::size_t next, const CoverObject& o) {
        for (std::size_t i = next; i < cover.size(); ++i) {
          CoverObject m = meet_object(cover, o, i);
          if (m.empty) continue;
          const MemberMask grown = mask | (MemberMask{1} << i);
          out.emplace_back(grown, m);
          extend(grown, i + 1, m);
        }
      };
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const MemberMask mask = MemberMask{1} << i;
    const CoverObject o = member_object(cover, i);
    out.emplace_back(mask, o);
    extend(mask, i + 1, o);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Classification

const IntersectionRecord* CoverClassification::find(MemberMask mask) const {
  auto it = by_mask.find(mask);
  return it == by_mask.end() ? nullptr : &records[it->second];
}

CoverClassification classify_cover(const Cover& cover, const ClassifyOptions& options) {
  CoverClassification out;
  const std::size_t m = cover.size();
  out.exhaustive = !options.nerve_only && m <= options.max_subsets;
  if (!out.exhaustive)
    out.note = "only index sets with non-empty intersection enumerated (" + std::to_string(m) + " members)";

  std::map<MemberMask, CoverObject> nonempty;
  for (auto& [mask, o] : nonempty_intersections(cover)) nonempty.emplace(mask, std::move(o));

  struct Verdicts {
    TriStateResult triviality, collapsibility;
    bool acyclic;
  };
  std::map<std::string, Verdicts> cache;
  auto evaluate = [&](const CoverObject& o) -> const Verdicts& {
    const std::string key = object_key(o);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Verdicts v;
    if (cover.is_complex()) {
      v.acyclic = reduced_homology(o.complex).is_trivial();
      v.collapsibility = greedy_collapse_complex(o.complex, CollapseStrategy::Restarts, options.collapse);
      v.triviality = v.collapsibility;
      if (v.triviality.verdict == Verdict::Yes) v.triviality.note = "contractible: collapsible";
    } else {
      const Poset sub = cover.parent_poset().induced(o.elements);
      v.acyclic = homology_of_poset(sub).is_trivial();
      v.triviality = is_homotopically_trivial(sub, options.collapse);
      v.collapsibility = greedy_collapse_space(sub, options.collapse);
    }
    return cache.emplace(key, std::move(v)).first->second;
  };

  auto add = [&](MemberMask mask, const CoverObject* o) {
    IntersectionRecord r;
    r.mask = mask;
    r.index_set = cover.label(mask);
    if (o) {
      r.object = *o;
      const Verdicts& v = evaluate(*o);
      r.triviality = v.triviality;
      r.collapsibility = v.collapsibility;
      r.acyclic = v.acyclic;
    } else {
      r.triviality = TriStateResult::unknown("empty intersection");
      r.collapsibility = r.triviality;
    }
    out.records.push_back(std::move(r));
  };

  if (out.exhaustive) {
    for (MemberMask mask = 1; mask <= cover.full_mask() && mask != 0; ++mask) {
      auto it = nonempty.find(mask);
      add(mask, it == nonempty.end() ? nullptr : &it->second);
      if (mask == cover.full_mask()) break;
    }
  } else {
    for (const auto& [mask, o] : nonempty) add(mask, &o);
  }
  std::sort(out.records.begin(), out.records.end(), [](const auto& a, const auto& b) {
    if (a.index_set.size() != b.index_set.size()) return a.index_set.size() < b.index_set.size();
    return a.index_set < b.index_set;
  });

  for (std::size_t k = 0; k < out.records.size(); ++k) out.by_mask.emplace(out.records[k].mask, k);
  for (const auto& r : out.records) {
    if (r.object.empty) continue;
    out.good = meet(out.good, r.triviality.verdict);
    out.strong_good = meet(out.strong_good, r.collapsibility.verdict);
    if (!r.acyclic) out.good_shadow = Verdict::No;
    if (r.triviality.verdict == Verdict::Unknown) out.unknown_triviality.push_back(r.index_set);
    if (r.collapsibility.verdict == Verdict::Unknown) out.unknown_collapsibility.push_back(r.index_set);
  }
  if (out.strong_good == Verdict::Yes && out.good != Verdict::Yes)
    throw Error(ErrorKind::InvalidCover, "internal: strong-good cover not classified as good");
  return out;
}

// ---------------------------------------------------------------------------
// Nerves

SimplicialComplex nerve(const Cover& cover) {
  std::vector<Simplex> simplices;
  for (const auto& [mask, o] : nonempty_intersections(cover)) simplices.push_back(cover.label(mask));
  return SimplicialComplex::from_simplices(std::move(simplices));
}

Poset non_hausdorff_nerve(const Cover& cover) { return face_poset(nerve(cover)); }

ReducedNerve reduced_nerve(const Cover& cover) {
  std::map<MemberMask, CoverObject> closed;
  for (auto& [mask, o] : nonempty_intersections(cover)) {
    MemberMask c = 0;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (object_within(cover, o, i)) c |= MemberMask{1} << i;
    closed.try_emplace(c, std::move(o));
  }
  std::vector<std::string> ids;
  std::map<std::string, MemberMask> by_id;
  for (const auto& [c, o] : closed) {
    ids.push_back(simplex_id(cover.label(c)));
    by_id.emplace(ids.back(), c);
  }
  std::vector<ElementPair> pairs;
  for (const auto& [a, oa] : closed)
    for (const auto& [b, ob] : closed)
      if (a != b && (a & ~b) == 0) pairs.emplace_back(simplex_id(cover.label(a)), simplex_id(cover.label(b)));

  ReducedNerve out;
  out.poset = Poset::build(ids, pairs);
  for (const auto& id : out.poset.elements()) {
    const MemberMask c = by_id.at(id);
    out.elements.push_back({id, c, closed.at(c)});
  }
  return out;
}

SimplicialComplex reduced_nerve_complex(const Cover& cover) { return order_complex(reduced_nerve(cover).poset); }

std::string_view to_string(NerveMode mode) { return mode == NerveMode::Trivial ? "trivial" : "collapsible"; }

NerveMode nerve_mode_from_string(std::string_view name) {
  if (name == "trivial") return NerveMode::Trivial;
  if (name == "collapsible") return NerveMode::Collapsible;
  throw Error(ErrorKind::InvalidInput, "mode must be 'trivial' or 'collapsible', got '" + std::string(name) + "'");
}

namespace {

Verdict verdict_of(const IntersectionRecord& r, NerveMode mode) {
  return mode == NerveMode::Trivial ? r.triviality.verdict : r.collapsibility.verdict;
}

const IntersectionRecord& record_for(const CoverClassification& c, MemberMask mask) {
  const IntersectionRecord* r = c.find(mask);
  if (!r) throw Error(ErrorKind::InvalidInput, "classification has no record for an index set of the nerve");
  return *r;
}

}  // namespace

NZero n_zero_subspace(const Cover& cover, const CoverClassification& classification, NerveMode mode, bool reduced) {
  NZero out;
  out.reduced = reduced;
  out.mode = mode;
  Poset whole;
  std::map<std::string, MemberMask> mask_of_id;
  if (reduced) {
    ReducedNerve rn = reduced_nerve(cover);
    whole = std::move(rn.poset);
    for (const auto& e : rn.elements) mask_of_id.emplace(e.id, e.closed_mask);
  } else {
    whole = non_hausdorff_nerve(cover);
    for (const auto& [mask, o] : nonempty_intersections(cover)) mask_of_id.emplace(simplex_id(cover.label(mask)), mask);
  }
  ElementSet keep = whole.none();
  for (std::size_t k = 0; k < whole.size(); ++k) {
    const Verdict v = verdict_of(record_for(classification, mask_of_id.at(whole.id(k))), mode);
    if (v == Verdict::Yes)
      keep.set(k);
    else if (v == Verdict::Unknown)
      out.excluded_unknown.push_back(whole.id(k));
    else
      out.excluded_no.push_back(whole.id(k));
  }
  out.poset = whole.induced(keep);
  for (const auto& id : out.poset.elements()) out.masks.push_back(mask_of_id.at(id));
  return out;
}

SimplicialComplex n_zero_complex(const Cover& cover, const CoverClassification& classification, NerveMode mode) {
  std::vector<Simplex> simplices;
  for (const auto& r : classification.records) {
    if (r.object.empty || verdict_of(r, mode) != Verdict::Yes) continue;
    bool all_faces = true;
    for (MemberMask sub = (r.mask - 1) & r.mask; sub != 0 && all_faces; sub = (sub - 1) & r.mask)
      all_faces = verdict_of(record_for(classification, sub), mode) == Verdict::Yes;
    if (all_faces) simplices.push_back(cover.label(r.mask));
  }
  return SimplicialComplex::from_simplices(std::move(simplices));
}

Poset containing_intersections(const Cover& cover, const NZero& n_zero, std::string_view x) {
  if (cover.is_complex()) throw Error(ErrorKind::InvalidInput, "I_x is defined for covers of finite spaces");
  const std::size_t idx = cover.parent_poset().index_of(x);
  ElementSet keep = n_zero.poset.none();
  for (std::size_t k = 0; k < n_zero.poset.size(); ++k)
    if (intersection(cover, n_zero.masks[k]).elements.test(idx)) keep.set(k);
  return n_zero.poset.induced(keep);
}

namespace {

Simplex checked_simplex(const Cover& cover, const Simplex& sigma) {
  if (!cover.is_complex()) throw Error(ErrorKind::InvalidInput, "S_sigma is defined for covers of complexes");
  Simplex s = make_simplex(sigma);
  if (!cover.parent_complex().contains(s))
    throw Error(ErrorKind::UnknownSimplex, simplex_id(s) + " is not a simplex of the parent");
  return s;
}

}  // namespace

SimplicialComplex chains_containing(const Cover& cover, const SimplicialComplex& n_zero_complex, const Simplex& sigma) {
  const Simplex s = checked_simplex(cover, sigma);
  // σ lies in I_J exactly when it lies in every member of J.
  std::vector<std::string> members;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover.member_complex(i).contains(s)) members.push_back(cover.names()[i]);
  return n_zero_complex.full_subcomplex(members);
}

SimplicialComplex chains_containing(const Cover& cover, const NZero& reduced_n_zero, const Simplex& sigma) {
  const Simplex s = checked_simplex(cover, sigma);
  ElementSet keep = reduced_n_zero.poset.none();
  for (std::size_t k = 0; k < reduced_n_zero.poset.size(); ++k)
    if (intersection(cover, reduced_n_zero.masks[k]).complex.contains(s)) keep.set(k);
  if (keep.none()) return {};
  return order_complex(reduced_n_zero.poset.induced(keep));
}

SimplicialComplex subunion(const Cover& cover, MemberMask mask) {
  if (!cover.is_complex()) throw Error(ErrorKind::InvalidInput, "sub-unions are defined for covers of complexes");
  SimplicialComplex out;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (in_mask(mask, i)) out = out.unite(cover.member_complex(i));
  return out;
}

SimplicialComplex subunion(const Cover& cover, const std::vector<std::string>& members) {
  return subunion(cover, cover.mask_of(members));
}

PersistenceDiagram persistence_over_chain(const Cover& cover, const std::vector<std::vector<std::string>>& chain) {
  std::vector<SimplicialComplex> filtration;
  std::vector<MemberMask> masks;
  for (const auto& j : chain) {
    const MemberMask m = cover.mask_of(j);
    if (!masks.empty() && ((masks.back() & ~m) != 0 || masks.back() == m))
      throw Error(ErrorKind::NotAChain, "index sets must strictly increase");
    masks.push_back(m);
    filtration.push_back(subunion(cover, m));
  }
  PersistenceDiagram out = persistence_of_filtration(filtration);
  for (MemberMask m : masks) out.filtration.push_back(cover.label(m));
  return out;
}

// ---------------------------------------------------------------------------
// Nerve theorem checkers

std::string_view to_string(NerveFlavor flavor) {
  switch (flavor) {
    case NerveFlavor::Good: return "good";
    case NerveFlavor::StrongGood: return "strong-good";
    case NerveFlavor::SpaceTrivial: return "space-trivial";
    case NerveFlavor::SpaceCollapsible: return "space-collapsible";
    case NerveFlavor::ComplexContractible: return "complex-contractible";
    case NerveFlavor::ReducedSpace: return "reduced-space";
    case NerveFlavor::ReducedComplex: return "reduced-complex";
  }
  return "?";
}

NerveFlavor nerve_flavor_from_string(std::string_view name) {
  for (NerveFlavor f : {NerveFlavor::Good, NerveFlavor::StrongGood, NerveFlavor::SpaceTrivial, NerveFlavor::SpaceCollapsible,
                        NerveFlavor::ComplexContractible, NerveFlavor::ReducedSpace, NerveFlavor::ReducedComplex})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::InvalidInput, "unknown nerve flavor '" + std::string(name) + "'");
}

namespace {

constexpr const char* kShadowNote =
    "homology agreement is checked in every degree; the (simple) homotopy equivalence itself is not certified";
constexpr const char* kReducedNote =
    "reduced nerve: distinct non-empty intersections, equal intersections identified, ordered by reverse inclusion";

HomologyResult poset_homology_or_empty(const Poset& p) { return p.empty() ? empty_homology() : homology_of_poset(p); }
HomologyResult complex_homology_or_empty(const SimplicialComplex& k) {
  return k.empty() ? empty_homology() : reduced_homology(k);
}

void require(const Cover& cover, bool complex, NerveFlavor flavor) {
  if (cover.is_complex() != complex)
    throw Error(ErrorKind::InvalidInput, std::string(to_string(flavor)) + " needs a cover of a " +
                                             (complex ? "simplicial complex" : "finite space"));
}

void add(NerveReport& report, HypothesisCheck check) {
  report.hypothesis = meet(report.hypothesis, check.verdict);
  report.hypotheses.push_back(std::move(check));
}

TriStateResult poset_verdict(const Poset& p, NerveMode mode, const CollapseOptions& options) {
  if (p.empty()) return TriStateResult::no(empty_homology(), "empty");
  return mode == NerveMode::Trivial ? is_homotopically_trivial(p, options) : greedy_collapse_space(p, options);
}

TriStateResult complex_verdict(const SimplicialComplex& k, const CollapseOptions& options) {
  if (k.empty()) return TriStateResult::no(empty_homology(), "empty");
  return greedy_collapse_complex(k, CollapseStrategy::Restarts, options);
}

}  // namespace

NerveReport check_nerve_theorem(const Cover& cover, NerveFlavor flavor, const ClassifyOptions& options) {
  NerveReport report;
  report.flavor = flavor;
  report.classification = classify_cover(cover, options);
  report.notes.push_back(kShadowNote);
  const auto& cls = report.classification;

  switch (flavor) {
    case NerveFlavor::Good:
    case NerveFlavor::StrongGood: {
      const bool strong = flavor == NerveFlavor::StrongGood;
      for (const auto& r : cls.records) {
        if (r.object.empty) continue;
        const auto& v = strong ? r.collapsibility : r.triviality;
        add(report, {simplex_id(r.index_set), strong ? "intersection collapsible" : "intersection contractible",
                     v.verdict, v.note});
      }
      if (cover.is_complex()) {
        report.nerve_object = "N(U)";
        report.parent_homology = reduced_homology(cover.parent_complex());
        report.nerve_homology = reduced_homology(nerve(cover));
      } else {
        report.nerve_object = "chi(U)";
        report.parent_homology = homology_of_poset(cover.parent_poset());
        report.nerve_homology = homology_of_poset(non_hausdorff_nerve(cover));
      }
      break;
    }
    case NerveFlavor::SpaceTrivial:
    case NerveFlavor::SpaceCollapsible: {
      require(cover, false, flavor);
      const NerveMode mode = flavor == NerveFlavor::SpaceTrivial ? NerveMode::Trivial : NerveMode::Collapsible;
      const NZero nz = n_zero_subspace(cover, cls, mode, false);
      report.nerve_object = "N0(U), " + std::string(to_string(mode)) + " intersections";
      for (const auto& id : nz.excluded_unknown) report.notes.push_back("excluded (verdict Unknown): " + id);
      const Poset& x = cover.parent_poset();
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Poset ix = containing_intersections(cover, nz, x.id(i));
        const TriStateResult v = poset_verdict(ix, mode, options.collapse);
        add(report, {x.id(i), mode == NerveMode::Trivial ? "I_x homotopically trivial" : "I_x collapsible",
                     v.verdict, v.note});
      }
      report.parent_homology = homology_of_poset(x);
      report.nerve_homology = poset_homology_or_empty(nz.poset);
      break;
    }
    case NerveFlavor::ComplexContractible: {
      require(cover, true, flavor);
      const SimplicialComplex n0 = n_zero_complex(cover, cls, NerveMode::Trivial);
      report.nerve_object = "N0(U), chains of contractible intersections";
      for (const auto& id : cls.unknown_triviality) report.notes.push_back("excluded (verdict Unknown): " + simplex_id(id));
      for (const auto& sigma : cover.parent_complex().simplices()) {
        const TriStateResult v = complex_verdict(chains_containing(cover, n0, sigma), options.collapse);
        add(report, {simplex_id(sigma), "S_sigma contractible", v.verdict, v.note});
      }
      report.parent_homology = reduced_homology(cover.parent_complex());
      report.nerve_homology = complex_homology_or_empty(n0);
      break;
    }
    case NerveFlavor::ReducedSpace: {
      require(cover, false, flavor);
      const NZero nz = n_zero_subspace(cover, cls, NerveMode::Collapsible, true);
      report.nerve_object = "reduced N0(U), collapsible intersections";
      report.notes.push_back(kReducedNote);
      report.notes.push_back(kBoundNote);
      for (const auto& id : nz.excluded_unknown) report.notes.push_back("excluded (verdict Unknown): " + id);
      const Poset& x = cover.parent_poset();
      const int n = std::max(x.height(), nz.poset.height());
      report.bound = n;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Poset ix = containing_intersections(cover, nz, x.id(i));
        TriStateResult v = poset_verdict(ix, NerveMode::Collapsible, options.collapse);
        const int limit = n - x.height_of(i);
        if (ix.height() > limit) {
          v.verdict = Verdict::No;
          v.note = "height " + std::to_string(ix.height()) + " exceeds " + std::to_string(limit);
        }
        add(report, {x.id(i), "I_x collapsible, height <= n - h(x)", v.verdict, v.note});
      }
      report.parent_homology = homology_of_poset(x);
      report.nerve_homology = poset_homology_or_empty(nz.poset);
      break;
    }
    case NerveFlavor::ReducedComplex: {
      require(cover, true, flavor);
      const NZero nz = n_zero_subspace(cover, cls, NerveMode::Collapsible, true);
      const SimplicialComplex n0 = nz.poset.empty() ? SimplicialComplex{} : order_complex(nz.poset);
      report.nerve_object = "reduced N0(U), chains of collapsible intersections";
      report.notes.push_back(kReducedNote);
      report.notes.push_back(kBoundNote);
      for (const auto& id : nz.excluded_unknown) report.notes.push_back("excluded (verdict Unknown): " + id);
      const int n = std::max(cover.parent_complex().dimension(), n0.dimension());
      report.bound = n;
      for (const auto& sigma : cover.parent_complex().simplices()) {
        const SimplicialComplex s = chains_containing(cover, nz, sigma);
        TriStateResult v = complex_verdict(s, options.collapse);
        const int limit = n - simplex_dimension(sigma);
        if (s.dimension() > limit) {
          v.verdict = Verdict::No;
          v.note = "dimension " + std::to_string(s.dimension()) + " exceeds " + std::to_string(limit);
        }
        add(report, {simplex_id(sigma), "S_sigma collapsible, dim <= n - dim(sigma)", v.verdict, v.note});
      }
      report.parent_homology = reduced_homology(cover.parent_complex());
      report.nerve_homology = complex_homology_or_empty(n0);
      break;
    }
  }
  report.homology_equal = report.parent_homology == report.nerve_homology;
  return report;
}

// ---------------------------------------------------------------------------
// Truncation

TruncationReport check_truncation_theorem(const Cover& cover, const TruncationOptions& options) {
  if (!cover.is_complex()) throw Error(ErrorKind::InvalidCover, "the truncation check needs a cover of a complex");
  TruncationReport report;
  report.classification = classify_cover(cover, options.classify);
  report.parent_homology = homology(cover.parent_complex());
  report.nerve_homology = homology(nerve(cover));
  report.part1 = report.parent_homology == report.nerve_homology;
  report.seed = options.classify.collapse.seed;
  report.notes.push_back("part 1 compares groups only; the inclusion-induced map is not constructed");

  std::set<MemberMask> subsets;
  const std::size_t m = cover.size();
  report.exhaustive = m <= options.exhaustive_limit;
  if (report.exhaustive) {
    for (MemberMask mask = 1; mask <= cover.full_mask(); ++mask) {
      subsets.insert(mask);
      if (mask == cover.full_mask()) break;
    }
  } else {
    for (const auto& [mask, o] : nonempty_intersections(cover)) subsets.insert(mask);
    Rng rng(report.seed);
    for (std::size_t s = 0; s < options.sample; ++s) {
      const MemberMask mask = rng.next() & cover.full_mask();
      if (mask != 0) subsets.insert(mask);
    }
    report.notes.push_back("sampled: nerve simplices plus " + std::to_string(options.sample) +
                           " random index sets, seed " + std::to_string(report.seed));
  }

  std::map<std::vector<Simplex>, HomologyResult> cache;
  for (MemberMask mask : subsets) {
    const SimplicialComplex kj = subunion(cover, mask);
    auto it = cache.find(kj.facets());
    if (it == cache.end()) it = cache.emplace(kj.facets(), homology(kj)).first;
    ++report.subsets_checked;
    if (!it->second.vanishes_above_zero()) report.failures.push_back({cover.label(mask), it->second});
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
    if (a.index_set.size() != b.index_set.size()) return a.index_set.size() < b.index_set.size();
    return a.index_set < b.index_set;
  });
  report.part2 = report.failures.empty();

  if (report.part2) {
    report.status = "holds";
  } else if (report.classification.strong_good == Verdict::Yes) {
    report.status = "counterexample: every intersection is collapsible, yet a sub-union has positive-degree homology";
  } else {
    report.status = "predicted failure mode: cover not certified strong-good (strong-good " +
                    std::string(to_string(report.classification.strong_good)) + ")";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cover plus relations

RelationNerveReport check_relation_nerve(const Cover& cover, const std::vector<Relation>& relations,
                                         const ClassifyOptions& options) {
  if (relations.empty()) throw Error(ErrorKind::InvalidInput, "need at least one relation");
  if (cover.is_complex() || !(cover.parent_poset() == relations.front().source()))
    throw Error(ErrorKind::MismatchedSpaces, "the cover must be an open cover of the first space");
  for (std::size_t i = 0; i + 1 < relations.size(); ++i)
    if (!(relations[i].target() == relations[i + 1].source()))
      throw Error(ErrorKind::MismatchedSpaces, "relation " + std::to_string(i) + " does not meet relation " +
                                                   std::to_string(i + 1));

  RelationNerveReport report;
  auto add_check = [&](std::string subject, std::string condition, const Poset& space, const ElementSet& set) {
    const TriStateResult v = poset_verdict(space.induced(set), NerveMode::Trivial, options.collapse);
    report.hypothesis = meet(report.hypothesis, v.verdict);
    report.hypotheses.push_back({std::move(subject), std::move(condition), v.verdict, v.note});
  };

  const CoverClassification cls = classify_cover(cover, options);
  const NZero nz = n_zero_subspace(cover, cls, NerveMode::Trivial, false);
  const Poset& x0 = cover.parent_poset();
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const Poset ix = containing_intersections(cover, nz, x0.id(i));
    const TriStateResult v = poset_verdict(ix, NerveMode::Trivial, options.collapse);
    report.hypothesis = meet(report.hypothesis, v.verdict);
    report.hypotheses.push_back({"X0:" + x0.id(i), "I_x homotopically trivial", v.verdict, v.note});
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Relation& r = relations[i];
    const std::string tag = "R" + std::to_string(i);
    for (std::size_t y = 0; y < r.target().size(); ++y)
      add_check(tag + ":" + r.target().id(y), "underline preimage of U_y trivial", r.source(), underline_preimage(r, y));
    for (std::size_t x = 0; x < r.source().size(); ++x)
      add_check(tag + ":" + r.source().id(x), "overline image of F_x trivial", r.target(), overline_image(r, x));
  }
  const Relation composite = compose_chain(relations);
  for (std::size_t y = 0; y < composite.target().size(); ++y)
    add_check("R:" + composite.target().id(y), "underline preimage of U_y trivial", composite.source(),
              underline_preimage(composite, y));
  for (std::size_t x = 0; x < composite.source().size(); ++x)
    add_check("R:" + composite.source().id(x), "overline image of F_x trivial", composite.target(),
              overline_image(composite, x));

  report.n_zero_homology = poset_homology_or_empty(nz.poset);
  std::vector<const Poset*> spaces{&relations.front().source()};
  for (const auto& r : relations) spaces.push_back(&r.target());
  for (const Poset* s : spaces) {
    report.space_homology.push_back(homology_of_poset(*s));
    report.homology_equal.push_back(report.space_homology.back() == report.n_zero_homology);
  }
  report.notes.push_back(kShadowNote);
  return report;
}

}  // namespace ftop
