#include <doctest.h>

#include "oracles.hpp"

#include "ftop/catalog.hpp"
#include "ftop/collapse.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/error.hpp"

using namespace ftop;

namespace {

bool contains(const std::vector<TaggedPoint>& v, const std::string& e, PointKind k) {
  return std::find(v.begin(), v.end(), TaggedPoint{e, k}) != v.end();
}

std::size_t free_pair_count(const CollapseCertificate& c) {
  return static_cast<std::size_t>(std::count_if(c.steps.begin(), c.steps.end(), [](const CollapseStep& s) {
    return std::holds_alternative<FreeFacePair>(s);
  }));
}

}  // namespace

TEST_CASE("verdict lattice") {
  CHECK(meet(Verdict::Yes, Verdict::Unknown) == Verdict::Unknown);
  CHECK(meet(Verdict::No, Verdict::Unknown) == Verdict::No);
  CHECK(meet(Verdict::Yes, Verdict::Yes) == Verdict::Yes);
  CHECK(point_kind_from_string(to_string(PointKind::UpWeak)) == PointKind::UpWeak);
  CHECK_THROWS_AS(point_kind_from_string("sideways"), Error);
}

TEST_CASE("beat points") {
  const auto chain = beat_points(catalog::chain("a", 2));
  CHECK(contains(chain, "a1", PointKind::UpBeat));
  CHECK(contains(chain, "a2", PointKind::DownBeat));
  CHECK(beat_points(catalog::antichain("p", 2)).empty());
  const Poset b = multiple_cylinder(catalog::worked_example()).poset;
  CHECK(contains(beat_points(b), "1:b1", PointKind::DownBeat));
}

TEST_CASE("core") {
  CHECK(core(catalog::chain("c", 6)).core.size() == 1);
  CHECK(core(catalog::antichain("p", 2)).core == catalog::antichain("p", 2));
  const Poset b = multiple_cylinder(catalog::worked_example()).poset;
  const auto r = core(b);
  CHECK(r.core.size() == 1);
  CHECK(is_contractible_space(b));
  CHECK(replay(b, r.certificate).ok);
}

TEST_CASE("contractibility") {
  const Poset b = multiple_cylinder(catalog::worked_example()).poset;
  for (std::size_t x = 0; x < b.size(); ++x) CHECK(is_contractible_space(b.induced(b.down_set(x))));
  CHECK_FALSE(is_contractible_space(catalog::antichain("p", 2)));
  const Poset hat = b.induced(b.down_set("1:b3", true));
  CHECK(hat.size() == 6);
  CHECK(is_contractible_space(hat) == oracle::contractible_by_search(hat));
  CHECK_THROWS_AS(is_contractible_space(Poset()), Error);
}

TEST_CASE("weak and gamma points") {
  const Poset anti = catalog::antichain("p", 2);
  CHECK(weak_points(anti).empty());
  // The minimal point of a chain has empty Û, so it is never down-weak.
  const auto w = weak_points(catalog::chain("a", 2));
  CHECK_FALSE(contains(w, "a1", PointKind::DownWeak));
  CHECK(contains(w, "a1", PointKind::UpWeak));

  // Circle model: every link is two points, never trivial.
  const Poset circle = face_poset(catalog::triangle_boundary());
  for (const auto& [id, r] : gamma_points(circle)) CHECK(r.verdict == Verdict::No);
  CHECK(weak_points(circle).empty());

  // Singleton: the link is empty.
  const auto g = gamma_points(Poset::build({"x"}, {}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].second.verdict == Verdict::No);
}

TEST_CASE("greedy collapse of finite spaces") {
  const Poset c = catalog::chain("a", 5);
  const auto r = greedy_collapse_space(c);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(r.certificate->steps.size() == 4);
  CHECK(replay(c, *r.certificate).ok);

  const auto no = greedy_collapse_space(catalog::antichain("p", 2));
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.witness.has_value());
  CHECK(no.witness->betti(0) == 1);

  // B(id) collapses onto its domain copy.
  const Poset x = catalog::chain("x", 3);
  const auto id = MonotoneMap::from_assignment(x, x, {{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}});
  const Cylinder cyl = mapping_cylinder(id);
  const auto onto = greedy_collapse_space(cyl.poset, cyl.copy(0));
  REQUIRE(onto.verdict == Verdict::Yes);
  CHECK(replay(cyl.poset, *onto.certificate, cyl.copy(0)).ok);

  CHECK_THROWS_AS(greedy_collapse_space(cyl.poset, ElementSet(cyl.poset.size())), Error);
  CHECK_THROWS_AS(greedy_collapse_space(cyl.poset, catalog::chain("q", 2)), Error);
  CHECK_THROWS_AS(is_homotopically_trivial(Poset()), Error);
}

TEST_CASE("free faces and greedy collapse of complexes") {
  const auto solid = catalog::solid_triangle();
  const auto ff = free_faces(solid);
  REQUIRE(ff.size() == 3);
  CHECK(ff[0] == FreeFacePair{{"v0", "v1"}, {"v0", "v1", "v2"}});
  const auto r = greedy_collapse_complex(solid);
  REQUIRE(r.verdict == Verdict::Yes);
  // One edge with the triangle, then two vertex-edge pairs: three pairs in total.
  CHECK(free_pair_count(*r.certificate) == 3);
  CHECK(replay(solid, *r.certificate).ok);

  CHECK(free_faces(catalog::dunce_hat()).empty());
  CHECK(greedy_collapse_complex(catalog::dunce_hat()).verdict == Verdict::Unknown);
  CHECK(is_homotopically_trivial(catalog::dunce_hat()).verdict == Verdict::Unknown);

  const auto circle = greedy_collapse_complex(catalog::triangle_boundary());
  CHECK(circle.verdict == Verdict::No);
  CHECK(is_homotopically_trivial(catalog::triangle_boundary()).verdict == Verdict::No);
  CHECK_THROWS_AS(greedy_collapse_complex(SimplicialComplex()), Error);
}

TEST_CASE("collapse onto a subcomplex and staged union") {
  const auto a = catalog::triangle_a(), b = catalog::triangle_b();
  const auto u = a.unite(b);
  const auto onto = collapse_onto(u, b);
  REQUIRE(onto.verdict == Verdict::Yes);
  CHECK(replay(u, *onto.certificate, b).ok);
  CHECK_FALSE(replay(u, *onto.certificate).ok);

  const auto staged = staged_union_collapse(a, b);
  REQUIRE(staged.verdict == Verdict::Yes);
  CHECK(staged.certificate->steps.size() == 5);
  CHECK(replay(u, *staged.certificate).ok);

  CHECK_THROWS_AS(collapse_onto(a, catalog::triangle_b()), Error);
}

TEST_CASE("replay rejects bad certificates") {
  const auto solid = catalog::solid_triangle();
  CollapseCertificate bad;
  bad.steps.push_back(FreeFacePair{{"v0"}, {"v0", "v1"}});
  const auto out = replay(solid, bad);
  CHECK_FALSE(out.ok);
  CHECK(out.steps_applied == 0);

  const Poset anti = catalog::antichain("p", 2);
  CollapseCertificate lie;
  lie.steps.push_back(PointRemoval{"p1", PointKind::DownBeat});
  CHECK_FALSE(replay(anti, lie).ok);

  // Stopping early is a failure too.
  const Poset c = catalog::chain("a", 3);
  CollapseCertificate partial;
  partial.steps.push_back(PointRemoval{"a3", PointKind::DownBeat});
  CHECK_FALSE(replay(c, partial).ok);
}
