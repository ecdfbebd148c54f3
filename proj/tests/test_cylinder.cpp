#include <doctest.h>

#include "oracles.hpp"

#include "ftop/catalog.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/error.hpp"
#include "ftop/generators.hpp"

using namespace ftop;

namespace {

using PairSet = std::set<std::pair<std::string, std::string>>;

PairSet as_set(const std::vector<ElementPair>& v) { return PairSet(v.begin(), v.end()); }

MonotoneMap identity(const Poset& x) {
  std::map<std::string, std::string> a;
  for (const auto& e : x.elements()) a[e] = e;
  return MonotoneMap::from_assignment(x, x, a);
}

PairSet order_pairs(const Poset& p) {
  PairSet out;
  for (auto [a, b] : p.order_pairs()) out.emplace(p.id(a), p.id(b));
  return out;
}

}  // namespace

TEST_CASE("image and preimage on the worked example") {
  const auto spec = catalog::worked_example();
  const Relation& r0 = spec.relations[0];
  const Relation& r1 = spec.relations[1];
  CHECK(r0.target().names(r0.image(r0.source().subset({"a1"}))) == std::vector<std::string>{"b1"});
  CHECK(r1.source().names(r1.preimage(r1.target().subset({"b2"}))) == std::vector<std::string>{"c1"});
  CHECK(r0.image(r0.source().none()).none());
  CHECK(r0.preimage(r0.target().none()).none());
}

TEST_CASE("composition") {
  const Poset x = Poset::build({"x"}, {}), y = Poset::build({"y", "w"}, {}), z = Poset::build({"z"}, {});
  const Relation r1(x, y, std::vector<ElementPair>{{"x", "y"}});
  const Relation r2(y, z, std::vector<ElementPair>{{"y", "z"}});
  CHECK(compose(r1, r2).named_pairs() == std::vector<ElementPair>{{"x", "z"}});
  const Relation r3(y, z, std::vector<ElementPair>{{"w", "z"}});
  CHECK(compose(r1, r3).pairs().empty());
  CHECK_THROWS_AS(compose(r1, r1), Error);
}

TEST_CASE("composition is associative") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    std::vector<Poset> s;
    for (int i = 0; i < 4; ++i) s.push_back(gen::generate_poset(rng, 1 + rng.below(4), 1, "s" + std::to_string(i)));
    std::vector<Relation> r;
    for (int i = 0; i < 3; ++i) r.push_back(gen::generate_relation(rng, s[i], s[i + 1], 0.4));
    const auto left = compose(compose(r[0], r[1]), r[2]);
    const auto right = compose(r[0], compose(r[1], r[2]));
    CHECK(left.pairs() == right.pairs());
    CHECK(compose_chain(r).pairs() == left.pairs());
  }
}

TEST_CASE("relation cylinder") {
  const auto spec = catalog::worked_example();
  const Cylinder b0 = relation_cylinder(spec.relations[0]);
  CHECK(as_set(b0.cross_pairs()) == PairSet{{"0:a1", "1:b1"}, {"0:a1", "1:b2"}, {"0:a1", "1:b3"},
                                            {"0:a2", "1:b2"}, {"0:a2", "1:b3"}});
  const Poset x = catalog::chain("x", 3);
  const Relation empty(x, x, std::vector<IndexPair>{});
  CHECK(relation_cylinder(empty).cross_pairs().empty());
  CHECK(relation_cylinder(identity(x).graph()).poset == mapping_cylinder(identity(x)).poset);
}

TEST_CASE("relation cylinder agrees with the cross-pair law") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    const Poset x = gen::generate_poset(rng, 1 + rng.below(6), 2, "x");
    const Poset y = gen::generate_poset(rng, 1 + rng.below(6), 2, "y");
    const Relation r = gen::generate_relation(rng, x, y, 0.2);
    const Cylinder c = relation_cylinder(r);
    CHECK(as_set(c.cross_pairs()) == oracle::relation_cylinder_cross(r));
    // Each copy carries its original order.
    CHECK(c.poset.induced(c.copy(0)).order_pairs().size() == x.order_pairs().size());
    CHECK(c.poset.induced(c.copy(1)).order_pairs().size() == y.order_pairs().size());
  }
}

TEST_CASE("mapping cylinders") {
  const Poset c = catalog::chain("c", 3);
  const Poset pt = Poset::build({"p"}, {});
  const auto f = MonotoneMap::from_assignment(c, pt, {{"c1", "p"}, {"c2", "p"}, {"c3", "p"}});
  const Cylinder b = mapping_cylinder(f);
  CHECK(b.poset.height() == 3);
  CHECK(b.poset.maximal_elements().size() == 1);
  CHECK(b.poset.id(b.poset.maximal_elements()[0]) == "1:p");

  CHECK_THROWS_AS(MonotoneMap::from_assignment(c, c, {{"c1", "c3"}, {"c2", "c1"}, {"c3", "c3"}}), Error);
  CHECK_THROWS_AS(MonotoneMap::from_assignment(c, c, {{"c1", "c1"}}), Error);

  // n = 1, right: multiple mapping cylinder equals B(f).
  const auto g = MonotoneMap::from_assignment(c, c, {{"c1", "c1"}, {"c2", "c3"}, {"c3", "c3"}});
  CHECK(multiple_mapping_cylinder({c, c}, {{g, Direction::Right}}).poset == mapping_cylinder(g).poset);
  CHECK_THROWS_AS(multiple_mapping_cylinder({c}, {{g, Direction::Right}}), Error);
}

TEST_CASE("multiple cylinder") {
  const auto spec = catalog::worked_example();
  const Cylinder b = multiple_cylinder(spec);
  CHECK(as_set(b.cross_pairs()) == PairSet{{"0:a1", "1:b1"}, {"0:a1", "1:b2"}, {"0:a1", "1:b3"},
                                           {"0:a2", "1:b2"}, {"0:a2", "1:b3"}, {"2:c1", "1:b2"},
                                           {"2:c1", "1:b3"}, {"2:c2", "1:b3"}});
  CHECK(order_pairs(b.poset) == oracle::multiple_cylinder_order(spec));

  CylinderSpec empty = spec;
  for (auto& r : empty.relations) r = Relation(r.source(), r.target(), std::vector<IndexPair>{}, r.direction());
  CHECK(multiple_cylinder(empty).cross_pairs().empty());

  CylinderSpec single{{spec.spaces[0], spec.spaces[1]}, {spec.relations[0]}};
  CHECK(multiple_cylinder(single).poset == relation_cylinder(spec.relations[0]).poset);

  CylinderSpec broken{{spec.spaces[0]}, {spec.relations[0]}};
  CHECK_THROWS_AS(multiple_cylinder(broken), Error);
  CylinderSpec wrong{spec.spaces, {spec.relations[0], spec.relations[0]}};
  CHECK_THROWS_AS(multiple_cylinder(wrong), Error);
}

TEST_CASE("multiple cylinder of graph relations equals the multiple mapping cylinder") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(3);
    std::vector<Poset> spaces;
    for (std::size_t i = 0; i <= n; ++i)
      spaces.push_back(gen::generate_poset(rng, 1 + rng.below(4), 2, "s" + std::to_string(i) + "_"));
    std::vector<MapStep> maps;
    CylinderSpec spec{spaces, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const bool right = rng.chance(0.5);
      const auto f = right ? gen::generate_map(rng, spaces[i], spaces[i + 1])
                           : gen::generate_map(rng, spaces[i + 1], spaces[i]);
      const Direction d = right ? Direction::Right : Direction::Left;
      maps.push_back({f, d});
      spec.relations.push_back(f.graph(d));
    }
    CHECK(multiple_cylinder(spec).poset == multiple_mapping_cylinder(spaces, maps).poset);
    CHECK(order_pairs(multiple_cylinder(spec).poset) == oracle::multiple_cylinder_order(spec));
  }
}

TEST_CASE("underline and overline sets") {
  const Poset x = catalog::chain("x", 3);
  const Relation id = identity(x).graph();
  CHECK(x.names(underline_preimage(id, x.index_of("x3"))) == std::vector<std::string>{"x1", "x2", "x3"});
  const Relation empty(x, x, std::vector<IndexPair>{});
  for (std::size_t y = 0; y < x.size(); ++y) CHECK(underline_preimage(empty, y).none());

  const auto spec = catalog::worked_example();
  const Relation& r0 = spec.relations[0];
  CHECK(r0.source().names(underline_preimage(r0, r0.target().index_of("b2"))) ==
        std::vector<std::string>{"a1", "a2"});
  CHECK(r0.target().names(overline_image(r0, r0.source().index_of("a2"))) == std::vector<std::string>{"b2", "b3"});
}

TEST_CASE("collapse checks") {
  const Poset x = catalog::chain("x", 3);
  const auto left = check_collapse_left(identity(x).graph());
  CHECK(left.collapsibility == Verdict::Yes);
  CHECK(left.certified == Verdict::Yes);
  REQUIRE(left.certificate.has_value());
  CHECK(replay(left.cylinder.poset, *left.certificate, left.cylinder.copy(0)).ok);

  const auto right = check_collapse_right(identity(x).graph());
  CHECK(right.certified == Verdict::Yes);
  CHECK(right.target_copy == 1);
  CHECK(replay(right.cylinder.poset, *right.certificate, right.cylinder.copy(1)).ok);

  // y2 has an empty preimage set.
  const Poset y = catalog::chain("y", 2);
  const Relation partial(x, y, std::vector<ElementPair>{{"x3", "y2"}});
  const auto r = check_collapse_left(partial);
  CHECK(r.collapsibility == Verdict::No);
  CHECK(r.certified != Verdict::Yes);
  CHECK_FALSE(r.certificate.has_value());
  const auto failing = std::find_if(r.checks.begin(), r.checks.end(),
                                    [](const ElementCheck& c) { return c.collapsibility.verdict != Verdict::Yes; });
  REQUIRE(failing != r.checks.end());
  CHECK(failing->element == "y1");
  CHECK(failing->set.empty());
}

TEST_CASE("intermediate and chain checks") {
  const Poset x = catalog::chain("x", 3);
  const Relation id = identity(x).graph();
  for (Side side : {Side::Left, Side::Right}) {
    const auto rep = check_intermediate(id, id, side);
    CHECK(rep.verdict == Verdict::Yes);
    CHECK(rep.single.certified == Verdict::Yes);
    CHECK(rep.composite.certified == Verdict::Yes);
    CHECK(rep.bound == 2);
    CHECK(rep.note == kBoundNote);
  }
  CHECK_THROWS_AS(check_intermediate(id, Relation(catalog::chain("q", 2), x, std::vector<IndexPair>{}), Side::Left),
                  Error);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto rels = gen::generate_chain_relations(seed, 2 + seed % 2);
    const auto rep = check_chain(rels);
    CHECK(rep.left.certified == Verdict::Yes);
    CHECK(rep.left.certificate.has_value());
  }
}
