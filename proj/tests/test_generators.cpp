#include <doctest.h>

#include "ftop/collapse.hpp"
#include "ftop/error.hpp"
#include "ftop/generators.hpp"

using namespace ftop;

TEST_CASE("posets are a function of the seed") {
  CHECK(gen::generate_poset(7, 8, 3) == gen::generate_poset(7, 8, 3));
  CHECK(gen::generate_poset(0, 0, 3).empty());
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Poset p = gen::generate_poset(seed, 10, 2);
    CHECK(p.size() == 10);
    CHECK(p.height() <= 2);
  }
}

TEST_CASE("relations") {
  const Poset x = gen::generate_poset(1, 5, 2), y = gen::generate_poset(2, 4, 2, "y");
  CHECK(gen::generate_relation(3, x, y, 0.0).pairs().empty());
  CHECK(gen::generate_relation(3, x, y, 1.0).pairs().size() == 20);
  CHECK(gen::generate_relation(3, x, y, 0.5).pairs() == gen::generate_relation(3, x, y, 0.5).pairs());
}

TEST_CASE("maps are order preserving") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Poset x = gen::generate_poset(rng, 1 + rng.below(6), 2, "x");
    const Poset y = gen::generate_poset(rng, 1 + rng.below(6), 2, "y");
    const MonotoneMap f = gen::generate_map(rng, x, y);
    for (auto [a, b] : x.order_pairs()) CHECK(y.leq(f.image[a], f.image[b]));
  }
  CHECK_THROWS_AS(gen::generate_map(rng, Poset::build({"p"}, {}), Poset()), Error);
}

TEST_CASE("random complexes") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto k = gen::generate_complex(rng, 6, 2);
    CHECK_FALSE(k.empty());
    CHECK(k.vertices().size() <= 6);
    CHECK(k.dimension() <= 2);
  }
}

TEST_CASE("strong-good covers") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = gen::generate_strong_good_cover(seed);
    CHECK(g.cover.size() <= 6);
    CHECK(g.complex.facets().size() <= 40);
    const auto cls = classify_cover(g.cover);
    CHECK(cls.strong_good == Verdict::Yes);
    CHECK(cls.good == Verdict::Yes);
  }
  CHECK(gen::generate_strong_good_cover(4).complex == gen::generate_strong_good_cover(4).complex);
}

TEST_CASE("composite instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = gen::generate_composite(seed);
    const Relation c = compose(inst.r1, inst.r2);
    const Poset& x = c.source();
    const Poset& z = c.target();
    CHECK(inst.r1.target().size() == z.size() + 2);
    // R2 ∘ R1 = {(x, z) : x <= m(z)}.
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < z.size(); ++b) CHECK(c.related(a, b) == x.leq(a, inst.m.image[b]));
  }
}

TEST_CASE("chain relations") {
  const auto rels = gen::generate_chain_relations(3, 3);
  REQUIRE(rels.size() == 3);
  for (std::size_t i = 0; i + 1 < rels.size(); ++i) CHECK_NOTHROW(compose(rels[i], rels[i + 1]));
}

TEST_CASE("good poset covers") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = gen::generate_good_poset_cover(seed);
    CHECK_FALSE(g.cover.is_complex());
    const auto cls = classify_cover(g.cover);
    CHECK(cls.good == Verdict::Yes);
  }
}
