#include <doctest.h>

#include "oracles.hpp"

#include "ftop/catalog.hpp"
#include "ftop/cover.hpp"
#include "ftop/error.hpp"
#include "ftop/homology.hpp"
#include "ftop/persistence.hpp"
#include "ftop/smith.hpp"

using namespace ftop;

namespace {

IntegerMatrix matrix(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
  IntegerMatrix m(r, c);
  m.data = std::move(v);
  return m;
}

std::vector<BigInt> factors(std::initializer_list<int> v) {
  std::vector<BigInt> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("boundary matrices") {
  const auto edge = boundary_matrices(SimplicialComplex::simplex({"u", "v"}));
  REQUIRE(edge.boundaries.size() == 2);
  CHECK(edge.boundaries[1].rows == 2);
  CHECK(edge.boundaries[1].cols == 1);
  CHECK(edge.boundaries[1].at(0, 0) == -1);
  CHECK(edge.boundaries[1].at(1, 0) == 1);

  const auto circle = boundary_matrices(catalog::triangle_boundary());
  REQUIRE(circle.boundaries.size() == 2);
  const auto solid = boundary_matrices(catalog::solid_triangle());
  CHECK(multiply(solid.boundaries[1], solid.boundaries[2]).is_zero());
  CHECK(smith_normal_form(solid.boundaries[2]).rank == 1);
  CHECK(smith_normal_form(solid.boundaries[1]).rank == 2);
  CHECK_THROWS_AS(boundary_matrices(SimplicialComplex()), Error);
}

TEST_CASE("smith normal form") {
  CHECK(smith_normal_form(matrix(2, 2, {1, 0, 0, 1})).invariant_factors == factors({1, 1}));
  CHECK(smith_normal_form(matrix(2, 2, {2, 0, 0, 3})).invariant_factors == factors({1, 6}));
  const auto zero = smith_normal_form(matrix(2, 3, {0, 0, 0, 0, 0, 0}));
  CHECK(zero.invariant_factors.empty());
  CHECK(zero.rank == 0);
  CHECK(smith_normal_form(matrix(2, 2, {2, 4, 6, 8})).invariant_factors == factors({2, 4}));
  CHECK(smith_normal_form(IntegerMatrix(0, 4)).rank == 0);
}

TEST_CASE("smith normal form survives 64-bit overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto r = smith_normal_form(matrix(2, 2, {big, big + 1, big - 1, big}));
  // det = big^2 - (big^2 - 1) = 1.
  CHECK(r.invariant_factors == factors({1, 1}));
  const auto s = smith_normal_form(matrix(2, 2, {big, 0, 0, big}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[1] == BigInt(big));
}

TEST_CASE("rank over the two-element field") {
  CHECK(rank_mod2(matrix(2, 2, {2, 0, 0, 3})) == 1);
  CHECK(rank_mod2(matrix(2, 2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("homology of standard complexes") {
  const auto circle = reduced_homology(catalog::triangle_boundary());
  CHECK(circle.betti(0) == 0);
  CHECK(circle.betti(1) == 1);
  CHECK(circle.degree(1).torsion.empty());

  CHECK(reduced_homology(catalog::solid_triangle()).is_trivial());
  CHECK(homology(catalog::solid_triangle()).betti(0) == 1);

  const auto rp2 = reduced_homology(catalog::projective_plane());
  CHECK(rp2.betti(1) == 0);
  CHECK(rp2.degree(1).torsion == factors({2}));
  CHECK(rp2.degree(2).trivial());
  // Over the two-element field the torsion shows up as betti 1 in degrees 1 and 2.
  CHECK(oracle::betti(catalog::projective_plane(), true) == std::vector<std::size_t>{1, 1, 1});
  CHECK(oracle::betti(catalog::projective_plane(), false) == std::vector<std::size_t>{1, 0, 0});
  CHECK(betti_numbers_mod2(catalog::projective_plane(), false) == std::vector<std::size_t>{1, 1, 1});

  CHECK(reduced_homology(catalog::dunce_hat()).is_trivial());
  CHECK_THROWS_AS(reduced_homology(SimplicialComplex()), Error);
}

TEST_CASE("homology of finite spaces") {
  CHECK(homology_of_poset(catalog::chain("a", 4)).is_trivial());
  CHECK(homology_of_poset(catalog::antichain("p", 3)).betti(0) == 2);
  // χ of the triangle boundary is a model of the circle.
  CHECK(homology_of_poset(face_poset(catalog::triangle_boundary())).betti(1) == 1);
  CHECK_THROWS_AS(homology_of_poset(Poset()), Error);
}

TEST_CASE("persistence") {
  const Cover arcs = catalog::circle_cover();
  const auto d = persistence_over_chain(arcs, {{"1"}, {"1", "2"}, {"1", "2", "3"}});
  const auto one = d.bars_in_degree(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].birth == 3);
  CHECK_FALSE(one[0].death.has_value());
  CHECK(d.bars_in_degree(0).size() == 1);
  CHECK(d.alive(1, 2) == 0);
  CHECK(d.alive(1, 3) == 1);

  // Single step: bars reproduce the betti numbers of the member.
  const auto single = persistence_of_filtration({catalog::triangle_boundary()});
  CHECK(single.bars_in_degree(0).size() == 1);
  CHECK(single.bars_in_degree(1).size() == 1);

  CHECK_THROWS_AS(persistence_of_filtration({catalog::solid_triangle(), catalog::triangle_boundary()}), Error);
  CHECK_THROWS_AS(persistence_over_chain(arcs, {{"1", "2"}, {"1"}}), Error);
}

TEST_CASE("persistence: components merge") {
  const auto a = SimplicialComplex::from_simplices({{"a"}, {"b"}});
  const auto b = SimplicialComplex::from_simplices({{"a", "b"}});
  const auto d = persistence_of_filtration({a, b});
  const auto zero = d.bars_in_degree(0);
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].birth == 1);
  CHECK(zero[0].death == std::optional<std::size_t>(2));
  CHECK_FALSE(zero[1].death.has_value());
}
