#include <doctest.h>

#include "oracles.hpp"

#include "ftop/catalog.hpp"
#include "ftop/complex.hpp"
#include "ftop/error.hpp"

using namespace ftop;

TEST_CASE("contains and simplices") {
  const auto t = catalog::solid_triangle();
  CHECK(t.contains({"v0", "v2"}));
  CHECK_FALSE(t.contains({"v0", "v3"}));
  CHECK(catalog::triangle_boundary().simplices().size() == 6);
  CHECK(t.simplices(1).size() == 6);
}

TEST_CASE("facets are maximal and isolated vertices stay") {
  const auto k = SimplicialComplex::from_simplices({{"a", "b"}, {"a"}, {"c"}, {"a", "b"}});
  CHECK(k.facets() == std::vector<Simplex>{{"a", "b"}, {"c"}});
  CHECK(k.vertices() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(make_simplex({}), Error);
}

TEST_CASE("order complex") {
  const auto anti = order_complex(catalog::antichain("p", 2));
  CHECK(anti.facets() == std::vector<Simplex>{{"p1"}, {"p2"}});
  CHECK(order_complex(catalog::chain("b", 3)) == SimplicialComplex::simplex({"b1", "b2", "b3"}));

  // Facets agree with brute-force maximal-chain enumeration on the cylinder.
  const Poset b = multiple_cylinder(catalog::worked_example()).poset;
  const auto chains = oracle::maximal_chains(b);
  const auto k = order_complex(b);
  CHECK(std::set<std::vector<std::string>>(k.facets().begin(), k.facets().end()) == chains);
}

TEST_CASE("face poset") {
  const auto edge = face_poset(SimplicialComplex::simplex({"u", "v"}));
  CHECK(edge.size() == 3);
  CHECK(edge.hasse().size() == 2);
  const auto circle = face_poset(catalog::triangle_boundary());
  CHECK(circle.size() == 6);
  CHECK(circle.height() == 1);
  // 3 vertices + 3 edges + 1 triangle of the order complex of a 3-chain.
  CHECK(face_poset(order_complex(catalog::chain("a", 3))).size() == 7);
}

TEST_CASE("euler characteristic") {
  CHECK(SimplicialComplex::simplex({"p"}).euler_characteristic() == 1);
  CHECK(catalog::triangle_boundary().euler_characteristic() == 0);
  CHECK(catalog::solid_triangle().euler_characteristic() == 1);
  CHECK(catalog::projective_plane().euler_characteristic() == 1);
}

TEST_CASE("set operations") {
  const auto a = catalog::triangle_a(), b = catalog::triangle_b();
  CHECK(a.intersect(b) == SimplicialComplex::simplex({"v0", "v2"}));
  CHECK(a.unite(b).facets().size() == 2);
  CHECK(a.is_subcomplex_of(a.unite(b)));
  CHECK_FALSE(a.unite(b).is_subcomplex_of(a));
  CHECK(a.unite(b).full_subcomplex({"v0", "v1", "v3"}).facets() == std::vector<Simplex>{{"v0", "v1"}, {"v0", "v3"}});
}

TEST_CASE("dunce hat triangulation checks by enumeration") {
  const auto k = catalog::dunce_hat();
  const auto faces = oracle::all_faces(k);
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].size() == 8);
  CHECK(faces[1].size() == 24);
  CHECK(faces[2].size() == 17);
  // Every edge lies in two or three triangles: no free edge, and the three
  // edges along the identified boundary lie in three.
  std::map<std::vector<std::string>, int> uses;
  for (const auto& t : faces[2])
    for (std::size_t drop = 0; drop < 3; ++drop) {
      auto e = t;
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
      ++uses[e];
    }
  int triple = 0;
  for (const auto& e : faces[1]) {
    CHECK(uses[e] >= 2);
    CHECK(uses[e] <= 3);
    triple += uses[e] == 3;
  }
  CHECK(triple == 3);
}
