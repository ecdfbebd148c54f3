#include "ftop/catalog.hpp"

namespace ftop::catalog {

namespace {

SimplicialComplex numbered(const std::vector<std::vector<int>>& facets, const std::string& prefix) {
  std::vector<Simplex> out;
  for (const auto& f : facets) {
    std::vector<std::string> s;
    for (int v : f) s.push_back(prefix + std::to_string(v));
    out.push_back(make_simplex(std::move(s)));
  }
  return SimplicialComplex::from_simplices(std::move(out));
}

}  // namespace

Poset chain(const std::string& prefix, std::size_t n) {
  std::vector<std::string> elements;
  std::vector<ElementPair> relations;
  for (std::size_t i = 1; i <= n; ++i) {
    elements.push_back(prefix + std::to_string(i));
    if (i > 1) relations.emplace_back(elements[i - 2], elements[i - 1]);
  }
  return Poset::build(elements, relations);
}

Poset antichain(const std::string& prefix, std::size_t n) {
  std::vector<std::string> elements;
  for (std::size_t i = 1; i <= n; ++i) elements.push_back(prefix + std::to_string(i));
  return Poset::build(elements, {});
}

CylinderSpec worked_example() {
  CylinderSpec spec;
  spec.spaces = {chain("a", 2), chain("b", 3), chain("c", 2)};
  spec.relations.emplace_back(spec.spaces[0], spec.spaces[1],
                              std::vector<ElementPair>{{"a1", "b1"}, {"a2", "b2"}}, Direction::Right);
  spec.relations.emplace_back(spec.spaces[2], spec.spaces[1],
                              std::vector<ElementPair>{{"c1", "b2"}, {"c2", "b3"}}, Direction::Left);
  return spec;
}

SimplicialComplex triangle_a() { return SimplicialComplex::simplex({"v0", "v1", "v2"}); }
SimplicialComplex triangle_b() { return SimplicialComplex::simplex({"v0", "v2", "v3"}); }

Cover triangles_cover() {
  return Cover::of_complex(triangle_a().unite(triangle_b()), {{"A", triangle_a()}, {"B", triangle_b()}});
}

SimplicialComplex dunce_hat() {
  return numbered({{1, 2, 4}, {1, 2, 5}, {1, 2, 7}, {1, 3, 6}, {1, 3, 7}, {1, 3, 8}, {1, 4, 5}, {1, 6, 8}, {2, 3, 4},
                   {2, 3, 6}, {2, 3, 8}, {2, 5, 6}, {2, 7, 8}, {3, 4, 7}, {4, 5, 7}, {5, 6, 8}, {5, 7, 8}},
                  "d");
}

SimplicialComplex projective_plane() {
  return numbered({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6},
                   {3, 5, 6}},
                  "p");
}

namespace {

SimplicialComplex path(std::initializer_list<int> vertices) {
  std::vector<Simplex> edges;
  const std::vector<int> v(vertices);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    edges.push_back(make_simplex({"v" + std::to_string(v[i]), "v" + std::to_string(v[i + 1])}));
  return SimplicialComplex::from_simplices(std::move(edges));
}

}  // namespace

SimplicialComplex hexagon() { return path({0, 1, 2, 3, 4, 5, 0}); }

Cover circle_cover() {
  return Cover::of_complex(hexagon(), {{"1", path({0, 1, 2})}, {"2", path({2, 3, 4})}, {"3", path({4, 5, 0})}});
}

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_simplices({{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
}

SimplicialComplex solid_triangle() { return SimplicialComplex::simplex({"v0", "v1", "v2"}); }

}  // namespace ftop::catalog
