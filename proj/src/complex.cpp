#include "ftop/complex.hpp"

#include "ftop/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ftop {

Simplex make_simplex(std::vector<std::string> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "simplices must be non-empty");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::string simplex_id(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i];
  }
  return out + "}";
}

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_face_of(const Simplex& face, const Simplex& simplex) {
  return std::includes(simplex.begin(), simplex.end(), face.begin(), face.end());
}

std::vector<Simplex> boundary_faces(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) f.push_back(s[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  for (auto& s : simplices) s = make_simplex(std::move(s));
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) { return simplex_order(b, a); });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  SimplicialComplex k;
  for (auto& s : simplices) {
    bool dominated = std::any_of(k.facets_.begin(), k.facets_.end(),
                                 [&](const Simplex& f) { return is_face_of(s, f); });
    if (!dominated) k.facets_.push_back(std::move(s));
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  std::set<std::string> verts;
  for (const auto& f : k.facets_) verts.insert(f.begin(), f.end());
  k.vertices_.assign(verts.begin(), verts.end());
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, simplex_dimension(f));
  return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return is_face_of(s, f); });
}

std::vector<std::vector<Simplex>> SimplicialComplex::simplices_by_dimension() const {
  std::vector<std::set<Simplex>> levels(static_cast<std::size_t>(dimension() + 1));
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1UL << i)) s.push_back(f[i]);
      levels[s.size() - 1].insert(std::move(s));
    }
  }
  std::vector<std::vector<Simplex>> out;
  out.reserve(levels.size());
  for (auto& level : levels) out.emplace_back(level.begin(), level.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices(std::optional<int> max_dim) const {
  std::vector<Simplex> out;
  auto levels = simplices_by_dimension();
  for (std::size_t d = 0; d < levels.size(); ++d) {
    if (max_dim && static_cast<int>(d) > *max_dim) break;
    for (auto& s : levels[d]) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : simplices_by_dimension()) out.push_back(level.size());
  return out;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  auto f = f_vector();
  for (std::size_t d = 0; d < f.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
  return chi;
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& other) const {
  std::vector<Simplex> pieces;
  for (const auto& a : facets_) {
    for (const auto& b : other.facets_) {
      Simplex common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) pieces.push_back(std::move(common));
    }
  }
  return from_simplices(std::move(pieces));
}

SimplicialComplex SimplicialComplex::unite(const SimplicialComplex& other) const {
  std::vector<Simplex> all = facets_;
  all.insert(all.end(), other.facets_.begin(), other.facets_.end());
  return from_simplices(std::move(all));
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<std::string>& vertex_set) const {
  std::vector<std::string> keep = vertex_set;
  std::sort(keep.begin(), keep.end());
  std::vector<Simplex> pieces;
  for (const auto& f : facets_) {
    Simplex common;
    std::set_intersection(f.begin(), f.end(), keep.begin(), keep.end(), std::back_inserter(common));
    if (!common.empty()) pieces.push_back(std::move(common));
  }
  return from_simplices(std::move(pieces));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return other.contains(f); });
}

SimplicialComplex order_complex(const Poset& poset) {
  // Maximal chains are exactly the Hasse-diagram paths from a minimal to a
  // maximal element.
  std::vector<std::vector<std::size_t>> covers(poset.size());
  for (auto [a, b] : poset.hasse()) covers[a].push_back(b);

  std::vector<Simplex> chains;
  std::vector<std::size_t> path;
  auto extend = [&](auto&& self, std::size_t v) -> void {
    path.push_back(v);
    if (covers[v].empty()) {
      Simplex s;
      for (std::size_t p : path) s.push_back(poset.id(p));
      chains.push_back(std::move(s));
    } else {
      for (std::size_t w : covers[v]) self(self, w);
    }
    path.pop_back();
  };
  for (std::size_t m : poset.minimal_elements()) extend(extend, m);
  return SimplicialComplex::from_simplices(std::move(chains));
}

Poset face_poset(const SimplicialComplex& complex) {
  auto simplices = complex.simplices();
  std::vector<std::string> ids;
  ids.reserve(simplices.size());
  for (const auto& s : simplices) ids.push_back(simplex_id(s));

  std::map<Simplex, std::string> id_of;
  for (std::size_t i = 0; i < simplices.size(); ++i) id_of.emplace(simplices[i], ids[i]);
  std::vector<ElementPair> relations;
  for (const auto& s : simplices)
    for (const auto& f : boundary_faces(s)) relations.emplace_back(id_of.at(f), id_of.at(s));
  return Poset::build(std::move(ids), relations);
}

}  // namespace ftop
