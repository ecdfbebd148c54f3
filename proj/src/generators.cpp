#include "ftop/generators.hpp"

#include "ftop/catalog.hpp"
#include "ftop/collapse.hpp"
#include "ftop/error.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace ftop::gen {

namespace {

std::string padded(const std::string& prefix, std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return prefix + buf;
}

}  // namespace

Poset generate_poset(Rng& rng, std::size_t size, int height_cap, const std::string& prefix) {
  std::vector<std::string> elements;
  std::vector<int> level;
  for (std::size_t i = 0; i < size; ++i) {
    elements.push_back(padded(prefix, i));
    level.push_back(rng.between(0, std::max(0, height_cap)));
  }
  std::vector<ElementPair> relations;
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (level[a] < level[b] && rng.chance(0.45)) relations.emplace_back(elements[a], elements[b]);
  return Poset::build(elements, relations);
}

Poset generate_poset(std::uint64_t seed, std::size_t size, int height_cap, const std::string& prefix) {
  Rng rng(seed);
  return generate_poset(rng, size, height_cap, prefix);
}

Relation generate_relation(Rng& rng, const Poset& x, const Poset& y, double density) {
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b)
      if (rng.chance(density)) pairs.emplace_back(a, b);
  return Relation(x, y, std::move(pairs));
}

Relation generate_relation(std::uint64_t seed, const Poset& x, const Poset& y, double density) {
  Rng rng(seed);
  return generate_relation(rng, x, y, density);
}

MonotoneMap generate_map(Rng& rng, const Poset& source, const Poset& target) {
  if (target.empty()) throw Error(ErrorKind::EmptySpace, "map target is empty");
  const auto order = source.linear_extension();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::size_t> image(source.size());
    bool ok = true;
    for (std::size_t x : order) {
      ElementSet allowed = target.all();
      const auto& below = source.strictly_below(x);
      for (auto p = below.find_first(); p != ElementSet::npos; p = below.find_next(p))
        allowed &= target.up_set(image[p]);
      if (allowed.none()) {
        ok = false;
        break;
      }
      std::vector<std::size_t> options;
      for (auto y = allowed.find_first(); y != ElementSet::npos; y = allowed.find_next(y)) options.push_back(y);
      image[x] = options[rng.below(options.size())];
    }
    if (ok) return MonotoneMap{source, target, image};
  }
  return MonotoneMap{source, target, std::vector<std::size_t>(source.size(), rng.below(target.size()))};
}

SimplicialComplex generate_complex(Rng& rng, std::size_t max_vertices, int max_dim) {
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(1, max_vertices));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Simplex> facets;
  const std::size_t count = 1 + rng.below(2 * n);
  for (std::size_t f = 0; f < count; ++f) {
    const int dim = rng.between(0, std::min<int>(max_dim, static_cast<int>(n) - 1));
    auto pool = vertices;
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(dim) + 1);
    facets.push_back(make_simplex(pool));
  }
  return SimplicialComplex::from_simplices(std::move(facets));
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  SimplicialComplex complex;
  std::vector<std::pair<std::string, SimplicialComplex>> members;
};

Candidate cone_cluster_cover(Rng& rng, const StrongGoodParams& params) {
  const std::size_t members = 1 + rng.below(params.max_members);
  const std::size_t clusters = 1 + rng.below(std::min(params.max_clusters, members));

  // Every cluster gets at least one member.
  std::vector<std::size_t> owner(members);
  for (std::size_t i = 0; i < members; ++i) owner[i] = i < clusters ? i : rng.below(clusters);

  std::vector<std::vector<std::string>> pool(clusters);
  for (std::size_t c = 0; c < clusters; ++c)
    for (std::size_t k = 0; k < 4; ++k) pool[c].push_back("c" + std::to_string(c) + "p" + std::to_string(k));

  std::vector<std::vector<Simplex>> links(members);
  for (std::size_t i = 0; i < members; ++i) {
    const auto& p = pool[owner[i]];
    const std::size_t pieces = 1 + rng.below(4);
    for (std::size_t k = 0; k < pieces; ++k) {
      const std::size_t a = rng.below(p.size());
      if (rng.chance(0.5)) {
        std::size_t b = rng.below(p.size() - 1);
        if (b >= a) ++b;
        links[i].push_back(make_simplex({p[a], p[b]}));
      } else {
        links[i].push_back(make_simplex({p[a]}));
      }
    }
  }

  // Tree on clusters; the glue vertex of edge (parent, c) joins one member
  // from each side.
  for (std::size_t c = 1; c < clusters; ++c) {
    const std::size_t parent = rng.below(c);
    const std::string glue = "g" + std::to_string(c);
    auto pick = [&](std::size_t cluster) {
      std::vector<std::size_t> in;
      for (std::size_t i = 0; i < members; ++i)
        if (owner[i] == cluster) in.push_back(i);
      return in[rng.below(in.size())];
    };
    links[pick(parent)].push_back({glue});
    links[pick(c)].push_back({glue});
  }

  Candidate out;
  for (std::size_t i = 0; i < members; ++i) {
    const std::string apex = "a" + std::to_string(owner[i]);
    std::vector<Simplex> cone;
    for (const auto& s : links[i]) {
      auto t = s;
      t.push_back(apex);
      cone.push_back(make_simplex(std::move(t)));
    }
    auto member = SimplicialComplex::from_simplices(std::move(cone));
    out.complex = out.complex.unite(member);
    out.members.emplace_back("M" + std::to_string(i + 1), std::move(member));
  }
  return out;
}

}  // namespace

GeneratedCover generate_strong_good_cover(std::uint64_t seed, const StrongGoodParams& params) {
  Rng rng(seed);
  GeneratedCover out;
  out.seed = seed;
  for (std::size_t attempt = 0; attempt < params.attempts; ++attempt) {
    auto candidate = cone_cluster_cover(rng, params);
    if (candidate.complex.facets().size() > params.max_facets) {
      ++out.rejected;
      continue;
    }
    Cover cover = Cover::of_complex(candidate.complex, std::move(candidate.members));
    ClassifyOptions options;
    options.collapse.seed = seed;
    if (classify_cover(cover, options).strong_good != Verdict::Yes) {
      ++out.rejected;
      continue;
    }
    out.complex = std::move(candidate.complex);
    out.cover = std::move(cover);
    return out;
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no strong-good cover after " + std::to_string(params.attempts) + " attempts (seed " +
                  std::to_string(seed) + ")");
}

CompositeInstance generate_composite(std::uint64_t seed, std::size_t max_size) {
  Rng rng(seed);
  const std::size_t max = std::max<std::size_t>(1, max_size);
  Poset x = generate_poset(rng, 1 + rng.below(max), 2, "x");
  Poset z = generate_poset(rng, 1 + rng.below(max), 2, "z");
  Poset y = generate_poset(rng, z.size() + 2, 2, "y");
  MonotoneMap m = generate_map(rng, z, x);

  std::vector<std::size_t> ys(y.size());
  for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = i;
  rng.shuffle(ys);
  std::vector<std::size_t> g(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(z.size()));
  std::vector<std::size_t> spare(ys.begin() + static_cast<std::ptrdiff_t>(z.size()), ys.end());

  std::vector<IndexPair> p1, p2;
  for (std::size_t k = 0; k < z.size(); ++k) {
    p2.emplace_back(g[k], k);
    for (std::size_t a = 0; a < x.size(); ++a)
      if (x.leq(a, m.image[k])) p1.emplace_back(a, g[k]);
  }
  for (std::size_t s : spare) {
    if (rng.chance(0.5)) {
      for (std::size_t a = 0; a < x.size(); ++a)
        if (rng.chance(0.4)) p1.emplace_back(a, s);
    } else {
      for (std::size_t k = 0; k < z.size(); ++k)
        if (rng.chance(0.4)) p2.emplace_back(s, k);
    }
  }
  return CompositeInstance{Relation(x, y, std::move(p1)), Relation(y, z, std::move(p2)), std::move(m)};
}

std::vector<Relation> generate_chain_relations(std::uint64_t seed, std::size_t length) {
  Rng rng(seed);
  std::vector<std::size_t> sizes{static_cast<std::size_t>(length + 1 + rng.below(3))};
  for (std::size_t i = 0; i < length; ++i) sizes.push_back(std::max<std::size_t>(1, sizes.back() - rng.below(2)));
  std::vector<Poset> spaces;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    spaces.push_back(catalog::chain("s" + std::to_string(i) + "_", sizes[i]));
  std::vector<Relation> out;
  for (std::size_t i = 0; i < length; ++i) {
    // Surjective monotone map between chains: a random non-decreasing onto sequence.
    const std::size_t n = sizes[i], k = sizes[i + 1];
    std::vector<std::size_t> steps(n - 1, 0);
    std::vector<std::size_t> positions(n - 1);
    for (std::size_t j = 0; j < n - 1; ++j) positions[j] = j;
    rng.shuffle(positions);
    for (std::size_t j = 0; j + 1 < k; ++j) steps[positions[j]] = 1;
    std::vector<IndexPair> pairs;
    std::size_t value = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) value += steps[j - 1];
      pairs.emplace_back(j, value);
    }
    out.emplace_back(spaces[i], spaces[i + 1], std::move(pairs));
  }
  return out;
}

GeneratedPosetCover generate_good_poset_cover(std::uint64_t seed, std::size_t max_size, std::size_t attempts) {
  Rng rng(seed);
  GeneratedPosetCover out;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    Poset x = generate_poset(rng, 2 + rng.below(std::max<std::size_t>(1, max_size - 1)), 3, "x");
    std::set<std::size_t> tops;
    for (std::size_t m : x.maximal_elements()) tops.insert(m);
    const std::size_t extra = rng.below(3);
    for (std::size_t e = 0; e < extra; ++e) tops.insert(rng.below(x.size()));
    std::vector<std::pair<std::string, ElementSet>> members;
    for (std::size_t t : tops) members.emplace_back("U" + x.id(t), x.down_set(t));
    Cover cover = Cover::of_poset(x, std::move(members));

    bool good = true;
    for (const auto& [mask, object] : nonempty_intersections(cover)) {
      if (core_of(x, object.elements).count() != 1) {
        good = false;
        break;
      }
    }
    if (good) {
      out.cover = std::move(cover);
      return out;
    }
    ++out.rejected;
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no good poset cover after " + std::to_string(attempts) + " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace ftop::gen
