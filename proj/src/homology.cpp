#include "ftop/homology.hpp"

#include "ftop/error.hpp"

#include <map>

namespace ftop {

ChainComplexData boundary_matrices(const SimplicialComplex& complex, Ring ring) {
  if (complex.empty()) throw Error(ErrorKind::EmptyComplex, "boundary matrices of the empty complex");
  ChainComplexData data;
  data.ring = ring;
  data.bases = complex.simplices_by_dimension();
  const std::size_t top = data.bases.size();

  data.boundaries.reserve(top);
  data.boundaries.emplace_back(0, data.bases[0].size());
  for (std::size_t d = 1; d < top; ++d) {
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < data.bases[d - 1].size(); ++i) row_of.emplace(data.bases[d - 1][i], i);
    IntegerMatrix m(data.bases[d - 1].size(), data.bases[d].size());
    for (std::size_t j = 0; j < data.bases[d].size(); ++j) {
      const auto faces = boundary_faces(data.bases[d][j]);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        std::int64_t sign = (i % 2 == 0) ? 1 : -1;
        m.at(row_of.at(faces[i]), j) = ring == Ring::Binary ? 1 : sign;
      }
    }
    data.boundaries.push_back(std::move(m));
  }
  return data;
}

bool HomologyResult::is_trivial() const {
  if (empty) return false;
  for (const auto& g : degrees)
    if (!g.trivial()) return false;
  return true;
}

bool HomologyResult::vanishes_above_zero() const {
  for (std::size_t k = 1; k < degrees.size(); ++k)
    if (!degrees[k].trivial()) return false;
  return true;
}

const HomologyGroup& HomologyResult::degree(std::size_t k) const {
  static const HomologyGroup zero{};
  return k < degrees.size() ? degrees[k] : zero;
}

HomologyResult empty_homology(bool reduced) {
  HomologyResult r;
  r.reduced = reduced;
  r.empty = true;
  return r;
}

namespace {

HomologyResult integral_homology(const SimplicialComplex& complex, bool reduced) {
  const auto data = boundary_matrices(complex, Ring::Integer);
  const std::size_t top = data.bases.size();
  std::vector<SmithResult> snf(top + 1);
  for (std::size_t d = 1; d < top; ++d) snf[d] = smith_normal_form(data.boundaries[d]);

  HomologyResult out;
  out.reduced = reduced;
  out.degrees.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t cycles = data.bases[d].size() - snf[d].rank;
    const std::size_t boundaries = snf[d + 1].rank;
    out.degrees[d].betti = cycles - boundaries;
    for (const auto& f : snf[d + 1].invariant_factors)
      if (f > 1) out.degrees[d].torsion.push_back(f);
  }
  if (reduced) out.degrees[0].betti -= 1;
  while (!out.degrees.empty() && out.degrees.back().trivial()) out.degrees.pop_back();
  return out;
}

}  // namespace

HomologyResult reduced_homology(const SimplicialComplex& complex) { return integral_homology(complex, true); }

HomologyResult homology(const SimplicialComplex& complex) { return integral_homology(complex, false); }

HomologyResult homology_of_poset(const Poset& poset) {
  if (poset.empty()) throw Error(ErrorKind::EmptySpace, "homology of the empty space");
  return reduced_homology(order_complex(poset));
}

std::vector<std::size_t> betti_numbers_mod2(const SimplicialComplex& complex, bool reduced) {
  const auto data = boundary_matrices(complex, Ring::Binary);
  const std::size_t top = data.bases.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t d = 1; d < top; ++d) ranks[d] = rank_mod2(data.boundaries[d]);
  std::vector<std::size_t> betti(top);
  for (std::size_t d = 0; d < top; ++d) betti[d] = data.bases[d].size() - ranks[d] - ranks[d + 1];
  if (reduced) betti[0] -= 1;
  return betti;
}

}  // namespace ftop
