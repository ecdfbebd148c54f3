#include "ftop/persistence.hpp"

#include "ftop/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ftop {

std::vector<Bar> PersistenceDiagram::bars_in_degree(int degree) const {
  std::vector<Bar> out;
  for (const auto& b : bars)
    if (b.degree == degree) out.push_back(b);
  return out;
}

std::size_t PersistenceDiagram::alive(int degree, std::size_t step) const {
  return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& b) {
    return b.degree == degree && b.birth <= step && (!b.death || step < *b.death);
  }));
}

PersistenceDiagram persistence_of_filtration(const std::vector<SimplicialComplex>& filtration) {
  for (std::size_t t = 0; t + 1 < filtration.size(); ++t)
    if (!filtration[t].is_subcomplex_of(filtration[t + 1]))
      throw Error(ErrorKind::NotAChain, "filtration step " + std::to_string(t + 1) +
                                            " is not contained in step " + std::to_string(t + 2));

  // Entry step of every simplex.
  std::map<Simplex, std::size_t> entry;
  for (std::size_t t = 0; t < filtration.size(); ++t)
    for (auto& s : filtration[t].simplices()) entry.try_emplace(std::move(s), t + 1);

  struct Cell {
    std::size_t step;
    Simplex simplex;
  };
  std::vector<Cell> cells;
  cells.reserve(entry.size());
  for (auto& [s, t] : entry) cells.push_back({t, s});
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.step != b.step) return a.step < b.step;
    return simplex_order(a.simplex, b.simplex);
  });
  std::map<Simplex, std::size_t> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position.emplace(cells[i].simplex, i);

  // Columns as sorted index lists; addition over the two-element field is
  // symmetric difference.
  std::vector<std::vector<std::size_t>> columns(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (const auto& f : boundary_faces(cells[j].simplex)) columns[j].push_back(position.at(f));
    std::sort(columns[j].begin(), columns[j].end());
  }

  std::vector<long> owner_of_low(cells.size(), -1);
  std::vector<bool> paired(cells.size(), false);
  PersistenceDiagram out;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty() && owner_of_low[col.back()] >= 0) {
      const auto& other = columns[static_cast<std::size_t>(owner_of_low[col.back()])];
      std::vector<std::size_t> sum;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(sum));
      col = std::move(sum);
    }
    if (col.empty()) continue;
    const std::size_t low = col.back();
    owner_of_low[low] = static_cast<long>(j);
    paired[low] = true;
    paired[j] = true;
    if (cells[low].step < cells[j].step)
      out.bars.push_back({simplex_dimension(cells[low].simplex), cells[low].step, cells[j].step});
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!paired[i] && columns[i].empty())
      out.bars.push_back({simplex_dimension(cells[i].simplex), cells[i].step, std::nullopt});

  std::sort(out.bars.begin(), out.bars.end(), [](const Bar& a, const Bar& b) {
    auto key = [](const Bar& x) {
      return std::make_tuple(x.degree, x.birth, x.death.value_or(static_cast<std::size_t>(-1)));
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace ftop
