#include "ftop/smith.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <utility>

namespace ftop {

bool IntegerMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::int64_t v) { return v == 0; });
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::int64_t v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += v * b.at(k, j);
    }
  return out;
}

namespace {

struct Overflow {};

inline std::int64_t abs_value(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
inline BigInt abs_value(const BigInt& v) { return abs(v); }

// a - q * b
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

template <typename T>
class Elimination {
 public:
  explicit Elimination(const IntegerMatrix& m) : rows_(m.rows), cols_(m.cols), a_(m.data.begin(), m.data.end()) {}

  std::vector<T> diagonalize() {
    std::vector<T> diag;
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest_to(t, /*cross_only=*/false)) break;
      while (!clear_cross(t)) {
        // A remainder survived: bring the smallest entry of row/column t to
        // the pivot and try again. |pivot| strictly decreases.
        move_smallest_to(t, /*cross_only=*/true);
      }
      diag.push_back(abs_value(at(t, t)));
    }
    return diag;
  }

 private:
  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
  }

  // Moves the non-zero entry of least absolute value in the trailing
  // submatrix (or only in row t and column t) to position (t, t).
  bool move_smallest_to(std::size_t t, bool cross_only) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    T best = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      const T& v = at(i, j);
      if (v == 0) return;
      T mag = abs_value(v);
      if (!found || mag < best) {
        found = true;
        best = mag;
        bi = i;
        bj = j;
      }
    };
    if (cross_only) {
      for (std::size_t j = t; j < cols_; ++j) consider(t, j);
      for (std::size_t i = t + 1; i < rows_; ++i) consider(i, t);
    } else {
      for (std::size_t i = t; i < rows_; ++i)
        for (std::size_t j = t; j < cols_; ++j) consider(i, j);
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Eliminates column t below and row t right of the pivot; returns true when
  // both are entirely zero afterwards.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const T pivot = at(t, t);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (at(i, t) == 0) continue;
      const T q = at(i, t) / pivot;
      if (q != 0)
        for (std::size_t j = t; j < cols_; ++j)
          if (at(t, j) != 0) at(i, j) = sub_mul(at(i, j), q, at(t, j));
      if (at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (at(t, j) == 0) continue;
      const T q = at(t, j) / pivot;
      if (q != 0)
        for (std::size_t i = t; i < rows_; ++i)
          if (at(i, t) != 0) at(i, j) = sub_mul(at(i, j), q, at(i, t));
      if (at(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
};

// A diagonal form diag(a, b) is equivalent to diag(gcd, lcm); sweeping all
// pairs yields the divisibility chain.
std::vector<BigInt> to_invariant_factors(std::vector<BigInt> diag) {
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  std::vector<BigInt> diag;
  try {
    Elimination<std::int64_t> fast(m);
    for (std::int64_t d : fast.diagonalize()) diag.emplace_back(d);
  } catch (const Overflow&) {
    Elimination<BigInt> exact(m);
    diag = exact.diagonalize();
  }
  SmithResult out;
  out.rank = diag.size();
  out.invariant_factors = to_invariant_factors(std::move(diag));
  return out;
}

std::size_t rank_mod2(const IntegerMatrix& m) {
  std::vector<boost::dynamic_bitset<>> rows(m.rows, boost::dynamic_bitset<>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) % 2 != 0) rows[i].set(j);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols && rank < m.rows; ++j) {
    std::size_t p = rank;
    while (p < m.rows && !rows[p].test(j)) ++p;
    if (p == m.rows) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = 0; i < m.rows; ++i)
      if (i != rank && rows[i].test(j)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace ftop
