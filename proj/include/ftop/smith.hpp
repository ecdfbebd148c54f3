#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ftop {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool is_zero() const;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

struct SmithResult {
  /// Non-zero diagonal entries d1 | d2 | ... of the Smith normal form, positive.
  std::vector<BigInt> invariant_factors;
  std::size_t rank = 0;
};

/// Elimination runs in checked 64-bit arithmetic and restarts in arbitrary
/// precision if any intermediate value would overflow.
SmithResult smith_normal_form(const IntegerMatrix& m);

/// Rank over the two-element field.
std::size_t rank_mod2(const IntegerMatrix& m);

}  // namespace ftop
