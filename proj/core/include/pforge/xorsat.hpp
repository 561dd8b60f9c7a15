#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pforge/instance.hpp"
#include "pforge/rng.hpp"

namespace pforge {

using BitVector = std::vector<std::uint8_t>;

/// Dense M x N matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool value);

  std::size_t row_weight(std::size_t r) const;
  std::size_t column_weight(std::size_t c) const;
  /// Column indices of the ones in row r, ascending.
  std::vector<std::size_t> row_support(std::size_t r) const;

  /// A x over GF(2).
  BitVector multiply(const BitVector& x) const;
  Gf2Matrix transposed() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  friend std::size_t gf2_rank(const Gf2Matrix& a);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by row reduction.
std::size_t gf2_rank(const Gf2Matrix& a);

inline constexpr std::size_t kXorsatMaxAttempts = 100000;

/// k-regular k-XORSAT system with M = N equations: every row and every
/// column has exactly k ones. Uses the configuration model (k tokens per
/// variable, shuffled and dealt k per equation), resampling the whole
/// pairing while an equation repeats a variable or two equations coincide.
Gf2Matrix sample_regular_system(std::size_t N, std::size_t k, RngStream& rng);

struct PlantedSystem {
  BitVector b;
  BitVector solution;
};

/// Uniform x* and b = A x*.
PlantedSystem plant_rhs(const Gf2Matrix& a, RngStream& rng);

struct XorsatParams {
  std::size_t k = 3;
  std::size_t N = 3;

  void validate() const;
};

/// Equation i becomes the term -(-1)^{b_i} prod_{j in row i} s_j. The
/// certificate is -N with 2^(N - rank A) ground states.
ProblemInstance generate_xorsat_instance(const XorsatParams& params, RngStream& rng);

}  // namespace pforge
