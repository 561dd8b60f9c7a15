#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace pforge {

/// Seedable random stream with platform-independent draw sequences.
///
/// The engine is xoshiro256** seeded through splitmix64 from the pair
/// (seed, stream_id). All derived distributions are implemented here from
/// integer draws and IEEE-exact arithmetic, so the same (seed, stream_id)
/// yields the same values on every conforming platform. Standard library
/// distributions are deliberately not used: their algorithms are
/// implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform index in [0, n). Requires n > 0.
  std::size_t index(std::size_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real();

  /// Uniform on {-1, +1}.
  int rademacher();

  /// Standard normal variate (Marsaglia polar method).
  double standard_normal();

  /// Category drawn from `weights`; index weights.size() is the remainder
  /// category with probability 1 - sum(weights). Weights must be
  /// non-negative and sum to at most one.
  std::size_t categorical(std::span<const double> weights);

  /// Fisher-Yates shuffle driven by index().
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = index(i);
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_[4];
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

namespace detail {
// Natural logarithm using only +, -, *, / and frexp/ldexp, so results do not
// depend on the platform's libm.
double portable_log(double x);
}  // namespace detail

}  // namespace pforge
