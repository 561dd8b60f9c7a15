#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pforge/polynomial.hpp"

namespace pforge {

inline constexpr std::size_t kMaxOracleVariables = 24;
inline constexpr std::size_t kMaxSpectrumVariables = 20;

/// Ties are counted within this absolute tolerance for real coefficients
/// and exactly for integer coefficients.
inline constexpr double kOracleTieTolerance = 1e-9;

struct OracleReport {
  double min_energy = 0.0;
  std::uint64_t degeneracy = 0;
  std::size_t num_variables = 0;
};

/// Exhaustive ground-state search over all 2^N assignments in the
/// polynomial's domain. `workers` = 0 picks the hardware concurrency; the
/// report does not depend on the worker count.
OracleReport brute_force_ground(const MultilinearPolynomial& p, unsigned workers = 0);

/// All 2^N energies. Entry m belongs to the assignment whose variable i is
/// "flipped" when bit i of m is set: s_i = -1 in the spin domain, x_i = 1 in
/// the Boolean domain.
std::vector<double> spectrum(const MultilinearPolynomial& p, unsigned workers = 0);

/// Decodes an enumeration index into an assignment (see spectrum()).
Assignment assignment_from_index(std::uint64_t index, std::size_t num_variables,
                                 Domain domain);

}  // namespace pforge
