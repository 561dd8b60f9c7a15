#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pforge/instance.hpp"
#include "pforge/rng.hpp"

namespace pforge {

struct WishartParams {
  std::size_t N = 3;
  double alpha = 0.5;
  bool discretize_couplers = false;
  bool gauge_transform = false;

  /// M = round(alpha * N), at least one.
  std::size_t num_columns() const;
  double effective_alpha() const;
  void validate() const;
};

/// Applies the closed-form square root of the covariance
/// Sigma = N (I - t t^T / N) / (N - 1) to z:
///   omega = sqrt(N / (N - 1)) * (z - t <t, z> / N).
std::vector<double> project_column(std::span<const std::int8_t> t, std::span<const double> z);

/// Draws z (standard normal, or Rademacher when `discrete`) and returns
/// project_column(t, z).
std::vector<double> sample_w_column(std::span<const std::int8_t> t, RngStream& rng,
                                    bool discrete);

/// Integer image of a Rademacher draw: u = N z - t <t, z>, so that
/// omega = sqrt(N / (N - 1)) * u / N and <u, t> = 0 exactly.
std::vector<std::int64_t> scaled_rademacher_column(std::span<const std::int8_t> t,
                                                   std::span<const int> z);

/// Symmetric coupler matrix (row-major, zero diagonal) and planted energy.
struct WishartCouplings {
  std::size_t N = 0;
  std::vector<double> J;
  double e0 = 0.0;  // -Tr(J~) / 2

  double operator()(std::size_t i, std::size_t j) const { return J[i * N + j]; }
};

/// J~ = W W^T / N from the columns of W, J = J~ - diag(J~). Throws
/// std::invalid_argument when a column is not orthogonal to t within 1e-9 N.
WishartCouplings build_couplings(const std::vector<std::vector<double>>& columns,
                                 std::span<const std::int8_t> t);

/// Scaled couplers J' = N^2 (N - 1) J computed exactly from integer columns.
struct DiscreteCouplings {
  std::size_t N = 0;
  std::vector<std::int64_t> scaled;  // row-major, zero diagonal
  std::int64_t scaled_trace = 0;     // N^2 (N - 1) Tr(J~)
  std::int64_t scale = 0;            // N^2 (N - 1)

  std::int64_t operator()(std::size_t i, std::size_t j) const { return scaled[i * N + j]; }
};

DiscreteCouplings build_discrete_couplings(const std::vector<std::vector<std::int64_t>>& columns);

/// Fully connected 2-local instance planted at t = all-ones (before the
/// optional gauge), with certificate e0.
ProblemInstance generate_wishart_instance(const WishartParams& params, RngStream& rng);

}  // namespace pforge
