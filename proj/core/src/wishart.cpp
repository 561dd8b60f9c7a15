#include "pforge/wishart.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pforge {

std::size_t WishartParams::num_columns() const {
  const auto m = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(N)));
  return m == 0 ? 1 : m;
}

double WishartParams::effective_alpha() const {
  return static_cast<double>(num_columns()) / static_cast<double>(N);
}

void WishartParams::validate() const {
  if (N < 3) throw std::invalid_argument("Wishart planting needs N >= 3");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be a positive number");
  if (discretize_couplers) {
    // |J'| <= 4 M (N - 1)^2 must fit comfortably in 64 bits.
    const double bound = 4.0 * static_cast<double>(num_columns()) *
                         static_cast<double>(N - 1) * static_cast<double>(N - 1);
    if (bound > 0x1.0p62)
      throw std::invalid_argument("discrete Wishart couplers would overflow 64-bit integers");
  }
}

std::vector<double> project_column(std::span<const std::int8_t> t, std::span<const double> z) {
  const std::size_t n = t.size();
  if (n < 2) throw std::invalid_argument("Wishart columns need N >= 2");
  if (z.size() != n) throw std::invalid_argument("z and t lengths differ");
  double overlap = 0.0;
  for (std::size_t i = 0; i < n; ++i) overlap += t[i] * z[i];
  const double nd = static_cast<double>(n);
  const double scale = std::sqrt(nd / (nd - 1.0));
  std::vector<double> omega(n);
  for (std::size_t i = 0; i < n; ++i) omega[i] = scale * (z[i] - t[i] * overlap / nd);
  return omega;
}

std::vector<double> sample_w_column(std::span<const std::int8_t> t, RngStream& rng,
                                    bool discrete) {
  if (t.size() < 2) throw std::invalid_argument("Wishart columns need N >= 2");
  std::vector<double> z(t.size());
  for (auto& v : z) v = discrete ? rng.rademacher() : rng.standard_normal();
  return project_column(t, z);
}

std::vector<std::int64_t> scaled_rademacher_column(std::span<const std::int8_t> t,
                                                   std::span<const int> z) {
  const std::size_t n = t.size();
  if (z.size() != n) throw std::invalid_argument("z and t lengths differ");
  std::int64_t overlap = 0;
  for (std::size_t i = 0; i < n; ++i) overlap += t[i] * z[i];
  std::vector<std::int64_t> u(n);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = nn * z[i] - t[i] * overlap;
  return u;
}

WishartCouplings build_couplings(const std::vector<std::vector<double>>& columns,
                                 std::span<const std::int8_t> t) {
  const std::size_t n = t.size();
  const double nd = static_cast<double>(n);
  for (const auto& omega : columns) {
    if (omega.size() != n) throw std::invalid_argument("column length differs from N");
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += omega[i] * t[i];
    if (std::abs(dot) > 1e-9 * nd)
      throw std::invalid_argument("column is not orthogonal to the planted state");
  }
  WishartCouplings out;
  out.N = n;
  out.J.assign(n * n, 0.0);
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (const auto& omega : columns) sum += omega[i] * omega[j];
      const double value = sum / nd;
      if (i == j) {
        trace += value;
      } else {
        out.J[i * n + j] = value;
        out.J[j * n + i] = value;
      }
    }
  }
  out.e0 = -0.5 * trace;
  return out;
}

DiscreteCouplings build_discrete_couplings(const std::vector<std::vector<std::int64_t>>& columns) {
  DiscreteCouplings out;
  if (columns.empty()) return out;
  const std::size_t n = columns.front().size();
  out.N = n;
  const auto nn = static_cast<std::int64_t>(n);
  out.scale = nn * nn * (nn - 1);
  out.scaled.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t sum = 0;
      for (const auto& u : columns) sum += u[i] * u[j];
      if (i == j) {
        out.scaled_trace += sum;
      } else {
        out.scaled[i * n + j] = sum;
        out.scaled[j * n + i] = sum;
      }
    }
  }
  return out;
}

ProblemInstance generate_wishart_instance(const WishartParams& params, RngStream& rng) {
  params.validate();
  const std::size_t n = params.N;
  const std::size_t m = params.num_columns();
  const Assignment t(n, 1);

  ProblemInstance out;
  out.problem_type = "WP";
  out.polynomial = MultilinearPolynomial(n, Domain::spin);

  if (params.discretize_couplers) {
    std::vector<std::vector<std::int64_t>> columns;
    columns.reserve(m);
    std::vector<int> z(n);
    for (std::size_t mu = 0; mu < m; ++mu) {
      for (auto& v : z) v = rng.rademacher();
      columns.push_back(scaled_rademacher_column(t, z));
    }
    const DiscreteCouplings scaled = build_discrete_couplings(columns);
    const double scale = static_cast<double>(scaled.scale);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out.polynomial.add_term({static_cast<Index>(i), static_cast<Index>(j)},
                                static_cast<double>(scaled(i, j)) / scale);
      }
    }
    out.ground_energy = -static_cast<double>(scaled.scaled_trace) / (2.0 * scale);
    out.metadata["coupler_scale"] = scaled.scale;
  } else {
    std::vector<std::vector<double>> columns;
    columns.reserve(m);
    for (std::size_t mu = 0; mu < m; ++mu) columns.push_back(sample_w_column(t, rng, false));
    const WishartCouplings couplings = build_couplings(columns, t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out.polynomial.add_term({static_cast<Index>(i), static_cast<Index>(j)}, couplings(i, j));
      }
    }
    out.ground_energy = couplings.e0;
  }

  if (params.gauge_transform) {
    Assignment q(n);
    for (auto& v : q) v = static_cast<std::int8_t>(rng.rademacher());
    out.polynomial = gauge_transform(out.polynomial, q);
  }

  out.metadata["N"] = n;
  out.metadata["M"] = m;
  out.metadata["alpha"] = params.alpha;
  out.metadata["effective_alpha"] = params.effective_alpha();
  out.metadata["discretize_couplers"] = params.discretize_couplers;
  out.metadata["gauge_transform"] = params.gauge_transform;
  return out;
}

}  // namespace pforge
