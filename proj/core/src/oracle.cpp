#include "pforge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace pforge {

namespace {

// Incremental energy tracker for single-variable flips. Each term keeps its
// current sign (spin domain) or its count of zero-valued variables (Boolean
// domain), so a flip touches only the terms containing the variable.
class FlipEngine {
 public:
  explicit FlipEngine(const MultilinearPolynomial& p)
      : domain_(p.domain()), vars_(p.num_variables()), terms_of_var_(p.num_variables()) {
    for (const auto& [indices, c] : p.terms()) {
      if (indices.empty()) {
        constant_ += c;
        continue;
      }
      const auto t = static_cast<std::uint32_t>(coeff_.size());
      coeff_.push_back(c);
      members_.push_back(indices);
      for (Index i : indices) terms_of_var_[i].push_back(t);
    }
    state_.resize(coeff_.size());
    flipped_.resize(vars_);
  }

  double reset(std::uint64_t mask) {
    for (std::size_t i = 0; i < vars_; ++i) flipped_[i] = (mask >> i) & 1;
    energy_ = constant_;
    for (std::size_t t = 0; t < coeff_.size(); ++t) {
      int s = 0;
      if (domain_ == Domain::spin) {
        s = 1;
        for (Index i : members_[t]) s = flipped_[i] ? -s : s;
        energy_ += s * coeff_[t];
      } else {
        for (Index i : members_[t]) s += flipped_[i] ? 0 : 1;
        if (s == 0) energy_ += coeff_[t];
      }
      state_[t] = s;
    }
    return energy_;
  }

  double flip(std::size_t var) {
    flipped_[var] ^= 1;
    if (domain_ == Domain::spin) {
      double delta = 0.0;
      for (auto t : terms_of_var_[var]) {
        delta += state_[t] * coeff_[t];
        state_[t] = -state_[t];
      }
      energy_ -= 2.0 * delta;
    } else if (flipped_[var]) {  // x: 0 -> 1
      for (auto t : terms_of_var_[var]) {
        if (--state_[t] == 0) energy_ += coeff_[t];
      }
    } else {  // x: 1 -> 0
      for (auto t : terms_of_var_[var]) {
        if (state_[t]++ == 0) energy_ -= coeff_[t];
      }
    }
    return energy_;
  }

 private:
  Domain domain_;
  std::size_t vars_;
  double constant_ = 0.0;
  std::vector<double> coeff_;
  std::vector<IndexSet> members_;
  std::vector<std::vector<std::uint32_t>> terms_of_var_;
  std::vector<int> state_;
  std::vector<std::uint8_t> flipped_;
  double energy_ = 0.0;
};

// The state space is cut into blocks over the high bits. Each block restarts
// from an exact evaluation and walks its low bits in Gray-code order, which
// bounds rounding drift and makes results independent of how blocks are
// distributed over workers.
constexpr std::size_t kBlockBits = 14;

template <typename Visit>
void for_each_block(const MultilinearPolynomial& p, unsigned workers, Visit visit) {
  const std::size_t n = p.num_variables();
  const std::size_t low_bits = std::min(n, kBlockBits);
  const std::uint64_t blocks = std::uint64_t{1} << (n - low_bits);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    FlipEngine engine(p);
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t base = b << low_bits;
      double energy = engine.reset(base);
      visit(b, base, energy);
      for (std::uint64_t g = 1; g < (std::uint64_t{1} << low_bits); ++g) {
        energy = engine.flip(static_cast<std::size_t>(std::countr_zero(g)));
        visit(b, base | (g ^ (g >> 1)), energy);
      }
    }
  };
  if (workers <= 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
}

std::uint64_t num_blocks(std::size_t n) {
  return std::uint64_t{1} << (n - std::min(n, kBlockBits));
}

}  // namespace

OracleReport brute_force_ground(const MultilinearPolynomial& p, unsigned workers) {
  const std::size_t n = p.num_variables();
  if (n > kMaxOracleVariables)
    throw std::invalid_argument("oracle supports at most " +
                                std::to_string(kMaxOracleVariables) + " variables, got " +
                                std::to_string(n));
  const std::uint64_t blocks = num_blocks(n);

  std::vector<double> block_min(blocks, std::numeric_limits<double>::infinity());
  for_each_block(p, workers, [&](std::uint64_t b, std::uint64_t, double e) {
    if (e < block_min[b]) block_min[b] = e;
  });
  const double min_energy = *std::min_element(block_min.begin(), block_min.end());

  const double threshold = min_energy + (p.is_integral() ? 0.0 : kOracleTieTolerance);
  std::vector<std::uint64_t> block_count(blocks, 0);
  for_each_block(p, workers, [&](std::uint64_t b, std::uint64_t, double e) {
    if (e <= threshold) ++block_count[b];
  });

  OracleReport report;
  report.min_energy = min_energy;
  report.num_variables = n;
  for (auto c : block_count) report.degeneracy += c;
  return report;
}

std::vector<double> spectrum(const MultilinearPolynomial& p, unsigned workers) {
  const std::size_t n = p.num_variables();
  if (n > kMaxSpectrumVariables)
    throw std::invalid_argument("spectrum supports at most " +
                                std::to_string(kMaxSpectrumVariables) + " variables, got " +
                                std::to_string(n));
  std::vector<double> energies(std::size_t{1} << n);
  for_each_block(p, workers,
                 [&](std::uint64_t, std::uint64_t mask, double e) { energies[mask] = e; });
  return energies;
}

Assignment assignment_from_index(std::uint64_t index, std::size_t num_variables,
                                 Domain domain) {
  Assignment a(num_variables);
  for (std::size_t i = 0; i < num_variables; ++i) {
    const bool flipped = (index >> i) & 1;
    if (domain == Domain::spin)
      a[i] = flipped ? -1 : 1;
    else
      a[i] = flipped ? 1 : 0;
  }
  return a;
}

}  // namespace pforge
