#include "pforge/xorsat.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace pforge {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  auto& word = bits_[r * words_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_; ++i) w += std::popcount(bits_[r * words_ + i]);
  return w;
}

std::size_t Gf2Matrix::column_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

std::vector<std::size_t> Gf2Matrix::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (get(r, c)) out.push_back(c);
  }
  return out;
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match columns");
  BitVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= static_cast<std::uint8_t>(get(r, c) & (x[c] & 1));
    out[r] = acc;
  }
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::size_t gf2_rank(const Gf2Matrix& a) {
  std::vector<std::uint64_t> bits = a.bits_;
  const std::size_t words = a.words_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols_ && rank < a.rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < a.rows_ && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == a.rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                       bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                       bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
    }
    for (std::size_t r = rank + 1; r < a.rows_; ++r) {
      if (bits[r * words + w] & mask) {
        for (std::size_t i = w; i < words; ++i) bits[r * words + i] ^= bits[rank * words + i];
      }
    }
    ++rank;
  }
  return rank;
}

void XorsatParams::validate() const {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (N < k) throw std::invalid_argument("N must be at least k");
}

Gf2Matrix sample_regular_system(std::size_t N, std::size_t k, RngStream& rng) {
  XorsatParams{k, N}.validate();
  Gf2Matrix a(N, N);
  if (N == k) {
    // The only k-regular system: every equation holds every variable.
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) a.set(r, c, true);
    }
    return a;
  }

  std::vector<std::size_t> tokens;
  tokens.reserve(N * k);
  for (std::size_t v = 0; v < N; ++v) tokens.insert(tokens.end(), k, v);

  std::vector<std::size_t> row(k);
  for (std::size_t attempt = 0; attempt < kXorsatMaxAttempts; ++attempt) {
    rng.shuffle(std::span<std::size_t>(tokens));
    std::set<std::vector<std::size_t>> rows;
    bool simple = true;
    for (std::size_t r = 0; r < N && simple; ++r) {
      std::copy_n(tokens.begin() + static_cast<std::ptrdiff_t>(r * k), k, row.begin());
      std::sort(row.begin(), row.end());
      simple = std::adjacent_find(row.begin(), row.end()) == row.end() && rows.insert(row).second;
    }
    if (!simple) continue;
    std::size_t r = 0;
    for (const auto& support : rows) {
      for (std::size_t c : support) a.set(r, c, true);
      ++r;
    }
    return a;
  }
  throw GenerationError("no simple " + std::to_string(k) + "-regular system on N = " +
                        std::to_string(N) + " variables found in " +
                        std::to_string(kXorsatMaxAttempts) + " attempts");
}

PlantedSystem plant_rhs(const Gf2Matrix& a, RngStream& rng) {
  PlantedSystem out;
  out.solution.resize(a.cols());
  for (auto& bit : out.solution) bit = static_cast<std::uint8_t>(rng.next_u64() >> 63);
  out.b = a.multiply(out.solution);
  return out;
}

ProblemInstance generate_xorsat_instance(const XorsatParams& params, RngStream& rng) {
  params.validate();
  const Gf2Matrix a = sample_regular_system(params.N, params.k, rng);
  const PlantedSystem planted = plant_rhs(a, rng);
  const std::size_t rank = gf2_rank(a);

  ProblemInstance out;
  out.problem_type = "XORSAT";
  out.polynomial = MultilinearPolynomial(params.N, Domain::spin);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    IndexSet indices;
    for (std::size_t c : a.row_support(r)) indices.push_back(static_cast<Index>(c));
    out.polynomial.add_term(std::move(indices), planted.b[r] ? 1.0 : -1.0);
  }
  out.ground_energy = -static_cast<double>(params.N);
  out.degeneracy_log2 = static_cast<std::uint32_t>(params.N - rank);
  out.metadata["k"] = params.k;
  out.metadata["N"] = params.N;
  out.metadata["rank"] = rank;
  return out;
}

}  // namespace pforge
