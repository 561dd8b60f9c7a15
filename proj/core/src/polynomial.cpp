#include "pforge/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

namespace pforge {

const char* to_string(Domain domain) {
  return domain == Domain::spin ? "ising" : "hobo";
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.indices.reserve(a.indices.size() + b.indices.size());
  std::set_symmetric_difference(a.indices.begin(), a.indices.end(),
                                b.indices.begin(), b.indices.end(),
                                std::back_inserter(out.indices));
  out.coefficient = a.coefficient * b.coefficient;
  return out;
}

namespace {

void accumulate(MultilinearPolynomial::TermMap& terms, IndexSet key, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms.erase(it);
  }
}

}  // namespace

void MultilinearPolynomial::add_term(IndexSet indices, double coefficient) {
  for (Index i : indices) {
    if (i >= num_variables_)
      throw std::out_of_range("variable index " + std::to_string(i) +
                              " outside polynomial of " +
                              std::to_string(num_variables_) + " variables");
  }
  std::sort(indices.begin(), indices.end());
  if (domain_ == Domain::spin) {
    // Pairs of equal indices cancel.
    IndexSet reduced;
    reduced.reserve(indices.size());
    for (Index i : indices) {
      if (!reduced.empty() && reduced.back() == i)
        reduced.pop_back();
      else
        reduced.push_back(i);
    }
    indices = std::move(reduced);
  } else {
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }
  accumulate(terms_, std::move(indices), coefficient);
}

double MultilinearPolynomial::coefficient(const IndexSet& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t MultilinearPolynomial::max_arity() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool MultilinearPolynomial::is_integral() const {
  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
    const double c = term.second;
    return std::abs(c) <= kExactLimit && std::nearbyint(c) == c;
  });
}

void MultilinearPolynomial::resize(std::size_t num_variables) {
  num_variables_ = std::max(num_variables_, num_variables);
}

double MultilinearPolynomial::evaluate(std::span<const std::int8_t> assignment) const {
  if (assignment.size() != num_variables_)
    throw std::invalid_argument("assignment length " + std::to_string(assignment.size()) +
                                " does not match " + std::to_string(num_variables_) +
                                " variables");
  for (std::int8_t v : assignment) {
    const bool ok = domain_ == Domain::spin ? (v == 1 || v == -1) : (v == 0 || v == 1);
    if (!ok) throw std::invalid_argument("assignment value outside the polynomial's domain");
  }
  double energy = 0.0;
  for (const auto& [indices, c] : terms_) {
    double value = c;
    for (Index i : indices) value *= assignment[i];
    energy += value;
  }
  return energy;
}

MultilinearPolynomial operator+(const MultilinearPolynomial& p,
                                const MultilinearPolynomial& q) {
  if (p.domain() != q.domain())
    throw std::invalid_argument("cannot add polynomials over different domains");
  MultilinearPolynomial out(std::max(p.num_variables(), q.num_variables()), p.domain());
  for (const auto& [indices, c] : p.terms()) out.add_term(indices, c);
  for (const auto& [indices, c] : q.terms()) out.add_term(indices, c);
  return out;
}

MultilinearPolynomial multiply(const MultilinearPolynomial& p,
                               const MultilinearPolynomial& q) {
  if (p.domain() != Domain::spin || q.domain() != Domain::spin)
    throw std::invalid_argument("polynomial products are defined on spin polynomials only");
  MultilinearPolynomial::TermMap acc;
  for (const auto& [pi, pc] : p.terms()) {
    for (const auto& [qi, qc] : q.terms()) {
      Monomial m = monomial_product({pi, pc}, {qi, qc});
      accumulate(acc, std::move(m.indices), m.coefficient);
    }
  }
  MultilinearPolynomial out(std::max(p.num_variables(), q.num_variables()), Domain::spin);
  for (auto& [indices, c] : acc) out.add_term(indices, c);
  return out;
}

MultilinearPolynomial gauge_transform(const MultilinearPolynomial& p,
                                      std::span<const std::int8_t> q) {
  if (p.domain() != Domain::spin)
    throw std::invalid_argument("gauge transforms apply to spin polynomials");
  if (q.size() != p.num_variables())
    throw std::invalid_argument("gauge vector length does not match the polynomial");
  for (std::int8_t v : q) {
    if (v != 1 && v != -1) throw std::invalid_argument("gauge vector entries must be +1 or -1");
  }
  MultilinearPolynomial out(p.num_variables(), Domain::spin);
  for (const auto& [indices, c] : p.terms()) {
    int sign = 1;
    for (Index i : indices) sign *= q[i];
    out.add_term(indices, sign * c);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxExpansionArity = 30;

// Expands c * prod_{i in indices} (a + b v_i) over all subsets, where v is
// the target-domain variable.
void expand_affine(MultilinearPolynomial& out, const IndexSet& indices, double c,
                   double a, double b) {
  const std::size_t k = indices.size();
  if (k > kMaxExpansionArity)
    throw std::invalid_argument("term arity too large for domain conversion");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    IndexSet subset;
    double value = c;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        subset.push_back(indices[j]);
        value *= b;
      } else {
        value *= a;
      }
    }
    out.add_term(std::move(subset), value);
  }
}

}  // namespace

MultilinearPolynomial to_boolean(const MultilinearPolynomial& p) {
  if (p.domain() != Domain::spin)
    throw std::invalid_argument("to_boolean expects a spin polynomial");
  MultilinearPolynomial out(p.num_variables(), Domain::boolean);
  for (const auto& [indices, c] : p.terms()) expand_affine(out, indices, c, 1.0, -2.0);
  return out;
}

MultilinearPolynomial to_spin(const MultilinearPolynomial& p) {
  if (p.domain() != Domain::boolean)
    throw std::invalid_argument("to_spin expects a Boolean polynomial");
  MultilinearPolynomial out(p.num_variables(), Domain::spin);
  for (const auto& [indices, c] : p.terms()) expand_affine(out, indices, c, 0.5, -0.5);
  return out;
}

std::pair<MultilinearPolynomial, double> split_constant(MultilinearPolynomial p) {
  const double c = p.constant();
  if (c != 0.0) p.add_constant(-c);
  return {std::move(p), c};
}

Assignment spins_to_bits(std::span<const std::int8_t> spins) {
  Assignment bits(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) bits[i] = spins[i] == 1 ? 0 : 1;
  return bits;
}

}  // namespace pforge
