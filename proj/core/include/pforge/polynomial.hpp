#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pforge {

using Index = std::uint32_t;
using IndexSet = std::vector<Index>;

/// Variable domain of a polynomial: spins s in {+1, -1} or Booleans x in {0, 1}.
enum class Domain { spin, boolean };

const char* to_string(Domain domain);

/// One value per variable: +1/-1 for spin polynomials, 0/1 for Boolean ones.
using Assignment = std::vector<std::int8_t>;

/// A product of distinct variables times a coefficient. An empty index list
/// is the constant monomial.
struct Monomial {
  IndexSet indices;
  double coefficient = 0.0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product of two spin monomials; shared variables cancel since s_i^2 = 1.
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Orders index sets by arity, then lexicographically.
struct MonomialOrder {
  bool operator()(const IndexSet& a, const IndexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Sparse multilinear polynomial over N variables.
///
/// Terms are keyed by strictly increasing index sets, at most one term per
/// set, and no stored coefficient is exactly zero. Iteration order is
/// (arity, lexicographic indices), which is also the on-disk order.
class MultilinearPolynomial {
 public:
  using TermMap = std::map<IndexSet, double, MonomialOrder>;

  explicit MultilinearPolynomial(std::size_t num_variables = 0,
                                 Domain domain = Domain::spin)
      : num_variables_(num_variables), domain_(domain) {}

  std::size_t num_variables() const { return num_variables_; }
  Domain domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds `coefficient` times the product of `indices`. Indices may arrive
  /// unsorted; repeated indices are reduced (s*s = 1, x*x = x). Throws
  /// std::out_of_range for an index >= num_variables().
  void add_term(IndexSet indices, double coefficient);
  void add_constant(double value) { add_term({}, value); }

  double coefficient(const IndexSet& indices) const;
  double constant() const { return coefficient({}); }

  std::size_t max_arity() const;

  /// True when every coefficient is an integer exactly representable in a
  /// double (|c| <= 2^53).
  bool is_integral() const;

  /// Widens the variable universe; never shrinks it.
  void resize(std::size_t num_variables);

  /// Throws std::invalid_argument on a length or domain mismatch.
  double evaluate(std::span<const std::int8_t> assignment) const;

  friend bool operator==(const MultilinearPolynomial&,
                         const MultilinearPolynomial&) = default;

 private:
  std::size_t num_variables_;
  Domain domain_;
  TermMap terms_;
};

/// Coefficient-wise sum. Throws std::invalid_argument on a domain mismatch.
MultilinearPolynomial operator+(const MultilinearPolynomial& p,
                                const MultilinearPolynomial& q);

/// Distributed product of two spin polynomials.
MultilinearPolynomial multiply(const MultilinearPolynomial& p,
                               const MultilinearPolynomial& q);

/// Multiplies every term by the product of q over its variables, so that
/// result(s) = p(s * q) entrywise.
MultilinearPolynomial gauge_transform(const MultilinearPolynomial& p,
                                      std::span<const std::int8_t> q);

/// Substitutes s_i = 1 - 2 x_i.
MultilinearPolynomial to_boolean(const MultilinearPolynomial& p);

/// Substitutes x_i = (1 - s_i) / 2; inverse of to_boolean.
MultilinearPolynomial to_spin(const MultilinearPolynomial& p);

/// Returns (p without its constant term, the constant).
std::pair<MultilinearPolynomial, double> split_constant(MultilinearPolynomial p);

/// Maps a spin assignment to the paired Boolean one, x = (1 - s) / 2.
Assignment spins_to_bits(std::span<const std::int8_t> spins);

}  // namespace pforge
