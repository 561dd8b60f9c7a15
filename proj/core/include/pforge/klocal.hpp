#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pforge/instance.hpp"
#include "pforge/rng.hpp"
#include "pforge/tile.hpp"
#include "pforge/wishart.hpp"

namespace pforge {

/// Bimodal random field over N spins (1-local).
struct RandomFieldSpec {
  std::size_t N = 1;
};

using SubproblemSpec = std::variant<RandomFieldSpec, TileParams, WishartParams>;

/// Locality of the highest-order term a subproblem contributes.
int subproblem_locality(const SubproblemSpec& spec);
std::size_t subproblem_num_variables(const SubproblemSpec& spec);

struct KLocalPlan {
  int k_max = 4;
  std::vector<SubproblemSpec> subproblems;

  /// Even k_max: k_max / 2 two-local subproblems and no random field.
  /// Odd k_max: (k_max - 1) / 2 two-local subproblems and exactly one
  /// random field. Throws std::invalid_argument otherwise.
  void validate() const;
  std::size_t num_variables() const;
};

struct RandomFieldSubproblem {
  MultilinearPolynomial polynomial;
  Assignment fields;
  double e0 = 0.0;  // -N, attained at s = -h
};

RandomFieldSubproblem generate_rf_subproblem(std::size_t num_spins, RngStream& rng);

/// Product of the shifted subproblems (H_i - E0_i), with subproblem i on
/// the shared variables 0..N_i-1. The constant c of the expansion is split
/// off, so the emitted polynomial has ground energy -c.
ProblemInstance generate_klocal_instance(const KLocalPlan& plan, RngStream& rng);

}  // namespace pforge
