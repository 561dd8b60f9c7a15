#include "pforge/klocal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pforge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

int subproblem_locality(const SubproblemSpec& spec) {
  return std::holds_alternative<RandomFieldSpec>(spec) ? 1 : 2;
}

std::size_t subproblem_num_variables(const SubproblemSpec& spec) {
  return std::visit(Overloaded{
                        [](const RandomFieldSpec& rf) { return rf.N; },
                        [](const TileParams& tp) { return tp.num_variables(); },
                        [](const WishartParams& wp) { return wp.N; },
                    },
                    spec);
}

void KLocalPlan::validate() const {
  if (k_max <= 2) throw std::invalid_argument("k_max must be greater than 2");
  int two_local = 0;
  int fields = 0;
  for (const auto& spec : subproblems) {
    if (std::holds_alternative<RandomFieldSpec>(spec)) {
      ++fields;
      if (std::get<RandomFieldSpec>(spec).N < 1)
        throw std::invalid_argument("random field subproblem needs N >= 1");
    } else {
      ++two_local;
    }
  }
  if (k_max % 2 == 0) {
    if (fields > 0)
      throw std::invalid_argument("random field subproblems are only allowed for odd k_max");
    if (two_local != k_max / 2)
      throw std::invalid_argument("even k_max = " + std::to_string(k_max) + " needs " +
                                  std::to_string(k_max / 2) + " two-local subproblems, got " +
                                  std::to_string(two_local));
  } else {
    if (fields != 1)
      throw std::invalid_argument("odd k_max needs exactly one random field subproblem, got " +
                                  std::to_string(fields));
    if (two_local != (k_max - 1) / 2)
      throw std::invalid_argument("odd k_max = " + std::to_string(k_max) + " needs " +
                                  std::to_string((k_max - 1) / 2) +
                                  " two-local subproblems, got " + std::to_string(two_local));
  }
}

std::size_t KLocalPlan::num_variables() const {
  std::size_t n = 0;
  for (const auto& spec : subproblems) n = std::max(n, subproblem_num_variables(spec));
  return n;
}

RandomFieldSubproblem generate_rf_subproblem(std::size_t num_spins, RngStream& rng) {
  if (num_spins < 1) throw std::invalid_argument("random field subproblem needs N >= 1");
  RandomFieldSubproblem out;
  out.polynomial = MultilinearPolynomial(num_spins, Domain::spin);
  out.fields.resize(num_spins);
  for (std::size_t i = 0; i < num_spins; ++i) {
    out.fields[i] = static_cast<std::int8_t>(rng.rademacher());
    out.polynomial.add_term({static_cast<Index>(i)}, out.fields[i]);
  }
  out.e0 = -static_cast<double>(num_spins);
  return out;
}

ProblemInstance generate_klocal_instance(const KLocalPlan& plan, RngStream& rng) {
  plan.validate();
  const std::size_t n = plan.num_variables();

  MultilinearPolynomial composite(n, Domain::spin);
  composite.add_constant(1.0);
  Json factors = Json::array();
  for (const auto& spec : plan.subproblems) {
    MultilinearPolynomial factor;
    double e0 = 0.0;
    Json info;
    std::visit(Overloaded{
                   [&](const RandomFieldSpec& rf) {
                     auto sub = generate_rf_subproblem(rf.N, rng);
                     factor = std::move(sub.polynomial);
                     e0 = sub.e0;
                     info["type"] = "RF";
                   },
                   [&](const TileParams& tp) {
                     auto sub = generate_tile_instance(tp, rng);
                     factor = std::move(sub.polynomial);
                     e0 = *sub.ground_energy;
                     info["type"] = "TP";
                   },
                   [&](const WishartParams& wp) {
                     auto sub = generate_wishart_instance(wp, rng);
                     factor = std::move(sub.polynomial);
                     e0 = *sub.ground_energy;
                     info["type"] = "WP";
                   },
               },
               spec);
    info["num_variables"] = factor.num_variables();
    info["ground_energy"] = e0;
    factors.push_back(std::move(info));
    factor.resize(n);
    factor.add_constant(-e0);
    composite = multiply(composite, factor);
  }

  auto [polynomial, constant] = split_constant(std::move(composite));
  ProblemInstance out;
  out.problem_type = "K_LOCAL";
  out.ground_energy = -constant;
  out.metadata["k_max"] = plan.k_max;
  out.metadata["num_variables"] = n;
  out.metadata["subproblems"] = std::move(factors);
  out.metadata["max_arity"] = polynomial.max_arity();
  out.metadata["top_order_cancellation"] =
      polynomial.max_arity() < static_cast<std::size_t>(plan.k_max);
  out.polynomial = std::move(polynomial);
  return out;
}

}  // namespace pforge
