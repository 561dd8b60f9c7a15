#include <doctest.h>

#include <stdexcept>

#include "pforge/klocal.hpp"
#include "pforge/oracle.hpp"

using namespace pforge;

namespace {

WishartParams wishart(std::size_t n) { return WishartParams{n, 0.5, false, false}; }

TileParams tile4() {
  TileParams tp;
  tp.L = 4;
  tp.p = {0.3, 0.3, 0.2};
  return tp;
}

}  // namespace

TEST_CASE("random field subproblem") {
  RngStream rng(1);
  const auto one = generate_rf_subproblem(1, rng);
  CHECK(one.polynomial.size() == 1);
  CHECK(one.e0 == -1);
  for (std::size_t n : {4u, 9u}) {
    const auto rf = generate_rf_subproblem(n, rng);
    Assignment aligned(n);
    for (std::size_t i = 0; i < n; ++i) aligned[i] = static_cast<std::int8_t>(-rf.fields[i]);
    CHECK(rf.polynomial.evaluate(aligned) == -static_cast<double>(n));
    CHECK(brute_force_ground(rf.polynomial).min_energy == rf.e0);
  }
}

TEST_CASE("plan validation") {
  CHECK_NOTHROW(KLocalPlan{4, {wishart(6), wishart(6)}}.validate());
  CHECK_NOTHROW(KLocalPlan{3, {tile4(), RandomFieldSpec{4}}}.validate());
  CHECK_THROWS_AS((KLocalPlan{4, {wishart(6), RandomFieldSpec{4}, RandomFieldSpec{2}}}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((KLocalPlan{3, {wishart(6), wishart(6)}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KLocalPlan{6, {wishart(6), wishart(6)}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KLocalPlan{2, {wishart(6)}}.validate()), std::invalid_argument);
  CHECK((KLocalPlan{3, {tile4(), RandomFieldSpec{20}}}.num_variables()) == 20);
}

TEST_CASE("WP x WP composite certificate") {
  RngStream rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const KLocalPlan plan{4, {wishart(6), wishart(6)}};
    const auto inst = generate_klocal_instance(plan, rng);
    CHECK(inst.polynomial.num_variables() == 6);
    CHECK(inst.polynomial.constant() == 0);
    CHECK(inst.polynomial.max_arity() <= 4);
    CHECK(std::abs(brute_force_ground(inst.polynomial).min_energy - *inst.ground_energy) <= 1e-9);
  }
}

TEST_CASE("TP x RF composite certificate") {
  RngStream rng(3);
  const KLocalPlan plan{3, {tile4(), RandomFieldSpec{4}}};
  const auto inst = generate_klocal_instance(plan, rng);
  CHECK(inst.polynomial.num_variables() == 16);
  CHECK(inst.polynomial.max_arity() == 3);
  CHECK(brute_force_ground(inst.polynomial).min_energy == *inst.ground_energy);
  CHECK(inst.metadata["max_arity"] == 3);
}

TEST_CASE("mixed sizes share a prefix") {
  RngStream rng(4);
  const KLocalPlan plan{4, {wishart(4), wishart(7)}};
  const auto inst = generate_klocal_instance(plan, rng);
  CHECK(inst.polynomial.num_variables() == 7);
  CHECK(std::abs(brute_force_ground(inst.polynomial).min_energy - *inst.ground_energy) <= 1e-9);
}
