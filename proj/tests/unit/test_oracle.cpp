#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "pforge/oracle.hpp"
#include "test_support.hpp"

using namespace pforge;

TEST_CASE("single antiferro-free pair -s0 s1") {
  MultilinearPolynomial p(2);
  p.add_term({0, 1}, -1);
  const auto r = brute_force_ground(p);
  CHECK(r.min_energy == -1);
  CHECK(r.degeneracy == 2);
  CHECK(r.num_variables == 2);
}

TEST_CASE("empty polynomial spectrum is all zeros") {
  const auto e = spectrum(MultilinearPolynomial(3));
  CHECK(e == std::vector<double>(8, 0.0));
  const auto r = brute_force_ground(MultilinearPolynomial(3));
  CHECK(r.min_energy == 0);
  CHECK(r.degeneracy == 8);
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(brute_force_ground(MultilinearPolynomial(25)), std::invalid_argument);
  CHECK_THROWS_AS(spectrum(MultilinearPolynomial(21)), std::invalid_argument);
}

TEST_CASE("Gray-code spectrum matches naive evaluation exactly for integer coefficients") {
  RngStream rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.index(13);
    const auto p = testing::random_polynomial(n, 4, 3 * n + 1, rng);
    CHECK(spectrum(p) == testing::naive_spectrum(p));
  }
}

TEST_CASE("Boolean-domain enumeration matches naive evaluation") {
  RngStream rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.index(10);
    const auto b = to_boolean(testing::random_polynomial(n, 3, 2 * n, rng));
    CHECK(spectrum(b) == testing::naive_spectrum(b));
    const auto r = brute_force_ground(b);
    const auto ref = testing::naive_ground(b, 0.0);
    CHECK(r.min_energy == ref.min_energy);
    CHECK(r.degeneracy == ref.count);
  }
}

TEST_CASE("ground report matches the naive oracle, across worker counts and block sizes") {
  RngStream rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 15 + rng.index(3);  // exceeds one enumeration block
    const auto p = testing::random_polynomial(n, 3, 2 * n, rng);
    const auto ref = testing::naive_ground(p, 0.0);
    for (unsigned workers : {1u, 3u}) {
      const auto r = brute_force_ground(p, workers);
      CHECK(r.min_energy == ref.min_energy);
      CHECK(r.degeneracy == ref.count);
    }
  }
}

TEST_CASE("real-coefficient spectra agree within rounding") {
  RngStream rng(10);
  const auto p = testing::random_polynomial(16, 2, 60, rng, false);
  const auto fast = spectrum(p, 2);
  const auto slow = testing::naive_spectrum(p);
  for (std::size_t m = 0; m < fast.size(); ++m) CHECK(std::abs(fast[m] - slow[m]) <= 1e-9);
}

TEST_CASE("Ising and Boolean images have the same spectrum under x = (1 - s) / 2") {
  RngStream rng(11);
  const auto p = testing::random_polynomial(10, 3, 25, rng);
  // Index m sets s_i = -1 in the spin domain and x_i = 1 in the Boolean one,
  // which is exactly the pairing.
  CHECK(spectrum(p) == spectrum(to_boolean(p)));
}

TEST_CASE("gauge-transformed instance has the same oracle report") {
  RngStream rng(12);
  const auto p = testing::random_polynomial(12, 3, 30, rng);
  Assignment q(12);
  for (auto& v : q) v = static_cast<std::int8_t>(rng.rademacher());
  const auto a = brute_force_ground(p);
  const auto b = brute_force_ground(gauge_transform(p, q));
  CHECK(a.min_energy == b.min_energy);
  CHECK(a.degeneracy == b.degeneracy);
}
