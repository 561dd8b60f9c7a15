#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>

#include "pforge/oracle.hpp"
#include "pforge/tile.hpp"
#include "test_support.hpp"

using namespace pforge;

namespace {

using Edge = std::pair<Index, Index>;

Edge norm(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

// Every edge of the periodic lattice, enumerated directly from coordinates.
std::multiset<Edge> lattice_edges(int dim, std::size_t L) {
  std::multiset<Edge> out;
  const std::size_t n = dim == 2 ? L * L : L * L * L;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (int axis = 0; axis < dim; ++axis, stride *= L) {
      const std::size_t coord = (v / stride) % L;
      const std::size_t w = v - coord * stride + ((coord + 1) % L) * stride;
      out.insert(norm({static_cast<Index>(v), static_cast<Index>(w)}));
    }
  }
  return out;
}

void check_exact_cover(const LatticeDecomposition& d) {
  std::multiset<Edge> covered;
  std::map<Index, int> membership;
  for (const auto& cell : d.cells) {
    for (auto e : cell.edges) covered.insert(norm(e));
    for (Index v : cell.vertices) ++membership[v];
  }
  CHECK(covered == lattice_edges(d.dimension, d.L));
  CHECK(membership.size() == d.num_vertices());
  for (const auto& [v, count] : membership) CHECK(count == 2);
}

int brute_force_cell_min(const CellSubproblem& cell) {
  return static_cast<int>(brute_force_ground(cell_polynomial(cell)).min_energy);
}

}  // namespace

TEST_CASE("decompose_square") {
  const auto d4 = decompose_square(4);
  CHECK(d4.cells.size() == 8);
  CHECK(d4.num_edges() == 32);
  check_exact_cover(d4);
  const auto d6 = decompose_square(6);
  CHECK(d6.cells.size() == 18);
  check_exact_cover(d6);
  check_exact_cover(decompose_square(8));
  CHECK_THROWS_AS(decompose_square(5), std::invalid_argument);
  CHECK_THROWS_AS(decompose_square(2), std::invalid_argument);
}

TEST_CASE("decompose_cubic") {
  const auto d4 = decompose_cubic(4);
  CHECK(d4.cells.size() == 16);
  CHECK(d4.cells.size() * 12 == 3 * 64);
  check_exact_cover(d4);
  check_exact_cover(decompose_cubic(6));
  check_exact_cover(decompose_cubic(8));
  CHECK_THROWS_AS(decompose_cubic(2), std::invalid_argument);
  CHECK_THROWS_AS(decompose_cubic(7), std::invalid_argument);
}

TEST_CASE("square subproblem classes") {
  RngStream rng(1);
  for (int cls = 1; cls <= 4; ++cls) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto cell = sample_square_subproblem(cls, rng);
      std::multiset<int> values(cell.couplers.begin(), cell.couplers.end());
      CHECK(values.count(1) == 1);
      CHECK(values.count(-1) == static_cast<std::size_t>(cls - 1));
      CHECK(values.count(-2) == static_cast<std::size_t>(4 - cls));
      CHECK(cell.fm_energy == cls - 6);
      CHECK(brute_force_cell_min(cell) == cell.fm_energy);
    }
  }
  CHECK_THROWS_AS(sample_square_subproblem(0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_square_subproblem(5, rng), std::invalid_argument);
}

TEST_CASE("square subproblem placements are uniform") {
  // C2 has 4 positions for +1 times 3 for the -1 edge: 12 labelings.
  RngStream rng(2);
  std::map<std::vector<int>, int> seen;
  const int n = 24000;
  for (int i = 0; i < n; ++i) ++seen[sample_square_subproblem(2, rng).couplers];
  CHECK(seen.size() == 12);
  for (const auto& [labels, count] : seen) CHECK(std::abs(count - n / 12) < 3 * 43);
}

TEST_CASE("cubic representatives and orbits") {
  const std::map<CellClass, int> facets{{CellClass::F22, 2}, {CellClass::F42, 4}, {CellClass::F6, 6}};
  for (const auto& [cls, expected_facets] : facets) {
    const auto rep = cubic_representative(cls);
    CHECK(frustrated_facet_count(rep.couplers) == expected_facets);
    const auto orbit = cubic_orbit(rep);
    CHECK(orbit.size() == 48);
    std::set<std::vector<int>> distinct;
    for (const auto& member : orbit) {
      distinct.insert(member.couplers);
      CHECK(member.cls == cls);
      CHECK(frustrated_facet_count(member.couplers) == expected_facets);
      CHECK(member.fm_energy == rep.fm_energy);
      CHECK(brute_force_cell_min(member) == member.fm_energy);
    }
    CHECK(distinct.size() == 48);
  }
  CHECK_THROWS_AS(cubic_representative(CellClass::C1), std::invalid_argument);
}

TEST_CASE("fully symmetric labeling is rejected") {
  CellSubproblem all_ferro{CellClass::F22, std::vector<int>(12, -1), -12};
  CHECK_THROWS_AS(cubic_orbit(all_ferro), std::invalid_argument);
}

TEST_CASE("tile instance with p1 = 1 has certificate -40") {
  RngStream rng(3);
  TileParams tp;
  tp.L = 4;
  tp.p = {1.0, 0.0, 0.0};
  const auto inst = generate_tile_instance(tp, rng);
  CHECK(*inst.ground_energy == -40);
  CHECK(inst.polynomial.num_variables() == 16);
  CHECK(inst.polynomial.size() == 32);
  CHECK(inst.polynomial.evaluate(Assignment(16, 1)) == -40);
}

TEST_CASE("2D tile certificate matches the exhaustive oracle") {
  RngStream rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    TileParams tp;
    tp.L = 4;
    const double a = rng.uniform_real(), b = rng.uniform_real() * (1 - a);
    tp.p = {a, b, (1 - a - b) * rng.uniform_real()};
    tp.gauge_transform = trial % 2 == 1;
    const auto inst = generate_tile_instance(tp, rng);
    CHECK(brute_force_ground(inst.polynomial).min_energy == *inst.ground_energy);
  }
}

TEST_CASE("3D tile instance evaluates to the certificate at all-ones") {
  RngStream rng(5);
  TileParams tp;
  tp.dimension = 3;
  tp.L = 4;
  tp.pf = {1.0, 0.0};
  const auto inst = generate_tile_instance(tp, rng);
  CHECK(inst.polynomial.num_variables() == 64);
  CHECK(inst.polynomial.size() == 192);
  CHECK(inst.polynomial.evaluate(Assignment(64, 1)) == *inst.ground_energy);
  CHECK(*inst.ground_energy == 16 * cubic_representative(CellClass::F22).fm_energy);

  tp.pf = {0.3, 0.3};
  const auto mixed = generate_tile_instance(tp, rng);
  CHECK(mixed.polynomial.evaluate(Assignment(64, 1)) == *mixed.ground_energy);
}

TEST_CASE("3D cells are orbit members of their class") {
  RngStream rng(6);
  TileParams tp;
  tp.dimension = 3;
  tp.L = 4;
  tp.pf = {0.3, 0.4};
  const auto inst = generate_tile_instance(tp, rng);
  const auto lattice = decompose_cubic(4);
  std::map<std::vector<int>, CellClass> members;
  for (auto cls : {CellClass::F22, CellClass::F42, CellClass::F6}) {
    for (const auto& m : cubic_orbit(cubic_representative(cls))) members[m.couplers] = cls;
  }
  for (const auto& cell : lattice.cells) {
    std::vector<int> labels;
    for (auto [a, b] : cell.edges) {
      IndexSet key{std::min(a, b), std::max(a, b)};
      labels.push_back(static_cast<int>(inst.polynomial.coefficient(key)));
    }
    REQUIRE(members.count(labels) == 1);
    const int expected = members[labels] == CellClass::F22 ? 2 : members[labels] == CellClass::F42 ? 4 : 6;
    CHECK(frustrated_facet_count(labels) == expected);
  }
}

TEST_CASE("2D class frequencies follow (p1, p2, p3, p4)") {
  RngStream rng(7);
  TileParams tp;
  tp.L = 32;  // 512 cells per instance
  tp.p = {0.2, 0.5, 0.1};
  std::array<double, 4> counts{};
  double total = 0;
  for (int i = 0; i < 20; ++i) {  // 10240 cells
    const auto inst = generate_tile_instance(tp, rng);
    const auto& cc = inst.metadata["class_counts"];
    for (int c = 0; c < 4; ++c) counts[c] += cc["C" + std::to_string(c + 1)].get<double>();
    total += 512;
  }
  const std::array<double, 4> p{0.2, 0.5, 0.1, 0.2};
  for (int c = 0; c < 4; ++c) {
    const double sigma = std::sqrt(total * p[c] * (1 - p[c]));
    CHECK(std::abs(counts[c] - total * p[c]) <= 3 * sigma);
  }
}

TEST_CASE("tile parameter validation") {
  RngStream rng(8);
  TileParams tp;
  tp.p = {0.5, 0.4, 0.3};
  CHECK_THROWS_AS(generate_tile_instance(tp, rng), std::invalid_argument);
  tp.p = {-0.1, 0.0, 0.0};
  CHECK_THROWS_AS(generate_tile_instance(tp, rng), std::invalid_argument);
  tp.p = {1, 0, 0};
  tp.L = 6;
  tp.dimension = 4;
  CHECK_THROWS_AS(generate_tile_instance(tp, rng), std::invalid_argument);
}
