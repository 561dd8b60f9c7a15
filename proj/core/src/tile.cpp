#include "pforge/tile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pforge {

namespace {

void check_lattice_size(std::size_t L) {
  if (L <= 2 || L % 2 != 0)
    throw std::invalid_argument("lattice size L must be an even integer greater than two, got " +
                                std::to_string(L));
}

bool is_square_class(CellClass cls) {
  return cls == CellClass::C1 || cls == CellClass::C2 || cls == CellClass::C3 ||
         cls == CellClass::C4;
}

int coupler_sum(const std::vector<int>& couplers) {
  int sum = 0;
  for (int c : couplers) sum += c;
  return sum;
}

// A cube symmetry as an axis permutation plus per-axis reflection.
struct CubeSymmetry {
  std::array<int, 3> perm;
  std::array<int, 3> flip;

  int map_vertex(int v) const {
    int out = 0;
    for (int axis = 0; axis < 3; ++axis) {
      const int bit = ((v >> perm[axis]) & 1) ^ flip[axis];
      out |= bit << axis;
    }
    return out;
  }
};

const std::vector<std::array<int, 12>>& cube_edge_permutations() {
  static const std::vector<std::array<int, 12>> perms = [] {
    const auto& edges = cube_cell_edges();
    auto edge_index = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      for (int k = 0; k < 12; ++k) {
        if (edges[k].first == a && edges[k].second == b) return k;
      }
      throw std::logic_error("not a cube edge");
    };
    std::vector<std::array<int, 12>> out;
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int f = 0; f < 8; ++f) {
        CubeSymmetry sym{perm, {f & 1, (f >> 1) & 1, (f >> 2) & 1}};
        std::array<int, 12> map{};
        for (int k = 0; k < 12; ++k)
          map[k] = edge_index(sym.map_vertex(edges[k].first), sym.map_vertex(edges[k].second));
        out.push_back(map);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return perms;
}

// Cube representatives, one per class. Each has the all-ones state among its
// ground states, the class's frustrated-facet count, and a trivial
// stabilizer under the cube group (so its orbit has 48 members).
constexpr std::array<int, 12> kF22 = {1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
constexpr std::array<int, 12> kF42 = {1, -1, -2, -1, -1, -1, 1, -1, -1, -1, -1, -1};
constexpr std::array<int, 12> kF6 = {1, -1, -2, -1, -1, -1, 1, -1, -1, -1, 1, -1};

const std::vector<CellSubproblem>& cached_orbit(CellClass cls) {
  static const std::array<std::vector<CellSubproblem>, 3> orbits = {
      cubic_orbit(cubic_representative(CellClass::F22)),
      cubic_orbit(cubic_representative(CellClass::F42)),
      cubic_orbit(cubic_representative(CellClass::F6)),
  };
  switch (cls) {
    case CellClass::F22: return orbits[0];
    case CellClass::F42: return orbits[1];
    case CellClass::F6: return orbits[2];
    default: throw std::invalid_argument("not a cubic cell class");
  }
}

}  // namespace

std::size_t LatticeDecomposition::num_vertices() const {
  std::size_t n = 1;
  for (int d = 0; d < dimension; ++d) n *= L;
  return n;
}

std::size_t LatticeDecomposition::num_edges() const {
  return static_cast<std::size_t>(dimension) * num_vertices();
}

LatticeDecomposition decompose_square(std::size_t L) {
  check_lattice_size(L);
  LatticeDecomposition out;
  out.dimension = 2;
  out.L = L;
  out.cells.reserve(L * L / 2);
  auto id = [L](std::size_t i, std::size_t j) { return static_cast<Index>(i % L + L * (j % L)); };
  for (std::size_t j = 0; j < L; ++j) {
    for (std::size_t i = 0; i < L; ++i) {
      if ((i + j) % 2 != 0) continue;
      LatticeCell cell;
      cell.vertices = {id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)};
      for (const auto& [a, b] : square_cell_edges())
        cell.edges.emplace_back(cell.vertices[a], cell.vertices[b]);
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

LatticeDecomposition decompose_cubic(std::size_t L) {
  check_lattice_size(L);
  LatticeDecomposition out;
  out.dimension = 3;
  out.L = L;
  out.cells.reserve(L * L * L / 4);
  auto id = [L](std::size_t x, std::size_t y, std::size_t z) {
    return static_cast<Index>(x % L + L * ((y % L) + L * (z % L)));
  };
  for (std::size_t z = 0; z < L; ++z) {
    for (std::size_t y = 0; y < L; ++y) {
      for (std::size_t x = 0; x < L; ++x) {
        if ((x + y) % 2 != 0 || (y + z) % 2 != 0) continue;
        LatticeCell cell;
        for (int v = 0; v < 8; ++v)
          cell.vertices.push_back(id(x + (v & 1), y + ((v >> 1) & 1), z + ((v >> 2) & 1)));
        for (const auto& [a, b] : cube_cell_edges())
          cell.edges.emplace_back(cell.vertices[a], cell.vertices[b]);
        out.cells.push_back(std::move(cell));
      }
    }
  }
  return out;
}

std::string to_string(CellClass cls) {
  switch (cls) {
    case CellClass::C1: return "C1";
    case CellClass::C2: return "C2";
    case CellClass::C3: return "C3";
    case CellClass::C4: return "C4";
    case CellClass::F22: return "F22";
    case CellClass::F42: return "F42";
    case CellClass::F6: return "F6";
  }
  return "?";
}

const std::array<std::pair<int, int>, 4>& square_cell_edges() {
  static constexpr std::array<std::pair<int, int>, 4> edges = {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  return edges;
}

const std::array<std::pair<int, int>, 12>& cube_cell_edges() {
  static constexpr std::array<std::pair<int, int>, 12> edges = {{{0, 1},
                                                                 {0, 2},
                                                                 {0, 4},
                                                                 {1, 3},
                                                                 {1, 5},
                                                                 {2, 3},
                                                                 {2, 6},
                                                                 {3, 7},
                                                                 {4, 5},
                                                                 {4, 6},
                                                                 {5, 7},
                                                                 {6, 7}}};
  return edges;
}

const std::array<std::array<int, 4>, 6>& cube_facets() {
  static const std::array<std::array<int, 4>, 6> facets = [] {
    std::array<std::array<int, 4>, 6> out{};
    const auto& edges = cube_cell_edges();
    int f = 0;
    for (int axis = 0; axis < 3; ++axis) {
      for (int side = 0; side < 2; ++side, ++f) {
        int n = 0;
        for (int k = 0; k < 12; ++k) {
          const auto [a, b] = edges[k];
          if (((a >> axis) & 1) == side && ((b >> axis) & 1) == side) out[f][n++] = k;
        }
      }
    }
    return out;
  }();
  return facets;
}

CellSubproblem sample_square_subproblem(int class_index, RngStream& rng) {
  if (class_index < 1 || class_index > 4)
    throw std::invalid_argument("square subproblem class must be in 1..4");
  CellSubproblem cell;
  cell.cls = static_cast<CellClass>(class_index - 1);
  cell.couplers.assign(4, -2);
  const std::size_t af = rng.index(4);
  cell.couplers[af] = 1;
  std::array<std::size_t, 3> rest{};
  for (std::size_t e = 0, n = 0; e < 4; ++e) {
    if (e != af) rest[n++] = e;
  }
  rng.shuffle(std::span<std::size_t>(rest));
  for (int m = 0; m < class_index - 1; ++m) cell.couplers[rest[m]] = -1;
  cell.fm_energy = coupler_sum(cell.couplers);
  return cell;
}

CellSubproblem cubic_representative(CellClass cls) {
  const std::array<int, 12>* labels = nullptr;
  switch (cls) {
    case CellClass::F22: labels = &kF22; break;
    case CellClass::F42: labels = &kF42; break;
    case CellClass::F6: labels = &kF6; break;
    default: throw std::invalid_argument("not a cubic cell class: " + to_string(cls));
  }
  CellSubproblem cell;
  cell.cls = cls;
  cell.couplers.assign(labels->begin(), labels->end());
  cell.fm_energy = coupler_sum(cell.couplers);
  return cell;
}

std::vector<CellSubproblem> cubic_orbit(const CellSubproblem& representative) {
  if (representative.couplers.size() != 12)
    throw std::invalid_argument("cubic orbit requires a 12-edge labeling");
  std::vector<CellSubproblem> orbit;
  std::set<std::vector<int>> seen;
  for (const auto& map : cube_edge_permutations()) {
    CellSubproblem image = representative;
    for (int k = 0; k < 12; ++k) image.couplers[map[k]] = representative.couplers[k];
    if (seen.insert(image.couplers).second) orbit.push_back(std::move(image));
  }
  if (orbit.size() != 48)
    throw std::invalid_argument("labeling has a nontrivial stabilizer: orbit size " +
                                std::to_string(orbit.size()) + " instead of 48");
  return orbit;
}

int frustrated_facet_count(const std::vector<int>& couplers) {
  if (couplers.size() != 12) throw std::invalid_argument("expected 12 cube couplers");
  int frustrated = 0;
  for (const auto& facet : cube_facets()) {
    int positives = 0;
    for (int k : facet) positives += couplers[k] > 0 ? 1 : 0;
    frustrated += positives % 2;
  }
  return frustrated;
}

MultilinearPolynomial cell_polynomial(const CellSubproblem& cell) {
  if (is_square_class(cell.cls)) {
    MultilinearPolynomial p(4);
    for (std::size_t e = 0; e < 4; ++e) {
      const auto [a, b] = square_cell_edges()[e];
      p.add_term({static_cast<Index>(a), static_cast<Index>(b)}, cell.couplers.at(e));
    }
    return p;
  }
  MultilinearPolynomial p(8);
  for (std::size_t e = 0; e < 12; ++e) {
    const auto [a, b] = cube_cell_edges()[e];
    p.add_term({static_cast<Index>(a), static_cast<Index>(b)}, cell.couplers.at(e));
  }
  return p;
}

std::size_t TileParams::num_variables() const {
  return dimension == 2 ? L * L : L * L * L;
}

void TileParams::validate() const {
  if (dimension != 2 && dimension != 3)
    throw std::invalid_argument("dimension must be 2 or 3");
  check_lattice_size(L);
  auto check_probabilities = [](std::span<const double> ps, const char* what) {
    double sum = 0.0;
    for (double x : ps) {
      if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(what) + " probabilities must lie in [0, 1]");
      sum += x;
    }
    if (sum > 1.0 + 1e-12)
      throw std::invalid_argument(std::string(what) + " probabilities must sum to at most 1");
  };
  if (dimension == 2)
    check_probabilities(p, "p1, p2, p3");
  else
    check_probabilities(pf, "pF22, pF42");
}

ProblemInstance generate_tile_instance(const TileParams& params, RngStream& rng) {
  params.validate();
  const LatticeDecomposition lattice =
      params.dimension == 2 ? decompose_square(params.L) : decompose_cubic(params.L);

  ProblemInstance out;
  out.problem_type = "TP";
  out.polynomial = MultilinearPolynomial(lattice.num_vertices(), Domain::spin);
  long long certificate = 0;
  std::array<std::size_t, 4> class_counts{};

  for (const LatticeCell& cell : lattice.cells) {
    CellSubproblem sub;
    if (params.dimension == 2) {
      const std::size_t cls = rng.categorical(params.p);
      sub = sample_square_subproblem(static_cast<int>(cls) + 1, rng);
      ++class_counts[cls];
    } else {
      const std::size_t cls = rng.categorical(params.pf);
      const auto& orbit = cached_orbit(static_cast<CellClass>(static_cast<int>(CellClass::F22) + cls));
      sub = orbit[rng.index(orbit.size())];
      ++class_counts[cls];
    }
    for (std::size_t e = 0; e < cell.edges.size(); ++e) {
      const auto [a, b] = cell.edges[e];
      out.polynomial.add_term({a, b}, sub.couplers[e]);
    }
    certificate += sub.fm_energy;
  }

  if (params.gauge_transform) {
    Assignment q(out.polynomial.num_variables());
    for (auto& v : q) v = static_cast<std::int8_t>(rng.rademacher());
    out.polynomial = gauge_transform(out.polynomial, q);
  }

  out.ground_energy = static_cast<double>(certificate);
  out.metadata["dimension"] = params.dimension;
  out.metadata["L"] = params.L;
  out.metadata["num_cells"] = lattice.cells.size();
  Json counts = Json::object();
  if (params.dimension == 2) {
    for (int c = 0; c < 4; ++c) counts["C" + std::to_string(c + 1)] = class_counts[c];
  } else {
    counts["F22"] = class_counts[0];
    counts["F42"] = class_counts[1];
    counts["F6"] = class_counts[2];
  }
  out.metadata["class_counts"] = counts;
  out.metadata["gauge_transform"] = params.gauge_transform;
  return out;
}

}  // namespace pforge
