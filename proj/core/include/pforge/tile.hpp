#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pforge/instance.hpp"
#include "pforge/polynomial.hpp"
#include "pforge/rng.hpp"

namespace pforge {

/// One unit-cell subgraph of a periodic lattice. `edges` are given in the
/// cell's local edge order, which coupler labelings refer to.
struct LatticeCell {
  std::vector<Index> vertices;
  std::vector<std::pair<Index, Index>> edges;
};

/// Edge-disjoint cover of a periodic square (2D) or cubic (3D) lattice by
/// unit cells; every vertex lies in exactly two cells.
struct LatticeDecomposition {
  int dimension = 2;
  std::size_t L = 0;
  std::vector<LatticeCell> cells;

  std::size_t num_vertices() const;
  std::size_t num_edges() const;
};

/// Checkerboard of plaquettes (i + j even) on an L x L torus. Vertex (i, j)
/// has index i + L * j.
LatticeDecomposition decompose_square(std::size_t L);

/// Unit cubes at (x, y, z) with x + y and y + z even on an L^3 torus.
/// Vertex (x, y, z) has index x + L * (y + L * z).
LatticeDecomposition decompose_cubic(std::size_t L);

enum class CellClass { C1, C2, C3, C4, F22, F42, F6 };

std::string to_string(CellClass cls);

/// A cell Hamiltonian: couplers in {+1, -1, -2} on the cell's local edges.
struct CellSubproblem {
  CellClass cls = CellClass::C1;
  std::vector<int> couplers;
  int fm_energy = 0;  // energy of the all-ones state

  friend bool operator==(const CellSubproblem&, const CellSubproblem&) = default;
};

/// Local edges of the plaquette, as pairs of local vertices 0..3 around
/// the cycle (i,j) -> (i+1,j) -> (i+1,j+1) -> (i,j+1).
const std::array<std::pair<int, int>, 4>& square_cell_edges();

/// Local edges of the cube; local vertex v has offsets (v & 1, v >> 1 & 1, v >> 2 & 1).
const std::array<std::pair<int, int>, 12>& cube_cell_edges();

/// Local edge indices of the six cube facets.
const std::array<std::array<int, 4>, 6>& cube_facets();

/// Class C_i plaquette: one +1 coupler on a uniformly chosen edge, i - 1
/// uniformly chosen remaining edges at -1, the rest at -2.
CellSubproblem sample_square_subproblem(int class_index, RngStream& rng);

/// Fixed representative of a cubic class (F22, F42 or F6).
CellSubproblem cubic_representative(CellClass cls);

/// Images of a 12-edge labeling under the 48 rotations and reflections of
/// the cube. Throws std::invalid_argument unless all 48 are distinct.
std::vector<CellSubproblem> cubic_orbit(const CellSubproblem& representative);

/// Number of cube facets carrying an odd number of +1 couplers.
int frustrated_facet_count(const std::vector<int>& couplers);

/// The subproblem's polynomial on the cell's local vertices 0..n-1.
MultilinearPolynomial cell_polynomial(const CellSubproblem& cell);

struct TileParams {
  int dimension = 2;
  std::size_t L = 4;
  std::array<double, 3> p{1.0, 0.0, 0.0};  // p1, p2, p3 (2D)
  std::array<double, 2> pf{1.0, 0.0};      // pF22, pF42 (3D)
  bool gauge_transform = false;

  std::size_t num_variables() const;
  /// Throws std::invalid_argument describing the first violated rule.
  void validate() const;
};

ProblemInstance generate_tile_instance(const TileParams& params, RngStream& rng);

}  // namespace pforge
