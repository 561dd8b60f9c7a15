#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pforge/instance.hpp"
#include "pforge/rng.hpp"

namespace pforge {

inline constexpr std::size_t kMaxChimeraSize = 16;
inline constexpr std::size_t kDclMaxAttempts = 10000;

/// Logical cell pair (a, b) with a < b; cell (cx, cy) has index cx + Lx * cy.
using CellPair = std::pair<Index, Index>;

struct ChimeraEdge {
  Index u = 0;
  Index v = 0;
  bool inter_cell = false;
  CellPair cells{};  // the logical pair for inter-cell edges
};

/// Chimera graph of Lx x Ly unit cells. Qubit k of cell c has index 8c + k;
/// qubits 0-3 are vertical (couple north/south), 4-7 horizontal (couple
/// east/west), and each cell is a complete bipartite K_{4,4}.
struct ChimeraGraph {
  std::size_t Lx = 0;
  std::size_t Ly = 0;
  std::vector<ChimeraEdge> edges;

  std::size_t num_nodes() const { return 8 * Lx * Ly; }
  std::size_t num_intra_edges() const;
  std::size_t num_inter_edges() const;
};

ChimeraGraph build_chimera(std::size_t Lx, std::size_t Ly);

/// A simple cycle on the logical grid with one antiferromagnetic edge.
struct LogicalLoop {
  std::vector<Index> cycle;      // vertices in walk order; closes back to cycle.front()
  std::vector<CellPair> edges;   // edges[i] joins cycle[i] and cycle[i+1 mod n]
  std::size_t af_edge = 0;       // index into edges carrying +1; the rest carry -1

  int coupler(std::size_t i) const { return i == af_edge ? 1 : -1; }
};

/// Non-backtracking random walk on the open Lx x Ly grid from a uniform
/// start, stopped at the first revisit; the closed part is kept.
LogicalLoop random_loop(std::size_t Lx, std::size_t Ly, RngStream& rng);

struct DclParams {
  std::size_t Lx = 2;
  std::size_t Ly = 2;
  double alpha = 0.5;
  int R = 1;
  double lambda = 1.0;

  /// M = round(alpha * Lx * Ly), at least one.
  std::size_t num_loops() const;
  void validate() const;
};

/// Sum over loops of the per-loop couplers on each logical edge.
std::map<CellPair, int> accumulate_loops(const std::vector<LogicalLoop>& loops);

/// Physical Chimera instance: intra-cell couplers -1, each logical coupler
/// replicated on its four inter-cell couplers and scaled by lambda.
MultilinearPolynomial embed_loops(const ChimeraGraph& graph,
                                  const std::map<CellPair, int>& logical, double lambda);

struct DclSample {
  ProblemInstance instance;
  std::vector<LogicalLoop> loops;
  std::map<CellPair, int> logical_couplers;
  std::size_t attempts = 0;
};

/// Samples M loops, rejecting the whole set while any |J_ij| > R (up to
/// kDclMaxAttempts tries; GenerationError after that), then embeds them.
DclSample generate_dcl(const DclParams& params, RngStream& rng);

inline ProblemInstance generate_dcl_instance(const DclParams& params, RngStream& rng) {
  return generate_dcl(params, rng).instance;
}

}  // namespace pforge
