#include "pforge/dcl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pforge {

namespace {

CellPair ordered(Index a, Index b) { return a < b ? CellPair{a, b} : CellPair{b, a}; }

}  // namespace

std::size_t ChimeraGraph::num_intra_edges() const { return 16 * Lx * Ly; }

std::size_t ChimeraGraph::num_inter_edges() const {
  return 4 * (Lx - 1) * Ly + 4 * Lx * (Ly - 1);
}

ChimeraGraph build_chimera(std::size_t Lx, std::size_t Ly) {
  if (Lx < 1 || Ly < 1 || Lx > kMaxChimeraSize || Ly > kMaxChimeraSize)
    throw std::invalid_argument("Chimera dimensions must lie in [1, 16]");
  ChimeraGraph g;
  g.Lx = Lx;
  g.Ly = Ly;
  auto cell = [Lx](std::size_t cx, std::size_t cy) { return static_cast<Index>(cx + Lx * cy); };
  auto qubit = [](Index c, int k) { return static_cast<Index>(8 * c + k); };
  for (std::size_t cy = 0; cy < Ly; ++cy) {
    for (std::size_t cx = 0; cx < Lx; ++cx) {
      const Index c = cell(cx, cy);
      for (int v = 0; v < 4; ++v) {
        for (int h = 4; h < 8; ++h) g.edges.push_back({qubit(c, v), qubit(c, h), false, {c, c}});
      }
      if (cx + 1 < Lx) {
        const Index east = cell(cx + 1, cy);
        for (int h = 4; h < 8; ++h)
          g.edges.push_back({qubit(c, h), qubit(east, h), true, ordered(c, east)});
      }
      if (cy + 1 < Ly) {
        const Index north = cell(cx, cy + 1);
        for (int v = 0; v < 4; ++v)
          g.edges.push_back({qubit(c, v), qubit(north, v), true, ordered(c, north)});
      }
    }
  }
  return g;
}

LogicalLoop random_loop(std::size_t Lx, std::size_t Ly, RngStream& rng) {
  if (Lx < 2 || Ly < 2)
    throw std::invalid_argument("loops need a logical lattice of at least 2 x 2 cells");
  const std::size_t n = Lx * Ly;
  std::vector<std::ptrdiff_t> position(n, -1);  // index of a vertex in the path
  std::vector<Index> path;

  Index current = static_cast<Index>(rng.index(n));
  Index previous = current;
  position[current] = 0;
  path.push_back(current);

  std::vector<Index> options;
  while (true) {
    const std::size_t x = current % Lx;
    const std::size_t y = current / Lx;
    options.clear();
    auto offer = [&](Index next) {
      if (path.size() < 2 || next != previous) options.push_back(next);
    };
    if (x > 0) offer(current - 1);
    if (x + 1 < Lx) offer(current + 1);
    if (y > 0) offer(static_cast<Index>(current - Lx));
    if (y + 1 < Ly) offer(static_cast<Index>(current + Lx));
    const Index next = options[rng.index(options.size())];
    if (position[next] >= 0) {
      LogicalLoop loop;
      loop.cycle.assign(path.begin() + position[next], path.end());
      for (std::size_t i = 0; i < loop.cycle.size(); ++i)
        loop.edges.push_back(ordered(loop.cycle[i], loop.cycle[(i + 1) % loop.cycle.size()]));
      loop.af_edge = rng.index(loop.edges.size());
      return loop;
    }
    position[next] = static_cast<std::ptrdiff_t>(path.size());
    path.push_back(next);
    previous = current;
    current = next;
  }
}

std::size_t DclParams::num_loops() const {
  const auto m = static_cast<std::size_t>(
      std::llround(alpha * static_cast<double>(Lx) * static_cast<double>(Ly)));
  return m == 0 ? 1 : m;
}

void DclParams::validate() const {
  if (Lx < 1 || Ly < 1 || Lx > kMaxChimeraSize || Ly > kMaxChimeraSize)
    throw std::invalid_argument("Lx and Ly must lie in [1, 16]");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be a positive number");
  if (R < 1) throw std::invalid_argument("R must be an integer greater than zero");
  if (!(lambda >= 1.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be at least 1");
}

std::map<CellPair, int> accumulate_loops(const std::vector<LogicalLoop>& loops) {
  std::map<CellPair, int> acc;
  for (const auto& loop : loops) {
    for (std::size_t i = 0; i < loop.edges.size(); ++i) acc[loop.edges[i]] += loop.coupler(i);
  }
  return acc;
}

MultilinearPolynomial embed_loops(const ChimeraGraph& graph,
                                  const std::map<CellPair, int>& logical, double lambda) {
  MultilinearPolynomial p(graph.num_nodes(), Domain::spin);
  for (const auto& e : graph.edges) {
    if (!e.inter_cell) {
      p.add_term({e.u, e.v}, -1.0);
      continue;
    }
    auto it = logical.find(e.cells);
    if (it != logical.end() && it->second != 0) p.add_term({e.u, e.v}, lambda * it->second);
  }
  return p;
}

DclSample generate_dcl(const DclParams& params, RngStream& rng) {
  params.validate();
  if (params.Lx < 2 || params.Ly < 2)
    throw std::invalid_argument("deceptive cluster loops need Lx >= 2 and Ly >= 2");
  const std::size_t m = params.num_loops();
  const ChimeraGraph graph = build_chimera(params.Lx, params.Ly);

  DclSample out;
  for (std::size_t attempt = 1; attempt <= kDclMaxAttempts; ++attempt) {
    std::vector<LogicalLoop> loops;
    loops.reserve(m);
    for (std::size_t k = 0; k < m; ++k) loops.push_back(random_loop(params.Lx, params.Ly, rng));
    auto logical = accumulate_loops(loops);
    bool rugged = false;
    for (const auto& [edge, value] : logical) {
      if (std::abs(value) > params.R) {
        rugged = true;
        break;
      }
    }
    if (rugged) continue;

    out.loops = std::move(loops);
    out.logical_couplers = std::move(logical);
    out.attempts = attempt;
    out.instance.problem_type = "DCL";
    out.instance.polynomial = embed_loops(graph, out.logical_couplers, params.lambda);
    out.instance.metadata["Lx"] = params.Lx;
    out.instance.metadata["Ly"] = params.Ly;
    out.instance.metadata["M"] = m;
    out.instance.metadata["alpha"] = params.alpha;
    out.instance.metadata["effective_alpha"] =
        static_cast<double>(m) / static_cast<double>(params.Lx * params.Ly);
    out.instance.metadata["R"] = params.R;
    out.instance.metadata["lambda"] = params.lambda;
    out.instance.metadata["inter_cell_normalization"] = "replicated";
    out.instance.metadata["attempts"] = attempt;
    return out;
  }
  throw GenerationError("no loop set with |J| <= R = " + std::to_string(params.R) + " found in " +
                        std::to_string(kDclMaxAttempts) + " attempts (M = " + std::to_string(m) +
                        "); the (alpha, R) combination looks infeasible");
}

}  // namespace pforge
