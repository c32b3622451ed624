#pragma once

// Rotation-system combinatorics: connected components, boundary components
// of the associated orientable ribbon graph, subgraph genus, and the genus
// of a diagram's carrier surface.
//
// Edge subsets are bitmasks over the diagram's sorted edge list.  Boundary
// tracing walks the permutation phi = rotation . edge-involution on the
// half-edges of the chosen subset; an isolated vertex disc contributes one
// boundary circle.  Free loops are annuli and are deliberately ignored here
// (their factor is applied in the evaluator).

#include "yamada/diagram.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace yamada {

using SubgraphMask = std::uint64_t;

/// Signals a violated internal invariant (e.g. Euler parity), which would
/// mean a boundary-tracing bug rather than bad user input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

/// Dense index over a diagram's rotation system.  Half-edge ids are 2e and
/// 2e+1 for the two ends of edge e; the twin involution is id^1.  Built once,
/// then components/boundary counts are cheap per mask (the evaluator sweeps
/// every subset of edges).
struct RibbonIndex {
  int V = 0;
  int E = 0;
  std::vector<std::array<int, 2>> edge_node;            // per edge: node indices
  std::vector<std::vector<std::pair<int, int>>> slots;  // per node: (slot, half) sorted

  explicit RibbonIndex(const Diagram& d) {
    std::map<std::string, int> idx;
    for (const auto& [id, n] : d.nodes()) idx.emplace(id, static_cast<int>(idx.size()));
    V = static_cast<int>(idx.size());
    E = static_cast<int>(d.edges().size());
    edge_node.resize(E);
    slots.resize(V);
    for (int e = 0; e < E; ++e) {
      const Edge& ed = d.edges()[e];
      const int na = idx.at(ed.a.node), nb = idx.at(ed.b.node);
      edge_node[e] = {na, nb};
      slots[na].emplace_back(ed.a.slot, 2 * e);
      slots[nb].emplace_back(ed.b.slot, 2 * e + 1);
    }
    for (auto& s : slots) std::sort(s.begin(), s.end());
  }

  long components(SubgraphMask mask) const {
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    long k = V;
    for (int e = 0; e < E; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = find(edge_node[e][0]), b = find(edge_node[e][1]);
      if (a != b) {
        parent[a] = b;
        --k;
      }
    }
    return k;
  }

  /// Orbits of phi = rotation-successor . twin over masked half-edges, plus
  /// one per node whose incident masked edge set is empty.
  long boundary(SubgraphMask mask) const {
    std::vector<int> succ(2 * E, -1);
    std::vector<char> node_busy(V, 0);
    for (int n = 0; n < V; ++n) {
      int first = -1, prev = -1;
      for (const auto& [slot, half] : slots[n]) {
        if (!(mask >> (half / 2) & 1)) continue;
        node_busy[n] = 1;
        if (first < 0)
          first = half;
        else
          succ[prev] = half;
        prev = half;
      }
      if (first >= 0) succ[prev] = first;
    }
    std::vector<char> seen(2 * E, 0);
    long orbits = 0;
    for (int h = 0; h < 2 * E; ++h) {
      if (!(mask >> (h / 2) & 1) || seen[h]) continue;
      ++orbits;
      int cur = h;
      while (!seen[cur]) {
        seen[cur] = 1;
        cur = succ[cur ^ 1];  // cross the edge, then turn to the next slot
      }
    }
    long isolated = 0;
    for (int n = 0; n < V; ++n)
      if (!node_busy[n]) ++isolated;
    return orbits + isolated;
  }
};

inline void require_cyclic(const Diagram& d, const char* op) {
  if (!d.is_cyclic_graph())
    throw DiagramError(std::string(op) + " requires a crossing-free cyclic graph");
}

inline void require_mask(const Diagram& d, SubgraphMask mask) {
  if (d.edges().size() < 64 && (mask >> d.edges().size()) != 0)
    throw DiagramError("subgraph mask references edges beyond the edge list");
}

}  // namespace detail

inline SubgraphMask full_mask(const Diagram& d) {
  if (d.edges().size() > 63) throw DiagramError("diagram too large for 64-bit edge masks");
  return (SubgraphMask{1} << d.edges().size()) - 1;
}

/// Connected components of the spanning subgraph <F>, isolated vertices
/// included, free loops excluded.
inline long components(const Diagram& g, SubgraphMask mask) {
  detail::require_cyclic(g, "components");
  detail::require_mask(g, mask);
  return detail::RibbonIndex(g).components(mask);
}

/// Boundary circles of the ribbon surface of <F>.
inline long boundary_components(const Diagram& g, SubgraphMask mask) {
  detail::require_cyclic(g, "boundary_components");
  detail::require_mask(g, mask);
  return detail::RibbonIndex(g).boundary(mask);
}

/// Genus of <F> from |V| - |F| + bc(F) = 2k(F) - 2g(F).
inline long subgraph_genus(const Diagram& g, SubgraphMask mask) {
  detail::require_cyclic(g, "subgraph_genus");
  detail::require_mask(g, mask);
  const detail::RibbonIndex ix(g);
  const long V = ix.V;
  const long F = std::popcount(mask & full_mask(g));
  const long bc = ix.boundary(mask);
  const long k = ix.components(mask);
  const long twice_genus = 2 * k - (V - F + bc);
  if (twice_genus % 2 != 0)
    throw InternalConsistencyError("Euler parity violated in subgraph_genus");
  if (twice_genus < 0) throw InternalConsistencyError("negative genus in subgraph_genus");
  return twice_genus / 2;
}

/// Genus of the closed surface carrying the diagram: crossings count as
/// degree-4 ribbon vertices; free loops are ignored.
inline long carrier_genus(const Diagram& d) {
  if (d.nodes().empty()) return 0;
  const SubgraphMask mask = full_mask(d);
  const detail::RibbonIndex ix(d);
  const long bc = ix.boundary(mask);
  const long k = ix.components(mask);
  const long twice = ix.E - ix.V - bc + 2 * k;
  if (twice % 2 != 0) throw InternalConsistencyError("Euler parity violated in carrier_genus");
  if (twice < 0) throw InternalConsistencyError("negative genus in carrier_genus");
  return twice / 2;
}

}  // namespace yamada
