#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "yamada/diagram.hpp"
#include "yamada/topology.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace testsupport {

// Brute-force boundary walker: builds the ribbon surface explicitly as a
// polygonal complex (vertex discs with attachment arcs, untwisted bands
// with two free sides) and counts the stitched boundary cycles.  This is a
// different construction from the half-edge permutation used by the library.
inline long brute_force_boundary_components(const yamada::Diagram& d, yamada::SubgraphMask mask) {
  using yamada::HalfEdgeRef;

  // boundary points: before(h) and after(h) around each disc, ccw
  std::map<HalfEdgeRef, int> before, after;
  std::map<std::string, std::vector<int>> present;
  int npts = 0;
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    if (!(mask >> e & 1)) continue;
    for (const HalfEdgeRef& h : {d.edges()[e].a, d.edges()[e].b}) {
      before[h] = npts++;
      after[h] = npts++;
      present[h.node].push_back(h.slot);
    }
  }

  std::vector<int> parent(npts);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // free corner arcs of each disc: after(slot_i) -- before(slot_{i+1})
  for (auto& [node, slots] : present) {
    std::sort(slots.begin(), slots.end());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const int s = slots[i];
      const int t = slots[(i + 1) % slots.size()];
      unite(after.at({node, s}), before.at({node, t}));
    }
  }
  // free band sides: before(h1) -- after(h2) and before(h2) -- after(h1)
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    if (!(mask >> e & 1)) continue;
    const HalfEdgeRef h1 = d.edges()[e].a, h2 = d.edges()[e].b;
    unite(before.at(h1), after.at(h2));
    unite(before.at(h2), after.at(h1));
  }

  std::set<int> roots;
  for (int p = 0; p < npts; ++p) roots.insert(find(p));
  long isolated = 0;
  for (const auto& [id, n] : d.nodes())
    if (!present.count(id)) ++isolated;
  return static_cast<long>(roots.size()) + isolated;
}

}  // namespace testsupport
