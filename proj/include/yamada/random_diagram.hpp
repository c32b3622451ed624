#pragma once

// Seeded random diagram generation for the property suites.  A diagram is
// just a rotation system plus a perfect matching on half-edge slots, so any
// random matching is a valid (generally virtual) diagram.

#include "yamada/diagram.hpp"

#include <random>
#include <string>
#include <vector>

namespace yamada {

struct RandomDiagramOptions {
  int max_crossings = 4;
  int max_vertices = 2;
  int max_vertex_degree = 4;
  int max_edges = 8;
  int max_free_loops = 1;
  bool vertices_allowed = true;
};

inline Diagram random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opt = {}) {
  for (;;) {
    std::uniform_int_distribution<int> cdist(0, opt.max_crossings);
    const int c = cdist(rng);
    int nv = 0;
    std::vector<int> degs;
    if (opt.vertices_allowed && opt.max_vertices > 0) {
      nv = std::uniform_int_distribution<int>(0, opt.max_vertices)(rng);
      for (int i = 0; i < nv; ++i)
        degs.push_back(std::uniform_int_distribution<int>(0, opt.max_vertex_degree)(rng));
    }
    long half = 4L * c;
    for (int d : degs) half += d;
    if (half % 2 != 0) {
      // bump one degree to fix parity (or retry when there is none to bump)
      bool bumped = false;
      for (int& d : degs)
        if (!bumped && d < opt.max_vertex_degree) {
          ++d;
          ++half;
          bumped = true;
        }
      if (!bumped) continue;
    }
    if (half / 2 > opt.max_edges) continue;

    std::vector<Node> nodes;
    std::vector<HalfEdgeRef> slots;
    for (int i = 0; i < c; ++i) {
      const std::string id = "c" + std::to_string(i + 1);
      nodes.push_back({id, NodeKind::Crossing, 4, false});
      for (int s = 0; s < 4; ++s) slots.push_back({id, s});
    }
    for (int i = 0; i < nv; ++i) {
      const std::string id = "v" + std::to_string(i + 1);
      nodes.push_back({id, NodeKind::Vertex, degs[i], false});
      for (int s = 0; s < degs[i]; ++s) slots.push_back({id, s});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) edges.emplace_back(slots[i], slots[i + 1]);
    const long loops = std::uniform_int_distribution<int>(0, opt.max_free_loops)(rng);
    return Diagram(std::move(nodes), std::move(edges), loops);
  }
}

/// Random oriented link diagram: crossings only, never empty, with one
/// orientation seed per component.
inline Diagram random_link_diagram(std::mt19937_64& rng, int max_crossings, int max_free_loops = 1) {
  const int c = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  std::vector<Node> nodes;
  std::vector<HalfEdgeRef> slots;
  for (int i = 0; i < c; ++i) {
    const std::string id = "c" + std::to_string(i + 1);
    nodes.push_back({id, NodeKind::Crossing, 4, false});
    for (int s = 0; s < 4; ++s) slots.push_back({id, s});
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < slots.size(); i += 2) edges.emplace_back(slots[i], slots[i + 1]);
  const long loops = std::uniform_int_distribution<int>(0, max_free_loops)(rng);
  Diagram plain(std::move(nodes), std::move(edges), loops);

  // trace strand components and seed each once
  std::set<HalfEdgeRef> visited;
  std::vector<HalfEdgeRef> seeds;
  for (const auto& [id, n] : plain.nodes()) {
    for (int s = 0; s < 4; ++s) {
      const HalfEdgeRef start{id, s};
      if (visited.count(start)) continue;
      seeds.push_back(start);
      HalfEdgeRef h = start;
      do {
        visited.insert(h);
        const HalfEdgeRef arrive = plain.partner(h);
        visited.insert(arrive);  // reverse direction departs here
        h = {arrive.node, (arrive.slot + 2) % 4};
      } while (!(h == start));
    }
  }
  std::vector<Node> nodes2;
  for (const auto& [id, n] : plain.nodes()) nodes2.push_back(n);
  return Diagram(std::move(nodes2), plain.edges(), plain.free_loops(), std::move(seeds));
}

}  // namespace yamada
