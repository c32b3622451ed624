#pragma once

// Bundled diagram fixtures, built constructively so the test suites and the
// self-test runner need no files on disk.  The on-disk fixtures/ directory
// mirrors these via serialize_vsg.

#include "yamada/diagram.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace yamada::fixtures {

/// The unknot as a bare free loop.
inline Diagram unknot_loop() { return Diagram({}, {}, 1); }

/// The unknot as one degree-2 vertex carrying a loop edge.
inline Diagram unknot_vertex() {
  return Diagram({{"u", NodeKind::Vertex, 2, false}}, {Edge({"u", 0}, {"u", 1})});
}

/// K1: a single isolated vertex.
inline Diagram isolated_vertex() { return Diagram({{"u", NodeKind::Vertex, 0, false}}, {}); }

inline Diagram two_free_loops() { return Diagram({}, {}, 2); }

/// Planar theta: rotations reversed at the second vertex.
inline Diagram theta_planar() {
  return Diagram({{"u", NodeKind::Vertex, 3, false}, {"v", NodeKind::Vertex, 3, false}},
                 {Edge({"u", 0}, {"v", 0}), Edge({"u", 1}, {"v", 2}), Edge({"u", 2}, {"v", 1})});
}

/// Nonplanar theta: the same cyclic order (e1,e2,e3) at both vertices.
inline Diagram theta_nonplanar() {
  return Diagram({{"u", NodeKind::Vertex, 3, false}, {"v", NodeKind::Vertex, 3, false}},
                 {Edge({"u", 0}, {"v", 0}), Edge({"u", 1}, {"v", 1}), Edge({"u", 2}, {"v", 2})});
}

/// Dumbbell: two loops joined by a bridge; the bridge is a normal isthmus.
inline Diagram isthmus_dumbbell() {
  return Diagram({{"a", NodeKind::Vertex, 3, false}, {"b", NodeKind::Vertex, 3, false}},
                 {Edge({"a", 0}, {"a", 1}), Edge({"b", 0}, {"b", 1}), Edge({"a", 2}, {"b", 2})});
}

/// Closed unknot diagram with one kink of the given sign.
inline Diagram curl_unknot(int sign) {
  std::vector<Edge> edges;
  if (sign > 0)
    edges = {Edge({"k", 1}, {"k", 2}), Edge({"k", 3}, {"k", 0})};
  else
    edges = {Edge({"k", 2}, {"k", 3}), Edge({"k", 1}, {"k", 0})};
  return Diagram({{"k", NodeKind::Crossing, 4, false}}, std::move(edges));
}

/// Virtual Hopf link: one classical crossing whose strands close up directly.
inline Diagram virtual_hopf() {
  return Diagram({{"c", NodeKind::Crossing, 4, false}},
                 {Edge({"c", 0}, {"c", 2}), Edge({"c", 1}, {"c", 3})});
}

/// Virtual trefoil: two positive crossings visited over,over,under,under.
inline Diagram virtual_trefoil() {
  return Diagram({{"c1", NodeKind::Crossing, 4, false}, {"c2", NodeKind::Crossing, 4, false}},
                 {Edge({"c1", 2}, {"c2", 0}), Edge({"c2", 2}, {"c1", 1}),
                  Edge({"c1", 3}, {"c2", 1}), Edge({"c2", 3}, {"c1", 0})});
}

/// Closure of a braid word on `strands` strands.  Letters are nonzero ints:
/// +i is the positive generator on strands (i-1, i), -i its inverse.  All
/// strands run upward; one orientation seed is emitted per component.
inline Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("braid_closure: need at least one strand");
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // dangling[i]: the half-edge currently open at the top of strand i
  std::vector<HalfEdgeRef> dangling(strands), bottom(strands);
  std::vector<bool> touched(strands, false);
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);

  int cn = 0;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw DiagramError("braid_closure: bad letter");
    const std::string id = "c" + std::to_string(++cn);
    nodes.push_back({id, NodeKind::Crossing, 4, false});
    // slot layout keeps the over strand on (0,2):
    //   positive: 0=top-right 1=top-left 2=bottom-left 3=bottom-right
    //   negative: 0=top-left 1=bottom-left 2=bottom-right 3=top-right
    int bl, br, tl, tr;
    if (g > 0) {
      tr = 0; tl = 1; bl = 2; br = 3;
    } else {
      tl = 0; bl = 1; br = 2; tr = 3;
    }
    auto attach = [&](int strand, int slot) {
      const HalfEdgeRef h{id, slot};
      if (touched[strand])
        edges.emplace_back(dangling[strand], h);
      else {
        bottom[strand] = h;
        touched[strand] = true;
      }
    };
    attach(i, bl);
    attach(i + 1, br);
    dangling[i] = {id, tl};
    dangling[i + 1] = {id, tr};
    std::swap(perm[i], perm[i + 1]);
  }

  long loops = 0;
  for (int s = 0; s < strands; ++s) {
    if (!touched[s]) {
      ++loops;
      continue;
    }
    edges.emplace_back(dangling[s], bottom[s]);
  }

  // one upward seed per closed component (cycles of the strand permutation)
  std::vector<HalfEdgeRef> seeds;
  std::vector<bool> seen(strands, false);
  for (int s = 0; s < strands; ++s) {
    if (seen[s] || !touched[s]) continue;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    seeds.push_back(dangling[s]);
  }
  return Diagram(std::move(nodes), std::move(edges), loops, std::move(seeds));
}

/// Positive classical trefoil (writhe +3).
inline Diagram classical_trefoil() { return braid_closure(2, {1, 1, 1}); }

/// Figure-eight knot (amphicheiral, writhe 0).
inline Diagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }

/// Positive classical Hopf link (writhe +2).
inline Diagram hopf_classical() { return braid_closure(2, {1, 1}); }

/// One classical crossing and one rigid degree-4 vertex, wired as in the
/// paper's worked one-crossing example; reconstructed from its published
/// network coding.
inline Diagram example_one_crossing() {
  return Diagram({{"c", NodeKind::Crossing, 4, false}, {"v", NodeKind::Vertex, 4, false}},
                 {Edge({"c", 0}, {"v", 0}), Edge({"c", 1}, {"v", 1}), Edge({"c", 3}, {"v", 2}),
                  Edge({"c", 2}, {"v", 3})});
}

/// Re-encoded variant of the same example (the published second coding).
inline Diagram example_one_crossing_variant() {
  return Diagram({{"c", NodeKind::Crossing, 4, false}, {"v", NodeKind::Vertex, 4, false}},
                 {Edge({"c", 0}, {"v", 0}), Edge({"c", 2}, {"v", 1}), Edge({"c", 1}, {"v", 2}),
                  Edge({"c", 3}, {"v", 3})});
}

/// All bundled fixtures by name, in a stable order.
inline std::vector<std::pair<std::string, Diagram>> all() {
  return {
      {"unknot_loop", unknot_loop()},
      {"unknot_vertex", unknot_vertex()},
      {"isolated_vertex", isolated_vertex()},
      {"two_free_loops", two_free_loops()},
      {"theta_planar", theta_planar()},
      {"theta_nonplanar", theta_nonplanar()},
      {"isthmus_dumbbell", isthmus_dumbbell()},
      {"curl_positive", curl_unknot(+1)},
      {"curl_negative", curl_unknot(-1)},
      {"virtual_hopf", virtual_hopf()},
      {"virtual_trefoil", virtual_trefoil()},
      {"classical_trefoil", classical_trefoil()},
      {"figure_eight", figure_eight()},
      {"hopf_classical", hopf_classical()},
      {"example_one_crossing", example_one_crossing()},
      {"example_one_crossing_variant", example_one_crossing_variant()},
  };
}

}  // namespace yamada::fixtures
