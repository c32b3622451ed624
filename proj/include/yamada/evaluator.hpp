#pragma once

// The two computation engines for R(D; a, x), plus normalizations,
// non-classicality detection, and the classical Dubrovnik skein oracle.
//
// Engine one (eval_R) resolves crossings recursively into
//   a * s+  +  a^-1 * s-  +  x^-1 * s0
// and evaluates crossing-free remnants through structural shortcuts
// (degree-2 absorption, disjoint-union factorization, isthmus annihilation,
// adjacent-loop factors, one-point-join splitting) with memoization.
// Engine two (eval_R_statesum) expands the full 3^c state space with no
// shortcuts and no memoization; it exists to check engine one.

#include "yamada/diagram.hpp"
#include "yamada/poly.hpp"
#include "yamada/topology.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace yamada {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The classical Dubrovnik skein relations cannot reduce the diagram.
class DubrovnikError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spanning-subgraph engine for crossing-free diagrams:
//   R(S) = sum over F of x^(|E|-|F|) z^k(F) mu^(bc(F)-k(F)),  times the
// circle value per free loop.
// ---------------------------------------------------------------------------

inline Poly2 eval_cyclic(const Diagram& g) {
  if (!g.is_cyclic_graph()) throw EvalError("eval_cyclic requires a crossing-free diagram");
  const SubgraphMask full = full_mask(g);
  const detail::RibbonIndex ix(g);
  const int E = ix.E;

  // mu^m = (-1)^m (a + a^-1 + 2)^m x^m; precompute the (a+a^-1+2) powers
  const Poly2 q = Poly2::monomial(1, 1, 0) + Poly2::monomial(1, -1, 0) + Poly2::monomial(2, 0, 0);
  std::vector<Poly2> qpow{Poly2::one()};
  for (int m = 0; m < ix.V + E; ++m) qpow.push_back(qpow.back() * q);

  Poly2 acc;
  for (SubgraphMask mask = 0;; ++mask) {
    const long k = ix.components(mask);
    const long bc = ix.boundary(mask);
    const long m = bc - k;
    const int xpow = static_cast<int>(E - std::popcount(mask) + bc - 2 * k);
    const Poly2 term = qpow.at(static_cast<std::size_t>(m)).shifted(0, xpow);
    acc += (bc % 2 != 0) ? -term : term;
    if (mask == full) break;
  }
  return acc * CIRCLE_CONST.pow(static_cast<unsigned>(g.free_loops()));
}

// ---------------------------------------------------------------------------
// Shortcut machinery for crossing-free evaluation
// ---------------------------------------------------------------------------

namespace detail {

/// Remove one edge and renumber the freed slots away, preserving the cyclic
/// order of the remaining half-edges.
inline Diagram remove_edge_compacted(const Diagram& d, const Edge& victim) {
  std::map<std::string, std::set<int>> freed;
  freed[victim.a.node].insert(victim.a.slot);
  freed[victim.b.node].insert(victim.b.slot);
  auto remap = [&](const HalfEdgeRef& h) -> HalfEdgeRef {
    auto it = freed.find(h.node);
    if (it == freed.end()) return h;
    int shift = 0;
    for (int s : it->second)
      if (s < h.slot) ++shift;
    return {h.node, h.slot - shift};
  };
  std::vector<Node> nodes;
  for (const auto& [id, n] : d.nodes()) {
    Node m = n;
    auto it = freed.find(id);
    if (it != freed.end()) m.degree -= static_cast<int>(it->second.size());
    nodes.push_back(m);
  }
  std::vector<Edge> edges;
  for (const auto& e : d.edges())
    if (!(e == victim)) edges.emplace_back(remap(e.a), remap(e.b));
  return Diagram(std::move(nodes), std::move(edges), d.free_loops(), {});
}

/// Split into connected components (free loops are not distributed and must
/// be stripped by the caller).
inline std::vector<Diagram> split_components(const Diagram& d) {
  std::map<std::string, std::string> root;
  for (const auto& [id, n] : d.nodes()) root[id] = id;
  std::function<std::string(std::string)> find = [&](std::string x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : d.edges()) {
    const std::string a = find(e.a.node), b = find(e.b.node);
    if (a != b) root[a] = b;
  }
  std::map<std::string, std::vector<Node>> comp_nodes;
  for (const auto& [id, n] : d.nodes()) comp_nodes[find(id)].push_back(n);
  std::map<std::string, std::vector<Edge>> comp_edges;
  for (const auto& e : d.edges()) comp_edges[find(e.a.node)].push_back(e);
  std::vector<Diagram> out;
  for (auto& [r, nodes] : comp_nodes)
    out.emplace_back(std::move(nodes), std::move(comp_edges[r]), 0,
                     std::vector<HalfEdgeRef>{});
  return out;
}

/// Any non-loop bridge in the underlying multigraph?
inline bool has_nonloop_bridge(const Diagram& d) {
  std::map<std::string, int> idx;
  for (const auto& [id, n] : d.nodes()) idx.emplace(id, static_cast<int>(idx.size()));
  const int V = static_cast<int>(idx.size());
  std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbor, edge id)
  int eid = 0;
  for (const auto& e : d.edges()) {
    const int a = idx.at(e.a.node), b = idx.at(e.b.node);
    if (a != b) {
      adj[a].emplace_back(b, eid);
      adj[b].emplace_back(a, eid);
    }
    ++eid;
  }
  std::vector<int> disc(V, -1), low(V, 0);
  int timer = 0;
  bool bridge = false;
  // iterative DFS to keep stack use bounded
  for (int s = 0; s < V && !bridge; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<std::tuple<int, int, std::size_t>> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty() && !bridge) {
      auto& [u, pedge, next] = stack.back();
      if (next < adj[u].size()) {
        const auto [v, id] = adj[u][next++];
        if (id == pedge) continue;
        if (disc[v] < 0) {
          disc[v] = low[v] = timer++;
          stack.emplace_back(v, id, 0);
        } else {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const int p = std::get<0>(stack.back());
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridge = true;
        }
      }
    }
  }
  return bridge;
}

/// A loop edge whose two half-edges sit on cyclically adjacent slots.
inline std::optional<Edge> find_adjacent_loop(const Diagram& d) {
  for (const auto& e : d.edges()) {
    if (e.a.node != e.b.node) continue;
    const int deg = d.node(e.a.node).degree;
    const int i = e.a.slot, j = e.b.slot;
    if ((j == i + 1) || (i == 0 && j == deg - 1)) return e;
  }
  return std::nullopt;
}

/// Try to present a connected cyclic graph as a one-point join: a vertex
/// whose rotation splits into two consecutive arcs with no path between the
/// sides except through the vertex.  Returns the two halves.
inline std::optional<std::pair<Diagram, Diagram>> one_point_split(const Diagram& d) {
  for (const auto& [vid, vn] : d.nodes()) {
    const int k = vn.degree;
    if (k < 2) continue;

    // region of each slot: loops at v get the edge itself as region, other
    // edges the component of d - v containing their far endpoint
    std::map<std::string, std::string> root;
    for (const auto& [id, n] : d.nodes())
      if (id != vid) root[id] = id;
    std::function<std::string(std::string)> find = [&](std::string x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& e : d.edges()) {
      if (e.a.node == vid || e.b.node == vid) continue;
      const std::string a = find(e.a.node), b = find(e.b.node);
      if (a != b) root[a] = b;
    }
    std::vector<std::string> region(k);
    for (int s = 0; s < k; ++s) {
      const HalfEdgeRef far = d.partner({vid, s});
      region[s] = (far.node == vid) ? "loop:" + to_string(Edge({vid, s}, far).a) +
                                          to_string(Edge({vid, s}, far).b)
                                    : "comp:" + find(far.node);
    }

    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        // arc1 = slots [a, b), arc2 = the rest
        std::set<std::string> r1, r2;
        for (int s = 0; s < k; ++s)
          ((s >= a && s < b) ? r1 : r2).insert(region[s]);
        if (r1.empty() || r2.empty()) continue;
        bool crossing_region = false;
        for (const auto& r : r1)
          if (r2.count(r)) crossing_region = true;
        if (crossing_region) continue;

        // build one side: the vertex keeps its id; slots renumbered from the
        // arc start so the cyclic order survives
        auto build = [&](int lo, int len) {
          std::map<int, int> slot_map;
          for (int t = 0; t < len; ++t) slot_map[(lo + t) % k] = t;
          std::set<std::string> keep;  // far components on this side
          for (const auto& [slot, ns] : slot_map) {
            const HalfEdgeRef far = d.partner({vid, slot});
            if (far.node != vid) keep.insert(find(far.node));
          }
          std::vector<Node> nodes;
          nodes.push_back({vid, NodeKind::Vertex, len, false});
          for (const auto& [id, n] : d.nodes())
            if (id != vid && keep.count(find(id))) nodes.push_back(n);
          auto remap = [&](const HalfEdgeRef& h) -> HalfEdgeRef {
            if (h.node != vid) return h;
            return {vid, slot_map.at(h.slot)};
          };
          std::vector<Edge> edges;
          for (const auto& e : d.edges()) {
            const bool at_v_a = e.a.node == vid, at_v_b = e.b.node == vid;
            if (at_v_a && !slot_map.count(e.a.slot)) continue;
            if (at_v_b && !slot_map.count(e.b.slot)) continue;
            if (!at_v_a && !at_v_b && !keep.count(find(e.a.node))) continue;
            edges.emplace_back(remap(e.a), remap(e.b));
          }
          return Diagram(std::move(nodes), std::move(edges), 0, {});
        };
        return std::make_pair(build(a, b - a), build(b, k - b + a));
      }
    }
  }
  return std::nullopt;
}

struct EvalMemo {
  std::map<std::string, Poly2> cyclic;
};

inline Poly2 eval_crossing_free(const Diagram& d, EvalMemo& memo);

inline Poly2 eval_component(const Diagram& comp, EvalMemo& memo) {
  if (has_nonloop_bridge(comp)) return Poly2::zero();  // normal isthmus

  if (const auto loop = find_adjacent_loop(comp)) {
    // an adjacent loop is the one-point join of a loop bouquet with the rest
    const Poly2 factor = Poly2::monomial(-1, 0, 1) * CIRCLE_CONST;  // x + mu
    return factor * eval_crossing_free(remove_edge_compacted(comp, *loop), memo);
  }

  if (const auto split = one_point_split(comp)) {
    const Poly2 zinv = Poly2::monomial(-1, 0, 1);  // z^-1 = -x
    return zinv * eval_crossing_free(split->first, memo) *
           eval_crossing_free(split->second, memo);
  }

  const std::string key = serialize_vsg(comp);
  if (auto it = memo.cyclic.find(key); it != memo.cyclic.end()) return it->second;
  const Poly2 value = eval_cyclic(comp);
  memo.cyclic.emplace(key, value);
  return value;
}

inline Poly2 eval_crossing_free(const Diagram& d0, EvalMemo& memo) {
  const Diagram d = absorb_degree2(d0);
  Poly2 acc = CIRCLE_CONST.pow(static_cast<unsigned>(d.free_loops()));
  if (d.nodes().empty()) return acc;
  const Diagram stripped(
      [&] {
        std::vector<Node> ns;
        for (const auto& [id, n] : d.nodes()) ns.push_back(n);
        return ns;
      }(),
      d.edges(), 0, {});
  for (const Diagram& comp : split_components(stripped)) acc *= eval_component(comp, memo);
  return acc;
}

inline Poly2 eval_R_impl(const Diagram& d, EvalMemo& memo, bool swap_smoothing) {
  const auto crossings = d.crossing_ids();
  if (crossings.empty()) return eval_crossing_free(d, memo);
  const std::string& c = crossings.front();  // lowest id first
  const Poly2 coef_plus = Poly2::monomial(1, swap_smoothing ? -1 : 1, 0);
  const Poly2 coef_minus = Poly2::monomial(1, swap_smoothing ? 1 : -1, 0);
  const Poly2 coef_zero = Poly2::monomial(1, 0, -1);
  return coef_plus * eval_R_impl(smooth(d, c, SmoothKind::SPlus), memo, swap_smoothing) +
         coef_minus * eval_R_impl(smooth(d, c, SmoothKind::SMinus), memo, swap_smoothing) +
         coef_zero * eval_R_impl(smooth(d, c, SmoothKind::SZero), memo, swap_smoothing);
}

}  // namespace detail

/// Recursive skein engine with structural shortcuts and memoization.
inline Poly2 eval_R(const Diagram& d) {
  detail::EvalMemo memo;
  return detail::eval_R_impl(d, memo, false);
}

/// Same engine with the s+/s- coefficient assignment deliberately swapped.
/// Exists as a negative control: the curl suite must fail against it with an
/// a^-2 diagnosis.
inline Poly2 eval_R_swapped_smoothing(const Diagram& d) {
  detail::EvalMemo memo;
  return detail::eval_R_impl(d, memo, true);
}

/// Full 3^c state-space expansion; the independent oracle engine.
inline Poly2 eval_R_statesum(const Diagram& d) {
  const auto crossings = d.crossing_ids();
  const std::size_t c = crossings.size();
  std::vector<int> spin(c, 0);
  Poly2 acc;
  for (;;) {
    Diagram state = d;
    int a = 0, b = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const SmoothKind k = spin[i] == 0   ? SmoothKind::SPlus
                           : spin[i] == 1 ? SmoothKind::SMinus
                                          : SmoothKind::SZero;
      if (spin[i] == 0) ++a;
      if (spin[i] == 1) ++b;
      state = smooth(state, crossings[i], k);
    }
    acc += Poly2::monomial(1, a - b, a + b - static_cast<int>(c)) * eval_cyclic(state);
    std::size_t i = 0;
    while (i < c && spin[i] == 2) spin[i++] = 0;
    if (i == c) break;
    ++spin[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Normalizations
// ---------------------------------------------------------------------------

/// (-a)^(-m) R where m is the minimum a-degree; rigid-vertex invariant form.
inline Poly2 normalize_rigid(const Poly2& p) {
  if (p.is_zero()) throw EvalError("normalize_rigid: undefined on the zero polynomial");
  const int m = p.min_degree_alpha();
  const Int sign = (m % 2 == 0) ? 1 : -1;
  return Poly2::monomial(sign, -m, 0) * p;
}

/// a^(-2 w(D)) R; ambient-isotopy invariant form for oriented link diagrams.
inline Poly2 normalize_writhe(const Diagram& d, const Poly2& p) {
  const long w = writhe(d);
  return Poly2::monomial(1, static_cast<int>(-2 * w), 0) * p;
}

// ---------------------------------------------------------------------------
// Non-classicality detection
// ---------------------------------------------------------------------------

enum class Classification { NonClassical, Inconclusive };

struct Verdict {
  Classification classification = Classification::Inconclusive;
  Poly2 value;            // the computed R(D; a, x)
  bool x_dependence = false;
};

/// A link diagram whose R depends on x cannot be classical.  Also asserts
/// the evenness of x powers on link diagrams as an internal sanity check.
inline Verdict detect_nonclassical(const Diagram& d) {
  if (!d.is_link_diagram())
    throw EvalError("detect_nonclassical requires a link diagram (no graph vertices)");
  Verdict v;
  v.value = eval_R(d);
  if (!v.value.x_powers_even())
    throw InternalConsistencyError("odd x power in R of a link diagram");
  v.x_dependence = v.value.x_dependent();
  v.classification = v.x_dependence ? Classification::NonClassical : Classification::Inconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Classical Dubrovnik oracle
// ---------------------------------------------------------------------------

namespace detail {

inline long kink_sign(const Diagram& d, const std::string& cid, int s) {
  // kink edge occupies slots (s, s+1); positive exactly when s is under
  const int p = d.node(cid).over_odd ? 1 : 0;
  return (s % 2 != p) ? +1 : -1;
}

/// Find a crossing carrying a kink: an edge joining two cyclically adjacent
/// slots of the same crossing.  Returns (crossing, first slot of the pair).
inline std::optional<std::pair<std::string, int>> find_kink(const Diagram& d) {
  for (const auto& e : d.edges()) {
    if (e.a.node != e.b.node) continue;
    const Node& n = d.node(e.a.node);
    if (n.kind != NodeKind::Crossing) continue;
    const int i = e.a.slot, j = e.b.slot;
    if (j == i + 1) return std::make_pair(e.a.node, i);
    if (i == 0 && j == 3) return std::make_pair(e.a.node, 3);
  }
  return std::nullopt;
}

/// Remove a kink at slots (s, s+1) of crossing c, splicing the strand.
inline Diagram remove_kink(const Diagram& d, const std::string& cid, int s) {
  const int t1 = (s + 2) % 4, t2 = (s + 3) % 4;
  std::map<HalfEdgeRef, HalfEdgeRef> pm;
  for (const auto& e : d.edges()) {
    pm[e.a] = e.b;
    pm[e.b] = e.a;
  }
  long loops = d.free_loops();
  const HalfEdgeRef u{cid, t1}, v{cid, t2};
  const HalfEdgeRef pu = pm.at(u), pv = pm.at(v);
  pm.erase(HalfEdgeRef{cid, s});
  pm.erase(HalfEdgeRef{cid, (s + 1) % 4});
  pm.erase(u);
  pm.erase(v);
  if (pu == v) {
    ++loops;  // the kinked unknot collapses to a free loop
  } else {
    pm[pu] = pv;
    pm[pv] = pu;
  }
  std::vector<Node> nodes;
  for (const auto& [id, n] : d.nodes())
    if (id != cid) nodes.push_back(n);
  std::vector<Edge> edges;
  for (const auto& [h, q] : pm)
    if (h < q) edges.emplace_back(h, q);
  return Diagram(std::move(nodes), std::move(edges), loops, {});
}

struct TraversalScan {
  std::optional<std::string> first_bad;  // first crossing first met as under
  long self_writhe = 0;                  // signs over self-crossings only
  long component_count = 0;
};

inline TraversalScan scan_descending(const Diagram& d) {
  TraversalScan out;
  std::set<HalfEdgeRef> visited;  // departing half-edges
  std::map<std::string, bool> first_is_over;
  std::map<std::string, std::pair<int, int>> exits;      // over_exit, under_exit
  std::map<std::string, std::pair<long, long>> pass_comp;  // component per pass

  long comp = 0;
  for (const auto& [id, n] : d.nodes()) {
    for (int s0 = 0; s0 < 4; ++s0) {
      const HalfEdgeRef start{id, s0};
      if (visited.count(start)) continue;
      ++comp;
      HalfEdgeRef h = start;
      do {
        visited.insert(h);
        const Node& cn = d.node(h.node);
        const int p = cn.over_odd ? 1 : 0;
        const bool over = (h.slot % 2) == p;
        if (!first_is_over.count(h.node)) {
          first_is_over[h.node] = over;
          if (!over && !out.first_bad) out.first_bad = h.node;
        }
        auto& ex = exits[h.node];
        auto& pc = pass_comp[h.node];
        if (over) {
          ex.first = h.slot;
          pc.first = comp;
        } else {
          ex.second = h.slot;
          pc.second = comp;
        }
        const HalfEdgeRef arrive = d.partner(h);
        visited.insert(arrive);  // the reverse orbit departs here; block it
        h = {arrive.node, (arrive.slot + 2) % 4};
      } while (!(h == start));
    }
  }
  out.component_count = comp;
  for (const auto& [id, ex] : exits) {
    const auto& pc = pass_comp.at(id);
    if (pc.first != pc.second) continue;  // inter-component crossing
    out.self_writhe += (ex.second == (ex.first + 1) % 4) ? 1 : -1;
  }
  return out;
}

inline Poly2 dubrovnik_rec(Diagram d) {
  Poly2 acc = Poly2::one();
  for (;;) {
    if (d.free_loops() > 0) {
      acc *= CIRCLE_CONST.pow(static_cast<unsigned>(d.free_loops()));
      std::vector<Node> ns;
      for (const auto& [id, n] : d.nodes()) ns.push_back(n);
      d = Diagram(std::move(ns), d.edges(), 0, {});
      continue;
    }
    if (const auto kink = find_kink(d)) {
      const long s = kink_sign(d, kink->first, kink->second);
      acc *= Poly2::monomial(1, static_cast<int>(2 * s), 0);
      d = remove_kink(d, kink->first, kink->second);
      continue;
    }
    break;
  }
  if (d.nodes().empty()) return acc;

  const TraversalScan scan = scan_descending(d);
  if (!scan.first_bad) {
    // descending: a split union of unknots with curls
    return acc * Poly2::monomial(1, static_cast<int>(2 * scan.self_writhe), 0) *
           CIRCLE_CONST.pow(static_cast<unsigned>(scan.component_count));
  }
  const std::string c = *scan.first_bad;
  const Poly2 zfac = Poly2::monomial(1, 1, 0) - Poly2::monomial(1, -1, 0);  // a - a^-1
  return acc * (dubrovnik_rec(switch_crossing(d, c)) +
                zfac * (dubrovnik_rec(smooth(d, c, SmoothKind::SPlus)) -
                        dubrovnik_rec(smooth(d, c, SmoothKind::SMinus))));
}

}  // namespace detail

/// Dubrovnik value of a classical link diagram, computed purely from the
/// skein relations (switch, smoothings, curls, disjoint circles) with
/// a = alpha^2 and z = alpha - alpha^-1.  Virtual diagrams are rejected.
inline Poly2 dubrovnik(const Diagram& d) {
  if (!d.is_link_diagram())
    throw EvalError("dubrovnik requires a link diagram (no graph vertices)");
  if (carrier_genus(d) != 0)
    throw DubrovnikError("Dubrovnik skein incomplete for this diagram");
  return detail::dubrovnik_rec(d);
}

/// Necessary amphicheirality condition on a normalized polynomial:
/// p == (-a)^D * p(a -> a^-1) with D the maximum a-degree of p.
inline bool amphicheiral_test(const Poly2& p) {
  if (p.is_zero()) throw EvalError("amphicheiral_test: undefined on the zero polynomial");
  const int D = p.max_degree_alpha();
  const Int sign = (D % 2 == 0) ? 1 : -1;
  return p == Poly2::monomial(sign, D, 0) * p.swap_alpha_inverse();
}

}  // namespace yamada
