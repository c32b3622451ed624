#pragma once

// Combinatorial-map representation of virtual spatial graph diagrams.
//
// A diagram is a set of nodes (graph vertices and classical crossings), a
// perfect matching on their half-edge slots, and a count of free loops
// (closed curves meeting no node).  Rotations are implicit: the slots
// 0..degree-1 of a node are its half-edges in counterclockwise order.
// Virtual crossings are not stored at all; by the detour move a virtual
// spatial graph diagram is exactly this data.
//
// Crossing convention: slots counterclockwise 0..3.  The strand through
// slots (0,2) is the over strand and (1,3) the under strand.  A mirrored
// crossing (over strand through (1,3)) is tracked with a parity flag and
// normalized away on serialization by rotating its slot labels.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yamada {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse or validation failure for the `vsg v1` text format; `line` is
/// 1-based, 0 when the error concerns the file as a whole.
class VsgParseError : public std::runtime_error {
 public:
  VsgParseError(int line, const std::string& msg)
      : std::runtime_error(format(line, msg)), line_(line) {}
  int line() const { return line_; }

 private:
  static std::string format(int line, const std::string& msg) {
    std::ostringstream os;
    if (line > 0)
      os << "line " << line << ": " << msg;
    else
      os << msg;
    return os.str();
  }
  int line_;
};

struct HalfEdgeRef {
  std::string node;
  int slot = 0;
  friend auto operator<=>(const HalfEdgeRef&, const HalfEdgeRef&) = default;
};

inline std::string to_string(const HalfEdgeRef& h) {
  return h.node + "." + std::to_string(h.slot);
}

struct Edge {
  HalfEdgeRef a, b;  // normalized: a <= b

  Edge() = default;
  Edge(HalfEdgeRef x, HalfEdgeRef y) {
    if (y < x) std::swap(x, y);
    a = std::move(x);
    b = std::move(y);
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class NodeKind { Vertex, Crossing };

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Vertex;
  int degree = 0;        // always 4 for crossings
  bool over_odd = false; // crossings only: over strand through (1,3) instead of (0,2)
};

enum class SmoothKind { SPlus, SMinus, SZero };

class Diagram {
 public:
  Diagram() = default;

  Diagram(std::vector<Node> nodes, std::vector<Edge> edges, long free_loops = 0,
          std::vector<HalfEdgeRef> orientations = {}) {
    for (auto& n : nodes) {
      if (n.kind == NodeKind::Crossing) n.degree = 4;
      if (n.degree < 0) throw DiagramError("negative degree on node " + n.id);
      if (!nodes_.emplace(n.id, n).second) throw DiagramError("duplicate node id " + n.id);
    }
    edges_ = std::move(edges);
    for (auto& e : edges_) e = Edge(e.a, e.b);
    std::sort(edges_.begin(), edges_.end());
    if (free_loops < 0) throw DiagramError("negative free loop count");
    free_loops_ = free_loops;
    orientations_ = std::move(orientations);
    std::sort(orientations_.begin(), orientations_.end());
    validate();
  }

  // -- accessors ------------------------------------------------------------

  const std::map<std::string, Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  long free_loops() const { return free_loops_; }
  const std::vector<HalfEdgeRef>& orientations() const { return orientations_; }

  const Node& node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw DiagramError("unknown node " + id);
    return it->second;
  }

  bool has_node(const std::string& id) const { return nodes_.count(id) != 0; }

  HalfEdgeRef partner(const HalfEdgeRef& h) const {
    auto it = partner_.find(h);
    if (it == partner_.end()) throw DiagramError("no edge at " + to_string(h));
    return it->second;
  }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::size_t crossing_count() const {
    std::size_t n = 0;
    for (const auto& [id, nd] : nodes_)
      if (nd.kind == NodeKind::Crossing) ++n;
    return n;
  }

  std::size_t vertex_count() const { return nodes_.size() - crossing_count(); }

  std::vector<std::string> crossing_ids() const {
    std::vector<std::string> r;
    for (const auto& [id, nd] : nodes_)
      if (nd.kind == NodeKind::Crossing) r.push_back(id);
    return r;
  }

  /// True when the diagram is a link diagram: no graph vertices at all.
  bool is_link_diagram() const {
    for (const auto& [id, nd] : nodes_)
      if (nd.kind == NodeKind::Vertex) return false;
    return true;
  }

  bool is_cyclic_graph() const { return crossing_count() == 0; }

  /// Slot parity of the over strand: over slots are (p, p+2).
  int over_parity(const std::string& crossing_id) const {
    const Node& n = node(crossing_id);
    if (n.kind != NodeKind::Crossing) throw DiagramError(crossing_id + " is not a crossing");
    return n.over_odd ? 1 : 0;
  }

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return serialize_vsg(x) == serialize_vsg(y);
  }

  /// Smallest `<prefix><n>` not yet used as a node id.
  std::string fresh_id(const std::string& prefix) const {
    for (long n = 0;; ++n) {
      std::string id = prefix + std::to_string(n);
      if (!nodes_.count(id)) return id;
    }
  }

  // -- text format ----------------------------------------------------------

  friend Diagram parse_vsg(const std::string& text);
  friend std::string serialize_vsg(const Diagram& d);

  // -- transformations (all return new values) -------------------------------

  friend Diagram mirror(const Diagram& d);
  friend Diagram switch_crossing(const Diagram& d, const std::string& crossing_id);
  friend Diagram absorb_degree2(const Diagram& d);
  friend Diagram smooth(const Diagram& d, const std::string& crossing_id, SmoothKind k);
  friend Diagram subdivide(const Diagram& d, const Edge& e, const std::string& new_vertex_id);
  friend Diagram add_curl(const Diagram& d, const Edge& e, int sign);
  friend Diagram poke_r2(const Diagram& d, const Edge& e1, const Edge& e2);
  friend Diagram disjoint_union(const Diagram& d1, const Diagram& d2);
  friend Diagram one_point_join(const Diagram& d1, const std::string& v1, const Diagram& d2,
                                const std::string& v2);
  friend Diagram relabeled(const Diagram& d, const std::map<std::string, std::string>& renames);
  friend long writhe(const Diagram& d);

 private:
  void validate() {
    partner_.clear();
    for (const auto& e : edges_) {
      for (const HalfEdgeRef* h : {&e.a, &e.b}) {
        auto it = nodes_.find(h->node);
        if (it == nodes_.end())
          throw DiagramError("dangling half-edge reference " + to_string(*h));
        if (h->slot < 0 || h->slot >= it->second.degree)
          throw DiagramError("slot out of range: " + to_string(*h));
      }
      if (e.a == e.b) throw DiagramError("edge uses half-edge twice: " + to_string(e.a));
      for (const HalfEdgeRef* h : {&e.a, &e.b})
        if (partner_.count(*h)) throw DiagramError("duplicate slot use at " + to_string(*h));
      partner_[e.a] = e.b;
      partner_[e.b] = e.a;
    }
    for (const auto& [id, n] : nodes_)
      for (int s = 0; s < n.degree; ++s)
        if (!partner_.count({id, s}))
          throw DiagramError("unmatched half-edge " + id + "." + std::to_string(s));
    for (const auto& h : orientations_) {
      auto it = nodes_.find(h.node);
      if (it == nodes_.end() || h.slot < 0 || h.slot >= it->second.degree)
        throw DiagramError("orientation references unknown half-edge " + to_string(h));
    }
    for (std::size_t i = 1; i < orientations_.size(); ++i)
      if (orientations_[i] == orientations_[i - 1])
        throw DiagramError("duplicate orientation seed " + to_string(orientations_[i]));
  }

  std::map<std::string, Node> nodes_;
  std::vector<Edge> edges_;  // sorted
  long free_loops_ = 0;
  std::vector<HalfEdgeRef> orientations_;  // sorted seed half-edges, one per component
  std::map<HalfEdgeRef, HalfEdgeRef> partner_;
};

// ---------------------------------------------------------------------------
// vsg v1 parser / serializer
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '.' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

inline HalfEdgeRef parse_ref(const std::string& tok, int line) {
  auto dot = tok.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
    throw VsgParseError(line, "expected <id>.<slot>, got '" + tok + "'");
  HalfEdgeRef h;
  h.node = tok.substr(0, dot);
  try {
    std::size_t used = 0;
    h.slot = std::stoi(tok.substr(dot + 1), &used);
    if (used != tok.size() - dot - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw VsgParseError(line, "bad slot in '" + tok + "'");
  }
  return h;
}

}  // namespace detail

inline Diagram parse_vsg(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int line_no = 0;
  bool header_seen = false;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  long free_loops = 0;
  std::vector<HalfEdgeRef> orientations;
  std::map<std::string, int> declared;  // id -> degree; nodes precede references

  auto check_ref = [&](const HalfEdgeRef& h, int line) {
    auto it = declared.find(h.node);
    if (it == declared.end())
      throw VsgParseError(line, "dangling half-edge reference " + to_string(h));
    if (h.slot < 0 || h.slot >= it->second)
      throw VsgParseError(line, "slot out of range: " + to_string(h));
  };

  while (std::getline(is, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;

    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "vsg" || toks[1] != "v1")
        throw VsgParseError(line_no, "expected header 'vsg v1'");
      header_seen = true;
      continue;
    }

    const std::string& kw = toks[0];
    if (kw == "vertex") {
      if (toks.size() != 3) throw VsgParseError(line_no, "vertex takes <id> <degree>");
      if (!detail::valid_id(toks[1])) throw VsgParseError(line_no, "bad node id '" + toks[1] + "'");
      if (!declared.emplace(toks[1], 0).second)
        throw VsgParseError(line_no, "duplicate node id " + toks[1]);
      int deg = 0;
      try {
        deg = std::stoi(toks[2]);
      } catch (const std::exception&) {
        throw VsgParseError(line_no, "bad degree '" + toks[2] + "'");
      }
      if (deg < 0) throw VsgParseError(line_no, "bad degree '" + toks[2] + "'");
      declared[toks[1]] = deg;
      nodes.push_back({toks[1], NodeKind::Vertex, deg, false});
    } else if (kw == "crossing") {
      if (toks.size() != 2) throw VsgParseError(line_no, "crossing takes <id>");
      if (!detail::valid_id(toks[1])) throw VsgParseError(line_no, "bad node id '" + toks[1] + "'");
      if (!declared.emplace(toks[1], 4).second)
        throw VsgParseError(line_no, "duplicate node id " + toks[1]);
      nodes.push_back({toks[1], NodeKind::Crossing, 4, false});
    } else if (kw == "edge") {
      if (toks.size() != 3) throw VsgParseError(line_no, "edge takes two half-edges");
      const HalfEdgeRef h1 = detail::parse_ref(toks[1], line_no);
      const HalfEdgeRef h2 = detail::parse_ref(toks[2], line_no);
      check_ref(h1, line_no);
      check_ref(h2, line_no);
      edges.emplace_back(h1, h2);
    } else if (kw == "loop") {
      if (toks.size() != 2) throw VsgParseError(line_no, "loop takes <count>");
      long n = 0;
      try {
        n = std::stol(toks[1]);
      } catch (const std::exception&) {
        throw VsgParseError(line_no, "bad loop count '" + toks[1] + "'");
      }
      if (n < 0) throw VsgParseError(line_no, "bad loop count '" + toks[1] + "'");
      free_loops += n;
    } else if (kw == "orient") {
      if (toks.size() != 2) throw VsgParseError(line_no, "orient takes one half-edge");
      const HalfEdgeRef h = detail::parse_ref(toks[1], line_no);
      check_ref(h, line_no);
      orientations.push_back(h);
    } else {
      throw VsgParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!header_seen) throw VsgParseError(0, "missing header 'vsg v1'");

  try {
    return Diagram(std::move(nodes), std::move(edges), free_loops, std::move(orientations));
  } catch (const DiagramError& e) {
    throw VsgParseError(0, e.what());
  }
}

inline std::string serialize_vsg(const Diagram& d) {
  // Mirrored crossings are emitted with slots rotated by -1 so the stored
  // file always has the over strand on (0,2).
  auto out_ref = [&](const HalfEdgeRef& h) {
    HalfEdgeRef r = h;
    auto it = d.nodes_.find(h.node);
    if (it != d.nodes_.end() && it->second.kind == NodeKind::Crossing && it->second.over_odd)
      r.slot = (h.slot + 3) % 4;
    return r;
  };

  std::ostringstream os;
  os << "vsg v1\n";
  for (const auto& [id, n] : d.nodes_) {
    if (n.kind == NodeKind::Vertex)
      os << "vertex " << id << " " << n.degree << "\n";
    else
      os << "crossing " << id << "\n";
  }
  std::vector<Edge> edges;
  edges.reserve(d.edges_.size());
  for (const auto& e : d.edges_) edges.emplace_back(out_ref(e.a), out_ref(e.b));
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges)
    os << "edge " << to_string(e.a) << " " << to_string(e.b) << "\n";
  if (d.free_loops_ > 0) os << "loop " << d.free_loops_ << "\n";
  std::vector<HalfEdgeRef> seeds;
  for (const auto& h : d.orientations_) seeds.push_back(out_ref(h));
  std::sort(seeds.begin(), seeds.end());
  for (const auto& h : seeds) os << "orient " << to_string(h) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

inline Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (auto& [id, n] : r.nodes_)
    if (n.kind == NodeKind::Crossing) n.over_odd = !n.over_odd;
  return r;
}

inline Diagram switch_crossing(const Diagram& d, const std::string& crossing_id) {
  Diagram r = d;
  auto it = r.nodes_.find(crossing_id);
  if (it == r.nodes_.end() || it->second.kind != NodeKind::Crossing)
    throw DiagramError(crossing_id + " is not a crossing");
  it->second.over_odd = !it->second.over_odd;
  return r;
}

inline Diagram absorb_degree2(const Diagram& d) {
  std::map<std::string, Node> nodes = d.nodes_;
  std::map<HalfEdgeRef, HalfEdgeRef> pm = d.partner_;
  long loops = d.free_loops_;
  std::vector<HalfEdgeRef> seeds = d.orientations_;

  auto relocate_seed = [&](const HalfEdgeRef& from, const HalfEdgeRef& to) {
    for (auto& s : seeds)
      if (s == from) s = to;
  };

  for (;;) {
    std::string victim;
    for (const auto& [id, n] : nodes)
      if (n.kind == NodeKind::Vertex && n.degree == 2) {
        victim = id;
        break;
      }
    if (victim.empty()) break;

    const HalfEdgeRef h0{victim, 0}, h1{victim, 1};
    const HalfEdgeRef p0 = pm.at(h0), p1 = pm.at(h1);
    pm.erase(h0);
    pm.erase(h1);
    if (p0 == h1) {
      // the vertex carried a single loop edge; it becomes a free loop
      ++loops;
      std::erase_if(seeds, [&](const HalfEdgeRef& s) { return s.node == victim; });
    } else {
      pm[p0] = p1;
      pm[p1] = p0;
      // a seed departing the vertex points the same way as departing the
      // far end of the other incident edge
      relocate_seed(h0, p1);
      relocate_seed(h1, p0);
    }
    nodes.erase(victim);
  }

  std::vector<Node> nvec;
  for (const auto& [id, n] : nodes) nvec.push_back(n);
  std::vector<Edge> evec;
  for (const auto& [h, p] : pm)
    if (h < p) evec.emplace_back(h, p);
  return Diagram(std::move(nvec), std::move(evec), loops, std::move(seeds));
}

inline Diagram smooth(const Diagram& d, const std::string& crossing_id, SmoothKind k) {
  const Node& c = d.node(crossing_id);
  if (c.kind != NodeKind::Crossing) throw DiagramError(crossing_id + " is not a crossing");
  const int p = c.over_odd ? 1 : 0;

  if (k == SmoothKind::SZero) {
    // rigid degree-4 vertex with the identical rotation
    std::vector<Node> nvec;
    for (const auto& [id, n] : d.nodes_) {
      Node m = n;
      if (id == crossing_id) {
        m.kind = NodeKind::Vertex;
        m.degree = 4;
        m.over_odd = false;
      }
      nvec.push_back(m);
    }
    return Diagram(std::move(nvec), d.edges_, d.free_loops_, d.orientations_);
  }

  // SPlus joins each under slot to its ccw successor; SMinus each over slot.
  std::pair<int, int> j1, j2;
  if (k == SmoothKind::SPlus) {
    j1 = {(p + 1) % 4, (p + 2) % 4};
    j2 = {(p + 3) % 4, p};
  } else {
    j1 = {p, (p + 1) % 4};
    j2 = {(p + 2) % 4, (p + 3) % 4};
  }

  std::map<HalfEdgeRef, HalfEdgeRef> pm = d.partner_;
  long loops = d.free_loops_;
  auto join = [&](int s1, int s2) {
    const HalfEdgeRef u{crossing_id, s1}, v{crossing_id, s2};
    const HalfEdgeRef pu = pm.at(u), pv = pm.at(v);
    pm.erase(u);
    pm.erase(v);
    if (pu == v) {
      ++loops;  // the join closes the edge between its own stubs
      return;
    }
    pm[pu] = pv;
    pm[pv] = pu;
  };
  join(j1.first, j1.second);
  join(j2.first, j2.second);

  std::vector<Node> nvec;
  for (const auto& [id, n] : d.nodes_)
    if (id != crossing_id) nvec.push_back(n);
  std::vector<Edge> evec;
  for (const auto& [h, q] : pm)
    if (h < q) evec.emplace_back(h, q);
  std::vector<HalfEdgeRef> seeds = d.orientations_;
  std::erase_if(seeds, [&](const HalfEdgeRef& s) { return s.node == crossing_id; });
  return Diagram(std::move(nvec), std::move(evec), loops, std::move(seeds));
}

inline Diagram subdivide(const Diagram& d, const Edge& e, const std::string& new_vertex_id) {
  if (!d.has_edge(e)) throw DiagramError("no such edge " + to_string(e.a) + "--" + to_string(e.b));
  if (d.nodes_.count(new_vertex_id)) throw DiagramError("node id taken: " + new_vertex_id);
  std::vector<Node> nvec;
  for (const auto& [id, n] : d.nodes_) nvec.push_back(n);
  nvec.push_back({new_vertex_id, NodeKind::Vertex, 2, false});
  std::vector<Edge> evec;
  for (const auto& f : d.edges_)
    if (!(f == e)) evec.push_back(f);
  evec.emplace_back(e.a, HalfEdgeRef{new_vertex_id, 0});
  evec.emplace_back(HalfEdgeRef{new_vertex_id, 1}, e.b);
  return Diagram(std::move(nvec), std::move(evec), d.free_loops_, d.orientations_);
}

/// Insert one kink on edge e.  sign=+1 gives the positive curl (writhe +1).
inline Diagram add_curl(const Diagram& d, const Edge& e, int sign) {
  if (sign != 1 && sign != -1) throw DiagramError("curl sign must be +1 or -1");
  if (!d.has_edge(e)) throw DiagramError("no such edge " + to_string(e.a) + "--" + to_string(e.b));
  const std::string kid = d.fresh_id("_k");
  std::vector<Node> nvec;
  for (const auto& [id, n] : d.nodes_) nvec.push_back(n);
  nvec.push_back({kid, NodeKind::Crossing, 4, false});
  std::vector<Edge> evec;
  for (const auto& f : d.edges_)
    if (!(f == e)) evec.push_back(f);
  evec.emplace_back(e.a, HalfEdgeRef{kid, 0});
  if (sign > 0) {
    evec.emplace_back(HalfEdgeRef{kid, 1}, HalfEdgeRef{kid, 2});
    evec.emplace_back(HalfEdgeRef{kid, 3}, e.b);
  } else {
    evec.emplace_back(HalfEdgeRef{kid, 2}, HalfEdgeRef{kid, 3});
    evec.emplace_back(HalfEdgeRef{kid, 1}, e.b);
  }
  return Diagram(std::move(nvec), std::move(evec), d.free_loops_, d.orientations_);
}

/// Push edge e1 over edge e2 (a move-(II) poke realized abstractly; any
/// abstract poke is realizable virtually via detour moves).  The two new
/// crossings carry e1's strand on top and have opposite signs.
inline Diagram poke_r2(const Diagram& d, const Edge& e1, const Edge& e2) {
  if (!d.has_edge(e1) || !d.has_edge(e2)) throw DiagramError("poke_r2: no such edge");
  if (e1 == e2) {
    const std::string w = d.fresh_id("_s");
    Diagram s = subdivide(d, e1, w);
    return poke_r2(s, Edge(e1.a, HalfEdgeRef{w, 0}), Edge(HalfEdgeRef{w, 1}, e1.b));
  }
  const std::string pid = d.fresh_id("_p");
  const std::string qid = d.fresh_id("_q");

  std::vector<Node> nodes;
  for (const auto& [id, n] : d.nodes_) nodes.push_back(n);
  nodes.push_back({pid, NodeKind::Crossing, 4, false});
  nodes.push_back({qid, NodeKind::Crossing, 4, false});
  std::vector<Edge> evec;
  for (const auto& f : d.edges_)
    if (!(f == e1) && !(f == e2)) evec.push_back(f);
  // e1 = {A1,A2} runs over; e2 = {B1,B2} runs under.
  evec.emplace_back(e1.a, HalfEdgeRef{pid, 0});
  evec.emplace_back(e2.a, HalfEdgeRef{pid, 1});
  evec.emplace_back(HalfEdgeRef{pid, 2}, HalfEdgeRef{qid, 0});
  evec.emplace_back(HalfEdgeRef{pid, 3}, HalfEdgeRef{qid, 3});
  evec.emplace_back(HalfEdgeRef{qid, 2}, e1.b);
  evec.emplace_back(HalfEdgeRef{qid, 1}, e2.b);
  return Diagram(std::move(nodes), std::move(evec), d.free_loops_, d.orientations_);
}

inline Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  std::vector<Node> nodes;
  for (const auto& [id, n] : d1.nodes_) nodes.push_back(n);
  for (const auto& [id, n] : d2.nodes_) {
    if (d1.nodes_.count(id)) throw DiagramError("disjoint_union: node id clash on " + id);
    nodes.push_back(n);
  }
  std::vector<Edge> edges = d1.edges_;
  edges.insert(edges.end(), d2.edges_.begin(), d2.edges_.end());
  std::vector<HalfEdgeRef> seeds = d1.orientations_;
  seeds.insert(seeds.end(), d2.orientations_.begin(), d2.orientations_.end());
  return Diagram(std::move(nodes), std::move(edges), d1.free_loops_ + d2.free_loops_,
                 std::move(seeds));
}

/// One-point join: unite vertex v1 of d1 with vertex v2 of d2, keeping both
/// cyclic orders consecutive in the merged rotation (v1's slots first).
inline Diagram one_point_join(const Diagram& d1, const std::string& v1, const Diagram& d2,
                              const std::string& v2) {
  const Node& a = d1.node(v1);
  const Node& b = d2.node(v2);
  if (a.kind != NodeKind::Vertex || b.kind != NodeKind::Vertex)
    throw DiagramError("one_point_join requires graph vertices");
  std::vector<Node> nodes;
  for (const auto& [id, n] : d1.nodes_)
    if (id != v1) nodes.push_back(n);
  for (const auto& [id, n] : d2.nodes_) {
    if (d1.nodes_.count(id)) throw DiagramError("one_point_join: node id clash on " + id);
    if (id != v2) nodes.push_back(n);
  }
  const std::string jid = v1;
  nodes.push_back({jid, NodeKind::Vertex, a.degree + b.degree, false});
  auto remap = [&](const HalfEdgeRef& h, bool from_d2) -> HalfEdgeRef {
    if (!from_d2 && h.node == v1) return h;  // v1 keeps its slots (jid == v1)
    if (from_d2 && h.node == v2) return {jid, a.degree + h.slot};
    return h;
  };
  std::vector<Edge> edges;
  for (const auto& e : d1.edges_) edges.emplace_back(remap(e.a, false), remap(e.b, false));
  for (const auto& e : d2.edges_) edges.emplace_back(remap(e.a, true), remap(e.b, true));
  return Diagram(std::move(nodes), std::move(edges), d1.free_loops_ + d2.free_loops_, {});
}

inline Diagram relabeled(const Diagram& d, const std::map<std::string, std::string>& renames) {
  auto ren = [&](const std::string& id) {
    auto it = renames.find(id);
    return it == renames.end() ? id : it->second;
  };
  std::vector<Node> nodes;
  for (const auto& [id, n] : d.nodes_) {
    Node m = n;
    m.id = ren(id);
    nodes.push_back(m);
  }
  std::vector<Edge> edges;
  for (const auto& e : d.edges_)
    edges.emplace_back(HalfEdgeRef{ren(e.a.node), e.a.slot}, HalfEdgeRef{ren(e.b.node), e.b.slot});
  std::vector<HalfEdgeRef> seeds;
  for (const auto& h : d.orientations_) seeds.push_back({ren(h.node), h.slot});
  return Diagram(std::move(nodes), std::move(edges), d.free_loops_, std::move(seeds));
}

/// Writhe of an oriented link diagram.  Requires a crossings-only diagram
/// with one orientation seed per component; strands run straight through
/// crossings (slot s exits at s+2).
inline long writhe(const Diagram& d) {
  if (!d.is_link_diagram())
    throw DiagramError("writhe requires a link diagram (no graph vertices)");
  std::map<HalfEdgeRef, bool> visited;  // departing half-edges
  std::map<std::string, int> over_exit, under_exit;

  for (const auto& seed : d.orientations()) {
    if (visited.count(seed)) throw DiagramError("duplicate orientation for a component");
    HalfEdgeRef h = seed;
    do {
      if (visited.count(h)) throw DiagramError("conflicting orientation seeds on one component");
      visited[h] = true;
      const Node& n = d.node(h.node);
      const int p = n.over_odd ? 1 : 0;
      if (h.slot % 2 == p % 2)
        over_exit[h.node] = h.slot;
      else
        under_exit[h.node] = h.slot;
      const HalfEdgeRef arrive = d.partner(h);
      h = {arrive.node, (arrive.slot + 2) % 4};
    } while (!(h == seed));
  }

  for (const auto& [id, n] : d.nodes())
    if (!over_exit.count(id) || !under_exit.count(id))
      throw DiagramError("missing orientation: crossing " + id + " not fully traversed");
  if (visited.size() != d.edges().size())
    throw DiagramError("orientation seeds do not cover each component exactly once");

  long w = 0;
  for (const auto& [id, oe] : over_exit)
    w += (under_exit.at(id) == (oe + 1) % 4) ? 1 : -1;
  return w;
}

}  // namespace yamada
