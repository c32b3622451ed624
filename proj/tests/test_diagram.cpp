#include "yamada/diagram.hpp"

#include "yamada/fixtures.hpp"
#include "yamada/random_diagram.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace yamada;
namespace fx = yamada::fixtures;

TEST_CASE("parse_vsg basics") {
  const Diagram d = parse_vsg("vsg v1\nvertex v 2\nedge v.0 v.1\n");
  CHECK(d.nodes().size() == 1);
  CHECK(d.edges().size() == 1);
  CHECK(d.free_loops() == 0);

  const Diagram l = parse_vsg("vsg v1\nloop 1\n");
  CHECK(l.nodes().empty());
  CHECK(l.free_loops() == 1);

  // comments and blank lines are ignored
  const Diagram c = parse_vsg("vsg v1\n# a comment\n\nvertex v 2 # trailing\nedge v.0 v.1\n");
  CHECK(c == d);
}

TEST_CASE("parse_vsg positioned errors") {
  CHECK_THROWS_AS(parse_vsg("vsg v1\nvertex v 3\nedge v.0 v.1\n"), VsgParseError);
  try {
    parse_vsg("vsg v1\nvertex v 3\nedge v.0 v.1\n");
  } catch (const VsgParseError& e) {
    CHECK(std::string(e.what()).find("unmatched half-edge v.2") != std::string::npos);
  }
  // duplicate slot use
  CHECK_THROWS_AS(parse_vsg("vsg v1\nvertex v 2\nedge v.0 v.1\nedge v.1 v.0\n"), VsgParseError);
  // dangling reference
  CHECK_THROWS_AS(parse_vsg("vsg v1\nvertex v 2\nedge v.0 w.1\n"), VsgParseError);
  // slot out of range
  CHECK_THROWS_AS(parse_vsg("vsg v1\nvertex v 2\nedge v.0 v.7\n"), VsgParseError);
  // an edge may not use one half-edge twice
  CHECK_THROWS_AS(parse_vsg("vsg v1\nvertex v 1\nedge v.0 v.0\n"), VsgParseError);
  // missing header
  CHECK_THROWS_AS(parse_vsg("vertex v 2\n"), VsgParseError);
  try {
    parse_vsg("vsg v1\nvertex v 2\nedge v.0 v.9\n");
  } catch (const VsgParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialize round trips") {
  CHECK(serialize_vsg(Diagram{}) == "vsg v1\n");
  for (const auto& [name, d] : fx::all()) {
    INFO(name);
    CHECK(parse_vsg(serialize_vsg(d)) == d);
    // serialize . parse is the identity on canonical text
    const std::string text = serialize_vsg(d);
    CHECK(serialize_vsg(parse_vsg(text)) == text);
  }
}

TEST_CASE("mirror is an involution and fixes crossing-free diagrams") {
  CHECK(mirror(fx::theta_planar()) == fx::theta_planar());
  for (const auto& [name, d] : fx::all()) {
    INFO(name);
    CHECK(mirror(mirror(d)) == d);
  }
  CHECK_FALSE(mirror(fx::virtual_trefoil()) == fx::virtual_trefoil());
}

TEST_CASE("absorb_degree2") {
  // subdividing any edge and absorbing gives the diagram back
  const Diagram theta = fx::theta_planar();
  const Diagram sub = subdivide(theta, theta.edges()[1], "w");
  CHECK(sub.nodes().size() == 3);
  CHECK(absorb_degree2(sub) == theta);

  // isolated 2-cycle of two degree-2 vertices becomes a free loop
  const Diagram cyc({{"a", NodeKind::Vertex, 2, false}, {"b", NodeKind::Vertex, 2, false}},
                    {Edge({"a", 0}, {"b", 0}), Edge({"a", 1}, {"b", 1})});
  const Diagram out = absorb_degree2(cyc);
  CHECK(out.nodes().empty());
  CHECK(out.free_loops() == 1);

  // a vertex with its own loop becomes a free loop
  const Diagram uv = absorb_degree2(fx::unknot_vertex());
  CHECK(uv.free_loops() == 1);
  CHECK(uv.nodes().empty());

  // identity on diagrams without degree-2 vertices
  CHECK(absorb_degree2(theta) == theta);
  CHECK(absorb_degree2(fx::virtual_trefoil()) == fx::virtual_trefoil());
}

TEST_CASE("smooth on the closed curl") {
  const Diagram pos = fx::curl_unknot(+1);
  const Diagram sp = smooth(pos, "k", SmoothKind::SPlus);
  CHECK(sp.nodes().empty());
  CHECK(sp.free_loops() == 2);
  const Diagram sm = smooth(pos, "k", SmoothKind::SMinus);
  CHECK(sm.nodes().empty());
  CHECK(sm.free_loops() == 1);

  // the negative curl swaps which smoothing splits off the loop
  const Diagram neg = fx::curl_unknot(-1);
  CHECK(smooth(neg, "k", SmoothKind::SPlus).free_loops() == 1);
  CHECK(smooth(neg, "k", SmoothKind::SMinus).free_loops() == 2);
}

TEST_CASE("smooth SZero vertexifies") {
  const Diagram z = smooth(fx::virtual_hopf(), "c", SmoothKind::SZero);
  CHECK(z.crossing_count() == 0);
  CHECK(z.node("c").kind == NodeKind::Vertex);
  CHECK(z.node("c").degree == 4);
  CHECK(z.edges() == fx::virtual_hopf().edges());

  CHECK_THROWS_AS(smooth(fx::theta_planar(), "u", SmoothKind::SPlus), DiagramError);
}

TEST_CASE("smoothing every crossing of a knot diagram leaves only loops") {
  Diagram d = fx::virtual_trefoil();
  for (const auto& id : d.crossing_ids()) d = smooth(d, id, SmoothKind::SPlus);
  CHECK(d.crossing_count() == 0);
  CHECK(d.nodes().empty());
  CHECK(d.free_loops() >= 1);
}

TEST_CASE("writhe") {
  CHECK(writhe(fx::unknot_loop()) == 0);
  CHECK(writhe(fx::classical_trefoil()) == 3);
  CHECK(writhe(fx::hopf_classical()) == 2);
  CHECK(writhe(fx::figure_eight()) == 0);

  // reversing every component orientation preserves the writhe
  const Diagram t = fx::classical_trefoil();
  std::vector<HalfEdgeRef> rev;
  for (const auto& s : t.orientations()) rev.push_back(t.partner(s));
  std::vector<Node> nodes;
  for (const auto& [id, n] : t.nodes()) nodes.push_back(n);
  const Diagram tr(std::move(nodes), t.edges(), t.free_loops(), std::move(rev));
  CHECK(writhe(tr) == 3);

  // graph vertices and missing orientations are rejected
  CHECK_THROWS_AS(writhe(fx::theta_planar()), DiagramError);
  std::vector<Node> nodes2;
  for (const auto& [id, n] : t.nodes()) nodes2.push_back(n);
  const Diagram unoriented(std::move(nodes2), t.edges(), 0, {});
  CHECK_THROWS_AS(writhe(unoriented), DiagramError);
}

TEST_CASE("mirror flips writhe sign") {
  CHECK(writhe(mirror(fx::classical_trefoil())) == -3);
  CHECK(writhe(mirror(fx::hopf_classical())) == -2);
}

TEST_CASE("poke_r2 structure and exact undo by opposite smoothings") {
  const Diagram theta = fx::theta_planar();
  const Edge e1 = theta.edges()[0];
  const Edge e2 = theta.edges()[2];
  const Diagram poked = poke_r2(theta, e1, e2);
  CHECK(poked.crossing_count() == 2);
  CHECK(poked.edges().size() == theta.edges().size() + 4);

  // smoothing the pair with opposite spins reconstructs the diagram exactly
  const Diagram undone = smooth(smooth(poked, "_p0", SmoothKind::SPlus), "_q0", SmoothKind::SMinus);
  CHECK(undone == theta);

  // a self-poke subdivides first and still validates
  const Diagram selfpoked = poke_r2(theta, e1, e1);
  CHECK(selfpoked.crossing_count() == 2);
  CHECK(selfpoked.nodes().size() == theta.nodes().size() + 3);
}

TEST_CASE("add_curl structure") {
  const Diagram theta = fx::theta_planar();
  const Diagram c = add_curl(theta, theta.edges()[0], +1);
  CHECK(c.crossing_count() == 1);
  CHECK(c.edges().size() == theta.edges().size() + 2);
  CHECK_THROWS_AS(add_curl(theta, theta.edges()[0], 2), DiagramError);
}

TEST_CASE("one_point_join and disjoint_union") {
  const Diagram a = fx::unknot_vertex();
  const Diagram b = relabeled(fx::unknot_vertex(), {{"u", "w"}});
  const Diagram u = disjoint_union(a, b);
  CHECK(u.nodes().size() == 2);
  CHECK(u.edges().size() == 2);
  const Diagram j = one_point_join(a, "u", b, "w");
  CHECK(j.nodes().size() == 1);
  CHECK(j.node("u").degree == 4);
  CHECK(j.edges().size() == 2);
  CHECK_THROWS_AS(disjoint_union(a, a), DiagramError);
}

TEST_CASE("random diagrams always validate and round trip") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = random_diagram(rng);
    CHECK(parse_vsg(serialize_vsg(d)) == d);
    CHECK(mirror(mirror(d)) == d);
  }
  for (int i = 0; i < 50; ++i) {
    const Diagram d = random_link_diagram(rng, 4);
    writhe(d);  // seeds cover every component
    CHECK(parse_vsg(serialize_vsg(d)) == d);
  }
}
