#include "yamada/topology.hpp"

#include "yamada/fixtures.hpp"
#include "yamada/random_diagram.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace yamada;
namespace fx = yamada::fixtures;

TEST_CASE("components") {
  const Diagram theta = fx::theta_planar();
  CHECK(components(theta, 0) == 2);
  CHECK(components(theta, full_mask(theta)) == 1);
  CHECK(components(fx::isolated_vertex(), 0) == 1);
  CHECK_THROWS_AS(components(fx::virtual_hopf(), 0), DiagramError);
}

TEST_CASE("boundary components of small ribbon graphs") {
  const Diagram seg({{"u", NodeKind::Vertex, 1, false}, {"v", NodeKind::Vertex, 1, false}},
                    {Edge({"u", 0}, {"v", 0})});
  CHECK(boundary_components(seg, full_mask(seg)) == 1);

  const Diagram planar = fx::theta_planar();
  const Diagram nonplanar = fx::theta_nonplanar();
  CHECK(boundary_components(planar, full_mask(planar)) == 3);
  CHECK(boundary_components(nonplanar, full_mask(nonplanar)) == 1);

  // the planar theta bc sequence over (empty, singleton, pair, full)
  CHECK(boundary_components(planar, 0b000) == 2);
  CHECK(boundary_components(planar, 0b001) == 1);
  CHECK(boundary_components(planar, 0b011) == 2);
  CHECK(boundary_components(planar, 0b111) == 3);
  // and the nonplanar one differs only at the full subset
  CHECK(boundary_components(nonplanar, 0b000) == 2);
  CHECK(boundary_components(nonplanar, 0b001) == 1);
  CHECK(boundary_components(nonplanar, 0b011) == 2);
  CHECK(boundary_components(nonplanar, 0b111) == 1);

  // one loop at a vertex is an annulus; two interleaved loops close a torus
  const Diagram loop1 = fx::unknot_vertex();
  CHECK(boundary_components(loop1, full_mask(loop1)) == 2);
  const Diagram rose_inter({{"v", NodeKind::Vertex, 4, false}},
                           {Edge({"v", 0}, {"v", 2}), Edge({"v", 1}, {"v", 3})});
  CHECK(boundary_components(rose_inter, full_mask(rose_inter)) == 1);
  const Diagram rose_flat({{"v", NodeKind::Vertex, 4, false}},
                          {Edge({"v", 0}, {"v", 1}), Edge({"v", 2}, {"v", 3})});
  CHECK(boundary_components(rose_flat, full_mask(rose_flat)) == 3);
}

TEST_CASE("subgraph genus") {
  const Diagram planar = fx::theta_planar();
  const Diagram nonplanar = fx::theta_nonplanar();
  CHECK(subgraph_genus(planar, full_mask(planar)) == 0);
  CHECK(subgraph_genus(nonplanar, full_mask(nonplanar)) == 1);
  CHECK(subgraph_genus(planar, 0) == 0);
  CHECK(subgraph_genus(nonplanar, 0) == 0);
}

TEST_CASE("carrier genus") {
  CHECK(carrier_genus(fx::theta_planar()) == 0);
  CHECK(carrier_genus(fx::theta_nonplanar()) == 1);
  CHECK(carrier_genus(fx::virtual_trefoil()) == 1);
  CHECK(carrier_genus(fx::virtual_hopf()) == 1);
  CHECK(carrier_genus(fx::classical_trefoil()) == 0);
  CHECK(carrier_genus(fx::figure_eight()) == 0);
  CHECK(carrier_genus(fx::hopf_classical()) == 0);
  CHECK(carrier_genus(fx::curl_unknot(+1)) == 0);
  CHECK(carrier_genus(fx::unknot_loop()) == 0);
  CHECK(carrier_genus(Diagram{}) == 0);
}

TEST_CASE("boundary walker agrees with the brute-force surface model") {
  std::mt19937_64 rng(4242);
  RandomDiagramOptions opt;
  opt.max_crossings = 0;
  opt.max_vertices = 4;
  opt.max_vertex_degree = 4;
  opt.max_edges = 6;
  for (int trial = 0; trial < 20; ++trial) {
    const Diagram g = random_diagram(rng, opt);
    const SubgraphMask full = full_mask(g);
    for (SubgraphMask m = 0; m <= full; ++m) {
      const long lib = boundary_components(g, m);
      const long oracle = testsupport::brute_force_boundary_components(g, m);
      REQUIRE(lib == oracle);
      subgraph_genus(g, m);  // Euler parity and nonnegativity must hold
      if (m == full) break;  // avoid wrap when full == max
    }
  }
}

TEST_CASE("adding one edge changes bc by exactly one") {
  std::mt19937_64 rng(777);
  RandomDiagramOptions opt;
  opt.max_crossings = 0;
  opt.max_vertices = 4;
  opt.max_vertex_degree = 4;
  opt.max_edges = 6;
  for (int trial = 0; trial < 30; ++trial) {
    const Diagram g = random_diagram(rng, opt);
    const SubgraphMask full = full_mask(g);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const SubgraphMask without = full & ~(SubgraphMask{1} << e);
      const long delta = boundary_components(g, full) - boundary_components(g, without);
      CHECK((delta == 1 || delta == -1));
    }
  }
}
