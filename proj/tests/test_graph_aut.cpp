#include <doctest.h>

#include <random>

#include "intaut/graph_aut.hpp"
#include "intaut/transform_group.hpp"
#include "oracles.hpp"

using namespace intaut;

namespace {

Graph random_graph(std::uint32_t n, double density, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution edge(density);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.set_edge(u, v);
  return g;
}

std::uint64_t oracle_order(const Graph& g) {
  return oracle::automorphism_count(g.num_vertices(), [&](std::uint32_t u, std::uint32_t v) { return g.adjacent(u, v); });
}

Graph cycle(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (std::uint32_t v = 0; v < 5; ++v) {
    g.set_edge(v, (v + 1) % 5);
    g.set_edge(v, v + 5);
    g.set_edge(5 + v, 5 + (v + 2) % 5);
  }
  return g;
}

}  // namespace

TEST_SUITE("graph_aut") {
  TEST_CASE("graph basics") {
    Graph g(4);
    g.set_edge(0, 1);
    g.set_edge(2, 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<std::uint32_t>{0, 2});
    CHECK_FALSE(g.regular_degree());
    CHECK_THROWS_AS(g.set_edge(3, 3), Error);
    g.toggle_edge(0, 1);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(Graph::complete(5).regular_degree() == std::optional<std::uint32_t>{4});
    CHECK(Graph::complete(5).complement().num_edges() == 0);
  }

  TEST_CASE("integral graph degrees") {
    const auto f3 = make_field(3, 1);
    const auto g33 = build_integral_graph(AffineSpace(f3, 3));
    CHECK(g33.graph.num_vertices() == 27);
    CHECK(g33.graph.regular_degree() == std::optional<std::uint32_t>{14});
    const auto g32 = build_integral_graph(AffineSpace(f3, 2));
    CHECK(g32.graph.regular_degree() == std::optional<std::uint32_t>{4});
    const auto g52 = build_integral_graph(AffineSpace(make_field(5, 1), 2));
    CHECK(g52.graph.regular_degree() == std::optional<std::uint32_t>{16});
  }

  TEST_CASE("semiaffine maps are automorphisms of the integral graph") {
    for (const auto& [p, h, n] : {std::tuple{3u, 1u, 3u}, {3u, 2u, 2u}, {5u, 1u, 2u}}) {
      const AffineSpace s(make_field(p, h), n);
      const auto g = build_integral_graph(s).graph;
      for (const auto& perm : semiaffine_group(s)) REQUIRE(g.is_automorphism(perm));
    }
  }

  TEST_CASE("refinement") {
    const auto g = build_integral_graph(AffineSpace(make_field(3, 1), 3)).graph;
    const Coloring mono(27, 0);
    CHECK(refine_coloring(g, mono) == mono);  // regular graph stays monochrome

    Coloring ind(27, 0);
    ind[0] = 1;
    const auto refined = refine_coloring(g, ind);
    CHECK(refine_coloring(g, refined) == refined);
    const AffineSpace s(make_field(3, 1), 3);
    for (PointIndex u = 0; u < 27; ++u)
      for (PointIndex v = 0; v < 27; ++v)
        if (refined[u] == refined[v]) REQUIRE(s.classify(u) == s.classify(v));

    const auto path = [] {
      Graph p(4);
      p.set_edge(0, 1);
      p.set_edge(1, 2);
      p.set_edge(2, 3);
      return p;
    }();
    CHECK(refine_coloring(path, Coloring(4, 0)) == Coloring{0, 1, 1, 0});
  }

  TEST_CASE("automorphism orders against the permutation oracle") {
    for (std::uint32_t m = 1; m <= 7; ++m) {
      const auto res = automorphism_group(Graph::complete(m));
      CHECK(res.order == BigInt(oracle_order(Graph::complete(m))));
    }
    CHECK(automorphism_group(Graph::complete(12)).order == BigInt(479001600));
    CHECK(automorphism_group(cycle(7)).order == 14);
    CHECK(automorphism_group(petersen()).order == 120);
    CHECK(automorphism_group(Graph(6)).order == 720);

    std::mt19937 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint32_t n = 3 + trial % 6;
      const auto g = random_graph(n, trial % 3 == 0 ? 0.2 : 0.5, rng);
      CAPTURE(export_graph(g, GraphFormat::Graph6));
      CHECK(automorphism_group(g).order == BigInt(oracle_order(g)));
    }
  }

  TEST_CASE("generators are automorphisms and the order is invariant") {
    std::mt19937 rng(5);
    for (const auto& g : {petersen(), cycle(9), random_graph(9, 0.4, rng),
                          build_integral_graph(AffineSpace(make_field(3, 1), 2)).graph}) {
      const auto res = automorphism_group(g);
      for (const auto& gen : res.generators) REQUIRE(g.is_automorphism(gen));
      CHECK(automorphism_group(g.complement()).order == res.order);
      BigInt product = 1;
      for (auto len : res.orbit_lengths) product *= len;
      CHECK(product == res.order);
      if (res.order <= 5000) {
        const auto all = generate_group(res.generators, g.num_vertices(), 10000);
        CHECK(BigInt(all.size()) == res.order);
      }
    }
  }

  TEST_CASE("initial coloring restricts the group") {
    Coloring c(6, 0);
    c[0] = 1;
    CHECK(automorphism_group(Graph::complete(6), c).order == 120);
    CHECK_THROWS_AS(automorphism_group(Graph::complete(6), Coloring(5, 0)), Error);
  }

  TEST_CASE("integral graph automorphism groups") {
    const auto f3 = make_field(3, 1);
    CHECK(automorphism_group(build_integral_graph(AffineSpace(f3, 3)).graph).order == 1296);
    CHECK(automorphism_group(build_integral_graph(AffineSpace(f3, 2)).graph).order == 72);
  }

  TEST_CASE("classification") {
    const auto r33 = verify_classification(AffineSpace(make_field(3, 1), 3));
    CHECK(r33.verdict == Verdict::Equal);
    CHECK(r33.as_predicted());
    CHECK(r33.aut_order == 1296);
    CHECK(r33.extra_generators.empty());

    const auto r52 = verify_classification(AffineSpace(make_field(5, 1), 2));
    CHECK(r52.verdict == Verdict::StrictlyLarger);
    CHECK(r52.as_predicted());
    CHECK(r52.semiaffine_order == 400);
    CHECK(r52.aut_order == 28800);
    CHECK_FALSE(r52.extra_generators.empty());

    const auto r72 = verify_classification(AffineSpace(make_field(7, 1), 2));
    CHECK(r72.verdict == Verdict::Equal);
    CHECK(r72.as_predicted());

    CHECK(predicted_verdict(9, 2) == Verdict::StrictlyLarger);
    CHECK(predicted_verdict(3, 2) == Verdict::Equal);
    CHECK(predicted_verdict(5, 4) == Verdict::Equal);
    CHECK_FALSE(predicted_verdict(5, 1));
  }

  TEST_CASE("corrupted graph is flagged") {
    const AffineSpace s(make_field(3, 1), 3);
    auto g = build_integral_graph(s).graph;
    g.toggle_edge(0, 1);
    const auto r = verify_classification(s, g);
    CHECK_FALSE(r.semiaffine_contained);
    CHECK(r.verdict == Verdict::Violation);
    CHECK_FALSE(r.as_predicted());
  }

  TEST_CASE("export formats") {
    CHECK(export_graph(Graph(1), GraphFormat::Graph6) == "@\n");
    CHECK(export_graph(Graph(0), GraphFormat::Graph6) == "?\n");
    CHECK(export_graph(Graph::complete(2), GraphFormat::Graph6) == "A_\n");
    const auto g = build_integral_graph(AffineSpace(make_field(3, 1), 2)).graph;
    const auto dimacs = export_graph(g, GraphFormat::Dimacs);
    CHECK(dimacs.rfind("p edge 9 18\n", 0) == 0);
    CHECK(dimacs.find("e 1 2\n") != std::string::npos);
  }

  TEST_CASE("import round trips") {
    std::mt19937 rng(8);
    std::vector<Graph> graphs{Graph(0), Graph(1), petersen(),
                              build_integral_graph(AffineSpace(make_field(3, 1), 3)).graph};
    for (std::uint32_t n : {2u, 5u, 6u, 7u, 62u, 63u, 64u, 100u}) graphs.push_back(random_graph(n, 0.5, rng));
    for (const auto& g : graphs) {
      CHECK(import_graph(export_graph(g, GraphFormat::Graph6), GraphFormat::Graph6) == g);
      CHECK(import_graph(export_graph(g, GraphFormat::Dimacs), GraphFormat::Dimacs) == g);
    }
    CHECK_THROWS_AS(import_graph("p edge 3 2\ne 1 2\n", GraphFormat::Dimacs), Error);
    CHECK_THROWS_AS(import_graph("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs), Error);
    CHECK_THROWS_AS(import_graph("A\x01\n", GraphFormat::Graph6), Error);
  }
}
