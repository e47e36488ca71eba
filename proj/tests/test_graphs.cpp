#include <doctest.h>

#include <cmath>
#include <random>

#include "occred/errors.hpp"
#include "occred/graphs/expander.hpp"
#include "occred/graphs/export.hpp"
#include "occred/graphs/gadget.hpp"
#include "occred/graphs/routing.hpp"

using namespace occred;

TEST_CASE("expander arithmetic") {
  auto g = build_expander(9);
  CHECK(g.vertex_count == 9);
  CHECK(g.side == 3);
  CHECK(g.degree == 24);
  CHECK(g.edges.size() == 108);
  for (auto c : g.endpoint_counts()) CHECK(c == 24);

  CHECK(build_expander(4).vertex_count == 4);
  CHECK(build_expander(5).vertex_count == 9);
  CHECK(build_expander(10).vertex_count == 16);

  auto one = build_expander(1);
  CHECK(one.vertex_count == 1);
  CHECK_FALSE(one.spectral_gap_certificate.has_value());
  CHECK(verify_edge_expansion(one, ExpansionMode::Exhaustive).holds);
  CHECK(verify_edge_expansion(one, ExpansionMode::Spectral).holds);
}

TEST_CASE("exhaustive expansion on small graphs") {
  auto cycle = ExpanderGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(cycle.degree == 2);
  auto report = verify_edge_expansion(cycle, ExpansionMode::Exhaustive);
  CHECK_FALSE(report.holds);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->size() == 2);

  auto k4 = ExpanderGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(verify_edge_expansion(k4, ExpansionMode::Exhaustive).holds);

  CHECK(verify_edge_expansion(build_expander(4), ExpansionMode::Exhaustive).holds);
  CHECK_THROWS_AS(verify_edge_expansion(build_expander(25), ExpansionMode::Exhaustive),
                  TooLargeForExhaustive);
  CHECK_THROWS_AS(ExpanderGraph::from_edges(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("spectral certificate") {
  for (std::uint32_t n : {4u, 9u, 16u, 50u, 100u}) {
    auto g = build_expander(n);
    auto report = verify_edge_expansion(g, ExpansionMode::Spectral);
    CAPTURE(n);
    CHECK(report.holds);
    CHECK(*report.certificate > 1.0 + kSpectralMargin);
    CHECK(*g.lambda2 <= 3 * 5 * std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("power iteration agrees with the dense solver") {
  for (std::uint32_t n : {16u, 49u, 100u}) {
    auto g = build_expander(n);
    CAPTURE(n);
    CHECK(second_eigenvalue_power(g) == doctest::Approx(second_eigenvalue(g)).epsilon(1e-4));
  }
}

TEST_CASE("gadget structure") {
  for (auto backend : {GadgetBackend::Benes, GadgetBackend::Recursive}) {
    for (std::uint32_t ell = 1; ell <= 12; ++ell) {
      auto g = build_gadget_graph(ell, backend);
      CAPTURE(ell);
      CAPTURE(to_string(backend));
      CHECK(g.inputs.size() == 2 * ell);
      CHECK(g.outputs.size() == ell);
      auto inv = check_gadget_invariants(g);
      CHECK(inv.acyclic);
      CHECK(inv.inputs_ok);
      CHECK(inv.outputs_ok);
      CHECK(inv.degree_bound_ok);
      if (backend == GadgetBackend::Benes) CHECK(g.degree_bound <= 2);
    }
  }
}

TEST_CASE("l = 1 gadget has no vertex with two out-edges") {
  auto g = build_gadget_graph(1, GadgetBackend::Benes);
  for (const auto& out : g.out_edges()) CHECK(out.size() <= 1);
  for (std::uint32_t u : g.inputs) {
    std::vector<std::uint32_t> s{u};
    CHECK(max_vertex_disjoint_paths(g, s).count == 1);
  }
  CHECK_THROWS_AS(build_gadget_graph(0, GadgetBackend::Benes), std::invalid_argument);
}

TEST_CASE("disjoint paths") {
  auto g = build_gadget_graph(3, GadgetBackend::Benes);
  CHECK(max_vertex_disjoint_paths(g, {}).count == 0);
  std::vector<std::uint32_t> s{0, 2, 5};
  auto result = max_vertex_disjoint_paths(g, s);
  REQUIRE(result.count == 3);
  REQUIRE(result.paths.size() == 3);
  std::vector<int> used(g.vertex_count, 0);
  for (const auto& path : result.paths) {
    CHECK(g.role(path.front()) == VertexRole::Input);
    CHECK(g.role(path.back()) == VertexRole::Output);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bool found = false;
      for (auto [a, b] : g.edges) found = found || (a == path[i] && b == path[i + 1]);
      CHECK(found);
    }
    for (auto v : path) ++used[v];
  }
  for (auto c : used) CHECK(c <= 1);
}

TEST_CASE("exhaustive routing on small gadgets") {
  for (std::uint32_t ell = 1; ell <= 6; ++ell) {
    auto g = build_gadget_graph(ell, GadgetBackend::Benes);
    auto report = verify_routing(g, RoutingCheck::exhaustive());
    CAPTURE(ell);
    CHECK(report.passed());
    CHECK(report.min_flow_found == ell);
    CHECK(report.subsets_checked == binomial(2 * ell, ell));
  }
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("sampled routing is deterministic") {
  auto g = build_gadget_graph(64, GadgetBackend::Benes);
  auto a = verify_routing(g, RoutingCheck::sampled(50, 7));
  auto b = verify_routing(g, RoutingCheck::sampled(50, 7));
  CHECK(a.passed());
  CHECK(a.min_flow_found == 64);
  CHECK(a.subsets_checked == 50);
  CHECK(b.subsets_checked == a.subsets_checked);
}

TEST_CASE("routing failure is witnessed") {
  auto g = build_gadget_graph(2, GadgetBackend::Benes);
  auto in = g.in_edges();
  std::uint32_t target = g.outputs[0];
  // Cut every edge into the first output.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
  for (auto [a, b] : g.edges)
    if (b != target) kept.emplace_back(a, b);
  g.edges = kept;
  auto report = verify_routing(g, RoutingCheck::exhaustive());
  CHECK_FALSE(report.passed());
  CHECK(report.witness_failure.has_value());
  CHECK(report.min_flow_found < 2);
}

TEST_CASE("flow is monotone under edge deletion") {
  std::mt19937_64 rng(3);
  auto base = build_gadget_graph(5, GadgetBackend::Benes);
  for (int round = 0; round < 40; ++round) {
    std::vector<std::uint32_t> s;
    std::sample(base.inputs.begin(), base.inputs.end(), std::back_inserter(s), 5, rng);
    auto g = base;
    std::uint32_t before = max_vertex_disjoint_paths(g, s).count;
    for (int k = 0; k < 6; ++k) {
      g.edges.erase(g.edges.begin() + static_cast<long>(rng() % g.edges.size()));
      std::uint32_t after = max_vertex_disjoint_paths(g, s).count;
      CHECK(after <= before);
      before = after;
    }
  }
}

TEST_CASE("recursive backend is certified") {
  auto g = build_gadget_graph(12, GadgetBackend::Recursive);
  REQUIRE(g.certificate.has_value());
  CHECK(g.certificate->passed());
  CHECK(g.certificate->mode == RoutingMode::Sampled);
  auto small = build_gadget_graph(7, GadgetBackend::Recursive);
  REQUIRE(small.certificate.has_value());
  CHECK(small.certificate->mode == RoutingMode::Exhaustive);
}

TEST_CASE("exports") {
  auto g = build_gadget_graph(1, GadgetBackend::Benes);
  auto dot = export_dot(g);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=doublecircle") != std::string::npos);
  auto e = build_expander(4);
  auto edot = export_dot(e);
  CHECK(edot.find("graph expander") == 0);
  CHECK(edot.find("--") != std::string::npos);
  auto j = to_json(g);
  CHECK(j["inputs"].size() == 2);
  CHECK(j["backend"] == "benes");
  CHECK(to_json(e)["degree"] == 24);
}
