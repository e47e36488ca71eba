#include "occred/graphs/gadget.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "occred/errors.hpp"
#include "occred/graphs/routing.hpp"

namespace occred {

std::string_view to_string(GadgetBackend backend) {
  return backend == GadgetBackend::Benes ? "benes" : "recursive";
}

std::optional<GadgetBackend> gadget_backend_from_string(std::string_view name) {
  if (name == "benes") return GadgetBackend::Benes;
  if (name == "recursive") return GadgetBackend::Recursive;
  return std::nullopt;
}

VertexRole GadgetGraph::role(std::uint32_t v) const {
  if (v < 2 * ell) return VertexRole::Input;
  if (v < 3 * ell) return VertexRole::Output;
  return VertexRole::Internal;
}

std::vector<std::vector<std::uint32_t>> GadgetGraph::out_edges() const {
  std::vector<std::vector<std::uint32_t>> out(vertex_count);
  for (std::uint32_t e = 0; e < edges.size(); ++e) out[edges[e].first].push_back(e);
  return out;
}

std::vector<std::vector<std::uint32_t>> GadgetGraph::in_edges() const {
  std::vector<std::vector<std::uint32_t>> in(vertex_count);
  for (std::uint32_t e = 0; e < edges.size(); ++e) in[edges[e].second].push_back(e);
  return in;
}

std::uint32_t GadgetGraph::observed_degree_bound() const {
  std::vector<std::uint32_t> in(vertex_count, 0), out(vertex_count, 0);
  for (auto [a, b] : edges) {
    ++out[a];
    ++in[b];
  }
  std::uint32_t best = 0;
  for (std::uint32_t v = 0; v < vertex_count; ++v) best = std::max({best, in[v], out[v]});
  return best;
}

double GadgetGraph::size_constant() const {
  double scale = ell;
  if (backend == GadgetBackend::Benes)
    scale *= std::max(1.0, std::log2(static_cast<double>(std::bit_ceil(ell))) + 1.0);
  return static_cast<double>(edges.size()) / scale;
}

namespace {

// Raw directed graph under construction; vertices numbered in creation order.
struct Builder {
  std::uint32_t count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::uint32_t vertex() { return count++; }
  std::vector<std::uint32_t> vertices(std::size_t n) {
    std::vector<std::uint32_t> out(n);
    for (auto& v : out) v = vertex();
    return out;
  }
  void edge(std::uint32_t a, std::uint32_t b) { edges.emplace_back(a, b); }
};

// Wire graph of a 2x2 switch joining wires a, b to two fresh wires.
std::array<std::uint32_t, 2> add_switch(Builder& g, std::uint32_t a, std::uint32_t b) {
  std::array<std::uint32_t, 2> out{g.vertex(), g.vertex()};
  for (auto in : {a, b})
    for (auto o : out) g.edge(in, o);
  return out;
}

std::vector<std::uint32_t> add_benes(Builder& g, const std::vector<std::uint32_t>& in) {
  const std::size_t n = in.size();
  if (n == 2) {
    auto out = add_switch(g, in[0], in[1]);
    return {out[0], out[1]};
  }
  std::vector<std::uint32_t> upper(n / 2), lower(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    auto out = add_switch(g, in[2 * i], in[2 * i + 1]);
    upper[i] = out[0];
    lower[i] = out[1];
  }
  auto up = add_benes(g, upper);
  auto lo = add_benes(g, lower);
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    auto pair = add_switch(g, up[i], lo[i]);
    out[2 * i] = pair[0];
    out[2 * i + 1] = pair[1];
  }
  return out;
}

// Restricts `raw` to vertices on some input-to-output path and relabels them
// into the canonical layout (inputs, outputs, internal in creation order).
GadgetGraph finalize(const Builder& raw, std::uint32_t ell, GadgetBackend backend,
                     const std::vector<std::uint32_t>& inputs,
                     const std::vector<std::uint32_t>& outputs) {
  std::vector<std::vector<std::uint32_t>> fwd(raw.count), bwd(raw.count);
  for (auto [a, b] : raw.edges) {
    fwd[a].push_back(b);
    bwd[b].push_back(a);
  }
  auto sweep = [&](const std::vector<std::uint32_t>& seeds,
                   const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<bool> seen(raw.count, false);
    std::vector<std::uint32_t> stack(seeds);
    for (auto s : seeds) seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return seen;
  };
  auto reach = sweep(inputs, fwd);
  auto coreach = sweep(outputs, bwd);

  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(raw.count, kNone);
  GadgetGraph g;
  g.ell = ell;
  g.backend = backend;
  std::uint32_t next = 0;
  for (auto v : inputs) {
    label[v] = next;
    g.inputs.push_back(next++);
  }
  for (auto v : outputs) {
    label[v] = next;
    g.outputs.push_back(next++);
  }
  for (std::uint32_t v = 0; v < raw.count; ++v) {
    if (label[v] != kNone || !reach[v] || !coreach[v]) continue;
    label[v] = next;
    g.internal.push_back(next++);
  }
  g.vertex_count = next;
  for (auto [a, b] : raw.edges)
    if (label[a] != kNone && label[b] != kNone) g.edges.emplace_back(label[a], label[b]);
  g.degree_bound = g.observed_degree_bound();
  return g;
}

GadgetGraph build_benes(std::uint32_t ell) {
  const std::uint32_t ports = 2 * std::bit_ceil(ell);
  Builder raw;
  auto wires = raw.vertices(ports);
  auto inputs = raw.vertices(2 * ell);
  for (std::uint32_t i = 0; i < 2 * ell; ++i) raw.edge(inputs[i], wires[i]);
  auto out = add_benes(raw, wires);
  std::vector<std::uint32_t> outputs(out.begin(), out.begin() + ell);
  return finalize(raw, ell, GadgetBackend::Benes, inputs, outputs);
}

struct Multipliers {
  std::uint64_t a1, b1, a2, b2;
};

constexpr std::array<Multipliers, 4> kMultiplierSets{{
    {5, 1, 7, 3},
    {3, 2, 11, 5},
    {7, 3, 13, 1},
    {9, 4, 5, 2},
}};

// Core with n inputs and n outputs: direct matching, concentrator into
// ceil(3n/4) middle inputs, recursive core, reversed concentrator.
void add_core(Builder& g, const std::vector<std::uint32_t>& in,
              const std::vector<std::uint32_t>& out, const Multipliers& mul) {
  const std::size_t n = in.size();
  if (n <= 4) {
    for (auto a : in)
      for (auto b : out) g.edge(a, b);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) g.edge(in[i], out[i]);
  const std::size_t m = (3 * n + 3) / 4;
  auto mid_in = g.vertices(m);
  auto mid_out = g.vertices(m);
  auto neighbours = [&](std::size_t i) {
    std::array<std::size_t, 3> nb{i % m, (mul.a1 * i + mul.b1) % m, (mul.a2 * i + mul.b2) % m};
    std::sort(nb.begin(), nb.end());
    return nb;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto nb = neighbours(i);
    for (std::size_t k = 0; k < 3; ++k)
      if (k == 0 || nb[k] != nb[k - 1]) g.edge(in[i], mid_in[nb[k]]);
  }
  add_core(g, mid_in, mid_out, mul);
  for (std::size_t i = 0; i < n; ++i) {
    auto nb = neighbours(i);
    for (std::size_t k = 0; k < 3; ++k)
      if (k == 0 || nb[k] != nb[k - 1]) g.edge(mid_out[nb[k]], out[i]);
  }
}

GadgetGraph build_recursive_once(std::uint32_t ell, const Multipliers& mul) {
  Builder raw;
  auto inputs = raw.vertices(2 * ell);
  auto core_in = raw.vertices(ell);
  auto core_out = raw.vertices(ell);
  for (std::uint32_t i = 0; i < ell; ++i) {
    raw.edge(inputs[i], core_in[i]);
    raw.edge(inputs[i + ell], core_out[i]);
  }
  add_core(raw, core_in, core_out, mul);
  return finalize(raw, ell, GadgetBackend::Recursive, inputs, core_out);
}

GadgetGraph build_recursive(std::uint32_t ell) {
  const auto check = ell <= 10 ? RoutingCheck::exhaustive() : RoutingCheck::sampled(1000, 1);
  RoutingReport last;
  for (const auto& mul : kMultiplierSets) {
    auto g = build_recursive_once(ell, mul);
    last = verify_routing(g, check);
    if (last.passed()) {
      g.certificate = last;
      return g;
    }
  }
  throw RoutingVerificationFailed("recursive gadget for l=" + std::to_string(ell) +
                                  " failed routing verification (min flow " +
                                  std::to_string(last.min_flow_found) + ")");
}

}  // namespace

GadgetGraph build_gadget_graph(std::uint32_t ell, GadgetBackend backend) {
  if (ell < 1) throw std::invalid_argument("gadget size must be at least 1");
  return backend == GadgetBackend::Benes ? build_benes(ell) : build_recursive(ell);
}

GadgetInvariantReport check_gadget_invariants(const GadgetGraph& g) {
  GadgetInvariantReport report;
  std::vector<std::uint32_t> in(g.vertex_count, 0), out(g.vertex_count, 0);
  for (auto [a, b] : g.edges) {
    ++out[a];
    ++in[b];
  }

  // Kahn's algorithm.
  auto adjacency = g.out_edges();
  std::vector<std::uint32_t> pending(in);
  std::vector<std::uint32_t> ready;
  for (std::uint32_t v = 0; v < g.vertex_count; ++v)
    if (pending[v] == 0) ready.push_back(v);
  std::uint32_t visited = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++visited;
    for (auto e : adjacency[v])
      if (--pending[g.edges[e].second] == 0) ready.push_back(g.edges[e].second);
  }
  report.acyclic = visited == g.vertex_count;

  report.inputs_ok = g.inputs.size() == 2 * static_cast<std::size_t>(g.ell) &&
                     std::all_of(g.inputs.begin(), g.inputs.end(),
                                 [&](auto u) { return in[u] == 0 && out[u] == 1; });
  report.outputs_ok = g.outputs.size() == g.ell &&
                      std::all_of(g.outputs.begin(), g.outputs.end(),
                                  [&](auto v) { return out[v] == 0; });
  report.degree_bound_ok = g.degree_bound == g.observed_degree_bound();
  return report;
}

}  // namespace occred
