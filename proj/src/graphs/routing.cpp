#include "occred/graphs/routing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "occred/errors.hpp"

namespace occred {

// Node layout: in(v) = 2v, out(v) = 2v + 1, then source and sink.
RoutingNetwork::RoutingNetwork(const GadgetGraph& g)
    : vertex_count_(g.vertex_count),
      source_(2 * g.vertex_count),
      sink_(2 * g.vertex_count + 1),
      arcs_(2 * g.vertex_count + 2),
      source_arc_(g.vertex_count, std::numeric_limits<std::uint32_t>::max()),
      level_(arcs_.size()),
      cursor_(arcs_.size()) {
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) add_arc(2 * v, 2 * v + 1, 1);
  for (auto [a, b] : g.edges) add_arc(2 * a + 1, 2 * b, 1);
  for (auto u : g.inputs) {
    source_arc_[u] = static_cast<std::uint32_t>(arcs_[source_].size());
    add_arc(source_, 2 * u, 0);
  }
  for (auto t : g.outputs) add_arc(2 * t + 1, sink_, 1);
}

void RoutingNetwork::add_arc(std::uint32_t from, std::uint32_t to, std::uint8_t cap) {
  const auto fwd = static_cast<std::uint32_t>(arcs_[from].size());
  const auto bwd = static_cast<std::uint32_t>(arcs_[to].size() + (from == to ? 1 : 0));
  arcs_[from].push_back({to, bwd, cap, cap});
  arcs_[to].push_back({from, fwd, 0, 0});
}

void RoutingNetwork::reset() {
  for (auto& list : arcs_)
    for (auto& arc : list) arc.cap = arc.initial;
}

bool RoutingNetwork::bfs() {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::uint32_t> queue;
  level_[source_] = 0;
  queue.push(source_);
  while (!queue.empty()) {
    auto node = queue.front();
    queue.pop();
    for (const auto& arc : arcs_[node]) {
      if (arc.cap == 0 || level_[arc.to] >= 0) continue;
      level_[arc.to] = level_[node] + 1;
      queue.push(arc.to);
    }
  }
  return level_[sink_] >= 0;
}

std::uint32_t RoutingNetwork::dfs(std::uint32_t node) {
  if (node == sink_) return 1;
  for (auto& i = cursor_[node]; i < arcs_[node].size(); ++i) {
    auto& arc = arcs_[node][i];
    if (arc.cap == 0 || level_[arc.to] != level_[node] + 1) continue;
    if (dfs(arc.to)) {
      --arc.cap;
      ++arcs_[arc.to][arc.rev].cap;
      return 1;
    }
  }
  return 0;
}

std::uint32_t RoutingNetwork::max_flow(std::span<const std::uint32_t> sources,
                                       std::vector<std::vector<std::uint32_t>>* paths) {
  reset();
  for (auto s : sources) {
    if (s >= vertex_count_ || source_arc_[s] == std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument("source " + std::to_string(s) + " is not an input vertex");
    auto& arc = arcs_[source_][source_arc_[s]];
    arc.cap = 1;
  }
  std::uint32_t flow = 0;
  while (bfs()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (auto pushed = dfs(source_)) flow += pushed;
  }

  if (paths) {
    paths->clear();
    for (auto s : sources) {
      // A source carries flow iff its source arc is saturated.
      if (arcs_[source_][source_arc_[s]].cap != 0) continue;
      std::vector<std::uint32_t> path{s};
      std::uint32_t node = 2 * s + 1;
      while (true) {
        std::uint32_t next = sink_;
        for (const auto& arc : arcs_[node]) {
          if (arc.initial == 1 && arc.cap == 0) {
            next = arc.to;
            break;
          }
        }
        if (next == sink_) break;
        path.push_back(next / 2);
        node = next + 1;
      }
      paths->push_back(std::move(path));
    }
  }
  return flow;
}

DisjointPaths max_vertex_disjoint_paths(const GadgetGraph& g,
                                        std::span<const std::uint32_t> sources) {
  RoutingNetwork network(g);
  DisjointPaths result;
  std::vector<std::vector<std::uint32_t>> paths;
  result.count = network.max_flow(sources, &paths);
  if (result.count == sources.size()) result.paths = std::move(paths);
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

RoutingReport verify_routing(const GadgetGraph& g, const RoutingCheck& check) {
  RoutingReport report;
  report.mode = check.mode;
  report.min_flow_found = g.ell;
  const std::uint32_t ell = g.ell;
  const std::uint32_t n = static_cast<std::uint32_t>(g.inputs.size());
  RoutingNetwork network(g);
  std::vector<std::uint32_t> subset(ell);

  auto run = [&]() {
    auto flow = network.max_flow(subset);
    ++report.subsets_checked;
    report.min_flow_found = std::min(report.min_flow_found, flow);
    if (flow < ell && !report.witness_failure) report.witness_failure = subset;
  };

  if (check.mode == RoutingMode::Exhaustive) {
    if (binomial(n, ell) > kExhaustiveRoutingLimit)
      throw TooLargeForExhaustive("C(" + std::to_string(n) + ", " + std::to_string(ell) +
                                  ") subsets exceed the exhaustive routing limit");
    std::vector<std::uint32_t> index(ell);
    std::iota(index.begin(), index.end(), 0u);
    while (true) {
      for (std::uint32_t i = 0; i < ell; ++i) subset[i] = g.inputs[index[i]];
      run();
      // Next combination in lexicographic order.
      int i = static_cast<int>(ell) - 1;
      while (i >= 0 && index[i] == n - ell + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++index[i];
      for (auto j = static_cast<std::uint32_t>(i) + 1; j < ell; ++j) index[j] = index[j - 1] + 1;
    }
    return report;
  }

  report.sample_count = check.samples;
  report.seed = check.seed;
  std::mt19937_64 rng(check.seed);
  for (std::uint64_t s = 0; s < check.samples; ++s) {
    subset.clear();
    std::sample(g.inputs.begin(), g.inputs.end(), std::back_inserter(subset), ell, rng);
    run();
  }
  return report;
}

}  // namespace occred
