#include "occred/graphs/expander.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "occred/errors.hpp"

namespace occred {

std::vector<std::uint32_t> ExpanderGraph::endpoint_counts() const {
  std::vector<std::uint32_t> counts(vertex_count, 0);
  for (auto [a, b] : edges) {
    ++counts[a];
    ++counts[b];
  }
  return counts;
}

ExpanderGraph ExpanderGraph::from_edges(
    std::uint32_t vertex_count, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  ExpanderGraph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  for (auto [a, b] : g.edges)
    if (a >= vertex_count || b >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
  auto counts = g.endpoint_counts();
  if (!counts.empty()) {
    g.degree = counts.front();
    if (std::any_of(counts.begin(), counts.end(), [&](auto c) { return c != g.degree; }))
      throw std::invalid_argument("multigraph is not regular");
  }
  return g;
}

namespace {

std::uint32_t side_for(std::uint32_t n) {
  auto m = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
  while (static_cast<std::uint64_t>(m) * m < n) ++m;
  while (m > 1 && static_cast<std::uint64_t>(m - 1) * (m - 1) >= n) --m;
  return std::max<std::uint32_t>(m, 1);
}

double dense_second_eigenvalue(const ExpanderGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (auto [a, b] : g.edges) {
    adj(a, b) += 1.0;
    adj(b, a) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(n - 2);
}

// Power iteration on (A + degree*I) restricted to the complement of the
// all-ones vector; the shift makes the operator positive semidefinite.
double power_second_eigenvalue(const ExpanderGraph& g) {
  const std::uint32_t n = g.vertex_count;
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (auto [a, b] : g.edges) {
    ++offsets[a + 1];
    ++offsets[b + 1];
  }
  for (std::uint32_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::uint32_t> targets(offsets[n]);
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (auto [a, b] : g.edges) {
    targets[fill[a]++] = b;
    targets[fill[b]++] = a;
  }

  const double shift = g.degree;
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    for (std::uint32_t v = 0; v < n; ++v) {
      double acc = shift * x[v];
      for (auto k = offsets[v]; k < offsets[v + 1]; ++k) acc += x[targets[k]];
      y[v] = acc;
    }
  };
  auto deflate = [](Eigen::VectorXd& x) {
    x.array() -= x.mean();
    x.normalize();
  };

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(n), y(n);
  for (std::uint32_t v = 0; v < n; ++v) x[v] = normal(rng);
  deflate(x);

  double theta = 0.0;
  constexpr int kMaxIterations = 200000;
  constexpr double kTolerance = 1e-6;
  for (int it = 0; it < kMaxIterations; ++it) {
    apply(x, y);
    theta = x.dot(y);
    double residual = (y - theta * x).norm();
    x = y;
    deflate(x);
    if (residual < kTolerance) break;
  }
  return theta - shift;
}

}  // namespace

double second_eigenvalue_power(const ExpanderGraph& g) {
  if (g.vertex_count < 2) throw std::invalid_argument("lambda_2 needs at least two vertices");
  return power_second_eigenvalue(g);
}

double second_eigenvalue(const ExpanderGraph& g) {
  if (g.vertex_count < 2) throw std::invalid_argument("lambda_2 needs at least two vertices");
  return g.vertex_count <= kDenseEigenLimit ? dense_second_eigenvalue(g)
                                            : power_second_eigenvalue(g);
}

ExpanderGraph build_expander(std::uint32_t n, bool certify) {
  if (n < 1) throw std::invalid_argument("build_expander needs n >= 1");
  const std::uint32_t m = side_for(n);
  ExpanderGraph g;
  g.side = m;
  g.vertex_count = m * m;
  g.replication = kExpanderReplication;
  g.degree = kExpanderBaseDegree * kExpanderReplication;
  g.edges.reserve(static_cast<std::size_t>(g.vertex_count) * 4 * kExpanderReplication);
  auto id = [m](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint32_t>((x % m) * m + (y % m));
  };
  // Forward maps (x+2y, y), (x+2y+1, y), (x, y+2x), (x, y+2x+1); their inverses
  // give the other four neighbours of the 8-regular graph.
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      const std::uint32_t v = id(x, y);
      const std::uint32_t targets[4] = {id(x + 2 * y, y), id(x + 2 * y + 1, y),
                                        id(x, y + 2 * x), id(x, y + 2 * x + 1)};
      for (auto t : targets)
        for (std::uint32_t r = 0; r < kExpanderReplication; ++r) g.edges.emplace_back(v, t);
    }
  }
  if (certify && g.vertex_count >= 2) {
    g.lambda2 = second_eigenvalue(g);
    g.spectral_gap_certificate = (g.degree - *g.lambda2) / 2.0;
  }
  return g;
}

ExpansionReport verify_edge_expansion(const ExpanderGraph& g, ExpansionMode mode) {
  ExpansionReport report;
  report.mode = mode;
  const std::uint32_t n = g.vertex_count;

  if (mode == ExpansionMode::Spectral) {
    if (n < 2) {
      report.holds = true;
      return report;
    }
    double lambda2 = g.lambda2 ? *g.lambda2 : second_eigenvalue(g);
    report.lambda2 = lambda2;
    report.certificate = (g.degree - lambda2) / 2.0;
    report.holds = *report.certificate > 1.0 + kSpectralMargin;
    return report;
  }

  if (n > kExhaustiveExpansionLimit)
    throw TooLargeForExhaustive("exhaustive expansion check needs at most " +
                                std::to_string(kExhaustiveExpansionLimit) + " vertices, got " +
                                std::to_string(n));
  report.holds = true;
  if (n < 2) return report;

  // weight[v][u]: number of parallel edges between distinct v and u.
  std::vector<std::vector<std::uint32_t>> weight(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::uint32_t> nonloop(n, 0);
  for (auto [a, b] : g.edges) {
    if (a == b) continue;
    ++weight[a][b];
    ++weight[b][a];
    ++nonloop[a];
    ++nonloop[b];
  }

  // Walk all subsets in Gray-code order, updating the cut one vertex at a time.
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t current = 0;
  std::int64_t cut = 0;
  std::uint32_t size = 0;
  double best_ratio = INFINITY;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(step));
    const bool entering = !(current >> v & 1);
    std::int64_t into_set = 0;
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && (current >> u & 1)) into_set += weight[v][u];
    const std::int64_t outside = static_cast<std::int64_t>(nonloop[v]) - into_set;
    if (entering) {
      cut += outside - into_set;
      ++size;
    } else {
      cut += into_set - outside;
      --size;
    }
    current ^= std::uint64_t{1} << v;
    if (size == 0 || size == n) continue;
    const std::uint32_t smaller = std::min(size, n - size);
    const double ratio = static_cast<double>(cut) / smaller;
    best_ratio = std::min(best_ratio, ratio);
    if (cut <= static_cast<std::int64_t>(smaller) && report.holds) {
      report.holds = false;
      std::vector<std::uint32_t> witness;
      for (std::uint32_t u = 0; u < n; ++u)
        if (current >> u & 1) witness.push_back(u);
      report.witness = std::move(witness);
    }
  }
  report.min_ratio = best_ratio;
  return report;
}

}  // namespace occred
