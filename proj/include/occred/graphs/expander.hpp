#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace occred {

// Regular undirected multigraph. Parallel edges are distinct entries; a loop
// {v, v} contributes 2 to the degree of v.
struct ExpanderGraph {
  std::uint32_t vertex_count = 0;
  std::uint32_t degree = 0;
  std::uint32_t replication = 1;
  // Side length m when the graph is the Margulis-Gabber-Galil graph on Z_m x Z_m.
  std::uint32_t side = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  // (degree - lambda_2) / 2; lower-bounds the edge expansion (discrete Cheeger).
  // Empty when the graph has a single vertex or was not certified.
  std::optional<double> spectral_gap_certificate;
  std::optional<double> lambda2;

  // Throws std::invalid_argument unless the multigraph is regular.
  static ExpanderGraph from_edges(std::uint32_t vertex_count,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  // Per-vertex count of incident edge endpoints, loops counted twice.
  std::vector<std::uint32_t> endpoint_counts() const;
};

inline constexpr std::uint32_t kExpanderBaseDegree = 8;
inline constexpr std::uint32_t kExpanderReplication = 3;
// Certified means certificate > 1 + kSpectralMargin.
inline constexpr double kSpectralMargin = 1e-3;
inline constexpr std::uint32_t kDenseEigenLimit = 2000;
inline constexpr std::uint32_t kExhaustiveExpansionLimit = 20;

// MGG 8-regular graph on Z_m x Z_m for the least m with m*m >= n, each edge
// repeated kExpanderReplication times (24-regular). When `certify` is set the
// spectral certificate is computed.
ExpanderGraph build_expander(std::uint32_t n, bool certify = true);

// Second-largest adjacency eigenvalue. Dense symmetric eigensolve up to
// kDenseEigenLimit vertices, deflated power iteration above.
double second_eigenvalue(const ExpanderGraph& g);
// The iterative path alone, usable at any size (tolerance 1e-6).
double second_eigenvalue_power(const ExpanderGraph& g);

enum class ExpansionMode { Exhaustive, Spectral };

struct ExpansionReport {
  ExpansionMode mode = ExpansionMode::Exhaustive;
  bool holds = false;
  // Exhaustive: min over proper S of cut(S) / min(|S|, |S^c|).
  std::optional<double> min_ratio;
  std::optional<double> certificate;
  std::optional<double> lambda2;
  // Exhaustive: first subset violating cut(S) > min(|S|, |S^c|).
  std::optional<std::vector<std::uint32_t>> witness;
};

// Strict edge expansion |E(S, S^c)| > min(|S|, |S^c|) for all nonempty proper S.
// Exhaustive throws TooLargeForExhaustive above kExhaustiveExpansionLimit vertices.
ExpansionReport verify_edge_expansion(const ExpanderGraph& g, ExpansionMode mode);

}  // namespace occred
