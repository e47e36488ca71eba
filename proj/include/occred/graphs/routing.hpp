#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "occred/graphs/gadget.hpp"

namespace occred {

// Unit-capacity flow network over a gadget with every vertex split into an
// in/out pair, so that integral flows are vertex-disjoint path systems.
// Reusable across source sets.
class RoutingNetwork {
 public:
  explicit RoutingNetwork(const GadgetGraph& g);

  // Maximum number of vertex-disjoint paths from `sources` (input vertex ids)
  // to the outputs. Fills `paths` (vertex sequences) when non-null.
  std::uint32_t max_flow(std::span<const std::uint32_t> sources,
                         std::vector<std::vector<std::uint32_t>>* paths = nullptr);

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    std::uint8_t cap;
    std::uint8_t initial;
  };

  void add_arc(std::uint32_t from, std::uint32_t to, std::uint8_t cap);
  bool bfs();
  std::uint32_t dfs(std::uint32_t node);
  void reset();

  std::uint32_t vertex_count_;
  std::uint32_t source_;
  std::uint32_t sink_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::uint32_t> source_arc_;  // arc index in arcs_[source_] per input vertex
  std::vector<int> level_;
  std::vector<std::uint32_t> cursor_;
};

struct DisjointPaths {
  std::uint32_t count = 0;
  // Vertex sequences from a source to an output; filled when count == |S|.
  std::vector<std::vector<std::uint32_t>> paths;
};

DisjointPaths max_vertex_disjoint_paths(const GadgetGraph& g,
                                        std::span<const std::uint32_t> sources);

inline constexpr std::uint64_t kExhaustiveRoutingLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultRoutingSamples = 1000;

struct RoutingCheck {
  RoutingMode mode = RoutingMode::Exhaustive;
  std::uint64_t samples = kDefaultRoutingSamples;
  std::uint64_t seed = 0;

  static RoutingCheck exhaustive() { return {RoutingMode::Exhaustive, 0, 0}; }
  static RoutingCheck sampled(std::uint64_t samples, std::uint64_t seed) {
    return {RoutingMode::Sampled, samples, seed};
  }
};

// Checks that ell-subsets of the inputs route onto all outputs. Exhaustive
// throws TooLargeForExhaustive when C(2*ell, ell) > kExhaustiveRoutingLimit.
RoutingReport verify_routing(const GadgetGraph& g, const RoutingCheck& check);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace occred
