#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace occred {

enum class GadgetBackend { Benes, Recursive };

std::string_view to_string(GadgetBackend backend);
std::optional<GadgetBackend> gadget_backend_from_string(std::string_view name);

enum class VertexRole { Input, Output, Internal };

enum class RoutingMode { Exhaustive, Sampled };

struct RoutingReport {
  RoutingMode mode = RoutingMode::Exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t subsets_checked = 0;
  std::uint32_t min_flow_found = 0;
  // First checked subset (input vertex ids) that failed to route.
  std::optional<std::vector<std::uint32_t>> witness_failure;

  bool passed() const { return !witness_failure.has_value(); }
};

// DAG with 2*ell inputs of outdegree 1 and ell outputs of outdegree 0 such
// that every ell-subset of the inputs has ell vertex-disjoint paths onto the
// outputs. Vertex ids are laid out as inputs [0, 2*ell), outputs
// [2*ell, 3*ell), internal vertices after that.
struct GadgetGraph {
  std::uint32_t ell = 0;
  GadgetBackend backend = GadgetBackend::Benes;
  std::uint32_t vertex_count = 0;
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint32_t> outputs;
  std::vector<std::uint32_t> internal;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t degree_bound = 0;
  // Routing certificate, present when the construction was verified.
  std::optional<RoutingReport> certificate;

  VertexRole role(std::uint32_t v) const;
  // Edge indices leaving / entering each vertex, in edge order.
  std::vector<std::vector<std::uint32_t>> out_edges() const;
  std::vector<std::vector<std::uint32_t>> in_edges() const;
  std::uint32_t observed_degree_bound() const;

  // Edges per output (recursive) or per output * log2 (Benes).
  double size_constant() const;
};

// Benes: wire graph of a Benes network on 2*ell' ports (ell' = bit_ceil(ell)),
// inputs matched into the first 2*ell input wires, outputs the first ell
// output wires, pruned to vertices lying on some input-to-output path.
// Recursive: linear-size recursive superconcentrator core with the two input
// matchings; certified with verify_routing, throws RoutingVerificationFailed.
GadgetGraph build_gadget_graph(std::uint32_t ell, GadgetBackend backend);

struct GadgetInvariantReport {
  bool acyclic = false;
  bool inputs_ok = false;   // indegree 0, outdegree exactly 1
  bool outputs_ok = false;  // outdegree 0
  bool degree_bound_ok = false;
  bool ok() const { return acyclic && inputs_ok && outputs_ok && degree_bound_ok; }
};

GadgetInvariantReport check_gadget_invariants(const GadgetGraph& g);

}  // namespace occred
