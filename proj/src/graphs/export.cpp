#include "occred/graphs/export.hpp"

#include <sstream>

namespace occred {

std::string export_dot(const GadgetGraph& g) {
  std::ostringstream out;
  out << "digraph gadget {\n  rankdir=LR;\n";
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
    out << "  n" << v;
    switch (g.role(v)) {
      case VertexRole::Input:
        out << " [shape=box, label=\"u" << v << "\"]";
        break;
      case VertexRole::Output:
        out << " [shape=doublecircle, label=\"v" << (v - 2 * g.ell) << "\"]";
        break;
      case VertexRole::Internal:
        out << " [shape=point]";
        break;
    }
    out << ";\n";
  }
  for (auto [a, b] : g.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const ExpanderGraph& g) {
  std::ostringstream out;
  out << "graph expander {\n";
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) out << "  n" << v << ";\n";
  for (auto [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const RoutingReport& r) {
  nlohmann::json j;
  j["mode"] = r.mode == RoutingMode::Exhaustive ? "exhaustive" : "sampled";
  if (r.mode == RoutingMode::Sampled) {
    j["sample_count"] = r.sample_count;
    j["seed"] = r.seed;
  }
  j["subsets_checked"] = r.subsets_checked;
  j["min_flow_found"] = r.min_flow_found;
  j["passed"] = r.passed();
  j["witness_failure"] = r.witness_failure ? nlohmann::json(*r.witness_failure) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const GadgetGraph& g) {
  nlohmann::json j;
  j["kind"] = "gadget";
  j["ell"] = g.ell;
  j["backend"] = std::string(to_string(g.backend));
  j["vertex_count"] = g.vertex_count;
  j["inputs"] = g.inputs;
  j["outputs"] = g.outputs;
  j["internal"] = g.internal;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  j["degree_bound"] = g.degree_bound;
  j["size_constant"] = g.size_constant();
  j["certificate"] = g.certificate ? to_json(*g.certificate) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const ExpanderGraph& g) {
  nlohmann::json j;
  j["kind"] = "expander";
  j["vertex_count"] = g.vertex_count;
  j["degree"] = g.degree;
  j["replication"] = g.replication;
  j["side"] = g.side;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  j["lambda2"] = g.lambda2 ? nlohmann::json(*g.lambda2) : nlohmann::json();
  j["spectral_gap_certificate"] =
      g.spectral_gap_certificate ? nlohmann::json(*g.spectral_gap_certificate) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const ExpansionReport& r) {
  nlohmann::json j;
  j["mode"] = r.mode == ExpansionMode::Exhaustive ? "exhaustive" : "spectral";
  j["holds"] = r.holds;
  auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
  j["min_ratio"] = opt(r.min_ratio);
  j["certificate"] = opt(r.certificate);
  j["lambda2"] = opt(r.lambda2);
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json();
  return j;
}

}  // namespace occred
