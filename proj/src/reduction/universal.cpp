#include "occred/reduction/universal.hpp"

#include <algorithm>
#include <map>

namespace occred {

VariableId UniversalGadget::vertex_var(std::uint32_t v) const {
  switch (graph.role(v)) {
    case VertexRole::Input:
      return inputs[v];
    case VertexRole::Output:
      return outputs[v - 2 * graph.ell];
    case VertexRole::Internal:
      break;
  }
  return internal[v - 3 * graph.ell];
}

UniversalGadget build_universal_gadget(const GadgetGraph& graph, std::uint32_t first_id,
                                       std::optional<VariableId> owner) {
  UniversalGadget gadget;
  gadget.graph = graph;
  std::uint32_t next = first_id;
  auto allocate = [&](std::vector<VariableId>& dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst.emplace_back(next++);
  };
  allocate(gadget.inputs, graph.inputs.size());
  allocate(gadget.outputs, graph.outputs.size());
  allocate(gadget.internal, graph.internal.size());
  allocate(gadget.edges, graph.edges.size());

  const std::uint32_t d = graph.degree_bound;
  gadget.duplication = d * d;
  auto out = graph.out_edges();
  auto in = graph.in_edges();
  auto tag = [&](ClauseKind kind) { return ClauseTag{kind, std::nullopt, owner}; };
  auto pos = [](VariableId v) { return Literal(v, false); };
  auto neg = [](VariableId v) { return Literal(v, true); };
  auto& clauses = gadget.clauses;

  // (2) at most one outgoing edge per vertex.
  for (std::uint32_t v = 0; v < graph.vertex_count; ++v) {
    const auto& edges = out[v];
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        for (std::uint32_t r = 0; r < gadget.duplication; ++r)
          clauses.emplace_back(std::vector{neg(gadget.edges[edges[i]]), neg(gadget.edges[edges[j]])},
                               tag(ClauseKind::Outdegree));
  }
  // (3) an internal vertex may only pass on flow it receives.
  for (auto w : graph.internal) {
    for (auto e_out : out[w]) {
      std::vector<Literal> lits{neg(gadget.edges[e_out])};
      for (auto e_in : in[w]) lits.push_back(pos(gadget.edges[e_in]));
      clauses.emplace_back(std::move(lits), tag(ClauseKind::Flow));
    }
  }
  // (4) every output receives flow.
  for (auto v : graph.outputs) {
    std::vector<Literal> lits;
    for (auto e_in : in[v]) lits.push_back(pos(gadget.edges[e_in]));
    clauses.emplace_back(std::move(lits), tag(ClauseKind::VDegree));
  }
  // (5) an edge carrying flow forces equal endpoint values.
  for (std::uint32_t e = 0; e < graph.edges.size(); ++e) {
    auto a = gadget.vertex_var(graph.edges[e].first);
    auto b = gadget.vertex_var(graph.edges[e].second);
    clauses.emplace_back(std::vector{neg(gadget.edges[e]), pos(a), neg(b)},
                         tag(ClauseKind::EdgeConsistency));
    clauses.emplace_back(std::vector{neg(gadget.edges[e]), neg(a), pos(b)},
                         tag(ClauseKind::EdgeConsistency));
  }
  return gadget;
}

UniversalGadget build_universal_gadget(std::uint32_t ell, GadgetBackend backend,
                                       std::uint32_t first_id, std::optional<VariableId> owner) {
  return build_universal_gadget(build_gadget_graph(ell, backend), first_id, owner);
}

StepResult step1_reduce(const PrenexFormula& f, const PipelineOptions& opts) {
  validate(f);
  BindingTable table(f);
  std::map<VariableId, std::uint32_t> occurrences;
  for (const auto& c : f.clauses)
    for (auto lit : c.literals) ++occurrences[lit.variable()];

  auto is_universal = [&](VariableId v) {
    return table.bound(v) && f.blocks[table.block[v.value]].kind == Quantifier::Universal;
  };

  StepResult result;
  auto& trace = result.trace;
  trace.step = 1;

  // Gadgets in ascending variable order.
  std::uint32_t next = first_free_id(f);
  std::map<std::uint32_t, GadgetGraph> graphs;
  std::map<VariableId, UniversalGadget> gadgets;
  for (const auto& [v, count] : occurrences) {
    if (!is_universal(v) || count <= opts.bypass_threshold) continue;
    auto it = graphs.find(count);
    if (it == graphs.end()) it = graphs.emplace(count, build_gadget_graph(count, opts.gadget_backend)).first;
    auto gadget = build_universal_gadget(it->second, next, v);
    next += static_cast<std::uint32_t>(gadget.inputs.size()) + gadget.k();
    gadgets.emplace(v, std::move(gadget));
  }

  // Prefix: inputs replace the owner; existentials go to the next block.
  PrenexFormula& out = result.formula;
  std::vector<std::vector<VariableId>> extras(f.blocks.size());
  std::vector<QuantifierBlock> blocks;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    QuantifierBlock block{f.blocks[b].kind, {}};
    for (auto v : f.blocks[b].variables) {
      auto it = gadgets.find(v);
      if (it == gadgets.end()) {
        block.variables.push_back(v);
        trace.variables.push_back({VariableRole::Kept, v, std::nullopt, {v}});
        continue;
      }
      const auto& g = it->second;
      block.variables.insert(block.variables.end(), g.inputs.begin(), g.inputs.end());
      auto& dst = extras[b];
      dst.insert(dst.end(), g.outputs.begin(), g.outputs.end());
      dst.insert(dst.end(), g.internal.begin(), g.internal.end());
      dst.insert(dst.end(), g.edges.begin(), g.edges.end());
    }
    blocks.push_back(std::move(block));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.blocks.push_back(blocks[b]);
    if (extras[b].empty()) continue;
    if (b + 1 < blocks.size() && blocks[b + 1].kind == Quantifier::Existential) {
      auto& dst = blocks[b + 1].variables;
      dst.insert(dst.end(), extras[b].begin(), extras[b].end());
    } else {
      out.blocks.push_back({Quantifier::Existential, extras[b]});
    }
  }

  for (const auto& [v, g] : gadgets) {
    trace.variables.push_back({VariableRole::GadgetInput, v, std::nullopt, g.inputs});
    trace.variables.push_back({VariableRole::GadgetOutput, v, std::nullopt, g.outputs});
    trace.variables.push_back({VariableRole::GadgetInternal, v, std::nullopt, g.internal});
    trace.variables.push_back({VariableRole::GadgetEdge, v, std::nullopt, g.edges});
  }

  // (1) major clauses: the j-th occurrence of x becomes output j.
  std::map<VariableId, std::uint32_t> seen;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    std::vector<Literal> lits;
    for (auto lit : f.clauses[c].literals) {
      auto it = gadgets.find(lit.variable());
      if (it == gadgets.end()) {
        lits.push_back(lit);
        continue;
      }
      auto j = seen[lit.variable()]++;
      lits.emplace_back(it->second.outputs[j], lit.negated());
    }
    out.clauses.emplace_back(std::move(lits), ClauseTag{ClauseKind::Major, c, std::nullopt});
  }

  std::uint32_t duplication = 0;
  for (auto& [v, g] : gadgets) {
    duplication = std::max(duplication, g.duplication);
    for (auto& c : g.clauses) out.clauses.push_back(std::move(c));
    UniversalGadgetInstance instance;
    instance.owner = v;
    instance.ell = g.graph.ell;
    instance.duplication = g.duplication;
    for (std::uint32_t x = 0; x < g.graph.vertex_count; ++x) instance.vertex_vars.push_back(g.vertex_var(x));
    instance.edge_vars = g.edges;
    instance.graph = std::move(g.graph);
    trace.universal_gadgets.push_back(std::move(instance));
  }

  out.variable_count = std::max(f.variable_count, next - 1);
  trace.constants = measure_constants(f, out, duplication);
  return result;
}

}  // namespace occred
