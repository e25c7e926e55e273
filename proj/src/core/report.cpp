#include "core/report.hpp"

#include <sstream>

#include "core/classifier.hpp"
#include "core/embedding.hpp"
#include "core/graph.hpp"
#include "core/planarity.hpp"
#include "core/ring.hpp"
#include "core/topology.hpp"
#include "core/verifier.hpp"

namespace icg {
namespace {

using nlohmann::ordered_json;

struct RingBundle {
  RingSpec spec;
  FiniteRing ring;
  CayleyGraph graph;
  LocalDecomposition decomposition;
};

RingBundle load(const std::string& spec_text) {
  RingSpec spec = parse_ring_spec(spec_text);
  FiniteRing ring = build_ring(spec);
  CayleyGraph graph = build_cayley(ring);
  LocalDecomposition decomp = local_decomposition(ring);
  return {std::move(spec), std::move(ring), std::move(graph),
          std::move(decomp)};
}

}  // namespace

CommandResult cmd_analyze(const std::string& spec_text) {
  RingSpec spec = parse_ring_spec(spec_text);
  FiniteRing ring = build_ring(spec);
  CayleyGraph graph = build_cayley(ring);
  LocalDecomposition decomp = local_decomposition(ring);

  ordered_json j;
  j["spec"] = format_ring_spec(spec);
  j["order"] = ring.order();
  j["characteristic"] = ring.characteristic();
  ordered_json factor_orders = ordered_json::array();
  for (const auto& f : decomp.factors) factor_orders.push_back(f.order());
  j["local_factor_orders"] = std::move(factor_orders);
  j["involutions"] = ring.involutions().size();
  auto degree = regular_degree(graph);
  j["degree"] = degree ? ordered_json(*degree) : ordered_json(nullptr);
  bool connected = is_connected(graph);
  j["connected"] = connected;
  j["bipartite"] = is_bipartite(graph);
  auto g = girth(graph);
  j["girth"] = g ? ordered_json(*g) : ordered_json(nullptr);
  GenusClass gc = classify_genus(decomp);
  j["genus_class"] = to_string(gc.kind);
  j["evidence"] = gc.clause;

  std::ostringstream text;
  text << "ring:            " << j["spec"].get<std::string>() << "\n"
       << "order:           " << ring.order() << "\n"
       << "characteristic:  " << ring.characteristic() << "\n"
       << "local factors:   ";
  for (size_t i = 0; i < decomp.factors.size(); ++i)
    text << (i ? " x " : "") << "order " << decomp.factors[i].order();
  text << "\n"
       << "involutions:     " << ring.involutions().size() << "\n"
       << "degree:          "
       << (degree ? std::to_string(*degree) : std::string("irregular")) << "\n"
       << "connected:       " << (connected ? "yes" : "no") << "\n"
       << "bipartite:       " << (is_bipartite(graph) ? "yes" : "no") << "\n"
       << "girth:           "
       << (g ? std::to_string(*g) : std::string("infinite")) << "\n"
       << "genus class:     " << to_string(gc.kind) << "\n"
       << "evidence:        " << gc.clause << "\n";
  return {std::move(j), text.str(), true};
}

CommandResult cmd_classify(const std::string& spec_text) {
  RingSpec spec = parse_ring_spec(spec_text);
  FiniteRing ring = build_ring(spec);
  LocalDecomposition decomp = local_decomposition(ring);
  GenusClass gc = classify_genus(decomp);

  ordered_json j;
  j["spec"] = format_ring_spec(spec);
  j["genus_class"] = to_string(gc.kind);
  j["clause"] = gc.clause;
  ordered_json factors = ordered_json::array();
  for (const auto& f : decomp.factors)
    factors.push_back(to_string(classify_local(f)));
  j["local_classes"] = std::move(factors);

  std::ostringstream text;
  text << j["spec"].get<std::string>() << ": " << to_string(gc.kind)
       << " (" << gc.clause << ")\n";
  return {std::move(j), text.str(), true};
}

CommandResult cmd_genus(const std::string& spec_text, uint64_t budget) {
  RingBundle b = load(spec_text);
  std::optional<EmbeddingCertificate> seed =
      constructive_torus_embedding(b.ring, b.decomposition, b.graph);
  GenusCertificate cert = min_genus(b.graph, budget, seed);

  ordered_json j;
  j["spec"] = format_ring_spec(b.spec);
  std::ostringstream text;
  text << j["spec"].get<std::string>() << ": ";
  bool definitive = true;
  if (const auto* e = std::get_if<EmbeddingCertificate>(&cert)) {
    j["result"] = "exact";
    j["genus"] = e->genus;
    j["certificate"] = embedding_to_json(b.graph, *e);
    text << "genus " << e->genus << " (exact, " << e->faces << " faces)\n";
  } else {
    const auto& bounds = std::get<BoundsCertificate>(cert);
    j["result"] = "bounds";
    j["low"] = bounds.low;
    j["high"] = bounds.high;
    text << "genus in [" << bounds.low << ", " << bounds.high
         << "] (search budget exhausted)\n";
    definitive = false;
  }
  return {std::move(j), text.str(), definitive};
}

CommandResult cmd_embed(const std::string& spec_text) {
  RingBundle b = load(spec_text);
  auto cert = constructive_torus_embedding(b.ring, b.decomposition, b.graph);
  if (!cert) throw UnsupportedError("no constructive embedding; use genus");

  ordered_json j;
  j["spec"] = format_ring_spec(b.spec);
  j["certificate"] = embedding_to_json(b.graph, *cert);
  std::ostringstream text;
  text << j["spec"].get<std::string>() << ": genus-1 embedding with "
       << cert->faces << " faces\n";
  for (uint32_t v = 0; v < b.graph.vertex_count(); ++v) {
    text << "  " << b.graph.label(v) << ":";
    for (uint32_t w : cert->rotation.order[v])
      text << " " << b.graph.label(w);
    text << "\n";
  }
  return {std::move(j), text.str(), true};
}

CommandResult cmd_export_dot(const std::string& spec_text) {
  RingBundle b = load(spec_text);
  std::string dot = to_dot(b.graph, format_ring_spec(b.spec));
  return {ordered_json(), dot, true};
}

CommandResult cmd_export_json(const std::string& spec_text) {
  RingBundle b = load(spec_text);
  ordered_json j;
  j["order"] = b.graph.vertex_count();
  auto degree = regular_degree(b.graph);
  j["degree"] = degree ? ordered_json(*degree) : ordered_json(nullptr);
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : b.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  ordered_json labels = ordered_json::array();
  for (uint32_t v = 0; v < b.graph.vertex_count(); ++v)
    labels.push_back(b.graph.label(v));
  j["labels"] = std::move(labels);
  std::string text = j.dump(2) + "\n";
  return {std::move(j), std::move(text), true};
}

CommandResult cmd_verify(uint32_t max_order, uint64_t budget,
                         const std::string& theorem_filter_csv) {
  SuiteOptions options;
  options.max_order = max_order;
  options.budget = budget;
  if (!theorem_filter_csv.empty()) {
    std::istringstream in(theorem_filter_csv);
    std::string id;
    while (std::getline(in, id, ','))
      if (!id.empty()) options.theorems.push_back(id);
  }
  ordered_json report = run_suite(options);

  std::ostringstream text;
  uint64_t total_failures = 0;
  for (const auto& t : report["theorems"]) {
    size_t failures = t["failures"].size(), skips = t["skipped"].size();
    total_failures += failures;
    text << t["id"].get<std::string>() << ": checked "
         << t["checked"].get<uint64_t>() << ", failures " << failures
         << ", skipped " << skips << "\n";
  }
  text << (total_failures == 0 ? "all theorems verified\n"
                               : "FAILURES PRESENT\n");
  return {std::move(report), text.str(), true};
}

}  // namespace icg
