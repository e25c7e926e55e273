#include "core/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/classifier.hpp"
#include "core/embedding.hpp"
#include "core/graph.hpp"
#include "core/planarity.hpp"
#include "core/ring.hpp"
#include "core/topology.hpp"

namespace icg {
namespace {

using nlohmann::ordered_json;

bool is_prime_power(uint32_t n) {
  if (n < 2) return false;
  uint32_t p = n;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<RingSpec> catalog_atoms(uint32_t max_order) {
  std::vector<std::pair<uint64_t, RingSpec>> atoms;
  for (uint32_t n = 2; n <= max_order; ++n)
    if (is_prime_power(n)) atoms.push_back({n, RingSpec::zn(n)});
  for (uint32_t p = 2; uint64_t(p) * p <= max_order; ++p) {
    bool prime = p >= 2;
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    uint64_t q = uint64_t(p) * p;
    for (uint32_t k = 2; q <= max_order; ++k, q *= p)
      atoms.push_back({q, RingSpec::gf(p, k)});
  }
  const std::pair<uint64_t, AtomKind> named[] = {
      {4, AtomKind::Z2X2}, {8, AtomKind::Z2X3}, {8, AtomKind::Z4A},
      {8, AtomKind::Z2XY}, {8, AtomKind::Z4B}};
  for (auto [o, k] : named)
    if (o <= max_order) atoms.push_back({o, RingSpec::named(k)});
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return format_ring_spec(a.second) < format_ring_spec(b.second);
            });
  std::vector<RingSpec> out;
  out.reserve(atoms.size());
  for (auto& [o, s] : atoms) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<RingSpec> enumerate_rings(uint32_t max_order) {
  if (max_order < 2)
    throw std::invalid_argument("enumerate_rings requires max_order >= 2");
  std::vector<RingSpec> atoms = catalog_atoms(max_order);
  std::vector<RingSpec> out;
  std::vector<RingSpec> current;

  // non-decreasing atom-index multisets with bounded product
  auto rec = [&](auto&& self, size_t min_index, uint64_t product) -> void {
    for (size_t i = min_index; i < atoms.size(); ++i) {
      uint64_t o = atoms[i].order();
      if (product * o > max_order) continue;
      current.push_back(atoms[i]);
      if (current.size() == 1)
        out.push_back(current[0]);
      else
        out.push_back(RingSpec::product(current));
      self(self, i, product * o);
      current.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

namespace {

struct TheoremAccumulator {
  std::string id;
  uint64_t checked = 0;
  ordered_json failures = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  ordered_json evidence = ordered_json::array();
  bool wants_evidence = false;

  void pass() { ++checked; }
  void fail(const std::string& ring, const std::string& expected,
            const std::string& observed) {
    ++checked;
    failures.push_back(
        {{"ring", ring}, {"expected", expected}, {"observed", observed}});
  }
  void skip(const std::string& ring, const std::string& reason) {
    skipped.push_back({{"ring", ring}, {"reason", reason}});
  }

  ordered_json to_json() const {
    ordered_json j;
    j["id"] = id;
    j["checked"] = checked;
    j["failures"] = failures;
    j["skipped"] = skipped;
    if (wants_evidence) j["evidence"] = evidence;
    return j;
  }
};

bool is_power_of_two(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteOptions& options) : options_(options) {}

  ordered_json run() {
    const char* all_ids[] = {"IMP1", "IMP2",   "IMP3",        "IMP4", "CONN",
                             "PLANAR", "MAIN", "KMN_FORMULA", "CYCLE_TENSOR"};
    for (const char* id : all_ids)
      if (selected(id)) acc_[id] = TheoremAccumulator{id};
    if (acc_.count("MAIN")) acc_["MAIN"].wants_evidence = true;

    std::vector<RingSpec> rings = enumerate_rings(options_.max_order);
    for (const RingSpec& spec : rings) check_ring(spec);
    if (acc_.count("KMN_FORMULA")) check_kmn();
    if (acc_.count("CYCLE_TENSOR")) check_cycle_tensor();

    ordered_json report;
    report["catalog_version"] = kCatalogVersion;
    report["max_order"] = options_.max_order;
    ordered_json theorems = ordered_json::array();
    for (const char* id : all_ids)
      if (acc_.count(id)) theorems.push_back(acc_[id].to_json());
    report["theorems"] = std::move(theorems);
    return report;
  }

 private:
  SuiteOptions options_;
  std::map<std::string, TheoremAccumulator> acc_;

  bool selected(const std::string& id) const {
    if (options_.theorems.empty()) return true;
    return std::find(options_.theorems.begin(), options_.theorems.end(),
                     id) != options_.theorems.end();
  }

  void check_ring(const RingSpec& spec) {
    const std::string name = format_ring_spec(spec);
    FiniteRing ring = build_ring(spec);
    CayleyGraph graph = build_cayley(ring);
    LocalDecomposition decomp = local_decomposition(ring);
    auto degree = regular_degree(graph);

    if (acc_.count("IMP1")) {
      auto& acc = acc_["IMP1"];
      bool ok = degree && *degree == ring.involutions().size() &&
                is_power_of_two(*degree) && *degree >= 1;
      if (ok)
        acc.pass();
      else
        acc.fail(name, "2^t-regular of degree |Inv(R)| with no isolated vertices",
                 degree ? std::to_string(*degree) + "-regular" : "irregular");
    }

    if (acc_.count("IMP2") && ring.order() % 2 == 1 && is_local(ring)) {
      auto& acc = acc_["IMP2"];
      uint32_t chr = ring.characteristic();
      uint32_t copies = ring.order() / chr;
      std::vector<uint32_t> expected(copies, chr);
      bool ok = degree && *degree == 2;
      if (ok) ok = cycle_decomposition(graph) == expected;
      if (ok) {
        acc.pass();
      } else {
        std::ostringstream obs;
        if (degree)
          obs << *degree << "-regular";
        else
          obs << "irregular";
        acc.fail(name,
                 std::to_string(copies) + " cycles of length " +
                     std::to_string(chr),
                 obs.str());
      }
    }

    if (acc_.count("IMP3")) {
      auto& acc = acc_["IMP3"];
      bool bip = is_bipartite(graph);
      bool even = ring.order() % 2 == 0;
      if (bip == even)
        acc.pass();
      else
        acc.fail(name, even ? "bipartite" : "not bipartite",
                 bip ? "bipartite" : "not bipartite");
    }

    if (acc_.count("IMP4") && decomp.factors.size() >= 2) {
      auto& acc = acc_["IMP4"];
      CayleyGraph tensor = build_cayley(decomp.factors[0]);
      for (size_t i = 1; i < decomp.factors.size(); ++i)
        tensor = tensor_product(tensor, build_cayley(decomp.factors[i]));
      Tri iso = graphs_isomorphic(graph, tensor, options_.budget);
      if (iso == Tri::True)
        acc.pass();
      else if (iso == Tri::Unknown)
        acc.skip(name, "budget");
      else
        acc.fail(name, "graph isomorphic to the tensor of factor graphs",
                 "not isomorphic");
    }

    if (acc_.count("CONN")) {
      auto& acc = acc_["CONN"];
      bool predicted = predict_connected(decomp);
      bool actual = is_connected(graph);
      if (predicted == actual)
        acc.pass();
      else
        acc.fail(name, predicted ? "connected" : "disconnected",
                 actual ? "connected" : "disconnected");
    }

    if (acc_.count("PLANAR")) {
      auto& acc = acc_["PLANAR"];
      bool by_pattern = classify_planar(decomp);
      bool by_degree = degree && (*degree == 1 || *degree == 2);
      bool by_graph = is_planar_bool(graph);
      if (by_pattern == by_degree && by_degree == by_graph) {
        acc.pass();
      } else {
        std::ostringstream obs;
        obs << "pattern=" << by_pattern << " degree-rule=" << by_degree
            << " exact=" << by_graph;
        acc.fail(name, "all three planarity routes agree", obs.str());
      }
    }

    if (acc_.count("MAIN")) check_main(name, ring, graph, decomp);
  }

  void check_main(const std::string& name, const FiniteRing& ring,
                  const CayleyGraph& graph, const LocalDecomposition& decomp) {
    auto& acc = acc_["MAIN"];
    GenusClass by_ring = classify_genus(decomp);
    GenusClass by_graph = genus_class_from_graph(graph);
    if (by_ring.kind != by_graph.kind) {
      acc.fail(name, std::string("ring-level ") + to_string(by_ring.kind),
               std::string("graph-level ") + to_string(by_graph.kind));
      return;
    }
    switch (by_ring.kind) {
      case GenusClassKind::Planar: {
        if (is_planar_bool(graph))
          acc.pass();
        else
          acc.fail(name, "planar embedding", "exact test says non-planar");
        return;
      }
      case GenusClassKind::Higher: {
        auto degree = regular_degree(graph);
        bool ok = degree && (*degree >= 8 ||
                             (*degree == 4 && !is_connected(graph)));
        if (ok)
          acc.pass();
        else
          acc.fail(name, "degree >= 8 or 4-regular disconnected",
                   by_graph.clause);
        return;
      }
      case GenusClassKind::Toroidal:
        break;
    }
    // two-sided evidence: a non-planarity witness plus a face-trace-verified
    // genus-1 embedding
    std::string nonplanarity;
    if (euler_genus_lower_bound(graph) >= 1) {
      nonplanarity = "euler-bound";
    } else {
      PlanarityResult pr = is_planar(graph);
      if (pr.planar) {
        acc.fail(name, "non-planar", "planar");
        return;
      }
      nonplanarity = pr.witness->kind == KuratowskiWitness::Kind::K5
                         ? "kuratowski-k5"
                         : "kuratowski-k33";
    }
    auto cert = constructive_torus_embedding(ring, decomp, graph);
    if (!cert) {
      acc.fail(name, "constructive genus-1 embedding", "no certificate");
      return;
    }
    acc.pass();
    ordered_json ev;
    ev["ring"] = name;
    ev["clause"] = by_ring.clause;
    ev["nonplanarity"] = nonplanarity;
    ev["embedding"] = embedding_to_json(graph, *cert);
    acc.evidence.push_back(std::move(ev));
  }

  void check_kmn() {
    auto& acc = acc_["KMN_FORMULA"];
    const std::pair<uint32_t, uint32_t> pairs[] = {{3, 3}, {3, 4}, {4, 4}};
    for (auto [m, n] : pairs) {
      std::string name =
          "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      uint32_t formula = genus_complete_bipartite(m, n);
      GenusCertificate cert =
          min_genus(complete_bipartite(m, n), options_.budget);
      if (const auto* e = std::get_if<EmbeddingCertificate>(&cert)) {
        if (e->genus == formula)
          acc.pass();
        else
          acc.fail(name, std::to_string(formula), std::to_string(e->genus));
      } else {
        acc.skip(name, "budget");
      }
    }
  }

  void check_cycle_tensor() {
    auto& acc = acc_["CYCLE_TENSOR"];
    for (uint32_t m = 3; m <= 6; ++m)
      for (uint32_t n = m; n <= 6; ++n) {
        std::string name =
            "C_" + std::to_string(m) + " (x) C_" + std::to_string(n);
        uint32_t expected = genus_cycle_tensor(m, n);
        CayleyGraph t = tensor_product(cycle_graph(m), cycle_graph(n));
        auto comps = connected_components(t);
        size_t expected_comps = (m % 2 == 0 && n % 2 == 0) ? 2 : 1;

        // upper bound: the diagonal grid rotation, restricted per component
        RotationSystem grid;
        grid.order.reserve(t.vertex_count());
        for (uint32_t i = 0; i < m; ++i)
          for (uint32_t j = 0; j < n; ++j) {
            uint32_t ip = (i + 1) % m, im = (i + m - 1) % m;
            uint32_t jp = (j + 1) % n, jm = (j + n - 1) % n;
            grid.order.push_back({ip * n + jp, ip * n + jm, im * n + jm,
                                  im * n + jp});
          }
        auto [faces, upper] = rotation_genus(t, grid);
        (void)faces;

        // lower bound: each component is non-planar
        uint32_t lower = 0;
        bool all_nonplanar = true;
        for (const auto& comp : comps) {
          std::vector<std::pair<uint32_t, uint32_t>> edges;
          std::vector<uint32_t> to_local(t.vertex_count(), UINT32_MAX);
          for (uint32_t i = 0; i < comp.size(); ++i) to_local[comp[i]] = i;
          for (uint32_t v : comp)
            for (uint32_t w : t.neighbors(v))
              if (v < w) edges.push_back({to_local[v], to_local[w]});
          CayleyGraph sub(static_cast<uint32_t>(comp.size()), edges);
          if (euler_genus_lower_bound(sub) >= 1 || !is_planar_bool(sub))
            lower += 1;
          else
            all_nonplanar = false;
        }

        bool ok = comps.size() == expected_comps && upper == expected &&
                  lower == expected && all_nonplanar;
        if (ok) {
          acc.pass();
        } else {
          std::ostringstream obs;
          obs << "components=" << comps.size() << " upper=" << upper
              << " lower=" << lower;
          acc.fail(name,
                   "genus " + std::to_string(expected) + " with " +
                       std::to_string(expected_comps) + " component(s)",
                   obs.str());
        }
      }
  }
};

}  // namespace

ordered_json run_suite(const SuiteOptions& options) {
  return SuiteRunner(options).run();
}

}  // namespace icg
