#include "core/embedding.hpp"

#include <stdexcept>

namespace icg {
namespace {

// Validates a rotation by tracing; returns the certificate only if the trace
// says genus 1.
std::optional<EmbeddingCertificate> validated(const CayleyGraph& g,
                                              RotationSystem rot) {
  auto [faces, genus] = rotation_genus(g, rot);
  if (genus != 1) return std::nullopt;
  return EmbeddingCertificate{std::move(rot), faces, 1};
}

// Transports rot on `pattern` through a vertex bijection onto g.
RotationSystem transport(const CayleyGraph& pattern, const CayleyGraph& g,
                         const RotationSystem& rot,
                         const std::vector<uint32_t>& iso) {
  RotationSystem out;
  out.order.assign(g.vertex_count(), {});
  for (uint32_t v = 0; v < pattern.vertex_count(); ++v)
    for (uint32_t w : rot.order[v]) out.order[iso[v]].push_back(iso[w]);
  return out;
}

// Walks a connected 2-regular graph once around; pos[v] = position on the
// cycle.
std::optional<std::vector<uint32_t>> cycle_positions(const CayleyGraph& g) {
  auto deg = regular_degree(g);
  if (!deg || *deg != 2 || !is_connected(g)) return std::nullopt;
  std::vector<uint32_t> pos(g.vertex_count(), UINT32_MAX);
  uint32_t prev = 0, cur = g.neighbors(0)[0];
  pos[0] = 0;
  for (uint32_t step = 1; step < g.vertex_count(); ++step) {
    pos[cur] = step;
    const auto& nb = g.neighbors(cur);
    uint32_t next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return pos;
}

// Product rings with one odd cyclic factor and a cycle-graph remainder are
// diagonal grids on the torus: coordinates are the positions along the two
// cycles, and the grid rotation transports back through the projections.
std::optional<EmbeddingCertificate> grid_embedding(
    const LocalDecomposition& d, const CayleyGraph& g, size_t odd_index) {
  const FiniteRing& odd_factor = d.factors[odd_index];
  auto xpos = cycle_positions(build_cayley(odd_factor));
  if (!xpos) return std::nullopt;
  uint32_t a = odd_factor.order();
  if (a < 3) return std::nullopt;

  std::vector<size_t> rest;
  for (size_t i = 0; i < d.factors.size(); ++i)
    if (i != odd_index) rest.push_back(i);
  if (rest.empty()) return std::nullopt;

  std::vector<FiniteRing> rest_factors;
  for (size_t i : rest) rest_factors.push_back(d.factors[i]);
  FiniteRing rest_ring = product_ring(rest_factors);
  uint32_t k = rest_ring.order();
  if (k < 3) return std::nullopt;
  auto ypos = cycle_positions(build_cayley(rest_ring));
  if (!ypos) return std::nullopt;

  // rest_ring indexes elements leftmost factor slowest; combine projections
  // with the same strides
  std::vector<uint32_t> strides(rest.size(), 1);
  for (size_t i = rest.size(); i-- > 1;)
    strides[i - 1] = strides[i] * rest_factors[i].order();

  std::vector<uint32_t> grid_of(g.vertex_count());
  std::vector<bool> hit(size_t(a) * k, false);
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    uint32_t x = (*xpos)[d.projections[odd_index][v]];
    uint32_t rest_index = 0;
    for (size_t i = 0; i < rest.size(); ++i)
      rest_index += d.projections[rest[i]][v] * strides[i];
    uint32_t cell = x * k + (*ypos)[rest_index];
    if (hit[cell]) return std::nullopt;  // projections not jointly bijective
    hit[cell] = true;
    grid_of[v] = cell;
  }
  std::vector<uint32_t> of_grid(size_t(a) * k);
  for (uint32_t v = 0; v < g.vertex_count(); ++v) of_grid[grid_of[v]] = v;

  RotationSystem grid = cycle_tensor_torus_rotation(a, k);
  RotationSystem rot;
  rot.order.assign(g.vertex_count(), {});
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    for (uint32_t w : grid.order[grid_of[v]])
      rot.order[v].push_back(of_grid[w]);
  return validated(g, std::move(rot));
}

}  // namespace

std::optional<EmbeddingCertificate> constructive_torus_embedding(
    const FiniteRing& r, const LocalDecomposition& d, const CayleyGraph& g) {
  (void)r;  // families are recognized through the decomposition
  GenusClass gc = classify_genus(d);
  if (gc.kind != GenusClassKind::Toroidal) return std::nullopt;

  if (d.factors.size() == 1) {
    LocalClass c = classify_local(d.factors[0]);
    if (c.kind == LocalClassKind::Z2N)
      return validated(g, z2n_torus_rotation(c.n));
    // the two K_{4,4} rings
    CayleyGraph k44 = complete_bipartite(4, 4);
    auto iso = find_graph_isomorphism(k44, g, 10'000'000);
    if (!iso) return std::nullopt;
    return validated(g, transport(k44, g, k44_torus_rotation(), *iso));
  }

  // take the first odd cyclic factor as the x coordinate
  for (size_t i = 0; i < d.factors.size(); ++i) {
    if (d.factors[i].order() % 2 == 1 &&
        classify_local(d.factors[i]).kind == LocalClassKind::OddCyclic) {
      auto cert = grid_embedding(d, g, i);
      if (cert) return cert;
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json embedding_to_json(const CayleyGraph& g,
                                         const EmbeddingCertificate& cert) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_count();
  nlohmann::ordered_json rot = nlohmann::ordered_json::array();
  for (const auto& order : cert.rotation.order) rot.push_back(order);
  j["rotation"] = std::move(rot);
  nlohmann::ordered_json faces = nlohmann::ordered_json::array();
  for (const auto& comp : connected_components(g)) {
    std::vector<uint32_t> to_local(g.vertex_count(), UINT32_MAX);
    for (uint32_t i = 0; i < comp.size(); ++i) to_local[comp[i]] = i;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::vector<std::string> labels;
    for (uint32_t v : comp) {
      labels.push_back(g.label(v));
      for (uint32_t w : g.neighbors(v))
        if (v < w) edges.push_back({to_local[v], to_local[w]});
    }
    CayleyGraph sub(static_cast<uint32_t>(comp.size()), edges,
                    std::move(labels));
    if (sub.edge_count() == 0) continue;
    RotationSystem local;
    local.order.resize(comp.size());
    for (uint32_t v : comp)
      for (uint32_t w : cert.rotation.order[v])
        local.order[to_local[v]].push_back(to_local[w]);
    FaceTrace t = trace_faces(sub, local);
    for (const auto& face : t.faces) {
      nlohmann::ordered_json fj = nlohmann::ordered_json::array();
      for (auto [u, v] : face) fj.push_back({comp[u], comp[v]});
      faces.push_back(std::move(fj));
    }
  }
  j["faces"] = std::move(faces);
  j["genus"] = cert.genus;
  return j;
}

}  // namespace icg
