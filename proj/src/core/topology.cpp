#include "core/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icg {
namespace {

int64_t ceil_div(int64_t a, int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void check_rotation(const CayleyGraph& g, const RotationSystem& rot) {
  if (rot.order.size() != g.vertex_count())
    throw std::invalid_argument("rotation system size mismatch");
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    auto sorted = rot.order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw std::invalid_argument(
          "rotation at a vertex is not a permutation of its neighbors");
  }
}

// Dart-indexed view of a graph: dart (v -> neighbors(v)[i]) has id
// base[v] + i; twin[] maps a dart to its reverse.
struct Darts {
  std::vector<uint32_t> base;
  std::vector<uint32_t> head;  // head[d] = target vertex of dart d
  std::vector<uint32_t> tail;
  std::vector<uint32_t> twin;
  uint32_t count = 0;

  explicit Darts(const CayleyGraph& g) {
    base.resize(g.vertex_count() + 1);
    for (uint32_t v = 0; v < g.vertex_count(); ++v)
      base[v + 1] = base[v] + g.degree(v);
    count = base[g.vertex_count()];
    head.resize(count);
    tail.resize(count);
    twin.resize(count);
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      for (uint32_t i = 0; i < nb.size(); ++i) {
        uint32_t d = base[v] + i;
        tail[d] = v;
        head[d] = nb[i];
      }
    }
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      for (uint32_t i = 0; i < nb.size(); ++i) {
        uint32_t d = base[v] + i;
        uint32_t u = nb[i];
        const auto& nbu = g.neighbors(u);
        uint32_t slot = static_cast<uint32_t>(
            std::lower_bound(nbu.begin(), nbu.end(), v) - nbu.begin());
        twin[d] = base[u] + slot;
      }
    }
  }

  uint32_t slot_in_head(uint32_t d) const { return twin[d] - base[head[d]]; }
};

}  // namespace

FaceTrace trace_faces(const CayleyGraph& g, const RotationSystem& rot) {
  if (!is_connected(g))
    throw std::invalid_argument("trace_faces requires a connected graph");
  check_rotation(g, rot);

  Darts darts(g);
  // succ[base[v]+i] = slot of the rotation successor of neighbors(v)[i]
  std::vector<uint32_t> succ(darts.count);
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    const auto& order = rot.order[v];
    for (uint32_t i = 0; i < order.size(); ++i) {
      uint32_t cur = static_cast<uint32_t>(
          std::lower_bound(nb.begin(), nb.end(), order[i]) - nb.begin());
      uint32_t nxt = static_cast<uint32_t>(
          std::lower_bound(nb.begin(), nb.end(),
                           order[(i + 1) % order.size()]) -
          nb.begin());
      succ[darts.base[v] + cur] = nxt;
    }
  }

  FaceTrace out;
  std::vector<bool> seen(darts.count, false);
  for (uint32_t d0 = 0; d0 < darts.count; ++d0) {
    if (seen[d0]) continue;
    std::vector<std::pair<uint32_t, uint32_t>> face;
    uint32_t d = d0;
    do {
      seen[d] = true;
      face.push_back({darts.tail[d], darts.head[d]});
      uint32_t v = darts.head[d];
      d = darts.base[v] + succ[darts.twin[d]];
    } while (d != d0);
    out.faces.push_back(std::move(face));
  }
  out.face_count = static_cast<uint32_t>(out.faces.size());

  int64_t chi = int64_t(g.vertex_count()) - int64_t(g.edge_count()) +
                out.face_count;
  if ((2 - chi) % 2 != 0 || chi > 2)
    throw std::logic_error("face trace produced an invalid Euler characteristic");
  return out;
}

namespace {

// Extracts the subgraph induced by a component; `to_local` maps original ids.
CayleyGraph component_subgraph(const CayleyGraph& g,
                               const std::vector<uint32_t>& comp,
                               std::vector<uint32_t>* to_local) {
  to_local->assign(g.vertex_count(), UINT32_MAX);
  for (uint32_t i = 0; i < comp.size(); ++i) (*to_local)[comp[i]] = i;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<std::string> labels;
  labels.reserve(comp.size());
  for (uint32_t v : comp) {
    labels.push_back(g.label(v));
    for (uint32_t w : g.neighbors(v))
      if (v < w) edges.push_back({(*to_local)[v], (*to_local)[w]});
  }
  return CayleyGraph(static_cast<uint32_t>(comp.size()), edges,
                     std::move(labels));
}

}  // namespace

std::pair<uint32_t, uint32_t> rotation_genus(const CayleyGraph& g,
                                             const RotationSystem& rot) {
  check_rotation(g, rot);
  uint32_t total_faces = 0, total_genus = 0;
  for (const auto& comp : connected_components(g)) {
    std::vector<uint32_t> to_local;
    CayleyGraph sub = component_subgraph(g, comp, &to_local);
    if (sub.edge_count() == 0) {
      total_faces += 1;
      continue;
    }
    RotationSystem local;
    local.order.resize(comp.size());
    for (uint32_t v : comp) {
      auto& o = local.order[to_local[v]];
      for (uint32_t w : rot.order[v]) o.push_back(to_local[w]);
    }
    FaceTrace t = trace_faces(sub, local);
    total_faces += t.face_count;
    int64_t chi = int64_t(sub.vertex_count()) - int64_t(sub.edge_count()) +
                  t.face_count;
    total_genus += static_cast<uint32_t>((2 - chi) / 2);
  }
  return {total_faces, total_genus};
}

uint32_t euler_genus_lower_bound(const CayleyGraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("euler_genus_lower_bound requires a connected graph");
  if (g.vertex_count() < 3)
    throw std::invalid_argument("euler_genus_lower_bound requires V >= 3");
  auto k = girth(g);
  if (!k) return 0;  // forest
  int64_t V = g.vertex_count(), E = g.edge_count(), kk = *k;
  int64_t bound = ceil_div(E * (kk - 2) - kk * (V - 2), 2 * kk);
  return bound > 0 ? static_cast<uint32_t>(bound) : 0;
}

// ------------------------------------------------------------- min_genus

namespace {

class BudgetExhausted {};

// Branch and bound over rotation systems of one connected graph. Cyclic
// orders are enumerated canonically (first slot pinned), and reflections are
// quotiented once at the pivot vertex, which is genus-preserving because
// reversing every rotation reverses all faces. Fixing the pivot's whole
// rotation would not be sound (a bowtie graph is a counterexample), so only
// these two reductions are applied.
class GenusSearch {
 public:
  GenusSearch(const CayleyGraph& g, uint64_t* budget)
      : g_(g), darts_(g), budget_(budget) {
    V_ = g.vertex_count();
    E_ = g.edge_count();
    succ_.assign(darts_.count, 0);
    assigned_.assign(V_, false);
    stamp_.assign(darts_.count, 0);
    build_order();
  }

  // Searches for embeddings of genus < best_genus, updating best via
  // callback; aborts early when stop_at is reached. Returns true when the
  // space was fully explored (or an embedding at stop_at was found).
  bool run(uint32_t stop_at, uint32_t* best_genus, RotationSystem* best_rot,
           uint32_t* best_faces) {
    stop_at_ = stop_at;
    best_genus_ = best_genus;
    best_rot_ = best_rot;
    best_faces_ = best_faces;
    done_ = false;
    try {
      dfs(0);
    } catch (const BudgetExhausted&) {
      return false;
    }
    return true;
  }

 private:
  const CayleyGraph& g_;
  Darts darts_;
  uint64_t* budget_;
  uint32_t V_, stop_at_ = 0;
  uint64_t E_;
  std::vector<uint32_t> succ_;       // per outgoing dart: successor slot
  std::vector<bool> assigned_;
  std::vector<uint32_t> order_;      // vertex assignment order
  std::vector<uint64_t> unassigned_degree_after_;  // suffix sums over order_
  std::vector<uint32_t> stamp_;
  uint32_t stamp_counter_ = 0;
  uint32_t* best_genus_ = nullptr;
  RotationSystem* best_rot_ = nullptr;
  uint32_t* best_faces_ = nullptr;
  bool done_ = false;

  void build_order() {
    // pivot: lexicographically smallest vertex of maximum degree; then grow
    // by most-assigned-neighbors to close faces early
    uint32_t pivot = 0;
    for (uint32_t v = 1; v < V_; ++v)
      if (g_.degree(v) > g_.degree(pivot)) pivot = v;
    std::vector<bool> placed(V_, false);
    order_.push_back(pivot);
    placed[pivot] = true;
    while (order_.size() < V_) {
      uint32_t best = UINT32_MAX, best_score = 0;
      for (uint32_t v = 0; v < V_; ++v) {
        if (placed[v]) continue;
        uint32_t score = 0;
        for (uint32_t w : g_.neighbors(v))
          if (placed[w]) ++score;
        if (best == UINT32_MAX || score > best_score) {
          best = v;
          best_score = score;
        }
      }
      order_.push_back(best);
      placed[best] = true;
    }
    unassigned_degree_after_.assign(V_ + 1, 0);
    for (size_t i = V_; i-- > 0;)
      unassigned_degree_after_[i] =
          unassigned_degree_after_[i + 1] + g_.degree(order_[i]);
  }

  void spend(uint64_t steps) {
    if (*budget_ < steps) {
      *budget_ = 0;
      throw BudgetExhausted{};
    }
    *budget_ -= steps;
  }

  // Closed faces of the partial next map. The map is an injective partial
  // permutation, so orbits are disjoint cycles and chains; each dart is
  // walked once per call.
  uint32_t count_closed_faces() {
    ++stamp_counter_;
    uint32_t closed = 0;
    uint64_t steps = 0;
    for (uint32_t d0 = 0; d0 < darts_.count; ++d0) {
      if (stamp_[d0] == stamp_counter_) continue;
      uint32_t d = d0;
      while (true) {
        ++steps;
        stamp_[d] = stamp_counter_;
        uint32_t v = darts_.head[d];
        if (!assigned_[v]) break;  // chain
        d = darts_.base[v] + succ_[darts_.twin[d]];
        if (d == d0) {
          ++closed;
          break;
        }
        if (stamp_[d] == stamp_counter_) break;  // joins an earlier chain
      }
    }
    spend(steps);
    return closed;
  }

  void snapshot_best(uint32_t genus, uint32_t faces) {
    *best_genus_ = genus;
    *best_faces_ = faces;
    best_rot_->order.assign(V_, {});
    for (uint32_t v = 0; v < V_; ++v) {
      const auto& nb = g_.neighbors(v);
      if (nb.empty()) continue;
      auto& o = best_rot_->order[v];
      uint32_t slot = 0;
      for (uint32_t i = 0; i < nb.size(); ++i) {
        o.push_back(nb[slot]);
        slot = succ_[darts_.base[v] + slot];
      }
    }
  }

  void dfs(uint32_t depth) {
    if (done_) return;
    if (depth == V_) {
      uint32_t faces = count_closed_faces();
      int64_t genus2 = 2 - int64_t(V_) + int64_t(E_) - faces;
      uint32_t genus = static_cast<uint32_t>(genus2 / 2);
      if (genus < *best_genus_) {
        snapshot_best(genus, faces);
        if (genus <= stop_at_) done_ = true;
      }
      return;
    }
    uint32_t v = order_[depth];
    uint32_t deg = g_.degree(v);
    if (deg <= 2) {
      // a unique cyclic order
      for (uint32_t i = 0; i < deg; ++i)
        succ_[darts_.base[v] + i] = (i + 1) % deg;
      assigned_[v] = true;
      descend(depth);
      assigned_[v] = false;
      return;
    }
    std::vector<uint32_t> perm(deg - 1);
    std::iota(perm.begin(), perm.end(), 1);
    bool quotient_reflection = (depth == 0);
    do {
      if (quotient_reflection && perm.front() > perm.back()) continue;
      for (uint32_t i = 0; i + 1 < perm.size(); ++i)
        succ_[darts_.base[v] + perm[i]] = perm[i + 1];
      succ_[darts_.base[v] + perm.back()] = 0;
      succ_[darts_.base[v] + 0] = perm.front();
      assigned_[v] = true;
      descend(depth);
      assigned_[v] = false;
      if (done_) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void descend(uint32_t depth) {
    uint32_t closed = count_closed_faces();
    uint64_t open_max = unassigned_degree_after_[depth + 1];
    int64_t faces_max = closed + open_max;
    int64_t bound = ceil_div(2 - int64_t(V_) + int64_t(E_) - faces_max, 2);
    if (bound < 0) bound = 0;
    if (static_cast<uint32_t>(bound) >= *best_genus_) return;
    dfs(depth + 1);
  }
};

RotationSystem identity_rotation(const CayleyGraph& g) {
  RotationSystem rot;
  rot.order.reserve(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    rot.order.push_back(g.neighbors(v));
  return rot;
}

// min_genus on one connected component.
GenusCertificate min_genus_connected(
    const CayleyGraph& g, uint64_t* budget,
    const std::optional<EmbeddingCertificate>& seed) {
  if (g.edge_count() == 0)
    return EmbeddingCertificate{RotationSystem{{{}}}, 1, 0};

  uint32_t lb = g.vertex_count() >= 3 ? euler_genus_lower_bound(g) : 0;
  if (is_planar_bool(g)) {
    PlanarityResult pr = is_planar(g);
    FaceTrace t = trace_faces(g, *pr.embedding);
    return EmbeddingCertificate{*pr.embedding, t.face_count, 0};
  }
  lb = std::max(lb, 1u);

  uint32_t best_genus;
  uint32_t best_faces;
  RotationSystem best_rot;
  if (seed) {
    best_rot = seed->rotation;
    FaceTrace t = trace_faces(g, best_rot);
    best_faces = t.face_count;
    best_genus = static_cast<uint32_t>(
        (2 - (int64_t(g.vertex_count()) - int64_t(g.edge_count()) +
              t.face_count)) /
        2);
  } else {
    best_rot = identity_rotation(g);
    FaceTrace t = trace_faces(g, best_rot);
    best_faces = t.face_count;
    best_genus = static_cast<uint32_t>(
        (2 - (int64_t(g.vertex_count()) - int64_t(g.edge_count()) +
              t.face_count)) /
        2);
  }
  if (best_genus == lb)
    return EmbeddingCertificate{best_rot, best_faces, best_genus};

  GenusSearch search(g, budget);
  bool complete = search.run(lb, &best_genus, &best_rot, &best_faces);
  if (complete || best_genus == lb)
    return EmbeddingCertificate{best_rot, best_faces, best_genus};
  return BoundsCertificate{lb, best_genus};
}

}  // namespace

GenusCertificate min_genus(const CayleyGraph& g, uint64_t budget,
                           const std::optional<EmbeddingCertificate>& seed) {
  auto comps = connected_components(g);
  if (comps.size() == 1) {
    GenusCertificate c = min_genus_connected(g, &budget, seed);
    return c;
  }
  // genus of a disconnected graph is the sum over components
  uint32_t total_low = 0, total_high = 0, total_faces = 0;
  bool all_exact = true;
  RotationSystem merged;
  merged.order.assign(g.vertex_count(), {});
  for (const auto& comp : comps) {
    std::vector<uint32_t> to_local;
    CayleyGraph sub = component_subgraph(g, comp, &to_local);
    std::optional<EmbeddingCertificate> sub_seed;
    if (seed) {
      EmbeddingCertificate s;
      s.rotation.order.resize(comp.size());
      for (uint32_t v : comp)
        for (uint32_t w : seed->rotation.order[v])
          s.rotation.order[to_local[v]].push_back(to_local[w]);
      sub_seed = std::move(s);
    }
    GenusCertificate c = min_genus_connected(sub, &budget, sub_seed);
    if (const auto* e = std::get_if<EmbeddingCertificate>(&c)) {
      total_low += e->genus;
      total_high += e->genus;
      total_faces += e->faces;
      for (uint32_t i = 0; i < comp.size(); ++i)
        for (uint32_t w : e->rotation.order[i])
          merged.order[comp[i]].push_back(comp[w]);
    } else {
      const auto& b = std::get<BoundsCertificate>(c);
      total_low += b.low;
      total_high += b.high;
      all_exact = false;
    }
  }
  if (all_exact)
    return EmbeddingCertificate{std::move(merged), total_faces, total_high};
  return BoundsCertificate{total_low, total_high};
}

// ------------------------------------------------------- closed formulas

uint32_t genus_complete_bipartite(uint32_t m, uint32_t n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("genus_complete_bipartite requires m, n >= 2");
  return static_cast<uint32_t>(
      ceil_div(int64_t(m - 2) * int64_t(n - 2), 4));
}

uint32_t genus_cycle_tensor(uint32_t m, uint32_t n) {
  if (m < 3 || n < 3)
    throw std::invalid_argument("genus_cycle_tensor requires m, n >= 3");
  return (m % 2 == 0 && n % 2 == 0) ? 2 : 1;
}

// ------------------------------------------------- constructive rotations

RotationSystem z2n_torus_rotation(uint32_t n) {
  if (n < 3)
    throw std::invalid_argument(
        "z2n_torus_rotation requires n >= 3 (smaller cases are planar)");
  if (n > 12) throw std::invalid_argument("z2n_torus_rotation: n too large");
  uint32_t N = 1u << n, m = N >> 1;
  RotationSystem rot;
  rot.order.reserve(N);
  for (uint32_t v = 0; v < N; ++v)
    rot.order.push_back({(v + m + 1) % N, (v + 1) % N, (v + m - 1) % N,
                         (v + N - 1) % N});
  return rot;
}

RotationSystem cycle_tensor_torus_rotation(uint32_t m, uint32_t n) {
  if (m < 3 || n < 3)
    throw std::invalid_argument("cycle_tensor_torus_rotation requires m, n >= 3");
  if (m % 2 == 0 && n % 2 == 0)
    throw std::invalid_argument(
        "cycle_tensor_torus_rotation: both even makes the tensor disconnected");
  auto idx = [n](uint32_t i, uint32_t j) { return i * n + j; };
  RotationSystem rot;
  rot.order.reserve(size_t(m) * n);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      uint32_t ip = (i + 1) % m, im = (i + m - 1) % m;
      uint32_t jp = (j + 1) % n, jm = (j + n - 1) % n;
      rot.order.push_back(
          {idx(ip, jp), idx(ip, jm), idx(im, jm), idx(im, jp)});
    }
  return rot;
}

RotationSystem k44_torus_rotation() {
  // K_{4,4} as the even-parity component of C_4 tensor C_4 with the diagonal
  // grid rotation: left part i -> (2(i>>1), 2(i&1)), right part j ->
  // (2(j>>1)+1, 2(j&1)+1).
  auto coord = [](uint32_t v) -> std::pair<uint32_t, uint32_t> {
    if (v < 4) return {2 * (v >> 1), 2 * (v & 1)};
    uint32_t w = v - 4;
    return {2 * (w >> 1) + 1, 2 * (w & 1) + 1};
  };
  auto uncoord = [](uint32_t x, uint32_t y) -> uint32_t {
    if (x % 2 == 0) return (x / 2) * 2 + (y / 2);
    return 4 + ((x - 1) / 2) * 2 + ((y - 1) / 2);
  };
  RotationSystem rot;
  rot.order.resize(8);
  for (uint32_t v = 0; v < 8; ++v) {
    auto [x, y] = coord(v);
    uint32_t xp = (x + 1) % 4, xm = (x + 3) % 4;
    uint32_t yp = (y + 1) % 4, ym = (y + 3) % 4;
    rot.order[v] = {uncoord(xp, yp), uncoord(xp, ym), uncoord(xm, ym),
                    uncoord(xm, yp)};
  }
  return rot;
}

}  // namespace icg
