#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icg {

CayleyGraph::CayleyGraph(uint32_t vertex_count,
                         const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                         std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  words_ = (size_t(n_) + 63) / 64;
  adj_.assign(n_, {});
  bits_.assign(size_t(n_) * words_, 0);
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v)) continue;
    bits_[size_t(u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
    bits_[size_t(v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (uint32_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n_) {
    throw std::invalid_argument("label count mismatch");
  }
}

std::vector<std::pair<uint32_t, uint32_t>> CayleyGraph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edge_count_);
  for (uint32_t u = 0; u < n_; ++u)
    for (uint32_t v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

CayleyGraph build_cayley(const FiniteRing& r) {
  if (r.order() > kMaxGraphVertices)
    throw std::invalid_argument("ring too large for graph construction");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  const auto& inv = r.involutions();
  edges.reserve(size_t(r.order()) * inv.size() / 2);
  for (uint32_t x = 0; x < r.order(); ++x)
    for (uint32_t u : inv) {
      uint32_t y = r.add(x, u);
      if (x < y) edges.push_back({x, y});
      // x + u == x is impossible (u is a unit), x + u < x handled from y side
      else if (y < x)
        edges.push_back({y, x});
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  labels.reserve(r.order());
  for (uint32_t x = 0; x < r.order(); ++x) labels.push_back(r.label(x));
  return CayleyGraph(r.order(), edges, std::move(labels));
}

std::optional<uint32_t> regular_degree(const CayleyGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  uint32_t d = g.degree(0);
  for (uint32_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_bipartite(const CayleyGraph& g) {
  std::vector<int8_t> color(g.vertex_count(), -1);
  std::deque<uint32_t> queue;
  for (uint32_t s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      for (uint32_t w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<uint32_t>> connected_components(const CayleyGraph& g) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (uint32_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> comp{s};
    seen[s] = true;
    for (size_t i = 0; i < comp.size(); ++i)
      for (uint32_t w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const CayleyGraph& g) {
  return connected_components(g).size() == 1;
}

std::optional<uint32_t> girth(const CayleyGraph& g) {
  // BFS from every vertex; a non-tree edge at (v, w) witnesses a closed walk
  // of length dist[v] + dist[w] + 1 which contains a cycle no longer than
  // that, and the true girth is attained from a root on a shortest cycle.
  uint32_t best = UINT32_MAX;
  std::vector<uint32_t> dist(g.vertex_count());
  std::vector<uint32_t> parent(g.vertex_count());
  for (uint32_t s = 0; s < g.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[s] = 0;
    parent[s] = UINT32_MAX;
    std::deque<uint32_t> queue{s};
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      if (best != UINT32_MAX && 2 * dist[v] + 1 >= best) break;
      for (uint32_t w : g.neighbors(v)) {
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v] && dist[w] >= dist[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == UINT32_MAX) return std::nullopt;
  return best;
}

CayleyGraph tensor_product(const CayleyGraph& a, const CayleyGraph& b) {
  uint64_t n = uint64_t(a.vertex_count()) * b.vertex_count();
  if (n > kMaxGraphVertices)
    throw std::invalid_argument("tensor product too large");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (auto [a1, a2] : a.edges())
    for (auto [b1, b2] : b.edges()) {
      uint32_t u1 = a1 * b.vertex_count() + b1, v1 = a2 * b.vertex_count() + b2;
      uint32_t u2 = a1 * b.vertex_count() + b2, v2 = a2 * b.vertex_count() + b1;
      edges.push_back({std::min(u1, v1), std::max(u1, v1)});
      edges.push_back({std::min(u2, v2), std::max(u2, v2)});
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t i = 0; i < a.vertex_count(); ++i)
    for (uint32_t j = 0; j < b.vertex_count(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  return CayleyGraph(static_cast<uint32_t>(n), edges, std::move(labels));
}

CayleyGraph cycle_graph(uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t j = (i + 1) % n;
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return CayleyGraph(n, edges);
}

CayleyGraph complete_bipartite(uint32_t m, uint32_t n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete_bipartite requires m, n >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < n; ++j) edges.push_back({i, m + j});
  return CayleyGraph(m + n, edges);
}

// ------------------------------------------------ graph isomorphism

namespace {

// 1-dimensional Weisfeiler-Leman colors, refined to a fixed point.
std::vector<uint32_t> wl_colors(const CayleyGraph& g) {
  std::vector<uint32_t> color(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) color[v] = g.degree(v);
  for (uint32_t round = 0; round < g.vertex_count(); ++round) {
    std::vector<std::pair<std::vector<uint32_t>, uint32_t>> sig(
        g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::vector<uint32_t> s;
      s.push_back(color[v]);
      for (uint32_t w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted_sig = sig;
    std::sort(sorted_sig.begin(), sorted_sig.end());
    std::vector<uint32_t> next(g.vertex_count());
    uint32_t c = 0;
    for (size_t i = 0; i < sorted_sig.size(); ++i) {
      if (i > 0 && sorted_sig[i].first != sorted_sig[i - 1].first) ++c;
      next[sorted_sig[i].second] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

class GraphIsoSearch {
 public:
  GraphIsoSearch(const CayleyGraph& a, const CayleyGraph& b, uint64_t budget)
      : a_(a), b_(b), budget_(budget) {}

  Tri run(std::vector<uint32_t>* mapping_out) {
    if (a_.vertex_count() != b_.vertex_count()) return Tri::False;
    if (a_.edge_count() != b_.edge_count()) return Tri::False;
    ca_ = wl_colors(a_);
    cb_ = wl_colors(b_);
    auto ha = ca_, hb = cb_;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return Tri::False;

    // map vertices of a in order of ascending color-class size, then color
    order_.resize(a_.vertex_count());
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<uint32_t> class_size(a_.vertex_count() + 1, 0);
    for (uint32_t c : ca_) ++class_size[c];
    std::sort(order_.begin(), order_.end(), [&](uint32_t x, uint32_t y) {
      if (class_size[ca_[x]] != class_size[ca_[y]])
        return class_size[ca_[x]] < class_size[ca_[y]];
      if (ca_[x] != ca_[y]) return ca_[x] < ca_[y];
      return x < y;
    });
    map_.assign(a_.vertex_count(), UINT32_MAX);
    used_.assign(b_.vertex_count(), false);
    Tri result = search(0);
    if (result == Tri::True && mapping_out) *mapping_out = map_;
    return result;
  }

 private:
  const CayleyGraph& a_;
  const CayleyGraph& b_;
  uint64_t budget_;
  bool exhausted_ = false;
  std::vector<uint32_t> ca_, cb_, order_, map_;
  std::vector<bool> used_;

  Tri search(size_t depth) {
    if (depth == order_.size()) return Tri::True;
    if (budget_ == 0) {
      exhausted_ = true;
      return Tri::Unknown;
    }
    uint32_t x = order_[depth];
    bool saw_unknown = false;
    for (uint32_t y = 0; y < b_.vertex_count(); ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      if (budget_ == 0) return Tri::Unknown;
      --budget_;
      bool ok = true;
      for (uint32_t w : a_.neighbors(x)) {
        if (map_[w] != UINT32_MAX && !b_.adjacent(y, map_[w])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // mapped-neighbor counts must agree, which also rules out mapped
        // non-neighbors of x landing adjacent to y
        uint32_t adj_mapped_a = 0;
        for (uint32_t w : a_.neighbors(x))
          if (map_[w] != UINT32_MAX) ++adj_mapped_a;
        uint32_t adj_mapped_b = 0;
        for (uint32_t wy : b_.neighbors(y))
          if (used_[wy]) ++adj_mapped_b;
        if (adj_mapped_a != adj_mapped_b) ok = false;
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = true;
      Tri sub = search(depth + 1);
      if (sub == Tri::True) return Tri::True;
      if (sub == Tri::Unknown) saw_unknown = true;
      map_[x] = UINT32_MAX;
      used_[y] = false;
      if (exhausted_) return Tri::Unknown;
    }
    return saw_unknown ? Tri::Unknown : Tri::False;
  }
};

}  // namespace

Tri graphs_isomorphic(const CayleyGraph& a, const CayleyGraph& b,
                      uint64_t budget) {
  return GraphIsoSearch(a, b, budget).run(nullptr);
}

std::optional<std::vector<uint32_t>> find_graph_isomorphism(
    const CayleyGraph& a, const CayleyGraph& b, uint64_t budget, Tri* status) {
  std::vector<uint32_t> mapping;
  Tri result = GraphIsoSearch(a, b, budget).run(&mapping);
  if (status) *status = result;
  if (result == Tri::True) return mapping;
  return std::nullopt;
}

std::vector<uint32_t> cycle_decomposition(const CayleyGraph& g) {
  auto d = regular_degree(g);
  if (!d || *d != 2)
    throw std::invalid_argument("cycle_decomposition requires a 2-regular graph");
  std::vector<uint32_t> lengths;
  for (const auto& comp : connected_components(g))
    lengths.push_back(static_cast<uint32_t>(comp.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string to_dot(const CayleyGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    out << "  \"" << g.label(v) << "\";\n";
  for (auto [u, v] : g.edges())
    out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace icg
