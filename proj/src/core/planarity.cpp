#include "core/planarity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace icg {
namespace {

using Edge = std::pair<uint32_t, uint32_t>;

Edge norm(uint32_t u, uint32_t v) { return {std::min(u, v), std::max(u, v)}; }

// A face of the partial embedding: its dart cycle plus a vertex set for
// admissibility tests.
struct Face {
  std::vector<Edge> darts;  // (from, to), cyclic
  std::set<uint32_t> verts;
};

// Demoucron/face-addition planarity on a 2-connected graph given by an edge
// list. On success fills `faces` with the complete face set.
class BlockEmbedder {
 public:
  BlockEmbedder(const std::vector<Edge>& edges) {
    for (auto [u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      edge_set_.insert(norm(u, v));
    }
    for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
  }

  bool run(std::vector<Face>* faces_out) {
    size_t V = adj_.size(), E = edge_set_.size();
    if (E > 3 * V - 6 && V >= 3) return false;

    std::vector<uint32_t> cycle = find_cycle();
    if (cycle.empty()) throw std::logic_error("block without a cycle");
    embed_cycle(cycle);

    while (embedded_.size() < edge_set_.size()) {
      auto fragments = compute_fragments();
      if (fragments.empty())
        throw std::logic_error("unembedded edges but no fragments");

      // admissible faces per fragment
      size_t chosen = SIZE_MAX;
      std::vector<std::vector<size_t>> admissible(fragments.size());
      for (size_t i = 0; i < fragments.size(); ++i) {
        for (size_t f = 0; f < faces_.size(); ++f) {
          bool ok = true;
          for (uint32_t a : fragments[i].attachments)
            if (!faces_[f].verts.count(a)) {
              ok = false;
              break;
            }
          if (ok) admissible[i].push_back(f);
        }
        if (admissible[i].empty()) return false;
        if (admissible[i].size() == 1 && chosen == SIZE_MAX) chosen = i;
      }
      if (chosen == SIZE_MAX) chosen = 0;

      std::vector<uint32_t> path = fragment_path(fragments[chosen]);
      embed_path(path, admissible[chosen][0]);
    }
    if (faces_out) *faces_out = faces_;
    return true;
  }

 private:
  struct Fragment {
    std::vector<uint32_t> attachments;         // sorted H-vertices
    std::vector<uint32_t> interior;            // sorted, may be empty
    std::optional<Edge> single_edge;
  };

  std::map<uint32_t, std::vector<uint32_t>> adj_;
  std::set<Edge> edge_set_;
  std::set<Edge> embedded_;
  std::set<uint32_t> in_h_;
  std::vector<Face> faces_;

  std::vector<uint32_t> find_cycle() {
    // iterative DFS until a back edge closes a cycle
    uint32_t start = adj_.begin()->first;
    std::map<uint32_t, uint32_t> parent;
    std::vector<uint32_t> stack{start};
    parent[start] = start;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t w : adj_[v]) {
        if (!parent.count(w)) {
          parent[w] = v;
          stack.push_back(w);
        } else if (w != parent[v]) {
          // walk v up; if w is an ancestor we have a cycle
          std::vector<uint32_t> up;
          uint32_t x = v;
          while (x != parent[x]) {
            up.push_back(x);
            if (x == w) break;
            x = parent[x];
          }
          if (x == w || (!up.empty() && up.back() == w)) {
            std::vector<uint32_t> cycle;
            for (uint32_t y : up) {
              cycle.push_back(y);
              if (y == w) break;
            }
            if (cycle.back() != w) continue;
            return cycle;
          }
        }
      }
    }
    return {};
  }

  void embed_cycle(const std::vector<uint32_t>& cycle) {
    Face fwd, rev;
    size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
      uint32_t u = cycle[i], v = cycle[(i + 1) % k];
      fwd.darts.push_back({u, v});
      rev.darts.push_back({v, u});
      fwd.verts.insert(u);
      rev.verts.insert(u);
      in_h_.insert(u);
      embedded_.insert(norm(u, v));
    }
    std::reverse(rev.darts.begin(), rev.darts.end());
    faces_.push_back(std::move(fwd));
    faces_.push_back(std::move(rev));
  }

  std::vector<Fragment> compute_fragments() {
    std::vector<Fragment> out;
    // interior components of G - V(H)
    std::set<uint32_t> seen;
    for (const auto& [s, nb0] : adj_) {
      if (in_h_.count(s) || seen.count(s)) continue;
      std::vector<uint32_t> comp{s};
      seen.insert(s);
      std::set<uint32_t> attach;
      for (size_t i = 0; i < comp.size(); ++i) {
        for (uint32_t w : adj_[comp[i]]) {
          if (in_h_.count(w)) {
            attach.insert(w);
          } else if (!seen.count(w)) {
            seen.insert(w);
            comp.push_back(w);
          }
        }
      }
      Fragment f;
      f.attachments.assign(attach.begin(), attach.end());
      std::sort(comp.begin(), comp.end());
      f.interior = std::move(comp);
      out.push_back(std::move(f));
    }
    // single unembedded edges between H-vertices
    for (const auto& e : edge_set_) {
      if (embedded_.count(e)) continue;
      if (in_h_.count(e.first) && in_h_.count(e.second)) {
        Fragment f;
        f.attachments = {e.first, e.second};
        f.single_edge = e;
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  // An alpha-path between two distinct attachments through the fragment.
  std::vector<uint32_t> fragment_path(const Fragment& f) {
    if (f.single_edge) return {f.single_edge->first, f.single_edge->second};
    // BFS from the smallest attachment through interior vertices only
    uint32_t src = f.attachments[0];
    std::set<uint32_t> interior(f.interior.begin(), f.interior.end());
    std::map<uint32_t, uint32_t> parent;
    std::deque<uint32_t> queue;
    for (uint32_t w : adj_[src])
      if (interior.count(w) && !parent.count(w)) {
        parent[w] = src;
        queue.push_back(w);
      }
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      for (uint32_t w : adj_[v]) {
        if (w != src && in_h_.count(w)) {
          // reached another attachment
          std::vector<uint32_t> path{w};
          uint32_t x = v;
          while (x != src) {
            path.push_back(x);
            x = parent[x];
          }
          path.push_back(src);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (interior.count(w) && !parent.count(w)) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    throw std::logic_error("fragment with a single attachment in a block");
  }

  void embed_path(const std::vector<uint32_t>& path, size_t face_idx) {
    Face old = std::move(faces_[face_idx]);
    uint32_t a = path.front(), b = path.back();
    // positions: dart i goes old.darts[i].first -> .second
    size_t ia = SIZE_MAX, ib = SIZE_MAX;
    for (size_t i = 0; i < old.darts.size(); ++i) {
      if (old.darts[i].first == a) ia = i;
      if (old.darts[i].first == b) ib = i;
    }
    if (ia == SIZE_MAX || ib == SIZE_MAX)
      throw std::logic_error("attachment not on admissible face");

    std::vector<Edge> fwd, rev;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      fwd.push_back({path[i], path[i + 1]});
    for (size_t i = path.size(); i-- > 1;)
      rev.push_back({path[i], path[i - 1]});

    // faceA: darts from a around to b, then path b -> a (rev)
    Face fa, fb;
    for (size_t i = ia; i != ib; i = (i + 1) % old.darts.size())
      fa.darts.push_back(old.darts[i]);
    fa.darts.insert(fa.darts.end(), rev.begin(), rev.end());
    // faceB: darts from b around to a, then path a -> b (fwd)
    for (size_t i = ib; i != ia; i = (i + 1) % old.darts.size())
      fb.darts.push_back(old.darts[i]);
    fb.darts.insert(fb.darts.end(), fwd.begin(), fwd.end());

    for (auto& face : {&fa, &fb}) {
      for (const auto& d : face->darts) face->verts.insert(d.first);
    }
    faces_[face_idx] = std::move(fa);
    faces_.push_back(std::move(fb));

    for (size_t i = 0; i + 1 < path.size(); ++i)
      embedded_.insert(norm(path[i], path[i + 1]));
    for (uint32_t v : path) in_h_.insert(v);
  }
};

// Tarjan block (biconnected component) decomposition; returns edge lists.
std::vector<std::vector<Edge>> blocks_of(const CayleyGraph& g) {
  uint32_t n = g.vertex_count();
  std::vector<uint32_t> num(n, 0), low(n, 0);
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> stack;
  uint32_t counter = 0;

  // iterative DFS to keep deep graphs safe
  struct Frame {
    uint32_t v, parent;
    size_t next = 0;
  };
  std::vector<Frame> frames;
  for (uint32_t s = 0; s < n; ++s) {
    if (num[s] != 0 || g.degree(s) == 0) continue;
    frames.push_back({s, UINT32_MAX});
    num[s] = low[s] = ++counter;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        uint32_t w = nb[f.next++];
        if (w == f.parent) continue;
        if (num[w] == 0) {
          stack.push_back(norm(f.v, w));
          num[w] = low[w] = ++counter;
          frames.push_back({w, f.v});
        } else if (num[w] < num[f.v]) {
          stack.push_back(norm(f.v, w));
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        uint32_t v = f.v, parent = f.parent;
        frames.pop_back();
        if (parent == UINT32_MAX) continue;
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] >= num[parent]) {
          std::vector<Edge> block;
          Edge top = norm(parent, v);
          while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          if (!block.empty()) blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

// Derives the rotation contribution of one block from its face set: in a
// face ... -> u -> v -> w -> ..., w is the successor of u around v.
void rotations_from_faces(const std::vector<Face>& faces,
                          std::map<uint32_t, std::vector<uint32_t>>* rot) {
  std::map<uint32_t, std::map<uint32_t, uint32_t>> succ;
  for (const auto& face : faces) {
    size_t k = face.darts.size();
    for (size_t i = 0; i < k; ++i) {
      uint32_t u = face.darts[i].first;
      uint32_t v = face.darts[i].second;
      uint32_t w = face.darts[(i + 1) % k].second;
      if (face.darts[(i + 1) % k].first != v)
        throw std::logic_error("face darts are not contiguous");
      auto [it, fresh] = succ[v].insert({u, w});
      if (!fresh && it->second != w)
        throw std::logic_error("inconsistent face structure");
    }
  }
  for (auto& [v, s] : succ) {
    std::vector<uint32_t> order;
    uint32_t start = s.begin()->first, cur = start;
    do {
      order.push_back(cur);
      cur = s.at(cur);
    } while (cur != start && order.size() <= s.size());
    if (order.size() != s.size())
      throw std::logic_error("block rotation is not a single cycle");
    (*rot)[v] = std::move(order);
  }
}

bool planar_bool_block(const std::vector<Edge>& edges) {
  if (edges.size() < 9) return true;  // K5 needs 10 edges, K33 needs 9
  std::set<uint32_t> verts;
  for (auto [u, v] : edges) {
    verts.insert(u);
    verts.insert(v);
  }
  if (edges.size() == 9 && verts.size() != 6) return true;
  return BlockEmbedder(edges).run(nullptr);
}

bool planar_bool_edges(const std::vector<Edge>& edges, uint32_t n) {
  CayleyGraph g(n, edges);
  for (const auto& block : blocks_of(g))
    if (block.size() >= 9 && !BlockEmbedder(block).run(nullptr)) return false;
  return true;
}

KuratowskiWitness extract_kuratowski(const std::vector<Edge>& block_edges,
                                     uint32_t n) {
  // remove edges while the graph stays non-planar; what survives is exactly
  // a K5 or K33 subdivision
  std::vector<Edge> edges = block_edges;
  for (size_t i = 0; i < edges.size();) {
    std::vector<Edge> without = edges;
    without.erase(without.begin() + i);
    if (!planar_bool_edges(without, n)) {
      edges = std::move(without);
    } else {
      ++i;
    }
  }
  std::map<uint32_t, uint32_t> deg;
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  KuratowskiWitness w;
  for (auto [v, d] : deg)
    if (d >= 3) w.branch_vertices.push_back(v);
  w.kind = (w.branch_vertices.size() == 5) ? KuratowskiWitness::Kind::K5
                                           : KuratowskiWitness::Kind::K33;
  std::sort(edges.begin(), edges.end());
  w.edges = std::move(edges);
  return w;
}

}  // namespace

PlanarityResult is_planar(const CayleyGraph& g) {
  PlanarityResult result;
  std::map<uint32_t, std::vector<uint32_t>> rot;
  for (const auto& block : blocks_of(g)) {
    if (block.size() == 1) {
      // bridge: contributes a single neighbor on each side
      auto [u, v] = block[0];
      rot[u].push_back(v);
      rot[v].push_back(u);
      continue;
    }
    std::vector<Face> faces;
    if (!BlockEmbedder(block).run(&faces)) {
      result.planar = false;
      result.witness = extract_kuratowski(block, g.vertex_count());
      return result;
    }
    std::map<uint32_t, std::vector<uint32_t>> block_rot;
    rotations_from_faces(faces, &block_rot);
    // concatenating block rotations at cut vertices keeps every block in a
    // disk of the other's embedding, so genus stays 0
    for (auto& [v, order] : block_rot)
      rot[v].insert(rot[v].end(), order.begin(), order.end());
  }
  result.planar = true;
  RotationSystem rs;
  rs.order.assign(g.vertex_count(), {});
  for (auto& [v, order] : rot) rs.order[v] = std::move(order);
  result.embedding = std::move(rs);
  return result;
}

bool is_planar_bool(const CayleyGraph& g) {
  for (const auto& block : blocks_of(g))
    if (!planar_bool_block(block)) return false;
  return true;
}

}  // namespace icg
