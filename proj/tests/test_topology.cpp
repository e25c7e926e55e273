#include <doctest.h>

#include <random>

#include "core/embedding.hpp"
#include "core/planarity.hpp"
#include "core/ring_spec.hpp"
#include "core/topology.hpp"
#include "oracles.hpp"

using namespace icg;

namespace {

CayleyGraph graph_of(const char* spec) {
  return build_cayley(build_ring(parse_ring_spec(spec)));
}

uint32_t exact_genus(const CayleyGraph& g, uint64_t budget = 500'000'000) {
  GenusCertificate c = min_genus(g, budget);
  auto* e = std::get_if<EmbeddingCertificate>(&c);
  REQUIRE(e != nullptr);
  return e->genus;
}

CayleyGraph petersen() {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, 5 + (i + 2) % 5});
  }
  return CayleyGraph(10, edges);
}

CayleyGraph complete_graph(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return CayleyGraph(n, edges);
}

// two triangles sharing a vertex; planar, but an interleaved rotation at the
// middle vertex costs a handle
CayleyGraph bowtie() {
  return CayleyGraph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("face tracing on cycles and the wheel") {
  CayleyGraph c5 = cycle_graph(5);
  RotationSystem rot;
  for (uint32_t v = 0; v < 5; ++v) rot.order.push_back(c5.neighbors(v));
  FaceTrace t = trace_faces(c5, rot);
  CHECK(t.face_count == 2);  // a cycle bounds two faces

  // total directed edges across faces = 2E
  size_t darts = 0;
  for (const auto& f : t.faces) darts += f.size();
  CHECK(darts == 2 * c5.edge_count());
}

TEST_CASE("trace_faces contract violations") {
  CayleyGraph two = graph_of("GF(4)");  // disconnected matching
  RotationSystem rot;
  for (uint32_t v = 0; v < two.vertex_count(); ++v)
    rot.order.push_back(two.neighbors(v));
  CHECK_THROWS_AS(trace_faces(two, rot), std::invalid_argument);

  CayleyGraph c4 = cycle_graph(4);
  RotationSystem bad;
  bad.order = {{1, 3}, {0, 2}, {1, 3}, {0, 0}};  // not a permutation at 3
  CHECK_THROWS_AS(trace_faces(c4, bad), std::invalid_argument);
}

TEST_CASE("euler genus lower bound") {
  CHECK(euler_genus_lower_bound(graph_of("Z8")) == 1);
  CHECK(euler_genus_lower_bound(graph_of("Z16")) == 1);
  CHECK(euler_genus_lower_bound(graph_of("Z32")) == 1);
  // odd-order 4-regular case is inconclusive
  CHECK(euler_genus_lower_bound(graph_of("Z3 x Z5")) == 0);
  CHECK(euler_genus_lower_bound(complete_bipartite(4, 4)) == 1);
  CHECK(euler_genus_lower_bound(complete_bipartite(3, 3)) == 1);
  CHECK(euler_genus_lower_bound(complete_graph(5)) == 1);
  CHECK(euler_genus_lower_bound(cycle_graph(12)) == 0);
}

TEST_CASE("planarity: knowns") {
  CHECK(is_planar(graph_of("Z4")).planar);
  CHECK(is_planar(graph_of("Z2X3")).planar);
  CHECK(is_planar(graph_of("Z4A")).planar);
  CHECK(is_planar(cycle_graph(9)).planar);
  CHECK(is_planar(complete_graph(4)).planar);
  CHECK(is_planar(bowtie()).planar);

  CHECK(!is_planar(complete_graph(5)).planar);
  CHECK(!is_planar(complete_bipartite(3, 3)).planar);
  CHECK(!is_planar(graph_of("Z8")).planar);
  CHECK(!is_planar(graph_of("Z3 x Z5")).planar);
  CHECK(!is_planar(petersen()).planar);
}

TEST_CASE("planar embeddings trace to genus zero") {
  for (const char* s : {"Z4", "Z2X3", "Z4A", "Z9", "GF(4)", "Z2 x Z2"}) {
    CayleyGraph g = graph_of(s);
    PlanarityResult r = is_planar(g);
    REQUIRE(r.planar);
    auto [faces, genus] = rotation_genus(g, *r.embedding);
    (void)faces;
    CHECK(genus == 0);
  }
  // a planar graph with cut vertices and multiple blocks
  PlanarityResult r = is_planar(bowtie());
  REQUIRE(r.planar);
  CHECK(rotation_genus(bowtie(), *r.embedding).second == 0);
}

TEST_CASE("kuratowski witnesses") {
  PlanarityResult k5 = is_planar(complete_graph(5));
  REQUIRE(!k5.planar);
  REQUIRE(k5.witness.has_value());
  CHECK(k5.witness->kind == KuratowskiWitness::Kind::K5);
  CHECK(k5.witness->branch_vertices.size() == 5);
  CHECK(k5.witness->edges.size() == 10);

  PlanarityResult k33 = is_planar(complete_bipartite(3, 3));
  REQUIRE(!k33.planar);
  CHECK(k33.witness->kind == KuratowskiWitness::Kind::K33);
  CHECK(k33.witness->branch_vertices.size() == 6);

  // Petersen contains a K33 subdivision (it has no K5 subdivision: max
  // degree 3)
  PlanarityResult pet = is_planar(petersen());
  REQUIRE(!pet.planar);
  CHECK(pet.witness->kind == KuratowskiWitness::Kind::K33);
  // witness edges form a subgraph of the original
  for (auto [u, v] : pet.witness->edges) CHECK(petersen().adjacent(u, v));
}

TEST_CASE("planarity agrees with exhaustive genus-0 search on small graphs") {
  std::vector<CayleyGraph> corpus;
  corpus.push_back(graph_of("Z4"));
  corpus.push_back(graph_of("Z8"));
  corpus.push_back(graph_of("Z2X3"));
  corpus.push_back(graph_of("Z2XY"));
  corpus.push_back(graph_of("Z4B"));
  corpus.push_back(graph_of("GF(8)"));
  corpus.push_back(complete_graph(5));
  corpus.push_back(complete_bipartite(3, 3));
  corpus.push_back(bowtie());
  corpus.push_back(cycle_graph(8));
  for (const auto& g : corpus) {
    bool brute_planar = oracle::brute_force_min_genus(g) == 0;
    CHECK(is_planar(g).planar == brute_planar);
  }

  // random graphs on <= 8 vertices
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    uint32_t n = 5 + rng() % 4;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j)
        if (rng() % 100 < 55) edges.push_back({i, j});
    CayleyGraph g(n, edges);
    CHECK(is_planar(g).planar == (oracle::brute_force_min_genus(g) == 0));
  }
}

TEST_CASE("min_genus exact values") {
  CHECK(exact_genus(complete_graph(5)) == 1);
  CHECK(exact_genus(complete_bipartite(3, 3)) == 1);
  CHECK(exact_genus(complete_bipartite(4, 4)) == 1);
  CHECK(exact_genus(graph_of("Z8")) == 1);
  CHECK(exact_genus(graph_of("Z4")) == 0);
  CHECK(exact_genus(graph_of("Z2X3")) == 0);
  CHECK(exact_genus(graph_of("Z4A")) == 0);
  for (uint32_t n = 3; n <= 12; ++n) CHECK(exact_genus(cycle_graph(n)) == 0);
  CHECK(exact_genus(bowtie()) == 0);
  CHECK(exact_genus(petersen()) == 1);
  // disconnected: sum over components (two toroidal components)
  CayleyGraph t44 = tensor_product(cycle_graph(4), cycle_graph(4));
  CHECK(exact_genus(t44) == 2);
}

TEST_CASE("min_genus matches the exhaustive oracle on tiny graphs") {
  std::vector<CayleyGraph> corpus;
  corpus.push_back(complete_graph(4));
  corpus.push_back(complete_graph(5));
  corpus.push_back(complete_bipartite(3, 3));
  corpus.push_back(bowtie());
  corpus.push_back(graph_of("Z8"));
  corpus.push_back(graph_of("Z2XY"));
  for (const auto& g : corpus)
    CHECK(exact_genus(g) == oracle::brute_force_min_genus(g));
}

TEST_CASE("min_genus budget exhaustion returns bounds") {
  GenusCertificate c = min_genus(graph_of("Z3 x Z3 x Z3"), 20'000);
  auto* b = std::get_if<BoundsCertificate>(&c);
  REQUIRE(b != nullptr);
  CHECK(b->low >= 1);
  CHECK(b->low <= b->high);
}

TEST_CASE("min_genus accepts a constructive seed") {
  CayleyGraph z8 = graph_of("Z8");
  EmbeddingCertificate seed;
  seed.rotation = z2n_torus_rotation(3);
  auto [faces, genus] = rotation_genus(z8, seed.rotation);
  seed.faces = faces;
  seed.genus = genus;
  GenusCertificate c = min_genus(z8, 1'000'000, seed);
  auto* e = std::get_if<EmbeddingCertificate>(&c);
  REQUIRE(e != nullptr);
  CHECK(e->genus == 1);
}

TEST_CASE("genus is monotone under edge deletion on the tested corpus") {
  for (const CayleyGraph& g :
       {complete_graph(5), complete_bipartite(4, 4), graph_of("Z8")}) {
    uint32_t base = exact_genus(g);
    auto edges = g.edges();
    for (size_t skip = 0; skip < edges.size(); ++skip) {
      std::vector<std::pair<uint32_t, uint32_t>> rest;
      for (size_t i = 0; i < edges.size(); ++i)
        if (i != skip) rest.push_back(edges[i]);
      CayleyGraph h(g.vertex_count(), rest);
      CHECK(exact_genus(h) <= base);
    }
  }
}

TEST_CASE("complete bipartite genus formula") {
  CHECK(genus_complete_bipartite(4, 4) == 1);
  CHECK(genus_complete_bipartite(2, 7) == 0);
  CHECK(genus_complete_bipartite(3, 7) == 2);
  CHECK(genus_complete_bipartite(3, 3) == 1);
  CHECK(genus_complete_bipartite(3, 4) == 1);
  CHECK_THROWS_AS(genus_complete_bipartite(1, 5), std::invalid_argument);
  for (uint32_t k = 2; k <= 6; ++k) {
    CHECK(genus_complete_bipartite(2, k) == 0);
    CHECK(exact_genus(complete_bipartite(2, k)) == 0);
  }
  CHECK(exact_genus(complete_bipartite(3, 4)) == 1);
}

TEST_CASE("cycle tensor genus values") {
  CHECK(genus_cycle_tensor(3, 5) == 1);
  CHECK(genus_cycle_tensor(4, 4) == 2);
  CHECK(genus_cycle_tensor(9, 4) == 1);
  CHECK(genus_cycle_tensor(6, 8) == 2);
  CHECK_THROWS_AS(genus_cycle_tensor(2, 5), std::invalid_argument);
}

TEST_CASE("z2n rotation traces to genus 1 with 2^n faces") {
  for (uint32_t n = 3; n <= 6; ++n) {
    CayleyGraph g = build_cayley(build_ring(RingSpec::zn(1u << n)));
    RotationSystem rot = z2n_torus_rotation(n);
    FaceTrace t = trace_faces(g, rot);
    CHECK(t.face_count == (1u << n));
    int64_t chi = int64_t(g.vertex_count()) - int64_t(g.edge_count()) +
                  t.face_count;
    CHECK(chi == 0);  // genus 1
    // oracle agrees on the face count
    CHECK(oracle::face_count(rot.order) == (1u << n));
  }
  CHECK_THROWS_AS(z2n_torus_rotation(2), std::invalid_argument);
}

TEST_CASE("cycle tensor rotation traces to genus 1 with m*n faces") {
  for (auto [m, n] : std::vector<std::pair<uint32_t, uint32_t>>{
           {3, 5}, {3, 4}, {9, 5}, {3, 3}, {5, 7}, {9, 9}, {7, 4}}) {
    CayleyGraph t = tensor_product(cycle_graph(m), cycle_graph(n));
    RotationSystem rot = cycle_tensor_torus_rotation(m, n);
    FaceTrace tr = trace_faces(t, rot);
    CHECK(tr.face_count == m * n);
    CHECK(int64_t(t.vertex_count()) - int64_t(t.edge_count()) +
              tr.face_count ==
          0);
  }
  CHECK_THROWS_AS(cycle_tensor_torus_rotation(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(cycle_tensor_torus_rotation(2, 5), std::invalid_argument);
}

TEST_CASE("k44 rotation traces to 8 quadrilateral faces") {
  CayleyGraph k44 = complete_bipartite(4, 4);
  RotationSystem rot = k44_torus_rotation();
  FaceTrace t = trace_faces(k44, rot);
  CHECK(t.face_count == 8);
  for (const auto& f : t.faces) CHECK(f.size() == 4);
  CHECK(int64_t(8) - 16 + t.face_count == 0);  // genus 1
}

TEST_CASE("constructive embeddings for the K44 rings via isomorphism") {
  for (const char* s : {"Z2[x,y]/(x^2,xy,y^2)", "Z4[x]/(x^2,2x)"}) {
    FiniteRing r = build_ring(parse_ring_spec(s));
    CayleyGraph g = build_cayley(r);
    auto cert = constructive_torus_embedding(r, local_decomposition(r), g);
    REQUIRE(cert.has_value());
    CHECK(cert->genus == 1);
    CHECK(cert->faces == 8);
  }
}

TEST_CASE("constructive embeddings for product families") {
  for (const char* s : {"Z3 x Z5", "Z3 x Z9", "Z3 x Z4", "Z9 x Z4",
                        "Z3 x Z2X2", "Z3 x Z5 x Z2", "Z15", "Z45"}) {
    FiniteRing r = build_ring(parse_ring_spec(s));
    CayleyGraph g = build_cayley(r);
    auto cert = constructive_torus_embedding(r, local_decomposition(r), g);
    REQUIRE_MESSAGE(cert.has_value(), s);
    CHECK(cert->genus == 1);
    CHECK(cert->faces == r.order());
  }
  // no certificate outside the toroidal families
  FiniteRing z4 = build_ring(parse_ring_spec("Z4"));
  CHECK(!constructive_torus_embedding(z4, local_decomposition(z4),
                                      build_cayley(z4))
             .has_value());
}
