#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "invcayley.h"

namespace {

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { icg_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

}  // namespace

TEST_CASE("ring handle lifecycle and queries") {
  icg_ring* ring = nullptr;
  OwnedString err;
  REQUIRE(icg_ring_create("Z8", &ring, &err.value) == ICG_OK);
  REQUIRE(ring != nullptr);
  CHECK(icg_ring_order(ring) == 8);
  CHECK(icg_ring_characteristic(ring) == 8);
  CHECK(icg_ring_involution_count(ring) == 4);
  CHECK(icg_ring_unit_count(ring) == 4);
  CHECK(icg_ring_one(ring) == 1);
  CHECK(icg_ring_local_factor_count(ring) == 1);

  uint32_t out = 0;
  CHECK(icg_ring_add(ring, 5, 6, &out) == ICG_OK);
  CHECK(out == 3);
  CHECK(icg_ring_mul(ring, 3, 3, &out) == ICG_OK);
  CHECK(out == 1);
  CHECK(icg_ring_neg(ring, 3, &out) == ICG_OK);
  CHECK(out == 5);
  CHECK(icg_ring_add(ring, 9, 0, &out) == ICG_ERROR_INVALID_ARGUMENT);

  OwnedString label;
  CHECK(icg_ring_element_label(ring, 7, &label.value) == ICG_OK);
  CHECK(label.str() == "7");
  icg_ring_destroy(ring);
}

TEST_CASE("decomposition via the handle") {
  icg_ring* ring = nullptr;
  REQUIRE(icg_ring_create("Z12", &ring, nullptr) == ICG_OK);
  REQUIRE(icg_ring_local_factor_count(ring) == 2);
  uint32_t o0 = 0, o1 = 0;
  CHECK(icg_ring_local_factor_order(ring, 0, &o0) == ICG_OK);
  CHECK(icg_ring_local_factor_order(ring, 1, &o1) == ICG_OK);
  CHECK(o0 * o1 == 12);
  CHECK(icg_ring_local_factor_order(ring, 2, &o0) ==
        ICG_ERROR_INVALID_ARGUMENT);
  icg_ring_destroy(ring);
}

TEST_CASE("parse errors surface a message and status") {
  icg_ring* ring = nullptr;
  OwnedString err;
  CHECK(icg_ring_create("Z1", &ring, &err.value) == ICG_ERROR_PARSE);
  CHECK(ring == nullptr);
  CHECK(err.str().find("offset 1") != std::string::npos);
}

TEST_CASE("graph handle") {
  icg_ring* ring = nullptr;
  REQUIRE(icg_ring_create("Z3 x Z5", &ring, nullptr) == ICG_OK);
  icg_graph* graph = nullptr;
  REQUIRE(icg_graph_create(ring, &graph, nullptr) == ICG_OK);
  CHECK(icg_graph_vertex_count(graph) == 15);
  CHECK(icg_graph_edge_count(graph) == 30);
  CHECK(icg_graph_regular_degree(graph) == 4);
  CHECK(icg_graph_connected(graph) == 1);
  CHECK(icg_graph_bipartite(graph) == 0);
  CHECK(icg_graph_girth(graph) == 4);

  int planar = -1;
  CHECK(icg_graph_is_planar(graph, &planar) == ICG_OK);
  CHECK(planar == 0);

  int32_t low = -1, high = -1;
  CHECK(icg_graph_genus(graph, 0, &low, &high) == ICG_OK);
  CHECK(low == 1);
  CHECK(high == 1);

  icg_graph_destroy(graph);
  icg_ring_destroy(ring);
}

TEST_CASE("genus budget exhaustion is indeterminate") {
  icg_ring* ring = nullptr;
  REQUIRE(icg_ring_create("Z3 x Z3 x Z3", &ring, nullptr) == ICG_OK);
  icg_graph* graph = nullptr;
  REQUIRE(icg_graph_create(ring, &graph, nullptr) == ICG_OK);
  int32_t low = -1, high = -1;
  CHECK(icg_graph_genus(graph, 1000, &low, &high) == ICG_INDETERMINATE);
  CHECK(low >= 1);
  CHECK(low <= high);
  icg_graph_destroy(graph);
  icg_ring_destroy(ring);
}

TEST_CASE("command surface") {
  OwnedString out, err;
  CHECK(icg_analyze("Z8", ICG_FORMAT_JSON, &out.value, &err.value) == ICG_OK);
  CHECK(out.str().find("\"genus_class\": \"toroidal\"") != std::string::npos);
  CHECK(out.str().find("\"girth\": 4") != std::string::npos);

  OwnedString text;
  CHECK(icg_classify("Z9 x Z4", ICG_FORMAT_TEXT, &text.value, nullptr) ==
        ICG_OK);
  CHECK(text.str().find("toroidal") != std::string::npos);
  CHECK(text.str().find("Z_{p^n} x Z_4") != std::string::npos);

  OwnedString genus_out;
  CHECK(icg_genus("Z2[x,y]/(x^2,xy,y^2)", 0, ICG_FORMAT_JSON,
                  &genus_out.value, nullptr) == ICG_OK);
  CHECK(genus_out.str().find("\"genus\": 1") != std::string::npos);

  OwnedString embed_out;
  CHECK(icg_embed("Z16", ICG_FORMAT_JSON, &embed_out.value, nullptr) ==
        ICG_OK);
  CHECK(embed_out.str().find("\"genus\": 1") != std::string::npos);

  OwnedString embed_err, embed_fail;
  CHECK(icg_embed("Z4", ICG_FORMAT_TEXT, &embed_fail.value,
                  &embed_err.value) == ICG_ERROR_UNSUPPORTED);
  CHECK(embed_err.str().find("no constructive embedding") !=
        std::string::npos);

  OwnedString dot;
  CHECK(icg_export("Z8", ICG_FORMAT_DOT, &dot.value, nullptr) == ICG_OK);
  CHECK(dot.str().rfind("graph", 0) == 0);
  OwnedString bad;
  CHECK(icg_export("Z8", ICG_FORMAT_TEXT, &bad.value, nullptr) ==
        ICG_ERROR_INVALID_ARGUMENT);

  OwnedString verify_out;
  CHECK(icg_verify(8, 0, "IMP3", ICG_FORMAT_JSON, &verify_out.value,
                   nullptr) == ICG_OK);
  CHECK(verify_out.str().find("\"id\": \"IMP3\"") != std::string::npos);
  CHECK(verify_out.str().find("\"failures\": []") != std::string::npos);
}

TEST_CASE("version and status names") {
  CHECK(std::strlen(icg_version()) > 0);
  CHECK(std::string(icg_status_name(ICG_OK)) == "ok");
  CHECK(std::string(icg_status_name(ICG_ERROR_PARSE)) == "parse error");
}
