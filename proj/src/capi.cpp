#include "invcayley.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/classifier.hpp"
#include "core/graph.hpp"
#include "core/report.hpp"
#include "core/ring.hpp"
#include "core/ring_spec.hpp"
#include "core/topology.hpp"

struct icg_ring {
  icg::RingSpec spec;
  icg::FiniteRing ring;
  icg::LocalDecomposition decomposition;
};

struct icg_graph {
  icg::CayleyGraph graph;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error_message, const std::string& message) {
  if (error_message) *error_message = dup_string(message);
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
icg_status guarded(char** error_message, Fn&& fn) {
  if (error_message) *error_message = nullptr;
  try {
    return fn();
  } catch (const icg::ParseError& e) {
    set_error(error_message, e.what());
    return ICG_ERROR_PARSE;
  } catch (const icg::UnsupportedError& e) {
    set_error(error_message, e.what());
    return ICG_ERROR_UNSUPPORTED;
  } catch (const std::invalid_argument& e) {
    set_error(error_message, e.what());
    return ICG_ERROR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(error_message, e.what());
    return ICG_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return ICG_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error_message, e.what());
    return ICG_ERROR_INTERNAL;
  }
}

icg_status run_command(icg::CommandResult (*command)(const std::string&),
                       const char* spec, icg_format format, char** out,
                       char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!spec || !out) return ICG_ERROR_INVALID_ARGUMENT;
    icg::CommandResult r = command(spec);
    *out = dup_string(format == ICG_FORMAT_JSON ? r.json.dump(2) + "\n"
                                                : r.text);
    return r.definitive ? ICG_OK : ICG_INDETERMINATE;
  });
}

constexpr uint64_t kDefaultGenusBudget = 1'000'000'000;

}  // namespace

extern "C" {

const char* icg_version(void) { return "1.0.0"; }

const char* icg_status_name(icg_status status) {
  switch (status) {
    case ICG_OK:
      return "ok";
    case ICG_INDETERMINATE:
      return "indeterminate";
    case ICG_ERROR_PARSE:
      return "parse error";
    case ICG_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case ICG_ERROR_UNSUPPORTED:
      return "unsupported";
    default:
      return "internal error";
  }
}

void icg_string_free(char* s) { std::free(s); }

/* ----------------------------------------------------------- ring handles */

icg_status icg_ring_create(const char* spec, icg_ring** out,
                           char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!spec || !out) return ICG_ERROR_INVALID_ARGUMENT;
    icg::RingSpec parsed = icg::parse_ring_spec(spec);
    icg::FiniteRing ring = icg::build_ring(parsed);
    icg::LocalDecomposition decomp = icg::local_decomposition(ring);
    *out = new icg_ring{std::move(parsed), std::move(ring), std::move(decomp)};
    return ICG_OK;
  });
}

void icg_ring_destroy(icg_ring* ring) { delete ring; }

uint32_t icg_ring_order(const icg_ring* ring) { return ring->ring.order(); }

uint32_t icg_ring_characteristic(const icg_ring* ring) {
  return ring->ring.characteristic();
}

uint32_t icg_ring_involution_count(const icg_ring* ring) {
  return static_cast<uint32_t>(ring->ring.involutions().size());
}

uint32_t icg_ring_unit_count(const icg_ring* ring) {
  return static_cast<uint32_t>(ring->ring.units().size());
}

uint32_t icg_ring_local_factor_count(const icg_ring* ring) {
  return static_cast<uint32_t>(ring->decomposition.factors.size());
}

icg_status icg_ring_local_factor_order(const icg_ring* ring, uint32_t index,
                                       uint32_t* out) {
  if (!out || index >= ring->decomposition.factors.size())
    return ICG_ERROR_INVALID_ARGUMENT;
  *out = ring->decomposition.factors[index].order();
  return ICG_OK;
}

icg_status icg_ring_add(const icg_ring* ring, uint32_t x, uint32_t y,
                        uint32_t* out) {
  if (!out || x >= ring->ring.order() || y >= ring->ring.order())
    return ICG_ERROR_INVALID_ARGUMENT;
  *out = ring->ring.add(x, y);
  return ICG_OK;
}

icg_status icg_ring_mul(const icg_ring* ring, uint32_t x, uint32_t y,
                        uint32_t* out) {
  if (!out || x >= ring->ring.order() || y >= ring->ring.order())
    return ICG_ERROR_INVALID_ARGUMENT;
  *out = ring->ring.mul(x, y);
  return ICG_OK;
}

icg_status icg_ring_neg(const icg_ring* ring, uint32_t x, uint32_t* out) {
  if (!out || x >= ring->ring.order()) return ICG_ERROR_INVALID_ARGUMENT;
  *out = ring->ring.neg(x);
  return ICG_OK;
}

uint32_t icg_ring_one(const icg_ring* ring) { return ring->ring.one(); }

icg_status icg_ring_element_label(const icg_ring* ring, uint32_t x,
                                  char** out) {
  if (!out || x >= ring->ring.order()) return ICG_ERROR_INVALID_ARGUMENT;
  *out = dup_string(ring->ring.label(x));
  return *out ? ICG_OK : ICG_ERROR_INTERNAL;
}

icg_status icg_ring_canonical_spec(const icg_ring* ring, char** out) {
  if (!out) return ICG_ERROR_INVALID_ARGUMENT;
  *out = dup_string(icg::format_ring_spec(ring->spec));
  return *out ? ICG_OK : ICG_ERROR_INTERNAL;
}

/* ---------------------------------------------------------- graph handles */

icg_status icg_graph_create(const icg_ring* ring, icg_graph** out,
                            char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!ring || !out) return ICG_ERROR_INVALID_ARGUMENT;
    *out = new icg_graph{icg::build_cayley(ring->ring)};
    return ICG_OK;
  });
}

void icg_graph_destroy(icg_graph* graph) { delete graph; }

uint32_t icg_graph_vertex_count(const icg_graph* graph) {
  return graph->graph.vertex_count();
}

uint64_t icg_graph_edge_count(const icg_graph* graph) {
  return graph->graph.edge_count();
}

int32_t icg_graph_regular_degree(const icg_graph* graph) {
  auto d = icg::regular_degree(graph->graph);
  return d ? static_cast<int32_t>(*d) : -1;
}

int icg_graph_connected(const icg_graph* graph) {
  return icg::is_connected(graph->graph) ? 1 : 0;
}

int icg_graph_bipartite(const icg_graph* graph) {
  return icg::is_bipartite(graph->graph) ? 1 : 0;
}

int64_t icg_graph_girth(const icg_graph* graph) {
  auto g = icg::girth(graph->graph);
  return g ? static_cast<int64_t>(*g) : -1;
}

icg_status icg_graph_is_planar(const icg_graph* graph, int* planar) {
  return guarded(nullptr, [&]() -> icg_status {
    if (!planar) return ICG_ERROR_INVALID_ARGUMENT;
    *planar = icg::is_planar_bool(graph->graph) ? 1 : 0;
    return ICG_OK;
  });
}

icg_status icg_graph_genus(const icg_graph* graph, uint64_t budget,
                           int32_t* low, int32_t* high) {
  return guarded(nullptr, [&]() -> icg_status {
    if (!low || !high) return ICG_ERROR_INVALID_ARGUMENT;
    icg::GenusCertificate cert = icg::min_genus(
        graph->graph, budget == 0 ? kDefaultGenusBudget : budget);
    if (const auto* e = std::get_if<icg::EmbeddingCertificate>(&cert)) {
      *low = *high = static_cast<int32_t>(e->genus);
      return ICG_OK;
    }
    const auto& b = std::get<icg::BoundsCertificate>(cert);
    *low = static_cast<int32_t>(b.low);
    *high = static_cast<int32_t>(b.high);
    return ICG_INDETERMINATE;
  });
}

/* -------------------------------------------------------- command surface */

icg_status icg_analyze(const char* spec, icg_format format, char** out,
                       char** error_message) {
  return run_command(icg::cmd_analyze, spec, format, out, error_message);
}

icg_status icg_classify(const char* spec, icg_format format, char** out,
                        char** error_message) {
  return run_command(icg::cmd_classify, spec, format, out, error_message);
}

icg_status icg_genus(const char* spec, uint64_t budget, icg_format format,
                     char** out, char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!spec || !out) return ICG_ERROR_INVALID_ARGUMENT;
    icg::CommandResult r =
        icg::cmd_genus(spec, budget == 0 ? kDefaultGenusBudget : budget);
    *out = dup_string(format == ICG_FORMAT_JSON ? r.json.dump(2) + "\n"
                                                : r.text);
    return r.definitive ? ICG_OK : ICG_INDETERMINATE;
  });
}

icg_status icg_embed(const char* spec, icg_format format, char** out,
                     char** error_message) {
  return run_command(icg::cmd_embed, spec, format, out, error_message);
}

icg_status icg_export(const char* spec, icg_format format, char** out,
                      char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!spec || !out) return ICG_ERROR_INVALID_ARGUMENT;
    if (format == ICG_FORMAT_DOT) {
      *out = dup_string(icg::cmd_export_dot(spec).text);
    } else if (format == ICG_FORMAT_JSON) {
      *out = dup_string(icg::cmd_export_json(spec).text);
    } else {
      set_error(error_message, "export format must be dot or json");
      return ICG_ERROR_INVALID_ARGUMENT;
    }
    return ICG_OK;
  });
}

icg_status icg_verify(uint32_t max_order, uint64_t budget,
                      const char* theorem_filter_csv, icg_format format,
                      char** out, char** error_message) {
  return guarded(error_message, [&]() -> icg_status {
    if (!out) return ICG_ERROR_INVALID_ARGUMENT;
    icg::CommandResult r =
        icg::cmd_verify(max_order, budget == 0 ? kDefaultGenusBudget : budget,
                        theorem_filter_csv ? theorem_filter_csv : "");
    *out = dup_string(format == ICG_FORMAT_JSON ? r.json.dump(2) + "\n"
                                                : r.text);
    return ICG_OK;
  });
}

}  // extern "C"
