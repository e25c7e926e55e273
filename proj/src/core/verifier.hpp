#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/ring_spec.hpp"

namespace icg {

inline constexpr const char* kCatalogVersion = "1";

/// All multisets of catalog local atoms (prime-power Z_n, GF(p^k) with
/// k >= 2, and the five named quotient rings) whose product of orders is at
/// most max_order, deduplicated up to factor permutation, in a fixed
/// deterministic order.
std::vector<RingSpec> enumerate_rings(uint32_t max_order);

struct SuiteOptions {
  uint32_t max_order = 16;
  uint64_t budget = 1'000'000'000;       // per-instance search budget
  std::vector<std::string> theorems;     // empty = the full suite
};

/// Runs every selected theorem check over the enumeration plus the topology
/// formula checks, and returns the machine-readable report:
/// {catalog_version, max_order, theorems: [{id, checked, failures, skipped,
/// evidence?}]}. Two runs with identical options produce identical JSON.
nlohmann::ordered_json run_suite(const SuiteOptions& options);

}  // namespace icg
