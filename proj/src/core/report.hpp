#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace icg {

/// Payload of one CLI-level command. `definitive` is false when the result
/// is an indeterminate (budget-bounded) outcome.
struct CommandResult {
  nlohmann::ordered_json json;
  std::string text;
  bool definitive = true;
};

/// Thrown when a command is asked for something outside its supported
/// families (e.g. embed on a ring without a constructive embedding).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CommandResult cmd_analyze(const std::string& spec_text);
CommandResult cmd_classify(const std::string& spec_text);
CommandResult cmd_genus(const std::string& spec_text, uint64_t budget);
CommandResult cmd_embed(const std::string& spec_text);
CommandResult cmd_export_dot(const std::string& spec_text);
CommandResult cmd_export_json(const std::string& spec_text);
CommandResult cmd_verify(uint32_t max_order, uint64_t budget,
                         const std::string& theorem_filter_csv);

}  // namespace icg
