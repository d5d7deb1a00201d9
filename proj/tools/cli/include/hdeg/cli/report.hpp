#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hdeg/cli/script.hpp"
#include "hdeg/invariants.hpp"

namespace hdeg::cli {

enum class Format { text, json };

struct SessionConfig {
  /// Overrides the field of every ring in the script when set.
  std::optional<Field> field;
  Limits limits;
  SuperficialWindow window;
  std::uint64_t seed = 0;
  Format format = Format::text;
};

/// "qq" or "fp:P".
Field parse_field_spec(const std::string& spec);

using Report = nlohmann::ordered_json;

/// Runs every check of the script in order; the result is an array with
/// one object per check.  Errors carry the command number and name.
Report run_command(const InputScript& script, const SessionConfig& cfg);

std::string emit_report(const Report& r, Format format);

/// True when some verdict is unsound or some audit check failed.
bool has_violation(const Report& r);

}  // namespace hdeg::cli
