#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gstruct/json_io.hpp"

namespace gstruct::cli {

using json = nlohmann::json;

struct CommandOptions {
  double tolerance = 1e-12;
  std::size_t k_max = 4;
  std::uint64_t seed = 0;
};

enum class Status { Ok, Error };

struct CommandResult {
  Status status = Status::Ok;
  json data;
  std::vector<std::string> diagnostics;
  /// "schema" or "precondition" when status is Error.
  std::string code;

  /// 0 ok, 2 schema violation, 3 mathematical precondition failure.
  int exit_code() const;
  json to_json() const;
};

const std::vector<std::string>& command_names();

/// Runs one command. `input` is either the bare payload, a request
/// {"command": ..., "payload": ...}, or a previous CommandResult envelope
/// (its "data" becomes the payload, which lets commands be piped).
CommandResult run(const std::string& command, const json& input, const CommandOptions& options = {});

}  // namespace gstruct::cli
