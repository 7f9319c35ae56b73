#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace berezin::cli {

using Json = nlohmann::ordered_json;

struct RunRecord {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::optional<std::uint64_t> seed;
  std::string tool_version;
  std::string timestamp;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

Json to_json(const RunRecord& record);
RunRecord record_from_json(const Json& j);

/// Single-line JSON; doubles use the shortest representation that round-trips.
std::string serialize(const RunRecord& record);

/// UTC ISO-8601 time, taken from SOURCE_DATE_EPOCH when that is set.
std::string current_timestamp();

std::string tool_version();

}  // namespace berezin::cli
