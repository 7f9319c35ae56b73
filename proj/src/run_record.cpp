#include "berezin/run_record.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <stdexcept>

#include "berezin/types.hpp"

#ifndef BEREZIN_VERSION
#define BEREZIN_VERSION "0.0.0"
#endif

namespace berezin::cli {

Json to_json(const RunRecord& record) {
  Json j = Json::object();
  j["command"] = record.command;
  j["parameters"] = record.parameters;
  j["results"] = record.results;
  j["seed"] = record.seed ? Json(*record.seed) : Json(nullptr);
  j["tool_version"] = record.tool_version;
  j["timestamp"] = record.timestamp;
  return j;
}

RunRecord record_from_json(const Json& j) {
  try {
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.tool_version = j.at("tool_version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed run record: ") + e.what());
  }
}

std::string serialize(const RunRecord& record) { return to_json(record).dump(); }

std::string current_timestamp() {
  std::time_t t = 0;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    try {
      t = static_cast<std::time_t>(std::stoll(epoch));
    } catch (const std::exception&) {
      throw DomainError("SOURCE_DATE_EPOCH is not an integer");
    }
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string tool_version() { return BEREZIN_VERSION; }

}  // namespace berezin::cli
