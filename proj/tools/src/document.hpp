#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace bicomb::cli {

using json = nlohmann::json;

std::string sha256_hex(std::string_view bytes);

enum class Format { json, csv };

struct CommonOptions {
  std::uint64_t seed = 0;
  double tol = 0.0;  // 0: command default
  std::string out;
  std::string format = "json";
};

// Collects the inputs of one run and wraps results in a replayable envelope.
class RunDocument {
 public:
  RunDocument(std::string command, const CommonOptions& common);

  // Reads and parses a JSON input file, recording its digest under `role`.
  json load(const std::string& role, const std::string& path);
  void param(const std::string& key, json value) { params_[key] = std::move(value); }

  std::string digest() const;
  json envelope(json result) const;

  // Writes the JSON envelope, or CSV rows headed by the replay metadata.
  void write(const json& result, const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& rows) const;

  std::uint64_t seed() const { return common_.seed; }
  double tol(double fallback) const { return common_.tol > 0.0 ? common_.tol : fallback; }

 private:
  std::string command_;
  CommonOptions common_;
  json params_ = json::object();
  std::vector<std::pair<std::string, std::string>> inputs_;
};

// Shortest round-trip text for a double, matching the JSON output.
std::string number(double x);

}  // namespace bicomb::cli
