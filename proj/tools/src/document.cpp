#include "document.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bicomb/errors.hpp"

namespace bicomb::cli {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string number(double x) { return json(x).dump(); }

RunDocument::RunDocument(std::string command, const CommonOptions& common)
    : command_(std::move(command)), common_(common) {
  if (common_.format != "json" && common_.format != "csv")
    throw ParseError("--format must be json or csv");
}

json RunDocument::load(const std::string& role, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  inputs_.emplace_back(role, sha256_hex(bytes));
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

std::string RunDocument::digest() const {
  std::string all = command_ + "\nseed:" + std::to_string(common_.seed) + "\n";
  for (const auto& [role, d] : inputs_) all += role + ":" + d + "\n";
  all += params_.dump() + "\n";
  return sha256_hex(all);
}

json RunDocument::envelope(json result) const {
  json inputs = json::array();
  for (const auto& [role, d] : inputs_) inputs.push_back({{"role", role}, {"sha256", d}});
  return {{"command", command_},
          {"seed", common_.seed},
          {"params", params_},
          {"inputs", inputs},
          {"digest", digest()},
          {"result", std::move(result)}};
}

void RunDocument::write(const json& result, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) const {
  std::ostringstream os;
  if (common_.format == "csv") {
    os << "# command=" << command_ << " seed=" << common_.seed << " digest=" << digest() << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  } else {
    os << envelope(result).dump(2) << "\n";
  }
  if (common_.out.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(common_.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + common_.out + "'");
  f << os.str();
}

}  // namespace bicomb::cli
