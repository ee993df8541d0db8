#include "hia/io.hpp"

#include <fstream>
#include <sstream>

namespace hia {

namespace {

constexpr std::size_t kMaxStoredSize = 4096;

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

std::size_t require_size(const nlohmann::json& j) {
  if (!j.is_object()) bad("algebra file must be a JSON object");
  if (!j.contains("size") || !j["size"].is_number_unsigned())
    bad("algebra file needs an unsigned \"size\"");
  const std::size_t n = j["size"].get<std::size_t>();
  if (n == 0) bad("algebra size must be positive");
  if (n > kMaxStoredSize) throw SizeBoundError(n, kMaxStoredSize);
  return n;
}

}  // namespace

nlohmann::ordered_json algebra_to_json(const HIAlgebra& a) {
  nlohmann::ordered_json j;
  if (!a.name().empty()) j["name"] = a.name();
  const std::size_t n = a.size();
  j["size"] = n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Elem x = 0; x < n; ++x) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Elem y = 0; y < n; ++y) row.push_back(a.poset().le(x, y) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["leq"] = std::move(rows);
  j["inv"] = a.inv_table();
  return j;
}

HIAlgebra algebra_from_json(const nlohmann::json& j) {
  const std::size_t n = require_size(j);

  if (!j.contains("leq") || !j["leq"].is_array() || j["leq"].size() != n)
    bad("\"leq\" must be an array of " + std::to_string(n) + " rows");
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const nlohmann::json& row = j["leq"][r];
    if (!row.is_array() || row.size() != n)
      bad("\"leq\" row " + std::to_string(r) + " must have " + std::to_string(n) +
          " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const nlohmann::json& cell = row[c];
      if (!cell.is_number_integer() && !cell.is_number_unsigned())
        bad("\"leq\" entries must be 0 or 1");
      const long long v = cell.get<long long>();
      if (v != 0 && v != 1) bad("\"leq\" entries must be 0 or 1");
      leq[r * n + c] = static_cast<std::uint8_t>(v);
    }
  }

  if (!j.contains("inv") || !j["inv"].is_array() || j["inv"].size() != n)
    bad("\"inv\" must be an array of " + std::to_string(n) + " entries");
  std::vector<Elem> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const nlohmann::json& cell = j["inv"][i];
    if (!cell.is_number_unsigned()) bad("\"inv\" entries must be unsigned integers");
    const std::size_t v = cell.get<std::size_t>();
    if (v >= n) bad("\"inv\" entry " + std::to_string(v) + " out of range");
    inv[i] = static_cast<Elem>(v);
  }

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return HIAlgebra::from_order(FinitePoset(n, std::move(leq)), std::move(inv),
                               std::move(name));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << content;
  if (!out) bad("write failed: " + path);
}

HIAlgebra load_algebra(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return algebra_from_json(j);
}

void save_algebra(const HIAlgebra& a, const std::string& path) {
  write_text_file(path, algebra_to_json(a).dump(2) + "\n");
}

CandidateSpec candidate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("candidate file must be a JSON object");
  CandidateSpec spec;
  if (!j.contains("power") || !j["power"].is_number_unsigned())
    bad("candidate file needs an unsigned \"power\"");
  spec.power = j["power"].get<std::size_t>();
  if (spec.power == 0) bad("candidate power must be positive");
  if (!j.contains("members") || !j["members"].is_array())
    bad("candidate file needs a \"members\" array");
  for (const nlohmann::json& cell : j["members"]) {
    if (!cell.is_number_unsigned()) bad("candidate members must be unsigned integers");
    spec.members.push_back(cell.get<Elem>());
  }
  return spec;
}

CandidateSpec load_candidate(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return candidate_from_json(j);
}

}  // namespace hia
