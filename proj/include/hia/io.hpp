#pragma once

#include <string>

#include "json.hpp"

#include "hia/algebra.hpp"

namespace hia {

// On-disk algebra format: only the order and the involution are stored;
// every derived table is recomputed on load.
//
//   { "name": optional string,
//     "size": n,
//     "leq":  n rows of n entries in {0,1},
//     "inv":  n entries }
//
// Serialisation is canonical: same algebra, same bytes.
nlohmann::ordered_json algebra_to_json(const HIAlgebra& a);
HIAlgebra algebra_from_json(const nlohmann::json& j);

HIAlgebra load_algebra(const std::string& path);
void save_algebra(const HIAlgebra& a, const std::string& path);

// Candidate subalgebra of a direct power of the generator:
//   { "power": n, "members": [tuple encodings] }
struct CandidateSpec {
  std::size_t power = 1;
  std::vector<Elem> members;
};

CandidateSpec candidate_from_json(const nlohmann::json& j);
CandidateSpec load_candidate(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hia
