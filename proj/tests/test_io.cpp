#include <cstdio>
#include <string>

#include "doctest.h"

#include "fixtures.hpp"
#include "hia/io.hpp"

using namespace hia;
using namespace hia::testing;
using nlohmann::json;

#ifndef HIA_TEST_DATA_DIR
#define HIA_TEST_DATA_DIR "data"
#endif

namespace {

std::string temp_path(const char* stem) {
  return std::string("io_test_") + stem + ".json";
}

std::string data_path(const char* file) {
  return std::string(HIA_TEST_DATA_DIR "/") + file;
}

struct FileGuard {
  std::string path;
  explicit FileGuard(std::string p) : path(std::move(p)) {}
  ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("serialisation is canonical and loss-free") {
  const HIAlgebra c3 = make_chain(3, "chain3");
  const nlohmann::ordered_json j = algebra_to_json(c3);

  CHECK(j.dump() ==
        R"({"name":"chain3","size":3,"leq":[[1,1,1],[0,1,1],[0,0,1]],"inv":[2,1,0]})");

  const HIAlgebra back = algebra_from_json(j);
  CHECK(back.same_tables(c3));
  CHECK(back.name() == "chain3");

  // Unnamed algebras omit the field entirely.
  const nlohmann::ordered_json anon = algebra_to_json(make_chain(2));
  CHECK_FALSE(anon.contains("name"));
  CHECK(algebra_from_json(anon).name().empty());
}

TEST_CASE("files round-trip byte for byte") {
  const FileGuard f(temp_path("roundtrip"));
  const HIAlgebra b4 = make_bool(2, "b4");
  save_algebra(b4, f.path);

  const std::string bytes = read_text_file(f.path);
  CHECK(bytes.back() == '\n');

  const HIAlgebra loaded = load_algebra(f.path);
  CHECK(loaded.same_tables(b4));
  CHECK(loaded.name() == "b4");

  const FileGuard g(temp_path("again"));
  save_algebra(loaded, g.path);
  CHECK(read_text_file(g.path) == bytes);
}

TEST_CASE("the shipped fixture files load as expected") {
  const HIAlgebra c3 = load_algebra(data_path("chain3.json"));
  CHECK(c3.name() == "chain3");
  CHECK(c3.same_tables(make_chain(3)));

  const HIAlgebra one = load_algebra(data_path("trivial.json"));
  CHECK(one.trivial());

  // Bounded poset that is not a lattice: rejected during derivation.
  CHECK_THROWS_AS(load_algebra(data_path("bad_bowtie.json")), NotLatticeError);
}

TEST_CASE("malformed algebra files fail with pointed messages") {
  auto from = [](const char* text) { return algebra_from_json(json::parse(text)); };

  CHECK_THROWS_AS(from("[1, 2]"), InputError);
  CHECK_THROWS_AS(from(R"({"leq": [], "inv": []})"), InputError);          // no size
  CHECK_THROWS_AS(from(R"({"size": -3})"), InputError);                    // signed
  CHECK_THROWS_AS(from(R"({"size": 0})"), InputError);
  CHECK_THROWS_AS(from(R"({"size": 5000})"), SizeBoundError);
  CHECK_THROWS_AS(from(R"({"size": 2, "inv": [1, 0]})"), InputError);      // no leq
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1]], "inv": [1, 0]})"),
                  InputError);                                             // short
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [0]], "inv": [1, 0]})"),
                  InputError);                                             // ragged
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 2], [0, 1]], "inv": [1, 0]})"),
                  InputError);                                             // not 0/1
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [0, 1]], "inv": [1]})"),
                  InputError);
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [0, 1]], "inv": [1, 5]})"),
                  InputError);
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [0, 1]], "inv": [1, 0],
                           "name": 7})"),
                  InputError);

  // Structurally fine, mathematically broken: the order check reports it.
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [1, 1]], "inv": [1, 0]})"),
                  PosetError);
  CHECK_THROWS_AS(from(R"({"size": 2, "leq": [[1, 1], [0, 1]], "inv": [0, 1]})"),
                  InvalidAlgebraError);

  try {
    from(R"({"size": 2})");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("leq") != std::string::npos);
  }
}

TEST_CASE("candidate files carry a power and member encodings") {
  const CandidateSpec spec =
      candidate_from_json(json::parse(R"({"power": 2, "members": [0, 4, 8]})"));
  CHECK(spec.power == 2);
  CHECK(spec.members == std::vector<Elem>{0, 4, 8});

  const CandidateSpec empty =
      candidate_from_json(json::parse(R"({"power": 1, "members": []})"));
  CHECK(empty.members.empty());

  auto from = [](const char* text) { return candidate_from_json(json::parse(text)); };
  CHECK_THROWS_AS(from(R"(17)"), InputError);
  CHECK_THROWS_AS(from(R"({"members": [0]})"), InputError);
  CHECK_THROWS_AS(from(R"({"power": 0, "members": [0]})"), InputError);
  CHECK_THROWS_AS(from(R"({"power": -1, "members": [0]})"), InputError);
  CHECK_THROWS_AS(from(R"({"power": 1})"), InputError);
  CHECK_THROWS_AS(from(R"({"power": 1, "members": [-2]})"), InputError);
}

TEST_CASE("text file helpers report unusable paths") {
  CHECK_THROWS_AS(read_text_file("does_not_exist_9a7.json"), InputError);
  CHECK_THROWS_AS(load_algebra("does_not_exist_9a7.json"), InputError);
  CHECK_THROWS_AS(write_text_file("no_such_dir_x/y.json", "hi"), InputError);

  const FileGuard f(temp_path("text"));
  write_text_file(f.path, "{ not json");
  CHECK_THROWS_AS(load_algebra(f.path), InputError);
  CHECK_THROWS_AS(load_candidate(f.path), InputError);
  CHECK(read_text_file(f.path) == "{ not json");
}
