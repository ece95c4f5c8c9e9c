#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nacog/catalog.hpp"
#include "nacog/structure_file.hpp"
#include "support.hpp"

using namespace nacog;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

std::string record(const std::string& kind, int dim, const std::string& body) {
  return "{\"kind\": \"" + kind + "\", \"dimension\": " + std::to_string(dim) + ", \"constants\": [" + body + "]}";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("parse a small algebra") {
  const Structure s = parse_structure(record("algebra", 2, R"({"i": 1, "j": 2, "k": 2, "c": "-3/6"})"));
  REQUIRE(std::holds_alternative<Algebra>(s));
  const auto& a = std::get<Algebra>(s);
  CHECK(a.constant(0, 1, 1) == Rat(-1, 2));
  CHECK(a.constant(1, 0, 1) == 0);
}

TEST_CASE("coalgebra records set D^k_ij") {
  const Structure s = parse_structure(record("coalgebra", 2, R"({"i": 1, "j": 2, "k": 2, "c": "1"})"));
  REQUIRE(std::holds_alternative<Coalgebra>(s));
  CHECK(std::get<Coalgebra>(s).constant(1, 0, 1) == 1);
}

TEST_CASE("duplicates are summed") {
  const Structure s = parse_structure(record(
      "algebra", 1, R"({"i": 1, "j": 1, "k": 1, "c": "1/2"}, {"i": 1, "j": 1, "k": 1, "c": "1/3"})"));
  CHECK(std::get<Algebra>(s).constant(0, 0, 0) == Rat(5, 6));
  const Structure z = parse_structure(record(
      "algebra", 1, R"({"i": 1, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 1, "c": "-1"})"));
  CHECK(serialize(z) == "{\n  \"kind\": \"algebra\",\n  \"dimension\": 1,\n  \"constants\": []\n}\n");
}

TEST_CASE("format errors name the field") {
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 0, "j": 1, "k": 1, "c": "1"})")), "constants[0].i"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 3, "k": 1, "c": "1"})")),
                 "constants[1].j"));
  CHECK(contains(error_of(record("algebra", 0, "")), "dimension"));
  CHECK(contains(error_of(record("algebra", -2, "")), "dimension"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1, "c": "x"})")), "constants[0].c"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1, "c": "1/0"})")), "constants[0].c"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1, "c": 1})")), "constants[0].c"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1})")), "constants[0].c: missing field"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1, "j": 1, "k": 1, "c": "1", "w": 2})")),
                 "constants[0].w: unknown field"));
  CHECK(contains(error_of(record("algebra", 2, R"({"i": 1.5, "j": 1, "k": 1, "c": "1"})")), "constants[0].i"));
  CHECK(contains(error_of(record("group", 2, "")), "kind"));
  CHECK(contains(error_of(R"({"kind": "algebra", "dimension": 2})"), "constants: missing field"));
  CHECK(contains(error_of(R"({"kind": "algebra", "dimension": 2, "constants": [], "extra": 1})"), "extra"));
  CHECK(contains(error_of("[1, 2]"), "expected a JSON object"));
  CHECK(contains(error_of("{\n  \"kind\": \"algebra\",\n  \"dimension\": 2,\n  \"constants\": [\n}\n"), "line 5"));
  CHECK(contains(error_of(""), "line 1"));
}

TEST_CASE("read_structure reports the path") {
  const auto dir = std::filesystem::temp_directory_path() / "nacog_structure_file_test";
  std::filesystem::create_directories(dir);
  const std::string bad = (dir / "bad.json").string();
  write_text(bad, record("coalgebra", 1, R"({"i": 1, "j": 1, "k": 2, "c": "1"})"));
  try {
    read_structure(bad);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(contains(e.what(), bad));
    CHECK(contains(e.what(), "constants[0].k"));
  }
  CHECK_THROWS_AS(read_structure((dir / "missing.json").string()), FormatError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("canonical serialization") {
  Algebra a(2);
  a.constant(1, 0, 1) = Rat(2, 3);
  a.constant(0, 1, 0) = -1;
  CHECK(serialize(a) ==
        "{\n  \"kind\": \"algebra\",\n  \"dimension\": 2,\n  \"constants\": [\n"
        "    {\"i\": 1, \"j\": 2, \"k\": 1, \"c\": \"-1\"},\n"
        "    {\"i\": 2, \"j\": 1, \"k\": 2, \"c\": \"2/3\"}\n  ]\n}\n");

  Coalgebra c(2);
  c.constant(1, 0, 0) = 1;
  c.constant(0, 1, 1) = 1;
  CHECK(serialize(c) ==
        "{\n  \"kind\": \"coalgebra\",\n  \"dimension\": 2,\n  \"constants\": [\n"
        "    {\"i\": 2, \"j\": 2, \"k\": 1, \"c\": \"1\"},\n"
        "    {\"i\": 1, \"j\": 1, \"k\": 2, \"c\": \"1\"}\n  ]\n}\n");
}

TEST_CASE("serialize then parse is the identity") {
  testing::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::draw_dim(rng, 1, 4);
    if (t % 2) {
      Algebra a = testing::random_sparse_algebra(rng, n);
      a.constant(0, 0, 0) = Rat(testing::draw(rng, -9, 9), testing::draw(rng, 1, 9));
      const Structure back = parse_structure(serialize(a));
      CHECK(std::get<Algebra>(back) == a);
      CHECK(serialize(back) == serialize(a));
    } else {
      const Coalgebra c = testing::random_sparse_coalgebra(rng, n);
      CHECK(std::get<Coalgebra>(parse_structure(serialize(c))) == c);
    }
  }
}

TEST_CASE("fixture files are canonical") {
  for (const auto& e : catalog_entries()) {
    const std::string path = std::string(NACOG_FIXTURE_DIR) + "/" + e.file_stem + ".json";
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in, path);
    std::ostringstream text;
    text << in.rdbuf();
    CHECK_MESSAGE(text.str() == serialize(e.structure), path);
  }
}
