#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "nacent/classifier.hpp"
#include "nacent/corpus.hpp"
#include "nacent/errors.hpp"
#include "nacent/predicates.hpp"

using namespace nacent;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = NACENT_FIXTURE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool has(const std::vector<GroupSpec>& specs, const std::string& s) {
  return std::any_of(specs.begin(), specs.end(), [&](const GroupSpec& g) { return g.to_string() == s; });
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("nacent-test-" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("spec notation round-trips") {
  for (const char* text : {"cyclic(5)", "heisenberg_frobenius(7,3)", "direct_product(dicyclic(2),cyclic(3))",
                           "semidirect_product(cyclic(7),cyclic(3),[[0,2,4,6,1,3,5]])", "sl23", "agl1(5)"}) {
    CAPTURE(text);
    const auto spec = parse_spec(text);
    CHECK(spec.to_string() == text);
    CHECK(parse_spec(spec.to_string()) == spec);
  }
  CHECK(parse_spec(" cyclic ( 5 ) ").to_string() == "cyclic(5)");
  CHECK_THROWS_AS(parse_spec("cyclic(5"), ParseError);
  CHECK_THROWS_AS(parse_spec("cyclic(x)"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("no_such_group(3)"), ParseError);
}

TEST_CASE("constructors produce the advertised orders") {
  CHECK(cyclic(1).order() == 1);
  CHECK(dihedral(5).order() == 10);
  CHECK(dicyclic(3).order() == 12);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(5).order() == 60);
  CHECK(agl1(7).order() == 42);
  CHECK(sl23().order() == 24);
  CHECK(center(sl23()).size() == 2);
  CHECK(heisenberg(5).order() == 125);
  for (const char* text : {"direct_product(symmetric(3),cyclic(4))", "heisenberg_frobenius(7,3)", "agl1(11)",
                           "semidirect_product(cyclic(7),cyclic(3),[[0,2,4,6,1,3,5]])"}) {
    CAPTURE(text);
    const auto spec = parse_spec(text);
    CHECK(build(spec).order() == spec_order(spec));
    CHECK(build(spec) == build(spec));
  }
}

TEST_CASE("invalid construction parameters") {
  CHECK_THROWS_AS(build(parse_spec("heisenberg_frobenius(7,2)")), InvalidParams);
  CHECK_THROWS_AS(build(parse_spec("heisenberg_frobenius(7,5)")), InvalidParams);
  CHECK_THROWS_AS(build(parse_spec("heisenberg(4)")), InvalidParams);
  CHECK_THROWS_AS(build(parse_spec("cyclic(0)")), InvalidParams);
  CHECK_THROWS_AS(build(parse_spec("symmetric(9)")), InvalidParams);
  CHECK_THROWS_AS(build(parse_spec("semidirect_product(cyclic(7),cyclic(3),[[0,2,1,3,4,5,6]])")), InvalidAction);
  CHECK_THROWS_AS(build(parse_spec("semidirect_product(cyclic(7),cyclic(3),[[0,6,5,4,3,2,1]])")), InvalidAction);
  CHECK_THROWS_AS(build(parse_spec("cyclic(100)"), 50), OrderLimitExceeded);
}

TEST_CASE("the semidirect product by a fixed-point-free automorphism is Frobenius-like") {
  const auto g = build(parse_spec("semidirect_product(cyclic(7),cyclic(3),[[0,2,4,6,1,3,5]])"));
  CHECK(g.order() == 21);
  CHECK(center(g).is_trivial());
  CHECK(classify(g).category == Category::kCA);
}

TEST_CASE("element_of_order_mod") {
  CHECK(element_of_order_mod(7, 3) == 2u);
  CHECK(element_of_order_mod(13, 3) == 3u);
  CHECK_FALSE(element_of_order_mod(7, 5).has_value());
}

TEST_CASE("catalog contents") {
  const auto six = builtin_catalog(6);
  for (const char* s : {"cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)", "dihedral(3)",
                        "symmetric(3)"})
    CHECK(has(six, s));
  for (const auto& s : six) CHECK(spec_order(s) <= 6);
  CHECK(has(builtin_catalog(1100), "heisenberg_frobenius(7,3)"));
  CHECK_FALSE(has(builtin_catalog(1000), "heisenberg_frobenius(7,3)"));
  CHECK_THROWS_AS(builtin_catalog(0), InvalidParams);
  const auto a = builtin_catalog(200);
  const auto b = builtin_catalog(200);
  CHECK(a == b);
  std::vector<std::string> names;
  for (const auto& s : a) names.push_back(s.to_string());
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("fixture files load") {
  CHECK(load_group(kFixtures / "z2.json").order() == 2);
  const auto s3 = load_group(kFixtures / "s3.json");
  CHECK(cent_stats(s3).cent_count() == 5);
  CHECK(load_group(kFixtures / "z6.json").exponent() == 6);
  const auto q8 = load_group(kFixtures / "q8_permutations.json");
  CHECK(q8.order() == 8);
  CHECK(q8.exponent() == 4);
  CHECK(load_group(kFixtures / "d4.json") == dihedral(4));
  const auto loaded = read_group_file(kFixtures / "flagship.json");
  CHECK(loaded.group.order() == 1029);
  CHECK(loaded.content_hash.size() == 16);
}

TEST_CASE("corrupted table is rejected naming a law") {
  try {
    (void)load_group(kFixtures / "s3_corrupted.json");
    FAIL("corrupted table accepted");
  } catch (const NotAGroup& e) {
    CHECK_FALSE(e.law().empty());
    CHECK(std::string(e.what()).find(e.law()) != std::string::npos);
  }
}

TEST_CASE("save and load round-trip byte for byte") {
  TempDir tmp;
  for (const char* text : {"cyclic(1)", "symmetric(3)", "dicyclic(2)", "agl1(5)", "direct_product(cyclic(2),cyclic(2))"}) {
    CAPTURE(text);
    const auto g = build(parse_spec(text));
    const auto p1 = tmp.path / "a.json";
    const auto p2 = tmp.path / "b.json";
    save_group(g, p1, text);
    const auto back = load_group(p1);
    CHECK(back == g);
    save_group(back, p2, text);
    CHECK(slurp(p1) == slurp(p2));
  }
  for (const char* name : {"z2.json", "z6.json", "s3.json"}) {
    CAPTURE(name);
    std::string stored_name;
    const std::string text = slurp(kFixtures / name);
    const auto g = parse_group_document(text, name, &stored_name);
    CHECK(serialize_group(g, stored_name) == text);
  }
}

TEST_CASE("malformed documents are reported with a location") {
  auto message = [](std::string_view text) {
    try {
      (void)parse_group_document(text, "doc");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{\n  \"name\": \"z2\",\n  \"kind\": \"cayley\",\n  \"cayley\": [[0, 1], [1, 0]\n").find("line") != std::string::npos);
  CHECK(message(R"({"name": "x", "kind": "cayley"})").find("cayley") != std::string::npos);
  CHECK(message(R"({"name": "x", "kind": "martian"})").find("kind") != std::string::npos);
  CHECK(message(R"({"name": "x", "kind": "cayley", "order": 3, "cayley": [[0, 1], [1, 0]]})").find("order") != std::string::npos);
  CHECK(message(R"({"name": "x", "kind": "permutations", "degree": 3, "permutations": [[1, 0]]})").find("permutations") !=
        std::string::npos);
  CHECK(message(R"({"name": "x", "kind": "construction", "construction": "cyclic", "params": {"n": "five"}})") != "");
}
