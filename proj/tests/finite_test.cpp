// Unit tests for table-defined finite base groups and their H_k chains.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hnn/errors.hpp"
#include "hnn/finite_group.hpp"
#include "hnn/token_io.hpp"
#include "hnn/word.hpp"

namespace {

using namespace hnn;
using Elt = FiniteGroup::Elt;

const std::string kFixtureDir = HNN_FIXTURE_DIR;

FiniteGroup load(const std::string& file) {
  return FiniteGroup::from_json_file(kFixtureDir + "/" + file);
}

}  // namespace

TEST_CASE("fixtures load and expose the expected structure") {
  const auto s3 = load("s3.json");
  CHECK(s3.order() == 6);
  CHECK(s3.name() == "finite:" + kFixtureDir + "/s3.json");
  CHECK(s3.h() == std::vector<Elt>{0, 1});
  CHECK(s3.theta_h() == std::vector<Elt>{0, 2});
  CHECK_FALSE(s3.h_normal_in_g());
  CHECK(s3.non_ascending());
  CHECK(s3.reps_h() == std::vector<Elt>{0, 2, 3});
  CHECK(s3.reps_theta_h() == std::vector<Elt>{0, 1, 3});

  const auto z4 = load("z4.json");
  CHECK(z4.order() == 4);
  CHECK(z4.h_normal_in_g());
  CHECK(z4.non_ascending());
}

TEST_CASE("names drive printing and parsing; indices are the fallback") {
  const auto s3 = load("s3.json");
  CHECK(s3.print(0) == "e");
  CHECK(s3.print(4) == "(012)");
  CHECK(s3.parse_token("(021)") == Elt{5});
  CHECK_FALSE(s3.parse_token("(99)").has_value());

  const auto z4 = load("z4.json");
  CHECK(z4.print(0) == "0");
  CHECK(z4.print(3) == "3");
  CHECK(z4.parse_token("2") == Elt{2});
}

TEST_CASE("construction validates the table and the homomorphism") {
  const std::vector<std::vector<Elt>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK_NOTHROW(FiniteGroup(3, z3, 0, {0}, {{0, 0}}));
  // Identity row broken.
  CHECK_THROWS_AS(FiniteGroup(3, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, 0, {0},
                              {{0, 0}}),
                  ValidationError);
  // H not closed under multiplication.
  CHECK_THROWS_AS(FiniteGroup(3, z3, 0, {0, 1}, {{0, 0}, {1, 1}}),
                  ValidationError);
  // theta defined on the wrong domain.
  CHECK_THROWS_AS(FiniteGroup(3, z3, 0, {0}, {{0, 0}, {1, 1}}),
                  ValidationError);
  // theta not injective: send both elements of H = Z2 x {0} to identity.
  const std::vector<std::vector<Elt>> z2z2{
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK_THROWS_AS(FiniteGroup(4, z2z2, 0, {0, 1}, {{0, 0}, {1, 0}}),
                  ValidationError);
  // theta not a homomorphism on H = the full Klein group.
  CHECK_THROWS_AS(FiniteGroup(4, z2z2, 0, {0, 1, 2, 3},
                              {{0, 0}, {1, 2}, {2, 1}, {3, 1}}),
                  ValidationError);
}

TEST_CASE("malformed JSON raises parse or validation errors") {
  CHECK_THROWS_AS(FiniteGroup::from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(FiniteGroup::from_json_text("{\"order\": 3}"),
                  ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_json_file(kFixtureDir + "/missing.json"),
                  ValidationError);
}

TEST_CASE("s3 chain descends to the trivial subgroup") {
  const auto s3 = load("s3.json");
  const auto chain = finite_hk_chain(s3);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == std::vector<Elt>{0, 1});
  CHECK(chain[1] == std::vector<Elt>{0});
  CHECK(chain[2] == std::vector<Elt>{0});

  const auto verdict = finite_verdict(s3);
  CHECK(verdict.c_simple);
  CHECK(verdict.kernel == std::vector<Elt>{0});
}

TEST_CASE("z4 chain stabilizes at the nontrivial kernel") {
  const auto z4 = load("z4.json");
  const auto chain = finite_hk_chain(z4);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == std::vector<Elt>{0, 2});
  CHECK(chain[1] == std::vector<Elt>{0, 2});

  const auto verdict = finite_verdict(z4);
  CHECK_FALSE(verdict.c_simple);
  CHECK(verdict.kernel == std::vector<Elt>{0, 2});
}

TEST_CASE("ascending instances are rejected by the chain analysis") {
  // H = G = Z3, theta = identity: the extension is Z3 x Z, ascending.
  const std::vector<std::vector<Elt>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const FiniteGroup g(3, z3, 0, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(g.non_ascending());
  CHECK_THROWS_AS(finite_verdict(g), UnsupportedError);
}

TEST_CASE("finite-instance words reduce through the table oracle") {
  const auto s3 = load("s3.json");
  auto nf_of = [&](const char* text) {
    return print_normal_form(s3, normal_form(s3, parse_word(s3, text)));
  };
  // (01) lies in H, theta((01)) = (02).
  CHECK(nf_of("T (01) t") == "(02)");
  CHECK(nf_of("t (02) T") == "(01)");
  // (12) is in neither subgroup: no pinch.
  CHECK(nf_of("T (12) t") == "T (12) t");
  const auto nf = normal_form(s3, parse_word(s3, "(021) t"));
  REQUIRE(nf.prefix.size() == 1);
  CHECK(s3.rep_h(nf.prefix[0].first) == nf.prefix[0].first);
}
