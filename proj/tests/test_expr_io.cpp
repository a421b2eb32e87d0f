#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "itlog/cache.hpp"
#include "itlog/expr.hpp"
#include "itlog/funceq.hpp"
#include "itlog/seriesio.hpp"

using namespace itlog;

TEST_CASE("parser precedence and associativity") {
  auto norm = [](const char* t) { return normalize_expression(parse_expression(t)); };
  CHECK(norm("1 + 2*z") == norm("1 + (2*z)"));
  // exponents are integer literals only, so stacked ^ cannot parse
  CHECK_THROWS_AS(parse_expression("z^2^3"), ParseError);
  CHECK(norm("-z^2") == norm("-(z^2)"));            // ^ binds tighter than unary -
  CHECK(norm("1 - 2 - 3") == norm("(1 - 2) - 3"));  // left-associative
  CHECK(norm("2*z + 3*z") != norm("5*z"));          // syntactic, not semantic
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expression("z + "), ParseError);
  CHECK_THROWS_AS(parse_expression("(z"), ParseError);
  CHECK_THROWS_AS(parse_expression("z^z"), ParseError);  // non-integer exponent
  CHECK_THROWS_AS(parse_expression("frob(z)"), ParseError);
  try {
    parse_expression("z + * z");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("exact evaluation of builtins") {
  RSeries e = eval_series(parse_expression("exp(z) - 1"), 6, {});
  CHECK(e.coeff(0) == 0);
  CHECK(e.coeff(3) == make_rat(1, 6));
  CHECK(eval_series(parse_expression("expm1"), 6, {}) == e);
  RSeries s = eval_series(parse_expression("sin(z)"), 7, {});
  CHECK(s.coeff(3) == make_rat(-1, 6));
  CHECK(s.coeff(7) == make_rat(-1, 5040));
  RSeries l = eval_series(parse_expression("log(1 + z)"), 5, {});
  CHECK(l.coeff(4) == make_rat(-1, 4));
  RSeries ze = eval_series(parse_expression("zexp"), 5, {});
  CHECK(ze == eval_series(parse_expression("z*exp(z)"), 5, {}));
}

TEST_CASE("parameters bind rationals") {
  ParamMap p{{"c", make_rat(3, 5)}};
  RSeries m = eval_series(parse_expression("moebius(c)"), 10, p);
  CHECK(m == eval_series(parse_expression("z/(1 - (3/5)*z)"), 10, p));
  CHECK_THROWS_AS(eval_series(parse_expression("moebius(c)"), 5, {}), ParseError);
}

TEST_CASE("jet evaluation agrees with exact evaluation on rationals") {
  for (const char* t : {"exp(z) - 1", "sin(z)*2 - z^3/6", "z/(1+z^2)"}) {
    RSeries exact = eval_series(parse_expression(t), 10, {});
    CSeries jet = eval_jet(parse_expression(t), CSeries::identity(10), {});
    for (int k = 0; k <= 10; ++k)
      CHECK(std::abs(jet.coeff(k) - Cplx(exact.coeff(k).get_d(), 0.0)) < 1e-12);
  }
}

TEST_CASE("jet evaluation off-center") {
  // exp at center 1: coefficients e/k!
  CSeries x(4, {Cplx(1.0, 0.0), Cplx(1.0, 0.0), Cplx(0.0, 0.0), Cplx(0.0, 0.0),
                Cplx(0.0, 0.0)});
  CSeries j = eval_jet(parse_expression("exp(z)"), x, {});
  double e = std::exp(1.0);
  CHECK(std::abs(j.coeff(0) - Cplx(e, 0.0)) < 1e-12);
  CHECK(std::abs(j.coeff(3) - Cplx(e / 6.0, 0.0)) < 1e-12);
}

TEST_CASE("series text format round-trips") {
  RSeries phi = itlog_solve(
      ParabolicGerm(eval_series(parse_expression("expm1"), 13, {})), 12).phi;
  std::ostringstream os;
  write_series(os, phi);
  std::istringstream is(os.str());
  CHECK(read_rseries(is) == phi);
  CHECK(os.str().substr(0, 8) == "order 12");
}

TEST_CASE("series text format rejects malformed input") {
  std::istringstream a("orden 5\n");
  CHECK_THROWS_AS(read_rseries(a), ParseError);
  std::istringstream b("order 3\n9 1/2\n");
  CHECK_THROWS_AS(read_rseries(b), ParseError);
}

TEST_CASE("differential polynomial printing and parsing") {
  ChainFamilyA A = chain_A(4);
  for (int j = 0; j <= 4; ++j)
    for (int i = 0; i <= j; ++i) {
      const IntDiffPoly& a = A.at(i, j);
      if (a.terms().empty()) continue;
      std::string text = diffpoly_to_string(a, "X");
      CHECK(parse_diffpoly(text) == a);
    }
  IntDiffPoly p = IntDiffPoly::monomial(MultiIndex{0, 2}, Int(-3)) +
                  IntDiffPoly::monomial(MultiIndex{1, 0, 0, 0, 1}, Int(1));
  std::string text = diffpoly_to_string(p, "X");
  CHECK(text == "-3 (X')^2 + X X^(4)");
  CHECK(parse_diffpoly(text) == p);
}

TEST_CASE("cache stores and reloads series transparently") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "itlog-cache-test";
  std::filesystem::remove_all(dir);
  SeriesCache cache(dir);
  RSeries phi = itlog_solve(
      ParabolicGerm(eval_series(parse_expression("z + z^2"), 21, {})), 20).phi;
  std::string key = SeriesCache::key("(z + (z ^ 2))", "itlog", 20);
  CHECK(!cache.load(key, [](const RSeries&) { return true; }));
  cache.store(key, phi, "(z + (z ^ 2))", "itlog", 20);
  auto back = cache.load(key, [](const RSeries&) { return true; });
  REQUIRE(back);
  CHECK(*back == phi);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache drops entries that fail re-verification") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "itlog-cache-test2";
  std::filesystem::remove_all(dir);
  SeriesCache cache(dir);
  RSeries junk = RSeries::monomial(2, Rat(7), 20);
  cache.store("deadbeef00000000", junk, "whatever", "itlog", 20);
  CHECK(!cache.load("deadbeef00000000", [](const RSeries&) { return false; }));
  // the bad payload is gone afterwards
  CHECK(!cache.load("deadbeef00000000", [](const RSeries&) { return true; }));
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache key separates expression, op and order") {
  std::string a = SeriesCache::key("expm1", "itlog", 20);
  CHECK(a != SeriesCache::key("expm1", "itlog", 21));
  CHECK(a != SeriesCache::key("expm1", "flow", 20));
  CHECK(a != SeriesCache::key("zexp", "itlog", 20));
  CHECK(a.size() == 16);
}
