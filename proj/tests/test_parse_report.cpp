#include "sepvar/parse.hpp"
#include "sepvar/report.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sepvar;
using sepvar::testing::P;

TEST_CASE("parse examples") {
  Poly p = parse_poly("x^5 - 3*x + 1");
  CHECK(p == Poly{1, -3, 0, 0, 0, 1});
  CHECK(parse_poly("(x-1)^2*(x+2)") == Poly{2, -3, 0, 1});
  CHECK(parse_poly("-4/7") == Poly::constant(Rational(-4, 7)));
  CHECK(parse_poly("  - x ^ 2 +  6/4 ") == Poly{Rational(3, 2), 0, -1});
  CHECK(parse_poly("2*-x") == Poly{0, -2});
  CHECK(parse_poly("x^0") == Poly{1});
  CHECK(parse_poly("010*x") == Poly{0, 10});
}

TEST_CASE("parse errors carry a position") {
  auto pos = [](const char* s) {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("x^y") == 2);
  CHECK(pos("x^1/2") == 3);
  CHECK(pos("y + 1") == 0);
  CHECK(pos("(x + 1") == 6);
  CHECK(pos("") == 0);
  CHECK(pos("x + ") == 4);
  CHECK(pos("3/0") == 2);
  CHECK(pos("x^-2") == 2);
  CHECK(pos("x x") == 2);
}

namespace {

// Random well-formed expression together with its value.
std::pair<std::string, Poly> random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  std::uniform_int_distribution<int> small(0, 9);
  switch (pick(rng)) {
    case 0: {
      int n = small(rng);
      int d = 1 + small(rng);
      return {std::to_string(n) + "/" + std::to_string(d), Poly::constant(Rational(n, d) * 1)};
    }
    case 1:
      return {"x", Poly::x()};
    case 2: {
      auto [a, pa] = random_expr(rng, depth - 1);
      auto [b, pb] = random_expr(rng, depth - 1);
      return {a + " + " + b, pa + pb};
    }
    case 3: {
      auto [a, pa] = random_expr(rng, depth - 1);
      auto [b, pb] = random_expr(rng, depth - 1);
      return {"(" + a + ") * (" + b + ")", pa * pb};
    }
    case 4: {
      auto [a, pa] = random_expr(rng, depth - 1);
      int e = small(rng) % 4;
      return {"(" + a + ")^" + std::to_string(e), power(pa, e)};
    }
    default: {
      auto [a, pa] = random_expr(rng, depth - 1);
      return {"-(" + a + ")", -pa};
    }
  }
}

}  // namespace

TEST_CASE("parser fuzz: well-formed inputs evaluate correctly") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 500; ++t) {
    auto [text, want] = random_expr(rng, 4);
    CAPTURE(text);
    CHECK(parse_poly(text) == want);
    CHECK(parse_poly(want.to_string()) == want);
  }
}

TEST_CASE("parser fuzz: malformed inputs only raise ParseError") {
  std::mt19937 rng(77);
  const std::string alphabet = "x0123456789+-*/^() yz.";
  std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1), len(0, 12);
  for (int t = 0; t < 2000; ++t) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += alphabet[ch(rng)];
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      CHECK(e.position() <= s.size());
    }
  }
}

TEST_CASE("report json") {
  ReportOptions opts;
  opts.witness = true;
  opts.geometry = true;
  Report r = build_report(P("x^7 + x"), P("x^7 + 2*x"), opts);
  auto j = to_json(r, opts);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "Hyperbolic");
  CHECK(j["rule"] == "Theorem 2");
  CHECK(j["case"].is_null());
  CHECK(j["witness_forms"].size() == 2);
  CHECK(j["oracle"]["geometry"]["genus"] == 15);
  CHECK(j["oracle"]["numeric"].is_null());
  CHECK_FALSE(j.contains("timings_ms"));
  std::string text = j.dump(2);
  CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);
  CHECK(to_json(build_report(P("x^7 + x"), P("x^7 + 2*x"), opts), opts).dump(2) == text);
}

TEST_CASE("exit codes follow the verdict") {
  CHECK(exit_code(Outcome::Hyperbolic) == 0);
  CHECK(exit_code(Outcome::HasLowGenusComponent) == 10);
  CHECK(exit_code(Outcome::Inconclusive) == 20);
}

TEST_CASE("text report") {
  ReportOptions opts;
  Report r = build_report(P("x^3"), P("x^3"), opts);
  std::string t = to_text(r, opts);
  CHECK(t.find("HasLowGenusComponent") != std::string::npos);
  CHECK(t.find("linear factor") != std::string::npos);
}
