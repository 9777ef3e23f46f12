#include <doctest.h>

#include "specfile.hpp"
#include "test_helpers.hpp"

using namespace fp;
using namespace fptest;

TEST_CASE("parse example 2.2 spec") {
  ParsedSpec s = parse_ideal_spec(
      "xvars: 2\nyvars: 2\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2");
  CHECK(s.ctx.n == 2);
  CHECK(s.ctx.nprime == 2);
  CHECK(s.ctx.field.is_rationals());
  REQUIRE(s.gens_I.size() == 1);
  REQUIRE(s.gens_Iprime.size() == 1);
  CHECK(s.gens_I[0].str(s.ctx) == "x1^3 + x2^2 + x1");
  CHECK(s.gens_Iprime[0].str(s.ctx) == "y1^3 + y2^2 + y1");
}

TEST_CASE("parse empty ideals") {
  ParsedSpec s = parse_ideal_spec("xvars: 1\nyvars: 1\nI:\nI':");
  CHECK(s.gens_I.empty());
  CHECK(s.gens_Iprime.empty());
}

TEST_CASE("parse semicolon-separated monomial generators") {
  ParsedSpec s = parse_ideal_spec("xvars: 2\nyvars: 2\nI: x1; x2^2\nI': y1^2");
  REQUIRE(s.gens_I.size() == 2);
  CHECK(s.gens_I[0] == Polynomial::from_monomial(mono(s.ctx, {1, 0, 0, 0})));
  CHECK(s.gens_I[1] == Polynomial::from_monomial(mono(s.ctx, {0, 2, 0, 0})));
  REQUIRE(s.gens_Iprime.size() == 1);
  CHECK(s.gens_Iprime[0] == Polynomial::from_monomial(mono(s.ctx, {0, 0, 2, 0})));
}

TEST_CASE("parse coefficients, field line, and overrides") {
  ParsedSpec s = parse_ideal_spec(
      "xvars: 2\nyvars: 1\nfield: GF 7\nI: 2*x1 - 1/3*x2^2\nI': y1^2\nbetti_J: 1,2,1\n");
  CHECK(s.ctx.field.characteristic() == 7);
  REQUIRE(s.gens_I.size() == 1);
  // 2 and -1/3 = -5 = 2 mod 7
  CHECK(s.gens_I[0].linear_coeff(0) == 2);
  CHECK(s.gens_I[0].coeff_of(mono(s.ctx, {0, 2, 0})) == 2);
  REQUIRE(s.betti_J.has_value());
  CHECK(*s.betti_J == seq({1, 2, 1}));
  CHECK(!s.betti_Jprime.has_value());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nI: x3\nI':"),
                       doctest::Contains("x3 out of range"), Error);
  CHECK_THROWS_WITH_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nI: y1\nI':"),
                       doctest::Contains("generator of I mentions y1"), Error);
  CHECK_THROWS_WITH_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nI: x1 +\nI':"),
                       doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nfield: GF 6\nI:\nI':"),
                       doctest::Contains("prime"), Error);
  CHECK_THROWS_WITH_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nI:\nI':\nbetti_J: 2,1"),
                       doctest::Contains("must start with 1"), Error);
  CHECK_THROWS_AS(parse_ideal_spec("xvars: 2\nI:\nI':"), Error);          // missing yvars
  CHECK_THROWS_AS(parse_ideal_spec("xvars: 0\nyvars: 1\nI:\nI':"), Error);
  CHECK_THROWS_AS(parse_ideal_spec("xvars: 2\nyvars: 2\nI: x1^60\nI':"), Error);  // degree cap
}

TEST_CASE("unit-ideal generators parse; rejection happens at reduction") {
  ParsedSpec s = parse_ideal_spec("xvars: 1\nyvars: 1\nI: 1 + x1\nI':");
  REQUIRE(s.gens_I.size() == 1);
  CHECK(s.gens_I[0].has_constant_term());
}

TEST_CASE("spec round trip: parse, format, parse") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 30; ++iter) {
    VariableContext ctx{1 + iter % 3, 1 + (iter / 3) % 3};
    auto gi = random_block_gens(rng, ctx.total(), 0, ctx.n, 4);
    auto gip = random_block_gens(rng, ctx.total(), ctx.n, ctx.total(), 4);
    ParsedSpec first = parse_ideal_spec(spec_text_for(ctx, gi, gip));
    ParsedSpec second = parse_ideal_spec(format_ideal_spec(first));
    CHECK(first.ctx.n == second.ctx.n);
    CHECK(first.ctx.nprime == second.ctx.nprime);
    CHECK(first.gens_I == second.gens_I);
    CHECK(first.gens_Iprime == second.gens_Iprime);
  }
  // rational coefficients and overrides round-trip too
  ParsedSpec s = parse_ideal_spec(
      "xvars: 2\nyvars: 1\nI: x1 - 5/2*x2^2; x2^3\nI': y1^2\nbetti_J: 1,1\nbetti_J': 1,1\n");
  ParsedSpec s2 = parse_ideal_spec(format_ideal_spec(s));
  CHECK(s.gens_I == s2.gens_I);
  CHECK(s.betti_J == s2.betti_J);
  CHECK(s.betti_Jprime == s2.betti_Jprime);
  CHECK(format_ideal_spec(s) == format_ideal_spec(s2));
}

TEST_CASE("field flag parsing") {
  CHECK(parse_field_flag("q").is_rationals());
  CHECK(parse_field_flag("gf:13").characteristic() == 13);
  CHECK_THROWS_AS(parse_field_flag("gf:9"), Error);
  CHECK_THROWS_AS(parse_field_flag("r"), Error);
}

TEST_CASE("GF(p) scalar arithmetic") {
  Field k = Field::gf(5);
  CHECK(k.canon(Scalar(7)) == 2);
  CHECK(k.canon(Scalar(-1)) == 4);
  CHECK(k.canon(Scalar(1, 2)) == 3);  // 1/2 = 3 mod 5
  CHECK(k.mul(k.canon(Scalar(3)), k.canon(Scalar(4))) == 2);
  CHECK(k.inverse(Scalar(4)) == 4);
  CHECK_THROWS_AS(Field::gf(4), Error);
  CHECK_THROWS_AS((void)Field::gf(5).canon(Scalar(1, 5)), Error);
}
