#include <doctest.h>

#include "reduction.hpp"
#include "specfile.hpp"
#include "test_helpers.hpp"

using namespace fp;
using namespace fptest;

namespace {

std::vector<Polynomial> parse_gens(const std::string& list, int n = 3, int np = 1) {
  ParsedSpec s = parse_ideal_spec("xvars: " + std::to_string(n) + "\nyvars: " +
                                  std::to_string(np) + "\nI: " + list + "\nI':");
  return s.gens_I;
}

}  // namespace

TEST_CASE("linear_part spec examples") {
  Field k;
  VariableContext ctx{2, 1};
  VariableBlock xb = VariableBlock::x_block(ctx);

  Matrix m = linear_part(parse_gens("x1 + x1^3 + x2^2", 2), xb, k);
  REQUIRE(m.rows() == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);

  Matrix z = linear_part(parse_gens("x1*x2; x2^3", 2), xb, k);
  CHECK(z.is_zero(k));

  VariableContext ctx3{3, 1};
  Matrix t = linear_part(parse_gens("x1 + x2; x2 + x3^2", 3), VariableBlock::x_block(ctx3), k);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(0, 2) == 0);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(1, 2) == 0);
}

TEST_CASE("linear_part rejects the unit ideal") {
  Field k;
  VariableContext ctx{2, 1};
  CHECK_THROWS_AS(linear_part(parse_gens("1 + x1", 2), VariableBlock::x_block(ctx), k), Error);
}

TEST_CASE("compute_p spec examples") {
  Field k;
  VariableContext ctx2{2, 1}, ctx3{3, 1};
  CHECK(compute_p(parse_gens("x1 + x1^3 + x2^2", 2), VariableBlock::x_block(ctx2), k) == 1);
  CHECK(compute_p(parse_gens("x1*x2; x2^3", 2), VariableBlock::x_block(ctx2), k) == 0);
  CHECK(compute_p(parse_gens("x1 + x2; x2 + x3^2", 3), VariableBlock::x_block(ctx3), k) == 2);
}

TEST_CASE("normalize_generators spec examples") {
  Field k;
  VariableContext ctx3{3, 1};
  auto norm = normalize_generators(parse_gens("x1 + x2; x2 + x3^2", 3),
                                   VariableBlock::x_block(ctx3), k);
  REQUIRE(norm.size() == 2);
  CHECK(norm[0].str(ctx3) == "x1 - x3^2");
  CHECK(norm[1].str(ctx3) == "x2 + x3^2");

  VariableContext ctx2{2, 1};
  auto reordered = normalize_generators(parse_gens("x2^2; x1", 2), VariableBlock::x_block(ctx2), k);
  REQUIRE(reordered.size() == 2);
  CHECK(reordered[0].str(ctx2) == "x1");
  CHECK(reordered[1].str(ctx2) == "x2^2");

  auto scaled = normalize_generators(parse_gens("2*x1 + x2^2", 2), VariableBlock::x_block(ctx2), k);
  REQUIRE(scaled.size() == 1);
  CHECK(scaled[0].str(ctx2) == "x1 + 1/2*x2^2");
}

TEST_CASE("split_ideal spec examples") {
  Field k;
  VariableContext ctx2{2, 1};
  VariableBlock xb = VariableBlock::x_block(ctx2);

  SplitIdeal s1 = split_ideal(parse_gens("x1 + x1^3 + x2^2", 2), xb, k);
  CHECK(s1.p == 1);
  CHECK(s1.J.empty());
  CHECK(s1.leading_vars() == std::vector<int>{0});
  CHECK(s1.trailing_vars() == std::vector<int>{1});

  SplitIdeal s2 = split_ideal(parse_gens("x1; x2^3", 2), xb, k);
  CHECK(s2.p == 1);
  REQUIRE(s2.J.size() == 1);
  CHECK(s2.J[0].str(ctx2) == "x2^3");

  SplitIdeal s3 = split_ideal(parse_gens("x1*x2; x2^3", 2), xb, k);
  CHECK(s3.p == 0);
  CHECK(s3.J.size() == 2);
}

TEST_CASE("split of the empty generator list") {
  Field k;
  VariableContext ctx{2, 2};
  SplitIdeal s = split_ideal({}, VariableBlock::x_block(ctx), k);
  CHECK(s.p == 0);
  CHECK(s.J.empty());
  CHECK(s.variable_order == std::vector<int>{0, 1});
}

TEST_CASE("split_ideal on the y-block uses absolute indices") {
  Field k;
  ParsedSpec s = parse_ideal_spec("xvars: 2\nyvars: 2\nI:\nI': y1 + y2^2");
  SplitIdeal sy = split_ideal(s.gens_Iprime, VariableBlock::y_block(s.ctx), k);
  CHECK(sy.p == 1);
  CHECK(sy.leading_vars() == std::vector<int>{2});
  CHECK(sy.trailing_vars() == std::vector<int>{3});
}

TEST_CASE("split invariants: J syntax and idempotence") {
  Field k;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + iter % 3;
    VariableContext ctx{n, 1};
    // random polynomial generators with linear parts
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> count(1, 4);
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<Term> ts;
      for (int t = 0; t < 3; ++t) {
        int c = coeff(rng);
        if (c == 0) continue;
        ts.push_back({Scalar(c), random_monomial(rng, ctx.total(), 0, n, 1 + (iter + t) % 3)});
      }
      Polynomial g = Polynomial::from_terms(ts, k);
      if (!g.is_zero()) gens.push_back(g);
    }
    SplitIdeal s = split_ideal(gens, VariableBlock::x_block(ctx), k);

    CHECK(s.p <= n);
    CHECK(s.p <= static_cast<int>(gens.size()));
    for (const auto& g : s.J) {
      CHECK(g.min_term_degree() >= 2);
      for (int v : s.leading_vars()) CHECK(!g.involves(v));
    }

    // reassemble (x_leading) + J and split again: same p, same J
    std::vector<Polynomial> reassembled;
    for (int v : s.leading_vars())
      reassembled.push_back(Polynomial::from_monomial(Monomial::variable(ctx.total(), v)));
    for (const auto& g : s.J) reassembled.push_back(g);
    SplitIdeal again = split_ideal(reassembled, VariableBlock::x_block(ctx), k);
    CHECK(again.p == s.p);
    CHECK(again.J == s.J);
    CHECK(again.leading_vars() == s.leading_vars());
  }
}

TEST_CASE("compute_p equals n exactly when the monomial ideal is the full block") {
  Field k;
  std::mt19937 rng(31);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + iter % 3;
    VariableContext ctx{n, 1};
    auto monos = random_block_gens(rng, ctx.total(), 0, n, 4);
    std::vector<Polynomial> gens;
    for (const auto& m : monos) gens.push_back(Polynomial::from_monomial(m));
    int p = compute_p(gens, VariableBlock::x_block(ctx), k);

    std::vector<Monomial> block_vars;
    for (int v = 0; v < n; ++v) block_vars.push_back(Monomial::variable(ctx.total(), v));
    bool is_full_block = MonomialIdeal(monos) == MonomialIdeal(block_vars);
    CHECK((p == n) == is_full_block);
  }
}

TEST_CASE("normalization over GF(2)") {
  Field k = Field::gf(2);
  VariableContext ctx{2, 1};
  ParseOptions opts;
  opts.field_override = k;
  ParsedSpec s = parse_ideal_spec("xvars: 2\nyvars: 1\nI: x1 + x2; x2 + x1^2\nI':", opts);
  SplitIdeal split = split_ideal(s.gens_I, VariableBlock::x_block(ctx), k);
  CHECK(split.p == 2);
  CHECK(split.J.empty());
}
