#include <doctest.h>

#include "fiber.hpp"
#include "specfile.hpp"
#include "test_helpers.hpp"

using namespace fp;
using namespace fptest;

namespace {

FiberSpec make_fiber(const std::string& text) {
  ParsedSpec s = parse_ideal_spec(text);
  FiberSpec fs;
  fs.ctx = s.ctx;
  fs.split_I = split_ideal(s.gens_I, VariableBlock::x_block(s.ctx), s.ctx.field);
  fs.split_Iprime = split_ideal(s.gens_Iprime, VariableBlock::y_block(s.ctx), s.ctx.field);
  minimalize_monomial_split(fs.split_I);
  minimalize_monomial_split(fs.split_Iprime);
  return fs;
}

std::vector<std::string> strs(const std::vector<Polynomial>& gens, const VariableContext& ctx) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.str(ctx));
  return out;
}

}  // namespace

TEST_CASE("defining_ideal spec examples") {
  ParsedSpec s = parse_ideal_spec(
      "xvars: 2\nyvars: 2\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2");
  auto gens = defining_ideal(s.gens_I, s.gens_Iprime, s.ctx);
  REQUIRE(gens.size() == 6);
  CHECK(strs(gens, s.ctx) ==
        std::vector<std::string>{"x1^3 + x2^2 + x1", "y1^3 + y2^2 + y1", "x1*y1", "x1*y2",
                                 "x2*y1", "x2*y2"});

  ParsedSpec s2 = parse_ideal_spec("xvars: 1\nyvars: 1\nI:\nI':");
  auto gens2 = defining_ideal(s2.gens_I, s2.gens_Iprime, s2.ctx);
  CHECK(strs(gens2, s2.ctx) == std::vector<std::string>{"x1*y1"});

  ParsedSpec s3 = parse_ideal_spec("xvars: 1\nyvars: 1\nI: x1\nI': y1");
  auto gens3 = defining_ideal(s3.gens_I, s3.gens_Iprime, s3.ctx);
  CHECK(strs(gens3, s3.ctx) == std::vector<std::string>{"x1", "y1", "x1*y1"});
}

TEST_CASE("minimal_defining_ideal spec examples") {
  // the motivating example: p = q = 1, J = J' = 0
  FiberSpec ex = make_fiber("xvars: 2\nyvars: 2\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2");
  CHECK(strs(minimal_defining_ideal(ex), ex.ctx) ==
        std::vector<std::string>{"x2*y2", "x1", "y1"});

  // p = q = 0: nothing is pruned
  FiberSpec flat = make_fiber("xvars: 2\nyvars: 2\nI: x2^2\nI': y1^2");
  CHECK(strs(minimal_defining_ideal(flat), flat.ctx) ==
        std::vector<std::string>{"x2^2", "y1^2", "x1*y1", "x1*y2", "x2*y1", "x2*y2"});

  // p = n, q = n': only the variables remain
  FiberSpec full = make_fiber("xvars: 2\nyvars: 1\nI: x1; x2\nI': y1");
  CHECK(strs(minimal_defining_ideal(full), full.ctx) ==
        std::vector<std::string>{"x1", "x2", "y1"});
}

TEST_CASE("decompose spec examples") {
  FiberSpec ex = make_fiber("xvars: 2\nyvars: 2\nI: x1 + x1^3 + x2^2\nI': y1 + y1^3 + y2^2");
  Decomposition d = decompose(ex);
  CHECK(strs(d.tilde_generators, ex.ctx) == std::vector<std::string>{"x2*y2"});
  CHECK(d.koszul_vars == std::vector<int>{0, 2});  // x1, y1

  FiberSpec flat = make_fiber("xvars: 2\nyvars: 2\nI: x2^2\nI': y1^2");
  Decomposition df = decompose(flat);
  CHECK(df.koszul_vars.empty());
  CHECK(df.tilde_generators.size() == 6);

  FiberSpec full = make_fiber("xvars: 2\nyvars: 1\nI: x1; x2\nI': y1");
  Decomposition dfull = decompose(full);
  CHECK(dfull.tilde_generators.empty());
  CHECK(dfull.koszul_vars == std::vector<int>{0, 1, 2});
}

TEST_CASE("decompose partitions the minimal defining ideal") {
  std::mt19937 rng(83);
  for (int iter = 0; iter < 40; ++iter) {
    VariableContext ctx{1 + iter % 3, 1 + (iter / 3) % 3};
    auto gi = random_block_gens(rng, ctx.total(), 0, ctx.n, 4);
    auto gip = random_block_gens(rng, ctx.total(), ctx.n, ctx.total(), 4);
    FiberSpec fs = make_fiber(spec_text_for(ctx, gi, gip));

    std::vector<Polynomial> minimal = minimal_defining_ideal(fs);
    Decomposition d = decompose(fs);
    std::vector<Polynomial> joined = d.tilde_generators;
    for (int v : d.koszul_vars)
      joined.push_back(Polynomial::from_monomial(Monomial::variable(ctx.total(), v)));
    CHECK(joined == minimal);
  }
}

TEST_CASE("defining and minimal defining ideal agree as monomial ideals") {
  std::mt19937 rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    VariableContext ctx{1 + iter % 3, 1 + (iter / 2) % 3};
    auto gi = random_block_gens(rng, ctx.total(), 0, ctx.n, 4);
    auto gip = random_block_gens(rng, ctx.total(), ctx.n, ctx.total(), 4);
    ParsedSpec s = parse_ideal_spec(spec_text_for(ctx, gi, gip));
    FiberSpec fs = make_fiber(spec_text_for(ctx, gi, gip));

    auto monos = [](const std::vector<Polynomial>& gens) {
      std::vector<Monomial> out;
      for (const auto& g : gens) out.push_back(g.leading_monomial());
      return out;
    };
    MonomialIdeal full(monos(defining_ideal(s.gens_I, s.gens_Iprime, s.ctx)));
    MonomialIdeal minimal(monos(minimal_defining_ideal(fs)));
    CHECK(full.contains_ideal(minimal));
    CHECK(minimal.contains_ideal(full));
    // Lemma 3.2's generator count
    CHECK(minimal.size() == fs.split_I.J.size() + fs.split_Iprime.J.size() +
                                static_cast<size_t>((fs.ctx.n - fs.p()) *
                                                    (fs.ctx.nprime - fs.q())) +
                                fs.p() + fs.q());
  }
}

TEST_CASE("mixed-variable generators are rejected") {
  ParsedSpec s = parse_ideal_spec("xvars: 1\nyvars: 1\nI: x1\nI': y1");
  Polynomial mixed = Polynomial::from_monomial(mono(s.ctx, {1, 1}));
  CHECK_THROWS_AS(defining_ideal({mixed}, {}, s.ctx), Error);
  CHECK_THROWS_AS(defining_ideal({}, {mixed}, s.ctx), Error);
}
