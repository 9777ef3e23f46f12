#include <doctest.h>

#include "specfile.hpp"
#include "test_helpers.hpp"

using namespace fp;
using namespace fptest;

TEST_CASE("monomial basics") {
  VariableContext ctx{2, 2};
  Monomial a = mono(ctx, {1, 0, 1, 0});  // x1*y1
  Monomial b = mono(ctx, {1, 1, 1, 0});  // x1*x2*y1
  CHECK(a.divides(b));
  CHECK(!b.divides(a));
  CHECK(a.lcm(b) == b);
  CHECK(a.times(mono(ctx, {0, 1, 0, 0})) == b);
  CHECK(a.str(ctx) == "x1*y1");
  CHECK(mono(ctx, {0, 3, 0, 0}).str(ctx) == "x2^3");
  CHECK(Monomial::one(4).str(ctx) == "1");
  CHECK(Monomial::lex_cmp(mono(ctx, {1, 0, 0, 0}), mono(ctx, {0, 5, 3, 2})) > 0);
}

TEST_CASE("polynomial canonical form and arithmetic") {
  VariableContext ctx{2, 1};
  Field k;
  // x1 + x1 - 2*x1 collapses to zero
  Polynomial g = Polynomial::from_terms(
      {{Scalar(1), mono(ctx, {1, 0, 0})},
       {Scalar(1), mono(ctx, {1, 0, 0})},
       {Scalar(-2), mono(ctx, {1, 0, 0})}},
      k);
  CHECK(g.is_zero());

  Polynomial h = Polynomial::from_terms(
      {{Scalar(1), mono(ctx, {0, 2, 0})}, {Scalar(3), mono(ctx, {1, 0, 0})}}, k);
  CHECK(h.terms().size() == 2);
  CHECK(h.leading_monomial() == mono(ctx, {1, 0, 0}));  // lex-descending storage
  CHECK(h.str(ctx) == "3*x1 + x2^2");
  CHECK(h.linear_coeff(0) == 3);
  CHECK(h.linear_coeff(1) == 0);

  Polynomial sum = h.axpy(Scalar(-3), Polynomial::from_monomial(mono(ctx, {1, 0, 0})), k);
  CHECK(sum.str(ctx) == "x2^2");
}

TEST_CASE("substitute_zero spec examples") {
  VariableContext ctx{2, 2};
  Field k;
  Polynomial g = Polynomial::from_terms({{Scalar(1), mono(ctx, {1, 0, 0, 0})},
                                         {Scalar(1), mono(ctx, {3, 0, 0, 0})},
                                         {Scalar(1), mono(ctx, {0, 2, 0, 0})}},
                                        k);
  std::vector<char> kill{1, 0, 0, 0};
  CHECK(g.substitute_zero(kill) ==
        Polynomial::from_terms({{Scalar(1), mono(ctx, {0, 2, 0, 0})}}, k));

  Polynomial untouched = Polynomial::from_terms({{Scalar(1), mono(ctx, {0, 2, 0, 0})}}, k);
  CHECK(untouched.substitute_zero(kill) == untouched);

  Polynomial wiped = Polynomial::from_terms(
      {{Scalar(1), mono(ctx, {1, 1, 0, 0})}, {Scalar(1), mono(ctx, {1, 0, 0, 0})}}, k);
  CHECK(wiped.substitute_zero(kill).is_zero());
}

TEST_CASE("substitute_zero is linear") {
  VariableContext ctx{3, 1};
  Field k;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Term> ta, tb;
    for (int i = 0; i < 5; ++i) {
      ta.push_back({Scalar(coeff(rng)), random_monomial(rng, 4, 0, 4, 1 + iter % 3)});
      tb.push_back({Scalar(coeff(rng)), random_monomial(rng, 4, 0, 4, 1 + (iter + 1) % 3)});
    }
    Polynomial a = Polynomial::from_terms(ta, k), b = Polynomial::from_terms(tb, k);
    std::vector<char> kill{iter % 2 == 0, 0, iter % 3 == 0, 1};
    CHECK(a.add(b, k).substitute_zero(kill) ==
          a.substitute_zero(kill).add(b.substitute_zero(kill), k));
  }
}

TEST_CASE("minimalize_monomial_generators spec examples") {
  VariableContext ctx{2, 2};
  CHECK(MonomialIdeal({mono(ctx, {1, 0, 0, 0}), mono(ctx, {1, 1, 0, 0})}).generators() ==
        std::vector<Monomial>{mono(ctx, {1, 0, 0, 0})});

  MonomialIdeal incomparable({mono(ctx, {1, 0, 1, 0}), mono(ctx, {0, 1, 0, 1})});
  CHECK(incomparable.size() == 2);

  MonomialIdeal chain({mono(ctx, {0, 2, 0, 0}), mono(ctx, {0, 3, 0, 0}), mono(ctx, {0, 2, 1, 0})});
  CHECK(chain.generators() == std::vector<Monomial>{mono(ctx, {0, 2, 0, 0})});
}

TEST_CASE("minimalize is idempotent") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Monomial> gens = random_block_gens(rng, 4, 0, 4, 6);
    MonomialIdeal once(gens);
    MonomialIdeal twice(once.generators());
    CHECK(once == twice);
  }
}

TEST_CASE("monomial ideal membership") {
  VariableContext ctx{2, 2};
  MonomialIdeal ideal({mono(ctx, {1, 0, 1, 0}), mono(ctx, {0, 2, 0, 0})});
  CHECK(ideal.contains(mono(ctx, {1, 1, 1, 0})));
  CHECK(ideal.contains(mono(ctx, {0, 2, 0, 3})));
  CHECK(!ideal.contains(mono(ctx, {1, 1, 0, 1})));
  CHECK(!ideal.contains(Monomial::one(4)));
  CHECK(MonomialIdeal().is_zero());
}
