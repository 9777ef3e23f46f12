#include "fiber.hpp"

namespace fp {

namespace {

Polynomial cross_term(const VariableContext& ctx, int xi, int yj) {
  Monomial m(ctx.total());
  m.set_exp(xi, 1);
  m.set_exp(yj, 1);
  return Polynomial::from_monomial(m);
}

}  // namespace

std::vector<Polynomial> defining_ideal(const std::vector<Polynomial>& gens_I,
                                       const std::vector<Polynomial>& gens_Iprime,
                                       const VariableContext& ctx) {
  for (const auto& g : gens_I)
    for (int v = ctx.n; v < ctx.total(); ++v)
      if (g.involves(v)) throw Error(Errc::parse, "generator of I mentions " + ctx.var_name(v));
  for (const auto& g : gens_Iprime)
    for (int v = 0; v < ctx.n; ++v)
      if (g.involves(v)) throw Error(Errc::parse, "generator of I' mentions " + ctx.var_name(v));

  std::vector<Polynomial> gens = gens_I;
  gens.insert(gens.end(), gens_Iprime.begin(), gens_Iprime.end());
  for (int i = 0; i < ctx.n; ++i)
    for (int j = ctx.n; j < ctx.total(); ++j) gens.push_back(cross_term(ctx, i, j));
  return gens;
}

std::vector<Polynomial> minimal_defining_ideal(const FiberSpec& fs) {
  Decomposition d = decompose(fs);
  std::vector<Polynomial> gens = std::move(d.tilde_generators);
  for (int v : d.koszul_vars)
    gens.push_back(Polynomial::from_monomial(Monomial::variable(fs.ctx.total(), v)));
  return gens;
}

Decomposition decompose(const FiberSpec& fs) {
  Decomposition d;
  d.tilde_generators = fs.split_I.J;
  d.tilde_generators.insert(d.tilde_generators.end(), fs.split_Iprime.J.begin(),
                            fs.split_Iprime.J.end());
  for (int i : fs.tilde_x())
    for (int j : fs.tilde_y()) d.tilde_generators.push_back(cross_term(fs.ctx, i, j));
  d.koszul_vars = fs.split_I.leading_vars();
  for (int v : fs.split_Iprime.leading_vars()) d.koszul_vars.push_back(v);
  return d;
}

}  // namespace fp
