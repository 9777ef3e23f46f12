#include "pipeline.hpp"

#include <json.hpp>

#include "formulas.hpp"

namespace fp {

using nlohmann::json;

Command parse_command(const std::string& name) {
  if (name == "reduce") return Command::reduce;
  if (name == "betti") return Command::betti;
  if (name == "poincare") return Command::poincare;
  if (name == "ranks") return Command::ranks;
  if (name == "verify") return Command::verify;
  throw Error(Errc::bad_argument, "unknown command '" + name + "'");
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::reduce: return "reduce";
    case Command::betti: return "betti";
    case Command::poincare: return "poincare";
    case Command::ranks: return "ranks";
    case Command::verify: return "verify";
  }
  return "?";
}

bool all_monomial(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_monomial()) return false;
  return true;
}

MonomialIdeal to_monomial_ideal(const std::vector<Polynomial>& gens) {
  std::vector<Monomial> monos;
  monos.reserve(gens.size());
  for (const auto& g : gens) monos.push_back(g.leading_monomial());
  return MonomialIdeal(std::move(monos));
}

struct Engine {
  PipelineOptions opts;
  ParsedSpec spec;
  FiberSpec fs;
  OracleLimits limits;

  const VariableContext& ctx() const { return spec.ctx; }

  void reduce() {
    fs.ctx = spec.ctx;
    fs.split_I = split_ideal(spec.gens_I, VariableBlock::x_block(ctx()), ctx().field);
    fs.split_Iprime = split_ideal(spec.gens_Iprime, VariableBlock::y_block(ctx()), ctx().field);
    minimalize_monomial_split(fs.split_I);
    minimalize_monomial_split(fs.split_Iprime);
  }

  IntSeq resolve_betti(const SplitIdeal& s, const std::optional<std::vector<Integer>>& override_,
                       bool y_side) {
    if (override_) return trim_trailing_zeros(*override_);
    if (!all_monomial(s.J)) {
      std::string name = y_side ? "J'" : "J";
      std::string key = y_side ? "betti_J'" : "betti_J";
      throw Error(Errc::missing_betti, "Betti input required: " + name +
                                           " is not monomial; supply " + key +
                                           " in the spec file");
    }
    return betti_monomial(to_monomial_ideal(s.J), ctx().total(), ctx().field, limits);
  }

  void resolve_all_betti() {
    fs.betti_J = resolve_betti(fs.split_I, spec.betti_J, false);
    fs.betti_Jprime = resolve_betti(fs.split_Iprime, spec.betti_Jprime, true);
  }

  bool fully_monomial() const {
    return all_monomial(fs.split_I.J) && all_monomial(fs.split_Iprime.J);
  }

  IntSeq betti_I() const { return betti_convolution(fs.p(), *fs.betti_J); }
  IntSeq betti_Iprime() const { return betti_convolution(fs.q(), *fs.betti_Jprime); }

  IntSeq formula_betti() const {
    return betti_fiber(ctx().n, ctx().nprime, fs.p(), fs.q(), betti_I(), betti_Iprime());
  }

  IntSeq oracle_betti(const std::vector<Polynomial>& minimal_gens) const {
    if (!fully_monomial())
      throw Error(Errc::oracle_unsupported,
                  "oracle requires monomial data; J or J' is not monomial");
    return betti_monomial(to_monomial_ideal(minimal_gens), ctx().total(), ctx().field, limits);
  }
};

json json_int(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json json_seq(const IntSeq& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(json_int(v));
  return a;
}

json json_gens(const std::vector<Polynomial>& gens, const VariableContext& ctx) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.str(ctx));
  return a;
}

std::string gens_str(const std::vector<Polynomial>& gens, const VariableContext& ctx) {
  if (gens.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) s += (i ? "; " : "") + gens[i].str(ctx);
  return s;
}

std::string order_str(const std::vector<int>& vars, const VariableContext& ctx) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) s += (i ? " " : "") + ctx.var_name(vars[i]);
  return s;
}

void render(Report& r) {
  const VariableContext& ctx = r.spec.ctx;
  std::string t;
  t += "field: " + ctx.field.str() + "\n";
  t += "n: " + std::to_string(ctx.n) + "\n";
  t += "n': " + std::to_string(ctx.nprime) + "\n";
  t += "p: " + std::to_string(r.split_I.p) + "\n";
  t += "q: " + std::to_string(r.split_Iprime.p) + "\n";
  if (r.command == Command::reduce) {
    t += "x_order: " + order_str(r.split_I.variable_order, ctx) + "\n";
    t += "y_order: " + order_str(r.split_Iprime.variable_order, ctx) + "\n";
    t += "J: " + gens_str(r.split_I.J, ctx) + "\n";
    t += "J': " + gens_str(r.split_Iprime.J, ctx) + "\n";
  }
  if (r.betti_J && r.command != Command::reduce) {
    t += "betti_J: " + seq_str(*r.betti_J) + "\n";
    t += "betti_J': " + seq_str(*r.betti_Jprime) + "\n";
  }
  if (!r.minimal_gens.empty()) t += "minimal_generators: " + gens_str(r.minimal_gens, ctx) + "\n";
  if (r.betti_formula) t += "betti_formula: " + seq_str(*r.betti_formula) + "\n";
  if (r.betti_oracle) t += "betti_oracle: " + seq_str(*r.betti_oracle) + "\n";
  if (r.agreement) t += std::string("agreement: ") + (*r.agreement ? "true" : "false") + "\n";
  if (r.poincare) t += "poincare: " + poly_str(*r.poincare) + "\n";
  if (r.functional_equation)
    t += std::string("functional_equation: ") + (*r.functional_equation ? "verified" : "FAILED") +
         "\n";
  if (r.cone) t += "cone_ranks: " + seq_str(*r.cone) + "\n";
  if (r.cone_minimal)
    t += std::string("minimality_hypotheses: ") +
         (*r.cone_minimal ? "satisfied (cone ranks are the Betti numbers)" : "not satisfied") +
         "\n";
  if (r.command == Command::verify) {
    size_t passed = 0;
    for (const auto& c : r.checks) {
      t += "check " + c.name + ": " + (c.pass ? "pass" : "FAIL") +
           (c.detail.empty() || c.pass ? "" : " (" + c.detail + ")") + "\n";
      if (c.pass) ++passed;
    }
    t += "verify: " + std::string(passed == r.checks.size() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks)\n";
  }
  if (r.seed) t += "seed: " + std::to_string(*r.seed) + "\n";
  r.text = t;

  json j;
  j["command"] = command_name(r.command);
  j["field"] = ctx.field.str();
  j["n"] = ctx.n;
  j["nprime"] = ctx.nprime;
  j["p"] = r.split_I.p;
  j["q"] = r.split_Iprime.p;
  json spec_echo;
  spec_echo["xvars"] = ctx.n;
  spec_echo["yvars"] = ctx.nprime;
  spec_echo["field"] = ctx.field.str();
  spec_echo["I"] = json_gens(r.spec.gens_I, ctx);
  spec_echo["I'"] = json_gens(r.spec.gens_Iprime, ctx);
  if (r.spec.betti_J) spec_echo["betti_J"] = json_seq(*r.spec.betti_J);
  if (r.spec.betti_Jprime) spec_echo["betti_J'"] = json_seq(*r.spec.betti_Jprime);
  j["spec"] = spec_echo;
  json xo = json::array(), yo = json::array();
  for (int v : r.split_I.variable_order) xo.push_back(ctx.var_name(v));
  for (int v : r.split_Iprime.variable_order) yo.push_back(ctx.var_name(v));
  j["x_order"] = xo;
  j["y_order"] = yo;
  j["J"] = json_gens(r.split_I.J, ctx);
  j["J'"] = json_gens(r.split_Iprime.J, ctx);
  if (r.betti_J) j["betti_J"] = json_seq(*r.betti_J);
  if (r.betti_Jprime) j["betti_J'"] = json_seq(*r.betti_Jprime);
  if (!r.minimal_gens.empty()) j["minimal_generators"] = json_gens(r.minimal_gens, ctx);
  if (r.betti_formula) j["betti_formula"] = json_seq(*r.betti_formula);
  j["betti_oracle"] = r.betti_oracle ? json_seq(*r.betti_oracle) : json(nullptr);
  if (r.agreement) j["agreement"] = *r.agreement;
  if (r.poincare) j["poincare"] = json_seq(*r.poincare);
  if (r.functional_equation) j["functional_equation"] = *r.functional_equation;
  if (r.cone) j["cone_ranks"] = json_seq(*r.cone);
  if (r.cone_minimal) j["minimality_hypotheses"] = *r.cone_minimal;
  if (r.command == Command::verify) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      if (!c.detail.empty()) e["detail"] = c.detail;
      checks.push_back(e);
    }
    j["checks"] = checks;
  }
  if (r.command != Command::verify) j["checks"] = json::array();
  if (r.seed) j["seed"] = *r.seed;
  j["exit_code"] = r.exit_code;
  r.json = j.dump(2) + "\n";
}

void run_verify(Engine& eng, Report& r) {
  const VariableContext& ctx = eng.ctx();
  const FiberSpec& fs = eng.fs;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, detail});
  };

  IntSeq bI = eng.betti_I(), bIp = eng.betti_Iprime();
  IntSeq formula = *r.betti_formula;
  IntSeq oracle = *r.betti_oracle;

  add("formula_vs_oracle", formula == oracle,
      "formula " + seq_str(formula) + " vs oracle " + seq_str(oracle));

  Poly PI = poincare_split(fs.p(), poincare_from_betti(*fs.betti_J));
  Poly PIp = poincare_split(fs.q(), poincare_from_betti(*fs.betti_Jprime));
  Poly PF = poincare_fiber(ctx.n, ctx.nprime, fs.p(), fs.q(), PI, PIp);
  add("functional_equation",
      verify_functional_equation(ctx.n, ctx.nprime, fs.p(), fs.q(), PI, PIp, PF));
  add("poincare_matches_betti", PF == poincare_from_betti(formula));

  IntSeq tilde = betti_tilde(ctx.n - fs.p(), ctx.nprime - fs.q(), *fs.betti_J, *fs.betti_Jprime);
  add("decomposition_consistency",
      formula == convolve(tilde, koszul_ranks(fs.p() + fs.q())),
      "via betti_tilde " + seq_str(tilde));

  Integer beta1_expected = seq_at(bI, 1) + seq_at(bIp, 1) +
                           Integer(ctx.n - fs.p()) * Integer(ctx.nprime - fs.q());
  add("beta1_structural_count", seq_at(formula, 1) == beta1_expected,
      "beta_1 = " + seq_at(formula, 1).get_str() + ", expected " + beta1_expected.get_str());
  add("minimal_generator_count",
      Integer(static_cast<long>(r.minimal_gens.size())) == seq_at(formula, 1));

  Integer alt(0);
  for (size_t i = 0; i < formula.size(); ++i) alt += (i % 2 == 0 ? formula[i] : -formula[i]);
  add("alternating_sum_zero", alt == 0);

  if (all_monomial(eng.spec.gens_I) && all_monomial(eng.spec.gens_Iprime)) {
    MonomialIdeal full = to_monomial_ideal(defining_ideal(eng.spec.gens_I, eng.spec.gens_Iprime, ctx));
    MonomialIdeal minimal = to_monomial_ideal(r.minimal_gens);
    add("minimal_ideal_membership",
        full.contains_ideal(minimal) && minimal.contains_ideal(full));
  }

  add("regularity_split_x",
      koszul_regularity_check(fs.split_I.leading_vars(), to_monomial_ideal(fs.split_I.J),
                              ctx.total(), ctx.field, eng.limits));
  add("regularity_split_y",
      koszul_regularity_check(fs.split_Iprime.leading_vars(),
                              to_monomial_ideal(fs.split_Iprime.J), ctx.total(), ctx.field,
                              eng.limits));
  Decomposition dec = decompose(fs);
  add("regularity_tilde",
      koszul_regularity_check(dec.koszul_vars, to_monomial_ideal(dec.tilde_generators),
                              ctx.total(), ctx.field, eng.limits));

  IntSeq cone = cone_ranks(bI, bIp, koszul_ranks(ctx.n), koszul_ranks(ctx.nprime));
  bool dominates = cone.size() >= oracle.size();
  if (dominates)
    for (size_t i = 0; i < oracle.size(); ++i)
      if (cone[i] < oracle[i]) dominates = false;
  add("cone_dominates_betti", dominates, "cone " + seq_str(cone));

  for (const auto& c : r.checks)
    if (!c.pass) r.exit_code = 1;
}

}  // namespace

Report run_pipeline(Command cmd, const std::string& spec_text, const PipelineOptions& opts) {
  Engine eng;
  eng.opts = opts;
  eng.limits.max_generators = opts.max_gens;
  ParseOptions popts;
  popts.field_override = opts.field;
  popts.max_degree = opts.max_degree;
  eng.spec = parse_ideal_spec(spec_text, popts);
  eng.reduce();

  Report r;
  r.command = cmd;
  r.spec = eng.spec;
  r.split_I = eng.fs.split_I;
  r.split_Iprime = eng.fs.split_Iprime;
  r.seed = opts.seed;

  switch (cmd) {
    case Command::reduce:
      break;
    case Command::betti: {
      eng.resolve_all_betti();
      r.betti_J = eng.fs.betti_J;
      r.betti_Jprime = eng.fs.betti_Jprime;
      r.minimal_gens = minimal_defining_ideal(eng.fs);
      r.betti_formula = eng.formula_betti();
      if (opts.with_oracle) {
        r.betti_oracle = eng.oracle_betti(r.minimal_gens);
        r.agreement = (*r.betti_formula == *r.betti_oracle);
        if (!*r.agreement) r.exit_code = 1;
      }
      break;
    }
    case Command::poincare: {
      eng.resolve_all_betti();
      r.betti_J = eng.fs.betti_J;
      r.betti_Jprime = eng.fs.betti_Jprime;
      const VariableContext& ctx = eng.ctx();
      Poly PI = poincare_split(eng.fs.p(), poincare_from_betti(*eng.fs.betti_J));
      Poly PIp = poincare_split(eng.fs.q(), poincare_from_betti(*eng.fs.betti_Jprime));
      Poly PF = poincare_fiber(ctx.n, ctx.nprime, eng.fs.p(), eng.fs.q(), PI, PIp);
      if (PF != poincare_from_betti(eng.formula_betti()))
        throw Error(Errc::internal,
                    "Poincare series disagrees with the Betti formula for the same spec");
      r.poincare = PF;
      r.functional_equation =
          verify_functional_equation(ctx.n, ctx.nprime, eng.fs.p(), eng.fs.q(), PI, PIp, PF);
      if (!*r.functional_equation) r.exit_code = 1;
      break;
    }
    case Command::ranks: {
      eng.resolve_all_betti();
      r.betti_J = eng.fs.betti_J;
      r.betti_Jprime = eng.fs.betti_Jprime;
      r.cone = cone_ranks(eng.betti_I(), eng.betti_Iprime(), koszul_ranks(eng.ctx().n),
                          koszul_ranks(eng.ctx().nprime));
      r.cone_minimal = (eng.fs.p() == 0 && eng.fs.q() == 0);
      break;
    }
    case Command::verify: {
      eng.resolve_all_betti();
      r.betti_J = eng.fs.betti_J;
      r.betti_Jprime = eng.fs.betti_Jprime;
      r.minimal_gens = minimal_defining_ideal(eng.fs);
      r.betti_formula = eng.formula_betti();
      r.betti_oracle = eng.oracle_betti(r.minimal_gens);
      r.agreement = (*r.betti_formula == *r.betti_oracle);
      run_verify(eng, r);
      break;
    }
  }
  render(r);
  return r;
}

}  // namespace fp
