#include "reduction.hpp"

#include <algorithm>

namespace fp {

Matrix linear_part(const std::vector<Polynomial>& gens, VariableBlock block, const Field& k) {
  Matrix m(gens.size(), block.count);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].has_constant_term())
      throw Error(Errc::parse, "generator has a nonzero constant term (unit ideal)");
    for (int j = 0; j < block.count; ++j)
      m.at(i, j) = k.canon(gens[i].linear_coeff(block.offset + j));
  }
  return m;
}

int compute_p(const std::vector<Polynomial>& gens, VariableBlock block, const Field& k) {
  return static_cast<int>(linear_part(gens, block, k).rank(k));
}

namespace {

struct Elimination {
  std::vector<Polynomial> rows;
  std::vector<int> pivot_cols;          // block-relative, ascending
  std::vector<size_t> pivot_rows;       // row index for each pivot column
};

// Gauss-Jordan on the degree-one coefficients, applying every row operation to
// the full polynomials so the quadratic tails follow along.
Elimination eliminate(std::vector<Polynomial> gens, VariableBlock block, const Field& k) {
  linear_part(gens, block, k);  // constant-term validation
  Elimination e;
  e.rows = std::move(gens);
  std::vector<char> is_pivot_row(e.rows.size(), 0);
  for (int col = 0; col < block.count; ++col) {
    int var = block.offset + col;
    size_t pivot = e.rows.size();
    for (size_t i = 0; i < e.rows.size(); ++i) {
      if (!is_pivot_row[i] && !k.is_zero(k.canon(e.rows[i].linear_coeff(var)))) {
        pivot = i;
        break;
      }
    }
    if (pivot == e.rows.size()) continue;
    Scalar lead = k.canon(e.rows[pivot].linear_coeff(var));
    e.rows[pivot] = e.rows[pivot].scaled(k.inverse(lead), k);
    for (size_t i = 0; i < e.rows.size(); ++i) {
      if (i == pivot) continue;
      Scalar c = k.canon(e.rows[i].linear_coeff(var));
      if (!k.is_zero(c)) e.rows[i] = e.rows[i].axpy(k.neg(c), e.rows[pivot], k);
    }
    is_pivot_row[pivot] = 1;
    e.pivot_cols.push_back(col);
    e.pivot_rows.push_back(pivot);
  }
  return e;
}

}  // namespace

std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& gens,
                                             VariableBlock block, const Field& k) {
  Elimination e = eliminate(gens, block, k);
  std::vector<Polynomial> out;
  std::vector<char> taken(e.rows.size(), 0);
  for (size_t r : e.pivot_rows) {
    out.push_back(e.rows[r]);
    taken[r] = 1;
  }
  for (size_t i = 0; i < e.rows.size(); ++i)
    if (!taken[i] && !e.rows[i].is_zero()) out.push_back(e.rows[i]);
  return out;
}

SplitIdeal split_ideal(const std::vector<Polynomial>& gens, VariableBlock block,
                       const Field& k) {
  Elimination e = eliminate(gens, block, k);
  SplitIdeal s;
  s.block = block;
  s.p = static_cast<int>(e.pivot_cols.size());

  std::vector<char> pivot_var(block.offset + block.count, 0);
  for (int col : e.pivot_cols) {
    s.variable_order.push_back(block.offset + col);
    pivot_var[block.offset + col] = 1;
  }
  for (int col = 0; col < block.count; ++col)
    if (!pivot_var[block.offset + col]) s.variable_order.push_back(block.offset + col);

  std::vector<char> taken(e.rows.size(), 0);
  for (size_t r : e.pivot_rows) taken[r] = 1;
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (taken[i] || e.rows[i].is_zero()) continue;
    std::vector<char> kill(e.rows[i].terms()[0].mono.nvars(), 0);
    for (int v : s.leading_vars()) kill[v] = 1;
    Polynomial g = e.rows[i].substitute_zero(kill);
    if (!g.is_zero()) s.J.push_back(std::move(g));
  }
  return s;
}

void minimalize_monomial_split(SplitIdeal& s) {
  std::vector<Monomial> monos;
  for (const auto& g : s.J) {
    if (!g.is_monomial()) return;
    monos.push_back(g.leading_monomial());
  }
  std::vector<Monomial> gens = MonomialIdeal(std::move(monos)).generators();
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::lex_cmp(a, b) > 0; });
  s.J.clear();
  for (auto& m : gens) s.J.push_back(Polynomial::from_monomial(m));
}

}  // namespace fp
