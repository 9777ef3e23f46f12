#include "polynomial.hpp"

#include <algorithm>

namespace fp {

std::string Monomial::str(const VariableContext& ctx) const {
  if (is_one()) return "1";
  std::string s;
  for (int v = 0; v < nvars(); ++v) {
    if (e_[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.var_name(v);
    if (e_[v] > 1) s += "^" + std::to_string(e_[v]);
  }
  return s;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Field& k) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::lex_cmp(a.mono, b.mono) > 0;
  });
  Polynomial g;
  for (auto& t : terms) {
    Scalar c = k.canon(t.coeff);
    if (!g.terms_.empty() && g.terms_.back().mono == t.mono) {
      g.terms_.back().coeff = k.add(g.terms_.back().coeff, c);
    } else {
      g.terms_.push_back({c, t.mono});
    }
  }
  std::erase_if(g.terms_, [&](const Term& t) { return k.is_zero(t.coeff); });
  return g;
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Scalar(0);
}

Scalar Polynomial::linear_coeff(int v) const {
  for (const auto& t : terms_)
    if (t.mono.degree() == 1 && t.mono.involves(v)) return t.coeff;
  return Scalar(0);
}

Scalar Polynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return Scalar(0);
}

bool Polynomial::has_constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return true;
  return false;
}

long Polynomial::max_term_degree() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

long Polynomial::min_term_degree() const {
  if (terms_.empty()) return 0;
  long d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::involves(int v) const {
  for (const auto& t : terms_)
    if (t.mono.involves(v)) return true;
  return false;
}

Polynomial Polynomial::scaled(const Scalar& c, const Field& k) const {
  if (k.is_zero(c)) return Polynomial();
  Polynomial g;
  g.terms_.reserve(terms_.size());
  for (const auto& t : terms_) g.terms_.push_back({k.mul(t.coeff, c), t.mono});
  return g;
}

Polynomial Polynomial::add(const Polynomial& g, const Field& k) const {
  return axpy(Scalar(1), g, k);
}

Polynomial Polynomial::axpy(const Scalar& c, const Polynomial& g, const Field& k) const {
  Polynomial r;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == g.terms_.size())
      cmp = 1;
    else
      cmp = Monomial::lex_cmp(terms_[i].mono, g.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      Scalar v = k.mul(c, g.terms_[j].coeff);
      if (!k.is_zero(v)) r.terms_.push_back({v, g.terms_[j].mono});
      ++j;
    } else {
      Scalar v = k.add(terms_[i].coeff, k.mul(c, g.terms_[j].coeff));
      if (!k.is_zero(v)) r.terms_.push_back({v, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::substitute_zero(const std::vector<char>& kill) const {
  Polynomial r;
  for (const auto& t : terms_) {
    bool hit = false;
    for (int v = 0; v < t.mono.nvars() && !hit; ++v)
      if (kill[v] && t.mono.involves(v)) hit = true;
    if (!hit) r.terms_.push_back(t);
  }
  return r;
}

std::string Polynomial::str(const VariableContext& ctx) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (s.empty()) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    bool unit_coeff = (c == 1) && !t.mono.is_one();
    if (!unit_coeff) s += scalar_str(c);
    if (!t.mono.is_one()) {
      if (!unit_coeff) s += "*";
      s += t.mono.str(ctx);
    }
  }
  return s;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono && terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& o) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(std::move(all));
}

}  // namespace fp
