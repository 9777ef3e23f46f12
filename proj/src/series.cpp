#include "series.hpp"

#include "error.hpp"
#include "formulas.hpp"

namespace fp {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = seq_at(a, i) + seq_at(b, i);
  return trim_trailing_zeros(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = seq_at(a, i) - seq_at(b, i);
  return trim_trailing_zeros(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {Integer(0)};
  Poly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim_trailing_zeros(std::move(r));
}

Poly one_plus_t_pow(int e) {
  Poly r(e + 1);
  for (int i = 0; i <= e; ++i) r[i] = binom(e, i);
  return r;
}

Poly poly_div_t(const Poly& a) {
  if (!a.empty() && a[0] != 0)
    throw Error(Errc::inconsistent, "polynomial not divisible by t");
  if (a.size() <= 1) return {Integer(0)};
  return Poly(a.begin() + 1, a.end());
}

Integer poly_eval(const Poly& a, long t) {
  Integer r(0), tt(t);
  for (size_t i = a.size(); i-- > 0;) r = r * tt + a[i];
  return r;
}

std::string poly_str(const Poly& a) {
  if (a.empty() || (a.size() == 1 && a[0] == 0)) return "0";
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Integer c = a[i];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Integer abs_c = abs(c);
    if (abs_c != 1 || i == 0) s += abs_c.get_str();
    if (i >= 1) {
      if (abs_c != 1) s += "*";
      s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly poincare_from_betti(const IntSeq& betti) {
  return trim_trailing_zeros(betti);
}

Poly poincare_split(int p, const Poly& PJ) {
  if (p < 0) throw Error(Errc::bad_argument, "p must be non-negative");
  return poly_mul(one_plus_t_pow(p), PJ);
}

Poly poincare_fiber(int n, int nprime, int p, int q, const Poly& PI, const Poly& PIprime) {
  if (n < 1 || nprime < 1)
    throw Error(Errc::bad_argument, "the functional equation requires n, n' >= 1");
  if (p < 0 || p > n || q < 0 || q > nprime)
    throw Error(Errc::bad_argument, "need 0 <= p <= n and 0 <= q <= n'");
  if (static_cast<long>(PI.size()) - 1 > n + nprime ||
      static_cast<long>(PIprime.size()) - 1 > n + nprime)
    throw Error(Errc::inconsistent, "Poincare input exceeds degree n + n'");

  Poly correction = poly_mul(poly_sub(one_plus_t_pow(n), one_plus_t_pow(p)),
                             poly_sub(one_plus_t_pow(nprime), one_plus_t_pow(q)));
  Poly pf = poly_add(poly_mul(one_plus_t_pow(nprime), PI), poly_mul(one_plus_t_pow(n), PIprime));
  pf = poly_sub(pf, one_plus_t_pow(n + nprime));
  pf = poly_add(pf, poly_mul(one_plus_t_pow(1), poly_div_t(correction)));

  for (const auto& c : pf)
    if (c < 0)
      throw Error(Errc::inconsistent, "inconsistent Poincare data: negative coefficient in " +
                                          poly_str(pf));
  if (static_cast<long>(pf.size()) - 1 > n + nprime)
    throw Error(Errc::inconsistent, "inconsistent Poincare data: degree exceeds n + n'");
  return pf;
}

bool verify_functional_equation(int n, int nprime, int p, int q, const Poly& PI,
                                const Poly& PIprime, const Poly& PF) {
  Poly lhs = poly_sub(PF, poly_mul(one_plus_t_pow(nprime), PI));
  lhs = poly_sub(lhs, poly_mul(one_plus_t_pow(n), PIprime));
  lhs = poly_add(lhs, one_plus_t_pow(n + nprime));
  lhs = poly_mul(Poly{Integer(0), Integer(1)}, lhs);  // multiply by t
  Poly rhs = poly_mul(poly_sub(one_plus_t_pow(n), one_plus_t_pow(p)),
                      poly_sub(one_plus_t_pow(nprime), one_plus_t_pow(q)));
  rhs = poly_mul(one_plus_t_pow(1), rhs);
  return lhs == rhs;
}

}  // namespace fp
