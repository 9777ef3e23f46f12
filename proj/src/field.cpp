#include "field.hpp"

namespace fp {

namespace {

bool is_small_prime(unsigned long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::gf(unsigned long p) {
  if (p > 2147483647UL || !is_small_prime(p))
    throw Error(Errc::parse, "field characteristic must be a prime < 2^31, got " + std::to_string(p));
  Field f;
  f.char_ = p;
  return f;
}

Scalar Field::canon(const Scalar& v) const {
  if (char_ == 0) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  Integer p(static_cast<unsigned long>(char_));
  Integer den = v.get_den();  // positive by mpq convention
  Integer num = v.get_num();
  Integer dmod = den % p;
  if (sgn(dmod) == 0)
    throw Error(Errc::parse, "denominator " + den.get_str() + " is not invertible in " + str());
  Integer dinv;
  mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
  Integer r = (num % p) * dinv % p;
  if (sgn(r) < 0) r += p;
  return Scalar(r);
}

Scalar Field::inverse(const Scalar& a) const {
  if (is_zero(a)) throw Error(Errc::internal, "division by zero");
  if (char_ == 0) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  Integer p(static_cast<unsigned long>(char_));
  Integer num = a.get_num() % p;
  if (sgn(num) < 0) num += p;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(Errc::internal, "division by zero");
  return Scalar(inv);
}

std::string Field::str() const {
  return char_ == 0 ? "Q" : "GF " + std::to_string(char_);
}

std::string scalar_str(const Scalar& v) {
  return v.get_str();
}

}  // namespace fp
