#include "resolutions.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace fp {

IntSeq koszul_ranks(int r) {
  IntSeq s(r + 1);
  for (int i = 0; i <= r; ++i) mpz_bin_uiui(s[i].get_mpz_t(), r, i);
  return s;
}

IntSeq star_ranks(const IntSeq& X, const IntSeq& Y) {
  long top = static_cast<long>(X.size()) + static_cast<long>(Y.size()) - 3;
  IntSeq s(std::max<long>(top + 1, 1), Integer(0));
  s[0] = seq_at(X, 0) * seq_at(Y, 0);
  for (long d = 1; d <= top; ++d)
    for (long i = 1; i <= d; ++i) s[d] += seq_at(X, i) * seq_at(Y, d + 1 - i);
  return trim_trailing_zeros(std::move(s));
}

IntSeq cone_ranks(const IntSeq& S, const IntSeq& T, const IntSeq& X, const IntSeq& Y) {
  IntSeq s = star_ranks(X, Y);
  long top = static_cast<long>(std::max(S.size() + Y.size(), X.size() + T.size()));
  if (static_cast<long>(s.size()) < top) s.resize(top, Integer(0));
  for (long d = 1; d < static_cast<long>(s.size()); ++d) {
    for (long i = 1; i <= d; ++i) s[d] += seq_at(S, i) * seq_at(Y, d - i);  // Sigma^-1(S>=1 (x) Y)
    for (long j = 1; j <= d; ++j) s[d] += seq_at(X, d - j) * seq_at(T, j);  // Sigma^-1(X (x) T>=1)
  }
  return trim_trailing_zeros(std::move(s));
}

std::vector<size_t> MultidegreeComplex::homology_dims(const Field& k) const {
  std::vector<size_t> h(basis.size(), 0);
  std::vector<size_t> ranks(basis.size() + 1, 0);
  for (size_t i = 1; i < basis.size(); ++i) ranks[i] = boundary[i].rank(k);
  for (size_t i = 0; i < basis.size(); ++i) h[i] = basis[i].size() - ranks[i] - ranks[i + 1];
  return h;
}

bool MultidegreeComplex::boundaries_compose_to_zero(const Field& k) const {
  for (size_t i = 2; i < boundary.size(); ++i)
    if (!boundary[i - 1].multiply(boundary[i], k).is_zero(k)) return false;
  return true;
}

MultidegreeComplex build_multidegree_complex(const std::vector<int>& koszul_vars,
                                             const MonomialIdeal& ideal, const Monomial& b,
                                             const Field& k) {
  const int r = static_cast<int>(koszul_vars.size());
  MultidegreeComplex cx;
  cx.multidegree = b;
  cx.koszul_vars = koszul_vars;
  cx.basis.assign(r + 1, {});

  // sigma must divide b; only variables actually present in b can appear
  uint32_t usable = 0;
  for (int j = 0; j < r; ++j)
    if (b.exp(koszul_vars[j]) >= 1) usable |= 1u << j;

  auto complement_outside = [&](uint32_t mask) {
    Monomial u = b;
    for (int j = 0; j < r; ++j)
      if (mask & (1u << j)) u.set_exp(koszul_vars[j], u.exp(koszul_vars[j]) - 1);
    return !ideal.contains(u);
  };

  for (uint32_t mask = usable;; mask = (mask - 1) & usable) {
    if (complement_outside(mask)) cx.basis[std::popcount(mask)].push_back(mask);
    if (mask == 0) break;
  }
  for (auto& level : cx.basis) std::sort(level.begin(), level.end());

  cx.boundary.resize(r + 1);
  Scalar plus = k.from_long(1), minus = k.from_long(-1);
  for (int i = 1; i <= r; ++i) {
    Matrix d(cx.basis[i - 1].size(), cx.basis[i].size());
    for (size_t col = 0; col < cx.basis[i].size(); ++col) {
      uint32_t sigma = cx.basis[i][col];
      int sign_pos = 0;
      for (int j = 0; j < r; ++j) {
        if (!(sigma & (1u << j))) continue;
        uint32_t tau = sigma & ~(1u << j);
        auto& level = cx.basis[i - 1];
        auto it = std::lower_bound(level.begin(), level.end(), tau);
        if (it != level.end() && *it == tau) {
          size_t row = static_cast<size_t>(it - level.begin());
          d.at(row, col) = (sign_pos % 2 == 0) ? plus : minus;
        }
        ++sign_pos;
      }
    }
    cx.boundary[i] = std::move(d);
  }
  return cx;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, int nvars,
                                  const OracleLimits& limits) {
  if (ideal.size() > limits.max_generators)
    throw Error(Errc::oracle_unsupported,
                "oracle limit: " + std::to_string(ideal.size()) + " generators exceeds cap " +
                    std::to_string(limits.max_generators) + " (raise with --max-gens)");
  std::set<Monomial> lcms;
  lcms.insert(Monomial::one(nvars));
  for (const auto& g : ideal.generators()) {
    std::set<Monomial> next = lcms;
    for (const auto& b : lcms) next.insert(b.lcm(g));
    lcms.swap(next);
    if (lcms.size() > limits.max_multidegrees)
      throw Error(Errc::oracle_unsupported, "oracle limit: multidegree lattice too large");
  }
  return {lcms.begin(), lcms.end()};
}

IntSeq betti_monomial(const MonomialIdeal& ideal, int nvars, const Field& k,
                      const OracleLimits& limits) {
  for (const auto& g : ideal.generators())
    if (g.is_one()) throw Error(Errc::internal, "unit monomial ideal has no Betti numbers");
  if (nvars > 30) throw Error(Errc::oracle_unsupported, "oracle limit: more than 30 variables");

  std::vector<int> all_vars(nvars);
  for (int v = 0; v < nvars; ++v) all_vars[v] = v;

  IntSeq betti(nvars + 1, Integer(0));
  for (const auto& b : lcm_lattice(ideal, nvars, limits)) {
    MultidegreeComplex cx = build_multidegree_complex(all_vars, ideal, b, k);
    std::vector<size_t> h = cx.homology_dims(k);
    for (size_t i = 0; i < h.size(); ++i) betti[i] += static_cast<long>(h[i]);
  }
  return trim_trailing_zeros(std::move(betti));
}

bool koszul_regularity_check(const std::vector<int>& seq_vars, const MonomialIdeal& ideal,
                             int nvars, const Field& k, const OracleLimits& limits) {
  if (seq_vars.empty()) return true;
  if (nvars > 30) throw Error(Errc::oracle_unsupported, "oracle limit: more than 30 variables");
  if (ideal.size() > limits.max_generators)
    throw Error(Errc::oracle_unsupported,
                "oracle limit: " + std::to_string(ideal.size()) + " generators exceeds cap " +
                    std::to_string(limits.max_generators) + " (raise with --max-gens)");

  // Exponent box carrying all homology: beyond max generator exponent + 1 in
  // any coordinate, dividing out that variable is an isomorphism of slices.
  std::vector<uint32_t> bound(nvars, 0);
  for (const auto& g : ideal.generators())
    for (int v = 0; v < nvars; ++v) bound[v] = std::max(bound[v], g.exp(v));
  std::vector<char> in_seq(nvars, 0);
  for (int v : seq_vars) in_seq[v] = 1;
  Integer box_size(1);
  for (int v = 0; v < nvars; ++v) {
    if (bound[v] > 0 || in_seq[v])
      bound[v] += 1;
    box_size *= static_cast<unsigned long>(bound[v] + 1);
    if (box_size > static_cast<long>(limits.max_multidegrees))
      throw Error(Errc::oracle_unsupported, "oracle limit: regularity box too large");
  }

  Monomial b(nvars);
  while (true) {
    MultidegreeComplex cx = build_multidegree_complex(seq_vars, ideal, b, k);
    std::vector<size_t> h = cx.homology_dims(k);
    for (size_t i = 1; i < h.size(); ++i)
      if (h[i] != 0) return false;
    int v = 0;
    while (v < nvars && b.exp(v) == bound[v]) {
      b.set_exp(v, 0);
      ++v;
    }
    if (v == nvars) break;
    b.set_exp(v, b.exp(v) + 1);
  }
  return true;
}

}  // namespace fp
