#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "danielewski/error.hpp"
#include "danielewski/rational.hpp"
#include "danielewski/upoly.hpp"

namespace danielewski {

using QPoly = UniPoly<Rational>;

struct QFactor {
  QPoly factor;  // monic
  int multiplicity;
};

namespace detail {

// ---- integer polynomials -------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // low to high

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Clears denominators and content; the result has positive leading coefficient.
inline ZPoly primitive_integer_part(const QPoly& f) {
  mpz_class lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_class d = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly out;
  out.reserve(f.size());
  for (const auto& c : f.coefficients()) out.push_back(c.numerator() * (lcm / c.denominator()));
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return {};
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

inline QPoly to_qpoly(const ZPoly& f, char var) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f) v.emplace_back(c);
  return QPoly(std::move(v), var);
}

// ---- arithmetic modulo a small prime -------------------------------------

using PPoly = std::vector<std::int64_t>;  // low to high, entries in [0, p)

inline std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  ensure(r == 1, "inverse modulo p of a non-unit");
  return mod_p(t, p);
}

inline void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

inline PPoly reduce_mod_p(const ZPoly& f, std::int64_t p) {
  PPoly out(f.size());
  mpz_class pp = p;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    out[i] = static_cast<std::int64_t>(r.get_si());
  }
  ptrim(out);
  return out;
}

inline PPoly padd(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  ptrim(r);
  return r;
}

inline PPoly psub(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod_p(r[i] - b[i], p);
  ptrim(r);
  return r;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

inline std::pair<PPoly, PPoly> pdivmod(PPoly a, const PPoly& b, std::int64_t p) {
  ensure(!b.empty(), "division by zero polynomial mod p");
  const int db = pdeg(b);
  if (pdeg(a) < db) return {{}, a};
  const std::int64_t inv = inv_mod(b.back(), p);
  PPoly q(a.size() - b.size() + 1, 0);
  for (int i = pdeg(a); i >= db; --i) {
    std::int64_t c = a[static_cast<std::size_t>(i)] * inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& t = a[static_cast<std::size_t>(i - db + j)];
      t = mod_p(t - c * b[static_cast<std::size_t>(j)], p);
    }
  }
  a.resize(static_cast<std::size_t>(db));
  ptrim(a);
  ptrim(q);
  return {q, a};
}

inline PPoly pmonic(PPoly f, std::int64_t p) {
  if (f.empty()) return f;
  std::int64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

inline PPoly pgcd(PPoly a, PPoly b, std::int64_t p) {
  while (!b.empty()) {
    PPoly r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

// s*a + t*b = 1 (a, b coprime mod p).
inline std::pair<PPoly, PPoly> pbezout(const PPoly& a, const PPoly& b, std::int64_t p) {
  PPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = pdivmod(r0, r1, p);
    PPoly s2 = psub(s0, pmul(q, s1, p), p);
    PPoly t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  ensure(r0.size() == 1, "Bezout cofactors requested for non-coprime polynomials");
  std::int64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

inline PPoly pderiv(const PPoly& f, std::int64_t p) {
  if (f.size() <= 1) return {};
  PPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<std::int64_t>(i) % p * f[i] % p;
  ptrim(d);
  return d;
}

// base^e mod m
inline PPoly ppowmod(PPoly base, const mpz_class& e, const PPoly& m, std::int64_t p) {
  PPoly result{1};
  base = pdivmod(base, m, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = pdivmod(pmul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = pdivmod(pmul(result, base, p), m, p).second;
  }
  return result;
}

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<PPoly, int>> distinct_degree(PPoly f, std::int64_t p) {
  std::vector<std::pair<PPoly, int>> out;
  const PPoly x{0, 1};
  PPoly h = pdivmod(x, f, p).second;
  int d = 1;
  while (pdeg(f) >= 2 * d) {
    h = ppowmod(h, mpz_class(p), f, p);
    PPoly g = pgcd(f, psub(h, x, p), p);
    if (pdeg(g) > 0) {
      out.emplace_back(g, d);
      f = pdivmod(f, g, p).first;
      h = pdivmod(h, f, p).second;
    }
    ++d;
  }
  if (pdeg(f) > 0) out.emplace_back(f, pdeg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const PPoly& g, int d, std::int64_t p, std::mt19937_64& rng,
                         std::vector<PPoly>& out) {
  if (pdeg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  const mpz_class e = (pd - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    PPoly a(static_cast<std::size_t>(pdeg(g)));
    for (auto& c : a) c = dist(rng);
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PPoly b = psub(ppowmod(a, e, g, p), PPoly{1}, p);
    PPoly h = pgcd(g, b, p);
    if (pdeg(h) > 0 && pdeg(h) < pdeg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(pdivmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<PPoly> factor_mod_p(const PPoly& f, std::int64_t p) {
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(p));
  std::vector<PPoly> out;
  for (const auto& [g, d] : distinct_degree(pmonic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Hensel lifting --------------------------------------------------------

inline ZPoly zmod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly from_ppoly(const PPoly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (auto c : f) r.emplace_back(static_cast<long>(c));
  return r;
}

// Lifts F = g*h (mod p) to F = G*H (mod p^k) with G monic.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const PPoly& g, const PPoly& h,
                                           std::int64_t p, int k) {
  auto [s, t] = pbezout(g, h, p);
  ZPoly G = from_ppoly(g), H = from_ppoly(h);
  mpz_class pj = p;
  for (int j = 1; j < k; ++j) {
    ZPoly diff = zsub(F, zmul(G, H));
    for (auto& c : diff) {
      ensure(mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()) != 0, "Hensel step lost exactness");
      c /= pj;
    }
    PPoly e = reduce_mod_p(diff, p);
    auto [q, dg] = pdivmod(pmul(t, e, p), g, p);
    PPoly dh = padd(pmul(s, e, p), pmul(q, h, p), p);
    ZPoly DG = from_ppoly(dg), DH = from_ppoly(dh);
    if (G.size() < DG.size()) G.resize(DG.size(), 0);
    if (H.size() < DH.size()) H.resize(DH.size(), 0);
    for (std::size_t i = 0; i < DG.size(); ++i) G[i] += pj * DG[i];
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += pj * DH[i];
    pj *= p;
    G = zmod(G, pj);
    H = zmod(H, pj);
  }
  return {G, H};
}

// Lifts f = lc * prod(factors) (mod p) to monic factors mod p^k.
inline std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<PPoly>& factors,
                                      std::int64_t p, int k) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  std::vector<ZPoly> lifted;
  ZPoly F = zmod(f, pk);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    PPoly rest = reduce_mod_p(ZPoly{F.back()}, p);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = pmul(rest, factors[j], p);
    auto [G, H] = hensel_pair(F, factors[i], rest, p, k);
    lifted.push_back(std::move(G));
    F = std::move(H);
  }
  // F = lc * last factor (mod p^k); make it monic.
  mpz_class lc = F.back(), inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  for (auto& c : F) c *= inv;
  lifted.push_back(zmod(F, pk));
  return lifted;
}

inline ZPoly symmetric_mod(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

inline ZPoly primitive(ZPoly f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Exact division over Z; returns false when g does not divide f.
inline bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  const int df = static_cast<int>(f.size()) - 1;
  const int dg = static_cast<int>(g.size()) - 1;
  if (dg > df) return false;
  if (f[0] != 0 && g[0] != 0 && !mpz_divisible_p(f[0].get_mpz_t(), g[0].get_mpz_t())) return false;
  ZPoly rem = f;
  ZPoly q(static_cast<std::size_t>(df - dg + 1), 0);
  const mpz_class& lg = g.back();
  for (int i = df; i >= dg; --i) {
    auto& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lg.get_mpz_t())) return false;
    mpz_class c = top / lg;
    q[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

inline const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes = [] {
    std::vector<std::int64_t> ps;
    for (std::int64_t n = 3; ps.size() < 200; n += 2) {
      bool prime = true;
      for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) { prime = false; break; }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Zassenhaus factorization of a primitive squarefree integer polynomial
// with positive leading coefficient.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Pick the prime giving the fewest modular factors among the first few good ones.
  ZPoly df(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);
  std::int64_t best_p = 0;
  std::vector<PPoly> best;
  int good = 0;
  for (std::int64_t p : small_primes()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    PPoly fp = reduce_mod_p(f, p);
    if (pdeg(pgcd(fp, reduce_mod_p(df, p), p)) != 0) continue;
    auto facs = factor_mod_p(fp, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  ensure(best_p != 0, "no suitable prime for modular factorization");
  if (best.size() == 1) return {f};

  // Factor coefficient bound: |lc| * 2^n * ||f||_1.
  mpz_class norm1 = 0;
  for (const auto& c : f) norm1 += abs(c);
  mpz_class bound = abs(f.back()) * norm1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  int k = 1;
  mpz_class pk = best_p;
  while (pk <= bound) {
    pk *= best_p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, k);
  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<int> alive(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);

  int s = 1;
  while (2 * s <= static_cast<int>(alive.size())) {
    std::vector<std::vector<int>> combos;
    std::vector<int> tmp;
    subsets(static_cast<int>(alive.size()), s, 0, tmp, combos);
    bool found = false;
    for (const auto& combo : combos) {
      ZPoly cand{cur.back()};
      for (int idx : combo) cand = zmod(zmul(cand, lifted[static_cast<std::size_t>(alive[static_cast<std::size_t>(idx)])]), pk);
      cand = primitive(symmetric_mod(cand, pk));
      ZPoly quo;
      if (!zdivides(cur, cand, quo)) continue;
      result.push_back(cand);
      cur = quo;
      std::vector<int> next;
      for (std::size_t i = 0; i < alive.size(); ++i) {
        if (std::find(combo.begin(), combo.end(), static_cast<int>(i)) == combo.end()) next.push_back(alive[i]);
      }
      alive = std::move(next);
      found = true;
      break;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) result.push_back(primitive(cur));
  return result;
}

inline bool canonical_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coefficients()[i] != b.coefficients()[i]) return a.coefficients()[i] < b.coefficients()[i];
  }
  return false;
}

}  // namespace detail

// Square-free decomposition over Q; factors are monic, pairwise coprime.
inline std::vector<QFactor> factor_squarefree(const QPoly& f) {
  std::vector<QFactor> out;
  for (auto& sf : squarefree_decomposition(f)) out.push_back({std::move(sf.factor), sf.multiplicity});
  return out;
}

// Complete factorization over Q into monic irreducibles, sorted by degree and
// then coefficients (constant term first).
inline std::vector<QFactor> factor_irreducible(const QPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factorization of the zero polynomial");
  if (f.is_constant()) fail(ErrorCode::ConstantInput, "factorization of a constant polynomial");
  std::vector<QFactor> out;
  for (const auto& sf : factor_squarefree(f)) {
    for (const auto& z : detail::zassenhaus(detail::primitive_integer_part(sf.factor))) {
      out.push_back({detail::to_qpoly(z, f.var()).monic(), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return detail::canonical_less(a.factor, b.factor);
  });
  if constexpr (kSelfCheck) {
    QPoly prod = QPoly::constant(Rational(1), f.var());
    for (const auto& q : out) prod *= q.factor.pow(q.multiplicity);
    ensure(prod == f.monic(), "factorization does not multiply back to its input");
  }
  return out;
}

inline bool is_irreducible(const QPoly& f) {
  if (f.is_constant()) return false;
  auto facs = factor_irreducible(f);
  return facs.size() == 1 && facs[0].multiplicity == 1;
}

}  // namespace danielewski
