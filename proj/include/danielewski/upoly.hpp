#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "danielewski/degree.hpp"
#include "danielewski/error.hpp"

namespace danielewski {

// Dense univariate polynomial over a field K (coefficients low to high).
// The highest stored coefficient is nonzero; the zero polynomial is empty.
template <class K>
class UniPoly {
 public:
  using Coefficient = K;

  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  UniPoly(std::vector<K> coeffs, char var = 'z') : coeffs_(std::move(coeffs)), var_(var) {
    trim();
  }

  static UniPoly constant(const K& c, char var = 'z') { return UniPoly(std::vector<K>{c}, var); }

  static UniPoly monomial(const K& c, int degree, char var = 'z') {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v), var);
  }

  // The variable itself.
  static UniPoly identity(char var = 'z') { return monomial(K(1), 1, var); }

  char var() const { return var_; }
  UniPoly with_var(char var) const {
    UniPoly r = *this;
    r.var_ = var;
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(static_cast<int>(coeffs_.size()) - 1);
  }

  // Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<K>& coefficients() const { return coeffs_; }

  const K& coeff(int i) const {
    static const K zero{};
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const K& leading() const {
    ensure(!coeffs_.empty(), "leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / leading();
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = c * inv;
    return r;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(out), a.var_);
  }

  friend UniPoly operator*(const K& s, const UniPoly& a) {
    if (s.is_zero()) return UniPoly(a.var_);
    UniPoly r = a;
    for (auto& c : r.coeffs_) c = s * c;
    r.trim();
    return r;
  }
  friend UniPoly operator*(const UniPoly& a, const K& s) { return s * a; }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  K eval(const K& x) const {
    K acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // Horner evaluation at any ring element R supporting R + K and R * R.
  template <class R>
  R eval_in(const R& x, const R& zero) const {
    R acc = zero;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // this(g)
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc(g.var_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * g;
      acc += UniPoly::constant(coeffs_[i], g.var_);
    }
    return acc;
  }

  UniPoly derivative(int order = 1) const {
    UniPoly r = *this;
    for (int k = 0; k < order; ++k) {
      if (r.coeffs_.size() <= 1) return UniPoly(var_);
      std::vector<K> d(r.coeffs_.size() - 1);
      for (std::size_t i = 1; i < r.coeffs_.size(); ++i) d[i - 1] = K(static_cast<long>(i)) * r.coeffs_[i];
      r = UniPoly(std::move(d), var_);
    }
    return r;
  }

  UniPoly pow(int e) const {
    UniPoly result = UniPoly::constant(K(1), var_);
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  // Maps every coefficient through fn.
  template <class Fn>
  auto map(Fn&& fn) const {
    using R = decltype(fn(std::declval<const K&>()));
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return UniPoly<R>(std::move(out), var_);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
  char var_ = 'z';
};

template <class K>
struct DivResult {
  UniPoly<K> quotient;
  UniPoly<K> remainder;
};

// Euclidean division f = q*g + r with deg r < deg g.
template <class K>
DivResult<K> divmod(const UniPoly<K>& f, const UniPoly<K>& g) {
  if (g.is_zero()) fail(ErrorCode::ZeroDivisor, "polynomial division by zero");
  std::vector<K> rem = f.coefficients();
  const int dg = g.degree().value();
  const K inv = K(1) / g.leading();
  if (static_cast<int>(rem.size()) - 1 < dg) return {UniPoly<K>(f.var()), f};
  std::vector<K> quo(rem.size() - static_cast<std::size_t>(dg));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
    const K c = rem[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    quo[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {UniPoly<K>(std::move(quo), f.var()), UniPoly<K>(std::move(rem), f.var())};
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
struct ExtGcd {
  UniPoly<K> g;  // monic
  UniPoly<K> s;  // s*a + t*b = g
  UniPoly<K> t;
};

template <class K>
ExtGcd<K> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  const char v = a.var();
  UniPoly<K> r0 = a, r1 = b;
  UniPoly<K> s0 = UniPoly<K>::constant(K(1), v), s1(v);
  UniPoly<K> t0(v), t1 = UniPoly<K>::constant(K(1), v);
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    UniPoly<K> r2 = qr.remainder;
    UniPoly<K> s2 = s0 - qr.quotient * s1;
    UniPoly<K> t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.leading();
  return {r0.monic(), inv * s0, inv * t0};
}

// Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
template <class K>
K resultant(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  int m = a.degree().value();
  int n = b.degree().value();
  if (m == 0) {
    K r(1);
    for (int i = 0; i < n; ++i) r = r * a.leading();
    return r;
  }
  if (n == 0) {
    K r(1);
    for (int i = 0; i < m; ++i) r = r * b.leading();
    return r;
  }
  if (m < n) {
    K r = resultant(b, a);
    return ((m * n) % 2 == 1) ? -r : r;
  }
  auto rem = divmod(a, b).remainder;
  if (rem.is_zero()) return K(0);
  int dr = rem.degree().value();
  K scale(1);
  for (int i = 0; i < m - dr; ++i) scale = scale * b.leading();
  K r = scale * resultant(b, rem);
  return ((m * n) % 2 == 1) ? -r : r;
}

template <class K>
struct SquarefreeFactor {
  UniPoly<K> factor;  // monic, squarefree
  int multiplicity;
};

// Yun's algorithm (characteristic zero).
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const UniPoly<K>& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor<K>> out;
  if (f.is_constant()) return out;
  UniPoly<K> a = f.monic();
  UniPoly<K> da = a.derivative();
  UniPoly<K> g = gcd(a, da);
  UniPoly<K> b = divmod(a, g).quotient;
  UniPoly<K> c = divmod(da, g).quotient;
  UniPoly<K> d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    UniPoly<K> h = gcd(b, d);
    if (!h.is_constant()) out.push_back({h, i});
    b = divmod(b, h).quotient;
    c = divmod(d, h).quotient;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace danielewski
