#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "danielewski/degree.hpp"
#include "danielewski/error.hpp"
#include "danielewski/extension.hpp"
#include "danielewski/number_field.hpp"

namespace danielewski {

template <int N>
using Exponents = std::array<int, N>;

// Sparse polynomial in N variables over FieldElement. Terms are kept sorted
// by exponent vector (lexicographic) with no zero coefficients. Exponents may
// be negative only in Laurent contexts; ordinary constructors never make them.
template <int N>
class SparsePoly {
 public:
  using Term = std::pair<Exponents<N>, FieldElement>;

  SparsePoly() = default;

  static SparsePoly constant(const FieldElement& c) { return monomial(Exponents<N>{}, c); }

  static SparsePoly monomial(const Exponents<N>& e, const FieldElement& c) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
  }

  // The i-th variable.
  static SparsePoly variable(int i) {
    Exponents<N> e{};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e, FieldElement(1));
  }

  // Sums arbitrary (possibly repeated, possibly zero) terms.
  static SparsePoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    SparsePoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents<N>{});
  }
  std::size_t size() const { return terms_.size(); }

  FieldElement coeff(const Exponents<N>& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents<N>& k) { return t.first < k; });
    if (it != terms_.end() && it->first == e) return it->second;
    return FieldElement(0);
  }

  FieldElement constant_term() const { return coeff(Exponents<N>{}); }

  Degree degree_in(int i) const {
    if (terms_.empty()) return Degree::neg_infinity();
    int d = terms_[0].first[static_cast<std::size_t>(i)];
    for (const auto& t : terms_) d = std::max(d, t.first[static_cast<std::size_t>(i)]);
    return Degree(d);
  }

  Degree min_degree_in(int i) const {
    if (terms_.empty()) return Degree::neg_infinity();
    int d = terms_[0].first[static_cast<std::size_t>(i)];
    for (const auto& t : terms_) d = std::min(d, t.first[static_cast<std::size_t>(i)]);
    return Degree(d);
  }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::neg_infinity();
    int d = 0;
    for (const auto& t : terms_) {
      int s = 0;
      for (int v : t.first) s += v;
      d = std::max(d, s);
    }
    return Degree(d);
  }

  bool has_negative_exponent() const {
    for (const auto& t : terms_)
      for (int v : t.first)
        if (v < 0) return true;
    return false;
  }

  NumberField field() const {
    NumberField f;
    for (const auto& t : terms_) {
      if (t.second.is_rational()) continue;
      if (f.is_rational()) {
        f = t.second.field();
      } else if (!(f == t.second.field())) {
        fail(ErrorCode::FieldMismatch, "polynomial mixes coefficients from different number fields");
      }
    }
    return f;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return SparsePoly();
    if (a.size() == 1) return b.times_term(a.terms_[0]);
    if (b.size() == 1) return a.times_term(b.terms_[0]);
    std::map<Exponents<N>, FieldElement> acc;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents<N> e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        auto [it, inserted] = acc.try_emplace(e, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    }
    SparsePoly r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
    return r;
  }

  friend SparsePoly operator*(const FieldElement& s, const SparsePoly& a) {
    if (s.is_zero()) return SparsePoly();
    SparsePoly r = a;
    for (auto& t : r.terms_) t.second = s * t.second;
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const FieldElement& s) { return s * a; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(int e) const {
    ensure(e >= 0, "negative power of a polynomial");
    SparsePoly result = constant(FieldElement(1)), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  // Multiplies by var_i^k (k may be negative).
  SparsePoly shift(int i, int k) const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.first[static_cast<std::size_t>(i)] += k;
    return r;
  }

  // Exact division by var_i^k; fails if some term has a smaller exponent.
  SparsePoly divide_by_power(int i, int k) const {
    for (const auto& t : terms_) {
      ensure(t.first[static_cast<std::size_t>(i)] >= k, "polynomial is not divisible by the requested power");
    }
    return shift(i, -k);
  }

  // Terms with var_i exponent < k, and the quotient of the rest by var_i^k.
  std::pair<SparsePoly, SparsePoly> split_at(int i, int k) const {
    SparsePoly low, high;
    for (const auto& t : terms_) {
      if (t.first[static_cast<std::size_t>(i)] < k) {
        low.terms_.push_back(t);
      } else {
        Term s = t;
        s.first[static_cast<std::size_t>(i)] -= k;
        high.terms_.push_back(std::move(s));
      }
    }
    return {low, high};
  }

  // Coefficient of var_i^k, with var_i removed (exponent set to 0).
  SparsePoly coefficient_of(int i, int k) const {
    SparsePoly r;
    for (const auto& t : terms_) {
      if (t.first[static_cast<std::size_t>(i)] != k) continue;
      Term s = t;
      s.first[static_cast<std::size_t>(i)] = 0;
      r.terms_.push_back(std::move(s));
    }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return r;
  }

  // Partial derivative in var_i.
  SparsePoly derivative(int i, int order = 1) const {
    SparsePoly r = *this;
    for (int k = 0; k < order; ++k) {
      std::vector<Term> out;
      for (const auto& t : r.terms_) {
        int e = t.first[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        Term s = t;
        s.first[static_cast<std::size_t>(i)] = e - 1;
        s.second = FieldElement(e) * s.second;
        out.push_back(std::move(s));
      }
      r = from_terms(std::move(out));
    }
    return r;
  }

  template <class Fn>
  SparsePoly map_coefficients(Fn&& fn) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.first, fn(t.second)});
    return from_terms(std::move(out));
  }

  // Substitutes images[i] for var_i. Negative exponents require the image to
  // be a single term.
  template <int M>
  SparsePoly<M> substitute(const std::array<SparsePoly<M>, N>& images) const {
    std::array<std::vector<SparsePoly<M>>, N> powers;
    std::array<std::vector<SparsePoly<M>>, N> inverse_powers;
    auto power = [&](std::size_t i, int e) -> const SparsePoly<M>& {
      auto& cache = e >= 0 ? powers[i] : inverse_powers[i];
      int k = e >= 0 ? e : -e;
      if (cache.empty()) {
        if (e >= 0) {
          cache.push_back(SparsePoly<M>::constant(FieldElement(1)));
        } else {
          ensure(images[i].size() == 1, "negative power of a non-monomial image");
          const auto& [ex, c] = images[i].terms()[0];
          Exponents<M> neg{};
          for (std::size_t j = 0; j < M; ++j) neg[j] = -ex[j];
          cache.push_back(SparsePoly<M>::constant(FieldElement(1)));
          cache.push_back(SparsePoly<M>::monomial(neg, c.inverse()));
        }
      }
      const SparsePoly<M>& step = e >= 0 ? images[i] : cache[1];
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * step);
      return cache[static_cast<std::size_t>(k)];
    };
    std::vector<typename SparsePoly<M>::Term> acc;
    for (const auto& [e, c] : terms_) {
      SparsePoly<M> term = SparsePoly<M>::constant(c);
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        term = term * power(i, e[i]);
        if (term.is_zero()) break;
      }
      for (const auto& t : term.terms()) acc.push_back(t);
    }
    return SparsePoly<M>::from_terms(std::move(acc));
  }

  // Reinterprets variables: var_i of this becomes var_{slot[i]} of the result
  // (slot -1 requires exponent 0).
  template <int M>
  SparsePoly<M> embed(const std::array<int, N>& slot) const {
    std::vector<typename SparsePoly<M>::Term> out;
    for (const auto& [e, c] : terms_) {
      Exponents<M> f{};
      for (std::size_t i = 0; i < N; ++i) {
        if (slot[i] < 0) {
          ensure(e[i] == 0, "dropped variable occurs in the polynomial");
          continue;
        }
        f[static_cast<std::size_t>(slot[i])] += e[i];
      }
      out.push_back({f, c});
    }
    return SparsePoly<M>::from_terms(std::move(out));
  }

 private:
  SparsePoly times_term(const Term& s) const {
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Exponents<N> f;
      for (std::size_t i = 0; i < N; ++i) f[i] = e[i] + s.first[i];
      FieldElement v = c * s.second;
      if (!v.is_zero()) r.terms_.push_back({f, std::move(v)});
    }
    return r;
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.push_back({ib->first, subtract ? -ib->second : ib->second});
        ++ib;
      } else {
        FieldElement v = subtract ? ia->second - ib->second : ia->second + ib->second;
        if (!v.is_zero()) r.terms_.push_back({ia->first, std::move(v)});
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// Variable slots.
inline constexpr int kX = 0;
inline constexpr int kZ = 1;                        // in BiPoly
inline constexpr int kAy = 1, kAz = 2;              // in AmbientPoly (x, y, z)
inline constexpr int kActT = 3;                     // in ActionPoly (x, y, z, t)

using BiPoly = SparsePoly<2>;         // (x, z)
using LaurentBiPoly = SparsePoly<2>;  // (x, z), x-exponents may be negative
using AmbientPoly = SparsePoly<3>;    // (x, y, z)
using ActionPoly = SparsePoly<4>;     // (x, y, z, t)

}  // namespace danielewski
