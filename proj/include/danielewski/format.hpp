#pragma once

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include "danielewski/extension.hpp"
#include "danielewski/sparse_poly.hpp"
#include "danielewski/surface.hpp"

namespace danielewski {

template <int N>
struct VariableNames {
  std::array<const char*, N> names;
  std::array<int, N> significance;  // slots from most to least significant
};

template <int N>
VariableNames<N> default_names();

template <>
inline VariableNames<2> default_names<2>() { return {{"x", "z"}, {kZ, kX}}; }
template <>
inline VariableNames<3> default_names<3>() { return {{"x", "y", "z"}, {kAy, kAz, kX}}; }
template <>
inline VariableNames<4> default_names<4>() { return {{"x", "y", "z", "t"}, {3, kAy, kAz, kX}}; }
template <>
inline VariableNames<5> default_names<5>() { return {{"x", "y", "z", "s", "t"}, {4, 3, kAy, kAz, kX}}; }

namespace detail {

// Appends "c*mono" with the sign folded into the separator.
inline void append_term(std::string& out, const FieldElement& c, const std::string& mono, bool leading) {
  if (c.is_rational()) {
    const Rational& r = c.as_rational();
    if (leading) {
      if (r.sign() < 0) out += "-";
    } else {
      out += r.sign() < 0 ? " - " : " + ";
    }
    Rational a = r.abs();
    if (mono.empty()) {
      out += a.to_string();
    } else {
      if (!a.is_one()) out += a.to_string() + "*";
      out += mono;
    }
    return;
  }
  if (!leading) out += " + ";
  out += "(" + c.to_string() + ")";
  if (!mono.empty()) out += "*" + mono;
}

}  // namespace detail

// Graded lexicographic order, highest term first.
template <int N>
std::string format_poly(const SparsePoly<N>& p, const VariableNames<N>& names = default_names<N>()) {
  if (p.is_zero()) return "0";
  using Term = typename SparsePoly<N>::Term;
  std::vector<const Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  auto key = [&](const Term* t) {
    std::array<int, N + 1> k{};
    for (int v : t->first) k[0] += v;
    for (std::size_t i = 0; i < N; ++i) k[i + 1] = t->first[static_cast<std::size_t>(names.significance[i])];
    return k;
  };
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) { return key(a) > key(b); });
  std::string out;
  bool leading = true;
  for (const Term* t : order) {
    std::string mono;
    for (std::size_t i = 0; i < N; ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.names[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    detail::append_term(out, t->second, mono, leading);
    leading = false;
  }
  return out;
}

inline std::string format_upoly(const KPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    const FieldElement& c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string mono;
    if (i > 0) mono = std::string(1, p.var()) + (i > 1 ? "^" + std::to_string(i) : "");
    detail::append_term(out, c, mono, leading);
    leading = false;
  }
  return out;
}

template <int N>
std::ostream& operator<<(std::ostream& os, const SparsePoly<N>& p) {
  return os << format_poly(p);
}

template <class K>
std::ostream& operator<<(std::ostream& os, const UniPoly<K>& p) {
  if constexpr (std::is_same_v<K, FieldElement>) {
    return os << format_upoly(p);
  } else {
    return os << format_upoly(p.map([](const K& c) { return FieldElement(c); }));
  }
}

inline std::string format_surface(const DanielewskiSurface& X) {
  std::string lhs = X.n() == 1 ? "x*y" : "x^" + std::to_string(X.n()) + "*y";
  return lhs + " = " + format_poly(X.Q());
}

inline std::ostream& operator<<(std::ostream& os, const DanielewskiSurface& X) { return os << format_surface(X); }

}  // namespace danielewski
