#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seqlab/cfexpr/ast.hpp"
#include "seqlab/error.hpp"
#include "seqlab/series/series.hpp"

namespace seqlab::cf {

template <Ring R>
using ParamValues = std::map<std::string, R>;

template <Ring R>
ParamValues<R> lift(const Bindings& b) {
  ParamValues<R> out;
  for (const auto& [k, v] : b) {
    if constexpr (std::is_same_v<R, Integer>) {
      if (!v.is_integer()) throw RingMismatch("parameter " + k + " is not an integer");
      out.emplace(k, v.numerator());
    } else {
      out.emplace(k, R(v));
    }
  }
  return out;
}

namespace detail {

template <Ring R>
const R& lookup(const ParamValues<R>& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw DomainError("missing binding for parameter '" + name + "'");
  return it->second;
}

// E(x, g) evaluated with a concrete series for g.
template <Ring R>
Series<R> eval(const Node& n, const ParamValues<R>& params, const Series<R>& g, std::size_t order) {
  switch (n.kind) {
    case NodeKind::number: return Series<R>::constant(R(n.number), order);
    case NodeKind::param: return Series<R>::constant(lookup(params, n.name), order);
    case NodeKind::x: return Series<R>::x(order);
    case NodeKind::g: return g;
    case NodeKind::neg: return -eval(*n.lhs, params, g, order);
    case NodeKind::pow: return pow(eval(*n.lhs, params, g, order), n.exponent);
    case NodeKind::add: return eval(*n.lhs, params, g, order) + eval(*n.rhs, params, g, order);
    case NodeKind::sub: return eval(*n.lhs, params, g, order) - eval(*n.rhs, params, g, order);
    case NodeKind::mul: return eval(*n.lhs, params, g, order) * eval(*n.rhs, params, g, order);
    case NodeKind::div: return eval(*n.lhs, params, g, order) / eval(*n.rhs, params, g, order);
  }
  throw DomainError("malformed expression");
}

}  // namespace detail

/// Fixed point of g = E(x, g) by iteration from g = 1. Stops when two
/// successive iterates agree through `order`; throws DomainError when that
/// does not happen within order + 2 iterations.
template <Ring R>
Series<R> expand_fixpoint(const Expr& e, const ParamValues<R>& params, std::size_t order) {
  Series<R> g = Series<R>::one(order);
  for (std::size_t it = 0; it < order + 2; ++it) {
    const Series<R> next = detail::eval(e.root(), params, g, order);
    if (next.order() < order) {
      throw DomainError("expression divides by a series vanishing at x = 0; iteration loses precision");
    }
    if (next == g) return next;
    g = next;
  }
  throw DomainError("fixed-point iteration did not stabilize within order + 2 iterations");
}

template <Ring R>
  requires(!std::same_as<R, Rational>)
Series<R> expand_fixpoint(const Expr& e, const Bindings& params, std::size_t order) {
  return expand_fixpoint<R>(e, lift<R>(params), order);
}

namespace detail {

// Polynomial in g with series coefficients, index = power of g.
template <Ring R>
using GPoly = std::vector<Series<R>>;

template <Ring R>
std::size_t min_order(const GPoly<R>& p) {
  std::size_t o = p.front().order();
  for (const auto& s : p) o = std::min(o, s.order());
  return o;
}

template <Ring R>
GPoly<R> gp_binary(const GPoly<R>& a, const GPoly<R>& b, int sign) {
  const std::size_t o = std::min(min_order(a), min_order(b));
  GPoly<R> out(std::max(a.size(), b.size()), Series<R>::zero(o));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i].truncate(o);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = sign > 0 ? out[i] + b[i].truncate(o) : out[i] - b[i].truncate(o);
  }
  return out;
}

template <Ring R>
GPoly<R> gp_mul(const GPoly<R>& a, const GPoly<R>& b) {
  const std::size_t o = std::min(min_order(a), min_order(b));
  GPoly<R> out(a.size() + b.size() - 1, Series<R>::zero(o));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return out;
}

template <Ring R>
GPoly<R> gp_scale(const GPoly<R>& a, const Series<R>& s) {
  GPoly<R> out;
  for (const auto& c : a) out.push_back(c * s);
  return out;
}

template <Ring R>
GPoly<R> gp_trim(GPoly<R> p) {
  while (p.size() > 1 && !p.back().valuation()) p.pop_back();
  return p;
}

// Rational function in g: num / den.
template <Ring R>
struct GFrac {
  GPoly<R> num;
  GPoly<R> den;
};

template <Ring R>
GFrac<R> fold(GFrac<R> f) {
  f.num = gp_trim(std::move(f.num));
  f.den = gp_trim(std::move(f.den));
  if (f.den.size() == 1) {
    const auto v = f.den[0].valuation();
    if (v && *v == 0 && is_unit(f.den[0][0])) {
      const Series<R> inv = Series<R>::one(f.den[0].order()) / f.den[0];
      f.num = gp_scale(f.num, inv);
      f.den = {Series<R>::one(inv.order())};
    }
  }
  return f;
}

template <Ring R>
GFrac<R> rational_in_g(const Node& n, const ParamValues<R>& params, std::size_t order) {
  const auto leaf = [&](Series<R> s) {
    return GFrac<R>{{std::move(s)}, {Series<R>::one(order)}};
  };
  switch (n.kind) {
    case NodeKind::number: return leaf(Series<R>::constant(R(n.number), order));
    case NodeKind::param: return leaf(Series<R>::constant(lookup(params, n.name), order));
    case NodeKind::x: return leaf(Series<R>::x(order));
    case NodeKind::g:
      return GFrac<R>{{Series<R>::zero(order), Series<R>::one(order)}, {Series<R>::one(order)}};
    case NodeKind::neg: {
      GFrac<R> f = rational_in_g(*n.lhs, params, order);
      for (auto& c : f.num) c = -c;
      return f;
    }
    case NodeKind::pow: {
      const GFrac<R> base = rational_in_g(*n.lhs, params, order);
      GFrac<R> acc = leaf(Series<R>::one(order));
      for (unsigned i = 0; i < n.exponent; ++i) {
        acc = fold(GFrac<R>{gp_mul(acc.num, base.num), gp_mul(acc.den, base.den)});
      }
      return acc;
    }
    default: break;
  }
  const GFrac<R> a = rational_in_g(*n.lhs, params, order);
  const GFrac<R> b = rational_in_g(*n.rhs, params, order);
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::sub:
      return fold(GFrac<R>{gp_binary(gp_mul(a.num, b.den), gp_mul(b.num, a.den),
                                     n.kind == NodeKind::add ? 1 : -1),
                           gp_mul(a.den, b.den)});
    case NodeKind::mul: return fold(GFrac<R>{gp_mul(a.num, b.num), gp_mul(a.den, b.den)});
    default: return fold(GFrac<R>{gp_mul(a.num, b.den), gp_mul(a.den, b.num)});
  }
}

}  // namespace detail

/// Coefficients (C, -A, B) of B g^2 - A g + C = 0 obtained by clearing
/// denominators in g = E(x, g), at working order `order`.
template <Ring R>
struct QuadraticForm {
  Series<R> a;
  Series<R> b;
  Series<R> c;
};

template <Ring R>
QuadraticForm<R> quadratic_form(const Expr& e, const ParamValues<R>& params, std::size_t order) {
  const detail::GFrac<R> f = detail::rational_in_g(e.root(), params, order);
  // g * den - num
  detail::GPoly<R> shifted{Series<R>::zero(detail::min_order(f.den))};
  shifted.insert(shifted.end(), f.den.begin(), f.den.end());
  const detail::GPoly<R> eq = detail::gp_trim(detail::gp_binary(shifted, f.num, -1));
  if (eq.size() != 2 && eq.size() != 3) {
    throw DomainError("equation has degree " + std::to_string(eq.size() - 1) +
                      " in g after clearing denominators; expected 1 or 2");
  }
  const Series<R> b = eq.size() == 3 ? eq[2] : Series<R>::zero(eq[1].order());
  return QuadraticForm<R>{-eq[1], b, eq[0]};
}

/// Closed-form route: g = (A - sqrt(A^2 - 4 B C)) / (2 B), the branch that
/// stays finite at x = 0, or g = C / A when B vanishes. The equation is
/// first scaled so A(0) = 1.
template <Ring R>
Series<R> expand_quadratic(const Expr& e, const ParamValues<R>& params, std::size_t order) {
  std::size_t slack = 4;
  for (int attempt = 0; attempt < 3; ++attempt) {
    QuadraticForm<R> q = quadratic_form(e, params, order + slack);
    const auto vb = q.b.valuation();
    if (!vb) {
      // Linear in g: A g = C.
      const Series<R> g = q.c / q.a;
      if (g.order() >= order) return g.truncate(order);
      slack += order - g.order();
      continue;
    }
    if (*vb == 0) throw DomainError("g^2 coefficient must vanish at x = 0 with positive valuation");
    if (!q.a[0].is_zero() && is_unit(q.a[0]) && q.a[0] != R(1)) {
      const R inv = unit_inverse(q.a[0]);
      q.a = inv * q.a;
      q.b = inv * q.b;
      q.c = inv * q.c;
    }
    const Series<R> disc = q.a * q.a - R(4) * (q.b * q.c);
    if (disc[0] != R(1)) {
      throw DomainError("discriminant has constant term " + to_string(disc[0]) + ", expected 1");
    }
    const Series<R> numer = q.a - sqrt(disc);
    const Series<R> g = exact_scale_div(numer / q.b, R(2));
    if (g.order() >= order) return g.truncate(order);
    slack += order - g.order();
  }
  throw DomainError("closed-form expansion lost too much precision");
}

template <Ring R>
  requires(!std::same_as<R, Rational>)
Series<R> expand_quadratic(const Expr& e, const Bindings& params, std::size_t order) {
  return expand_quadratic<R>(e, lift<R>(params), order);
}

}  // namespace seqlab::cf
