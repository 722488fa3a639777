#include "seqlab/riordan/families.hpp"

#include <algorithm>

#include "seqlab/cfexpr/parser.hpp"

namespace seqlab {

namespace {

std::vector<FamilyInfo> build_catalog() {
  const std::optional<Rational> required;
  return {
      {FamilyId::ex1, "ex1", {{"r", Rational(1)}}, "1/(1 - x/(1-r*x) - x^2*g)", true, ""},
      {FamilyId::conj1, "conj1", {{"r", required}, {"s", required}},
       "1/(1 - (1+r*x)/(1-x)*x - s*x^2*g)", false, ""},
      {FamilyId::conj2, "conj2", {{"r", required}, {"s", required}},
       "1/(1 - (1+r*x)/(1-x)*x - s*x^2/(1-x)*g)", false, ""},
      {FamilyId::conj3, "conj3", {{"r", required}, {"s", required}},
       "1/(1 - (1+r*x)/(1-x)*x - (1+s*x)/(1-x)*x^2*g)", false, ""},
      {FamilyId::conj4, "conj4", {{"r", required}, {"s", required}, {"v", required}, {"w", required}},
       "1/(1 - v*(1+r*x)/(1-x)*x - w*(1+s*x)/(1-x)*x^2*g)", false,
       "printed Catalan denominator 1-(v+1)x-rx^2 should be 1-(v+1)x-rvx^2 (agrees only at v=1)"},
      {FamilyId::conj5, "conj5",
       {{"r", required}, {"s", required}, {"t", required}, {"u", Rational(1)}, {"v", Rational(1)}},
       "1/(1 - v*x*(1+r*v*x)/(1-v*x) - v^2*x^2*(1+s*v*x)/(1-v*x) - t*u*v*x^3*g)", true, ""},
      {FamilyId::conj6, "conj6", {{"r", required}}, "1/(1 - x/(1-r*x) - x^2 - x^3*g)", true, ""},
      {FamilyId::conj7, "conj7", {{"r", required}}, "1/(1 - x - x^2/(1-r*x) - x^3*g)", true, ""},
      {FamilyId::conj8, "conj8", {{"r", required}}, "1/(1 - (1-(r-1)*x)/(1-r*x)*x - x^2 - x^3*g)",
       true, "printed Catalan denominator 1+(r+1)x+... should be 1-(r+1)x+(r-2)x^2+rx^3"},
      {FamilyId::ex5a, "ex5a", {}, "1/(1 - x*(1+3*x)/(1-x) + x^2*(1+2*x)/(1-x) - x^3*g)", false,
       "printed Catalan multiplier denominator (1-2x-2x^3+2x^3)^2 should be (1-2x-2x^2+2x^3)^2"},
      {FamilyId::ex6a, "ex6a", {}, "1/(1 - x/(1 - x/(1-3*x)) - x^3*g)", false, ""},
      {FamilyId::ex6b, "ex6b", {}, "1/(1 - x - x^2/(1 - x/(1-x)) - x^3*g)", false, ""},
  };
}

template <Ring R>
const R& get(const cf::ParamValues<R>& p, const std::string& name) {
  const auto it = p.find(name);
  if (it == p.end()) throw DomainError("missing binding for parameter '" + name + "'");
  return it->second;
}

template <Ring R>
R get_or(const cf::ParamValues<R>& p, const std::string& name, long fallback) {
  const auto it = p.find(name);
  return it == p.end() ? R(fallback) : it->second;
}

// G = g_num/g_den and multiplier m_num/m_den^2, as polynomials in x.
template <Ring R>
struct CatalanPieces {
  std::vector<R> g_num;
  std::vector<R> g_den;
  std::vector<R> m_num;
};

template <Ring R>
CatalanPieces<R> pieces(FamilyId id, const cf::ParamValues<R>& p) {
  const R one(1);
  const R zero(0);
  switch (id) {
    case FamilyId::ex1: {
      const R r = get_or(p, "r", 1);
      return {{one, -r}, {one, -(r + one)}, {zero, zero, one, R(-2) * r, r * r}};
    }
    case FamilyId::conj1:
    case FamilyId::conj2:
    case FamilyId::conj3: {
      const R& r = get(p, "r");
      const R& s = get(p, "s");
      std::vector<R> den{one, R(-2), -r};
      if (id == FamilyId::conj1) return {{one, R(-1)}, den, {zero, zero, s, R(-2) * s, s}};
      if (id == FamilyId::conj2) return {{one, R(-1)}, den, {zero, zero, s, -s}};
      return {{one, R(-1)}, den, {zero, zero, one, s - one, -s}};
    }
    case FamilyId::conj4: {
      const R& r = get(p, "r");
      const R& s = get(p, "s");
      const R& v = get(p, "v");
      const R& w = get(p, "w");
      return {{one, R(-1)}, {one, -(v + one), -(r * v)}, {zero, zero, w, w * (s - one), -(w * s)}};
    }
    case FamilyId::conj5: {
      const R& r = get(p, "r");
      const R& s = get(p, "s");
      const R& t = get(p, "t");
      const R u = get_or(p, "u", 1);
      const R v = get_or(p, "v", 1);
      const R tuv = t * u * v;
      return {{one, -v},
              {one, R(-2) * v, -((r + one) * v * v), -(s * v * v * v)},
              {zero, zero, zero, tuv, R(-2) * tuv * v, tuv * v * v}};
    }
    case FamilyId::conj6:
    case FamilyId::conj7:
    case FamilyId::conj8: {
      const R& r = get(p, "r");
      std::vector<R> den;
      if (id == FamilyId::conj6) den = {one, -(r + one), R(-1), r};
      if (id == FamilyId::conj7) den = {one, -(r + one), r - one};
      if (id == FamilyId::conj8) den = {one, -(r + one), r - R(2), r};
      return {{one, -r}, den, {zero, zero, zero, one, R(-2) * r, r * r}};
    }
    case FamilyId::ex5a:
      return {{one, R(-1)}, {one, R(-2), R(-2), R(2)}, {zero, zero, zero, one, R(-2), one}};
    case FamilyId::ex6a:
      return {{one, R(-4)}, {one, R(-5), R(3)}, {zero, zero, zero, one, R(-8), R(16)}};
    case FamilyId::ex6b:
      return {{one, R(-2)}, {one, R(-3), one, one}, {zero, zero, zero, one, R(-4), R(4)}};
  }
  throw DomainError("unknown family");
}

// Cached powers base^0, base^1, ...; negative exponents need a unit base.
template <Ring R>
class Powers {
 public:
  explicit Powers(R base) : base_(std::move(base)), cache_{R(1)} {}

  R operator()(long e) {
    if (e < 0) {
      if (!inverse_) inverse_.emplace(unit_inverse(base_));
      R out(1);
      for (long i = 0; i < -e; ++i) out = out * *inverse_;
      return out;
    }
    while (cache_.size() <= static_cast<std::size_t>(e)) cache_.push_back(cache_.back() * base_);
    return cache_[static_cast<std::size_t>(e)];
  }

 private:
  R base_;
  std::vector<R> cache_;
  std::optional<R> inverse_;
};

template <Ring R>
R from_integer(const Integer& i) {
  return R(i);
}

long sl(std::size_t v) { return static_cast<long>(v); }

template <Ring R>
R ex1_gn(const cf::ParamValues<R>& p, long n) {
  const R r = get_or(p, "r", 1);
  Powers<R> neg_r(-r);
  Powers<R> r1(r + R(1));
  R total(0);
  for (long k = 0; 2 * k <= n; ++k) {
    R inner(0);
    for (long j = 0; j <= n - 2 * k; ++j) {
      const Integer b = binomial(2 * k + 1, j) * binomial(n - j, 2 * k);
      if (b.is_zero()) continue;
      inner = inner + from_integer<R>(b) * neg_r(j) * r1(n - 2 * k - j);
    }
    total = total + inner * from_integer<R>(catalan_number(static_cast<unsigned>(k)));
  }
  return total;
}

// Entry t_{n,k}(r,s,t) of the Conjecture-5 array with multiplier
// t x (1-x)^2 / (1-2x-(r+1)x^2-sx^3)^2.
template <Ring R>
R conj5_entry(long n, long k, const R& t, Powers<R>& s, Powers<R>& r1, Powers<R>& two,
              SumVariant variant) {
  R total(0);
  for (long j = 0; j <= 2 * k + 1; ++j) {
    const Integer bj = binomial(2 * k + 1, j);
    const bool odd = (j % 2) != 0;
    for (long i = 0; i <= n - k - j; ++i) {
      const Integer bi = bj * binomial(2 * k + i, i);
      for (long m = 0; m <= i; ++m) {
        if (variant == SumVariant::amended) {
          const long l = n - k - j - i - m;
          const Integer c = bi * binomial(i, m) * binomial(m, l);
          if (c.is_zero()) continue;
          const R term = from_integer<R>(odd ? -c : c) * two(i - m) * s(l) * r1(m - l);
          total = total + term;
        } else {
          const Integer c = bi * binomial(m, n - j - i - m);
          if (c.is_zero()) continue;
          const R term = from_integer<R>(odd ? -c : c) * two(i - m) * s(n - k - j - i - m) *
                         r1(2 * m - n + k + j + i);
          total = total + term;
        }
      }
    }
  }
  R tk(1);
  for (long i = 0; i < k; ++i) tk = tk * t;
  return tk * total;
}

template <Ring R>
R conj5_gn(const cf::ParamValues<R>& p, long n, SumVariant variant) {
  const R& t = get(p, "t");
  Powers<R> s(get(p, "s"));
  Powers<R> r1(get(p, "r") + R(1));
  Powers<R> two(R(2));
  Powers<R> u(get_or(p, "u", 1));
  Powers<R> v(get_or(p, "v", 1));
  R total(0);
  for (long k = 0; 3 * k <= n; ++k) {
    const R entry = conj5_entry(n - 2 * k, k, t, s, r1, two, variant);
    total = total + entry * u(k) * v(n - 2 * k) * from_integer<R>(catalan_number(static_cast<unsigned>(k)));
  }
  return total;
}

template <Ring R>
R somos8_gn(FamilyId id, const cf::ParamValues<R>& p, long n, SumVariant variant) {
  const R& r = get(p, "r");
  Powers<R> neg_r(-r);
  Powers<R> pos_r(r);
  Powers<R> r1(r + R(1));
  Powers<R> one_minus_r(R(1) - r);
  Powers<R> r_minus_2(r - R(2));
  R total(0);
  for (long k = 0; 3 * k <= n; ++k) {
    R inner(0);
    for (long j = 0; j <= 2 * k + 1; ++j) {
      const Integer bj = binomial(2 * k + 1, j);
      const R wj = from_integer<R>(bj) * neg_r(j);
      for (long i = 0; i <= n - 3 * k; ++i) {
        if (id == FamilyId::conj7) {
          const long l = n - 3 * k - j - i;
          const Integer c = binomial(2 * k + i, i) * binomial(i, l);
          if (c.is_zero()) continue;
          inner = inner + wj * from_integer<R>(c) * one_minus_r(l) * r1(2 * i - n + 3 * k + j);
          continue;
        }
        for (long m = 0; m <= i; ++m) {
          const long l = n - 3 * k - j - i - m;
          if (id == FamilyId::conj6) {
            const Integer c = binomial(2 * k + i, i) * binomial(i, m) * binomial(m, l);
            if (c.is_zero()) continue;
            inner = inner + wj * from_integer<R>(c) * r1(i - m) * neg_r(l);
          } else {
            Integer c = binomial(i, m) * binomial(m, l);
            if (variant == SumVariant::amended) c *= binomial(2 * k + i, i);
            if (c.is_zero()) continue;
            if (m % 2 != 0) c = -c;
            inner = inner + wj * from_integer<R>(c) * r1(i - m) * pos_r(l) *
                                r_minus_2(2 * m - n + 3 * k + j + i);
          }
        }
      }
    }
    total = total + inner * from_integer<R>(catalan_number(static_cast<unsigned>(k)));
  }
  return total;
}

}  // namespace

const std::vector<FamilyInfo>& all_families() {
  static const std::vector<FamilyInfo> catalog = build_catalog();
  return catalog;
}

const FamilyInfo& family_info(FamilyId id) {
  for (const auto& f : all_families()) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown family");
}

FamilyId parse_family(const std::string& name) {
  for (const auto& f : all_families()) {
    if (f.name == name) return f.id;
  }
  throw DomainError("unknown family '" + name + "'");
}

std::vector<std::string> param_names(FamilyId id) {
  std::vector<std::string> out;
  for (const auto& p : family_info(id).params) out.push_back(p.name);
  return out;
}

Bindings resolve_params(FamilyId id, const Bindings& given) {
  const FamilyInfo& info = family_info(id);
  Bindings out;
  for (const auto& [name, value] : given) {
    const bool known = std::any_of(info.params.begin(), info.params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw DomainError("family " + info.name + " has no parameter '" + name + "'");
    out.emplace(name, value);
  }
  for (const auto& p : info.params) {
    if (out.count(p.name) != 0) continue;
    if (!p.fallback) throw DomainError("family " + info.name + " needs parameter '" + p.name + "'");
    out.emplace(p.name, *p.fallback);
  }
  return out;
}

cf::Expr family_expression(FamilyId id) {
  const FamilyInfo& info = family_info(id);
  return cf::parse(info.cf_text, param_names(id));
}

bool printed_sum_differs(FamilyId id) {
  return id == FamilyId::conj5 || id == FamilyId::conj8;
}

template <Ring R>
RiordanArray<R> catalan_form(FamilyId id, const cf::ParamValues<R>& params, std::size_t order) {
  const CatalanPieces<R> pc = pieces(id, params);
  const auto den = Series<R>::from_polynomial(pc.g_den, order);
  const auto g = Series<R>::from_polynomial(pc.g_num, order) / den;
  const auto m = Series<R>::from_polynomial(pc.m_num, order) / (den * den);
  return RiordanArray<R>::from_multiplier(g, m);
}

template <Ring R>
Series<R> catalan_form_series(FamilyId id, const cf::ParamValues<R>& params, std::size_t order) {
  return catalan_form(id, params, order).apply(catalan_gf<R>(order));
}

template <Ring R>
R closed_form_gn(FamilyId id, const cf::ParamValues<R>& params, std::size_t n, SumVariant variant) {
  switch (id) {
    case FamilyId::ex1: return ex1_gn(params, sl(n));
    case FamilyId::conj5: return conj5_gn(params, sl(n), variant);
    case FamilyId::conj6:
    case FamilyId::conj7:
    case FamilyId::conj8: return somos8_gn(id, params, sl(n), variant);
    default: break;
  }
  throw DomainError("family " + family_info(id).name + " has no closed-form sum");
}

template <Ring R>
std::vector<R> family_sequence(FamilyId id, const cf::ParamValues<R>& params, std::size_t count,
                               SumVariant variant) {
  if (count == 0) throw DomainError("family_sequence needs count >= 1");
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(closed_form_gn(id, params, n, variant));
  return out;
}

#define SEQLAB_INSTANTIATE(R)                                                                   \
  template RiordanArray<R> catalan_form<R>(FamilyId, const cf::ParamValues<R>&, std::size_t);   \
  template Series<R> catalan_form_series<R>(FamilyId, const cf::ParamValues<R>&, std::size_t);  \
  template R closed_form_gn<R>(FamilyId, const cf::ParamValues<R>&, std::size_t, SumVariant);    \
  template std::vector<R> family_sequence<R>(FamilyId, const cf::ParamValues<R>&, std::size_t, \
                                             SumVariant);

SEQLAB_INSTANTIATE(Rational)
SEQLAB_INSTANTIATE(Poly)

#undef SEQLAB_INSTANTIATE

}  // namespace seqlab
