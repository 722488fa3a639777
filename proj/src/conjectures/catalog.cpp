#include "seqlab/conjectures/catalog.hpp"

#include <algorithm>

#include "seqlab/cfexpr/parser.hpp"

namespace seqlab {

namespace {

ParamFormula formula(const std::string& num, const std::string& den,
                     const std::vector<std::string>& names) {
  return ParamFormula{cf::to_poly(cf::parse(num, names)), cf::to_poly(cf::parse(den, names))};
}

std::vector<ParamFormula> formulas(const std::vector<std::pair<std::string, std::string>>& parts,
                                   const std::vector<std::string>& names) {
  std::vector<ParamFormula> out;
  for (const auto& [num, den] : parts) out.push_back(formula(num, den, names));
  return out;
}

std::vector<ParamFormula> constants(const std::vector<std::string>& values) {
  std::vector<ParamFormula> out;
  for (const auto& v : values) {
    const Rational q = Rational::parse(v);
    out.push_back(ParamFormula{Poly(q), Poly(1)});
  }
  return out;
}

Bindings bind(std::initializer_list<std::pair<const std::string, long>> values) {
  Bindings out;
  for (const auto& [k, v] : values) out.emplace(k, Rational(v));
  return out;
}

std::vector<ConjectureInfo> build() {
  const std::vector<std::string> rs{"r", "s"};
  const std::vector<std::string> r{"r"};
  const std::vector<std::string> rsvw{"r", "s", "v", "w"};
  const std::vector<std::string> rst{"r", "s", "t"};
  const SomosMask s4{true, true};
  const SomosMask s6{true, false, true};
  const SomosMask s8{true, true, true, true};

  std::vector<ConjectureInfo> out;
  out.push_back({"C1", FamilyId::conj1, 4, s4, rs, {},
                 formulas({{"0", "1"}, {"s^2*(r+s+1)^2", "1"}}, rs),
                 "Hankel transform is a (0, s^2(r+s+1)^2) Somos-4 sequence"});
  out.push_back({"C2", FamilyId::conj2, 4, s4, rs, {},
                 formulas({{"s^2", "1"}, {"s^2*(r+(r+s)^2)", "1"}}, rs),
                 "Hankel transform is a (s^2, s^2(r+(r+s)^2)) Somos-4 sequence"});
  out.push_back({"C3", FamilyId::conj3, 4, s4, rs, {},
                 formulas({{"(s+1)^2", "1"}, {"1+r^2-6*s-3*s^2-r*(s^2+2*s-3)", "1"}}, rs),
                 "Hankel transform is a ((s+1)^2, 1+r^2-6s-3s^2-r(s^2+2s-3)) Somos-4 sequence"});
  out.push_back(
      {"C4", FamilyId::conj4, 4, s4, rsvw, {},
       formulas({{"(s+v)^2*w^2", "1"},
                 {"w^2*(r^2*v^2+w*(w+v-v^2)+r*v*(v+2*w)-s^2*(v*(r+1)+2*w)-s*((r+1)*v^2+w+v*(r+1+3*w)))",
                  "1"}},
                rsvw),
       "Hankel transform is an (alpha, beta) Somos-4 sequence with alpha = (s+v)^2 w^2"});
  out.push_back(
      {"C5", FamilyId::conj5, 6, s6, rst, {},
       formulas({{"t^2*(r+2)^2", "1"},
                 {"0", "1"},
                 {"t^3*(r^3*t+r^2*(s+7*t)+2*r*(s^2+2*(t+1)*s+t*(t+8))+s^3+s^2*(3*t+4)+s*(t+2)*(3*t+2)+"
                  "t*(t^2+4*t+12))",
                  "1"}},
                rst),
       "Hankel transform is an (alpha, 0, gamma) Somos-6 sequence with alpha = t^2(r+2)^2"});
  out.push_back(
      {"C6", FamilyId::conj6, 8, s8, r, {},
       formulas({{"-(-r^8+8*r^7-21*r^6+40*r^5-35*r^4+24*r^3-71*r^2-8*r)", "r^4-2*r^3+8*r^2+2*r-9"},
                 {"8*(r^9-6*r^8+17*r^7-30*r^6+15*r^5-14*r^4-r^3-14*r^2)", "r^4-2*r^3+8*r^2+2*r-9"},
                 {"8*(r^10-2*r^8+29*r^7-32*r^6+39*r^5+18*r^4+11*r^3-r^2+r)", "r^3-r^2+7*r+9"},
                 {"-(-2*r^13+13*r^12-48*r^11+85*r^10-83*r^9+11*r^8-124*r^7+454*r^6-364*r^5+263*r^4+"
                  "84*r^3+189*r^2+25*r+9)",
                  "r^4-2*r^3+8*r^2+2*r-9"}},
                r),
       "Hankel transform is an integer Somos-8 sequence with rational parameters in r"});
  out.push_back({"C7", FamilyId::conj7, 8, s8, r, {},
                 formulas({{"-(-r^4+11*r^3-26*r^2+16*r+5)", "r^2-4*r+3"},
                           {"-(-2*r^5+19*r^4-40*r^3+13*r^2+5*r)", "r^2-4*r+3"},
                           {"-(-3*r^6+12*r^5-15*r^4-25*r^3+62*r^2+36*r+5)", "r-3"},
                           {"-(-r^9+8*r^8-26*r^7+43*r^6-40*r^5+17*r^4+23*r^3-27*r^2-19*r-3)", "r^2-4*r+3"}},
                          r),
                 "Hankel transform is an integer Somos-8 sequence with rational parameters in r"});
  out.push_back(
      {"C8", FamilyId::conj8, 8, s8, r, {},
       formulas({{"-(r^7-8*r^6+25*r^5-20*r^4-37*r^3+75*r+28)", "2*(r^3-3*r^2-5*r+7)"},
                 {"(r+1)*(r^8-11*r^7+47*r^6-83*r^5+17*r^4+71*r^3+45*r^2-169*r+210)", "2*(r^3-3*r^2-5*r+7)"},
                 {"(r^2-1)*(3*r^8-29*r^7+115*r^6-225*r^5+181*r^4+105*r^3-255*r^2-235*r+84)",
                  "2*(r^3-3*r^2-5*r+7)"},
                 {"-(r^10-17*r^9+96*r^8-212*r^7+54*r^6+594*r^5-796*r^4-36*r^3+721*r^2-329*r-588)",
                  "2*(r^3-3*r^2-5*r+7)"}},
                r),
       "Hankel transform is an integer Somos-8 sequence with rational parameters in r"});
  out.push_back({"EX1R", FamilyId::ex1, 4, s4, r, {}, formulas({{"(r-1)^2", "1"}, {"4*r", "1"}}, r),
                 "Hankel transform is a ((r-1)^2, 4r) Somos-4 sequence"});
  out.push_back({"EX5A", FamilyId::ex5a, 6, s6, {}, {}, constants({"9", "0", "23"}),
                 "Hankel transform is a (9, 0, 23) Somos-6 sequence"});
  out.push_back({"EX5B", FamilyId::conj5, 6, s6, {}, bind({{"r", 0}, {"s", 1}, {"t", 1}, {"u", 2}, {"v", -1}}),
                 constants({"16", "0", "728"}),
                 "weighted family g_n(r,s,t,u,v): Hankel transform is a (16, 0, 728) Somos-6 sequence"});
  out.push_back({"EX6A", FamilyId::ex6a, 8, s8, {}, {}, constants({"-101/3", "-484/3", "4299", "23359/3"}),
                 "Hankel transform is a (-101/3, -484/3, 4299, 23359/3) Somos-8 sequence"});
  out.push_back({"EX6B", FamilyId::ex6b, 8, s8, {}, {}, constants({"1/2", "-5/2", "11/2", "17/2"}),
                 "Hankel transform is a (1/2, -5/2, 11/2, 17/2) Somos-8 sequence"});
  return out;
}

}  // namespace

const std::vector<ConjectureInfo>& all_conjectures() {
  static const std::vector<ConjectureInfo> catalog = build();
  return catalog;
}

const ConjectureInfo& conjecture_info(const std::string& id) {
  for (const auto& c : all_conjectures()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown conjecture id '" + id + "'");
}

Bindings case_bindings(const ConjectureInfo& info, const Bindings& given) {
  Bindings out = info.fixed;
  for (const auto& [name, value] : given) {
    if (const auto it = info.fixed.find(name); it != info.fixed.end() && it->second == value) continue;
    if (std::find(info.params.begin(), info.params.end(), name) == info.params.end()) {
      throw DomainError("conjecture " + info.id + " has no parameter '" + name + "'");
    }
    out[name] = value;
  }
  for (const auto& name : info.params) {
    if (out.count(name) == 0) throw DomainError("conjecture " + info.id + " needs parameter '" + name + "'");
  }
  return out;
}

std::optional<std::vector<Rational>> predicted_params(const std::string& id, const Bindings& bindings) {
  const ConjectureInfo& info = conjecture_info(id);
  const Bindings b = case_bindings(info, bindings);
  std::vector<Rational> out;
  for (const auto& f : info.formulas) {
    const Rational den = f.denominator.eval(b);
    if (den.is_zero()) return std::nullopt;
    out.push_back(f.numerator.eval(b) / den);
  }
  return out;
}

}  // namespace seqlab
