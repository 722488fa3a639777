#include "seqlab/exact/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

unsigned degree_of(const Poly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

Poly::Exponents remap(const Poly::Exponents& e, const std::vector<std::size_t>& slot,
                      std::size_t width) {
  Poly::Exponents out(width, 0);
  for (std::size_t i = 0; i < e.size(); ++i) out[slot[i]] = e[i];
  return out;
}

// Slot of each name of `from` inside the sorted list `to`.
std::vector<std::size_t> slots(const std::vector<std::string>& from,
                               const std::vector<std::string>& to) {
  std::vector<std::size_t> out;
  out.reserve(from.size());
  for (const auto& name : from) {
    out.push_back(static_cast<std::size_t>(
        std::lower_bound(to.begin(), to.end(), name) - to.begin()));
  }
  return out;
}

}  // namespace

bool Poly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  // Same degree: the vector with the larger earlier exponent is larger.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

Rational Poly::constant_term() const {
  const auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

unsigned Poly::degree_in(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return 0;
  const auto slot = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[slot]);
  return d;
}

std::vector<Rational> Poly::univariate_coefficients(const std::string& name) const {
  if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != name)) {
    throw DomainError("polynomial " + to_string() + " is not univariate in " + name);
  }
  std::vector<Rational> out(degree_in(name) + 1, Rational(0));
  for (const auto& [e, c] : terms_) out[e.empty() ? 0 : e[0]] = c;
  return out;
}

Rational Poly::eval(const Bindings& bindings) const {
  std::vector<Rational> values;
  values.reserve(vars_.size());
  for (const auto& name : vars_) {
    const auto it = bindings.find(name);
    if (it == bindings.end()) throw DomainError("missing binding for variable '" + name + "'");
    values.push_back(it->second);
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(values[i], static_cast<long>(e[i]));
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool monic = degree_of(e) > 0 && mag == Rational(1);
    if (!monic) os << mag.to_string();
    bool need_star = !monic;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

void Poly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  Terms reduced;
  for (const auto& [e, c] : terms_) {
    Exponents r;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) r.push_back(e[i]);
    }
    reduced.emplace(std::move(r), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(reduced);
}

void Poly::align(Poly& a, Poly& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged));
  for (Poly* p : {&a, &b}) {
    if (p->vars_ == merged) continue;
    const auto slot = slots(p->vars_, merged);
    Terms t;
    for (const auto& [e, c] : p->terms_) t.emplace(remap(e, slot, merged.size()), c);
    p->terms_ = std::move(t);
    p->vars_ = merged;
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  Poly other = o;
  align(*this, other);
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  return *this += -o;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    *this = Poly();
    return *this;
  }
  const unsigned degree = total_degree() + o.total_degree();
  if (degree > degree_cap()) {
    throw DegreeCapExceeded("polynomial product of total degree " + std::to_string(degree) +
                            " exceeds the cap " + std::to_string(degree_cap()));
  }
  Poly other = o;
  align(*this, other);
  Terms product;
  const std::size_t width = vars_.size();
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(width);
      for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
      product[std::move(e)] += ca * cb;
    }
  }
  terms_ = std::move(product);
  normalize();
  return *this;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) {
    const Rational inv = Rational(1) / b.constant_term();
    Poly q = a;
    for (auto& [e, c] : q.terms_) c *= inv;
    return q;
  }
  Poly rem = a;
  Poly div = b;
  Poly::align(rem, div);
  const std::size_t width = div.vars_.size();
  const Poly::Exponents lead_e = div.terms_.rbegin()->first;
  const Rational lead_c = div.terms_.rbegin()->second;
  Poly::Terms& r = rem.terms_;
  Poly quotient;
  quotient.vars_ = div.vars_;
  while (!r.empty()) {
    const Poly::Exponents re = r.rbegin()->first;
    const Rational factor = r.rbegin()->second / lead_c;
    Poly::Exponents qe(width);
    for (std::size_t i = 0; i < width; ++i) {
      if (re[i] < lead_e[i]) {
        throw InexactDivision("polynomial " + b.to_string() + " does not divide " + a.to_string());
      }
      qe[i] = re[i] - lead_e[i];
    }
    for (const auto& [e, c] : div.terms_) {
      Poly::Exponents pe(width);
      for (std::size_t i = 0; i < width; ++i) pe[i] = e[i] + qe[i];
      auto it = r.try_emplace(std::move(pe)).first;
      it->second -= factor * c;
      if (it->second.is_zero()) r.erase(it);
    }
    quotient.terms_.emplace(std::move(qe), factor);
  }
  quotient.normalize();
  return quotient;
}

Poly unit_inverse(const Poly& a) {
  if (!is_unit(a)) throw DomainError("polynomial " + a.to_string() + " is not a unit");
  return Poly(Rational(1) / a.constant_term());
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result(1);
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent != 0) b *= b;
  }
  return result;
}

namespace {

class MonomialSumReader {
 public:
  explicit MonomialSumReader(std::string_view text) : s_(text) {}

  Poly read() {
    Poly sum;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    sum += signed_term(negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      sum += signed_term(op == '-');
    }
    return sum;
  }

 private:
  Poly signed_term(bool negative) {
    Poly t = term();
    return negative ? -t : t;
  }

  Poly term() {
    skip_space();
    Poly t(1);
    bool need_factor = true;
    while (need_factor) {
      skip_space();
      if (at_end()) throw ParseError("expected coefficient or variable", pos_);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t *= Poly(Rational::parse(number_text(true)));
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          name.push_back(s_[pos_++]);
        }
        Poly v = Poly::variable(name);
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          v = pow(v, static_cast<unsigned>(Integer::parse(number_text(false)).to_long()));
        }
        t *= v;
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  std::string number_text(bool allow_fraction) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (allow_fraction && !at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) throw ParseError("expected denominator", pos_);
    }
    if (start == pos_) throw ParseError("expected number", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) {
  return MonomialSumReader(text).read();
}

}  // namespace seqlab
