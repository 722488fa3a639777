// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqlab/cfexpr/expand.hpp"
#include "seqlab/cfexpr/jfraction.hpp"
#include "seqlab/conjectures/report.hpp"
#include "seqlab/hankel/hankel.hpp"
#include "seqlab/riordan/families.hpp"
#include "seqlab/somos/somos.hpp"

#ifndef SEQLAB_ARTIFACT_DIR
#define SEQLAB_ARTIFACT_DIR "acceptance-artifacts"
#endif

using namespace seqlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::vector<Rational> q(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

std::vector<Rational> prefix(const std::vector<Rational>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

std::string text(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

Bindings bind(std::initializer_list<std::pair<const char*, long>> values) {
  Bindings b;
  for (const auto& [k, v] : values) b[k] = Rational(v);
  return b;
}

std::vector<Rational> cf_sequence(FamilyId id, const Bindings& params, std::size_t terms) {
  const auto p = cf::lift<Rational>(resolve_params(id, params));
  return cf::expand_fixpoint<Rational>(family_expression(id), p, terms - 1).coefficients();
}

void write_artifact(const std::string& name, const nlohmann::ordered_json& j) {
  std::filesystem::create_directories(SEQLAB_ARTIFACT_DIR);
  std::ofstream(std::filesystem::path(SEQLAB_ARTIFACT_DIR) / (name + ".json")) << j.dump(2) << "\n";
}

// Somos identity recomputed from scratch for one n.
std::pair<Rational, Rational> identity_at(const std::vector<Rational>& h, std::size_t n,
                                          const std::vector<Rational>& c) {
  const std::size_t k = 2 * c.size();
  Rational rhs(0);
  for (std::size_t i = 1; i <= c.size(); ++i) rhs += c[i - 1] * h[n - i] * h[n - k + i];
  return {h[n] * h[n - k], rhs};
}

bool all_identities_hold(const std::vector<Rational>& h, const std::vector<Rational>& c) {
  const std::size_t k = 2 * c.size();
  if (h.size() <= k) return false;
  for (std::size_t n = k; n < h.size(); ++n) {
    const auto [lhs, rhs] = identity_at(h, n, c);
    if (lhs != rhs) return false;
  }
  return true;
}

// Checks a sweep against the confirmation policy. A refutation passes only
// when its artifact is written and the failing identity is independently
// reproduced from the report's Hankel prefix.
void judge_sweep(Outcome& o, const SweepResult& s, const std::string& label) {
  std::size_t confirmed = 0, degenerate = 0, refuted = 0;
  for (const auto& c : s.cases) {
    const std::string where = label + " " + to_json(c)["params"].dump();
    o.require(c.verdict != Verdict::error, where + " stage error");
    if (c.verdict == Verdict::confirmed) {
      ++confirmed;
      o.require(c.fit && c.predicted && membership(*c.fit, *c.predicted), where + " predicted tuple outside fit set");
      o.require(c.predicted && all_identities_hold(c.hankel, *c.predicted), where + " direct check fails");
    } else if (c.verdict == Verdict::refuted) {
      ++refuted;
      const auto [lhs, rhs] = identity_at(c.hankel, *c.failing_n, *c.predicted);
      o.require(lhs != rhs && c.failing_identity && c.failing_identity->lhs == lhs && c.failing_identity->rhs == rhs,
                where + " refutation evidence not reproducible");
      write_artifact("refuted-" + label + "-" + std::to_string(refuted), to_json(c));
    } else {
      ++degenerate;
    }
  }
  o.note(label + ": " + std::to_string(confirmed) + " confirmed, " + std::to_string(degenerate) + " degenerate, " +
         std::to_string(refuted) + " refuted");
}

Grid square_grid(std::initializer_list<const char*> names, long lo, long hi) {
  Grid g;
  for (const char* n : names) {
    for (long v = lo; v <= hi; ++v) g[n].emplace_back(v);
  }
  return g;
}

Outcome criterion1() {
  Outcome o;
  const auto expected = q({"1", "1", "3", "7", "19", "51", "143", "407", "1183", "3487", "10415"});
  const cf::Expr e = family_expression(FamilyId::ex1);
  const auto p = cf::lift<Rational>(resolve_params(FamilyId::ex1, {}));
  o.require(cf::expand_fixpoint<Rational>(e, p, 10).coefficients() == expected, "fixpoint expansion");
  o.require(cf::expand_quadratic<Rational>(e, p, 10).coefficients() == expected, "quadratic closed form");
  o.require(catalan_form_series<Rational>(FamilyId::ex1, p, 10).coefficients() == expected, "Riordan-Catalan form");

  const auto seq = cf_sequence(FamilyId::ex1, {}, 21);
  const auto h = hankel_transform<Rational>(seq, 10);
  bool powers = true;
  for (unsigned n = 0; n <= 10; ++n) powers = powers && h[n] == Rational(pow(Integer(2), (n + 1) * (n + 1) / 4));
  o.require(powers, "Hankel transform equals 2^floor((n+1)^2/4)");
  const auto check = somos_check(h, SomosRelation::make(4, q({"0", "4"})));
  o.require(check.passed(), "(0,4) Somos-4 check");
  o.note("h_10 = " + to_string(h[10]) + ", Somos-4 rows n=4..10 hold");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const SweepResult s = sweep("EX1R", square_grid({"r"}, -3, 4), 25, 12);
  for (const auto& c : s.cases) {
    const Rational r = c.params.at("r");
    const std::vector<Rational> expected{(r - Rational(1)) * (r - Rational(1)), Rational(4) * r};
    o.require(c.verdict != Verdict::error, "r=" + to_string(r) + " stage error");
    o.require(c.fit && membership(*c.fit, expected), "r=" + to_string(r) + " ((r-1)^2,4r) in fit set");
    o.require(all_identities_hold(c.hankel, expected), "r=" + to_string(r) + " direct check");
  }
  judge_sweep(o, s, "EX1R");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t nondegenerate = 0;
  for (long r = -2; r <= 3; ++r) {
    for (long s = -2; s <= 3; ++s) {
      if (s == 0 || r + s + 1 == 0) continue;
      ++nondegenerate;
      const Rational S(s), T(r + s + 1);
      const auto seq = cf_sequence(FamilyId::conj1, bind({{"r", r}, {"s", s}}), 17);
      const auto h = hankel_transform<Rational>(seq, 8);
      std::vector<Rational> formula;
      for (long n = 0; n <= 8; ++n) formula.push_back(pow(S, n * n / 4) * pow(T, (n + 1) * (n + 1) / 4));
      const std::string at = "(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
      o.require(h == formula, at + " Hankel closed formula");
      o.require(all_identities_hold(h, {Rational(0), S * S * T * T}), at + " (0, s^2(r+s+1)^2) check");
    }
  }
  o.note(std::to_string(nondegenerate) + " non-degenerate points, n <= 8");
  return o;
}

Outcome criterion4() {
  Outcome o;
  judge_sweep(o, sweep("C2", square_grid({"r", "s"}, -3, 3), 25, 12), "C2");
  judge_sweep(o, sweep("C3", square_grid({"r", "s"}, -3, 3), 25, 12), "C3");
  judge_sweep(o, sweep("C4", square_grid({"r", "s", "v", "w"}, -3, 3), 25, 12), "C4");
  return o;
}

// Points of a small grid whose family prefix equals the printed one.
std::vector<Bindings> search(const std::string& id, const Grid& grid, const std::vector<Rational>& printed_seq,
                             const std::vector<Rational>& printed_hankel) {
  std::vector<Bindings> hits;
  for (const auto& c : sweep(id, grid, 2 * printed_hankel.size() + 1, printed_hankel.size()).cases) {
    if (prefix(c.sequence, printed_seq.size()) == printed_seq &&
        prefix(c.hankel, printed_hankel.size()) == printed_hankel) {
      hits.push_back(c.params);
    }
  }
  return hits;
}

std::string bindings_text(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
  return s;
}

Outcome criterion5() {
  Outcome o;
  {
    const CaseReport c = run_case({"EX5A", {}, 0, 0});
    o.require(prefix(c.hankel, 7) == q({"1", "3", "2", "-23", "-231", "-1987", "-41482"}), "(i) Hankel prefix");
    o.require(c.verdict == Verdict::confirmed, "(i) (9,0,23) confirmed");
    const auto [lhs, rhs] = identity_at(c.hankel, 6, q({"9", "0", "23"}));
    o.require(lhs == Rational(-41482) && rhs == Rational(9 * -1987 * 3 + 23 * 529), "(i) hand check at n=6");
  }
  {
    const auto printed_seq = q({"1", "1", "0", "-3", "-7", "-9", "-5", "8", "32", "71", "129", "187", "153"});
    const auto printed_h = q({"1", "-1", "-2", "5", "17", "-3", "-122", "1201", "-2980"});
    const CaseReport literal = run_case({"C5", bind({{"r", -2}, {"s", -2}, {"t", 1}}), 30, 9});
    const bool literal_matches = prefix(literal.sequence, 13) == printed_seq && prefix(literal.hankel, 9) == printed_h;
    const auto hits = search("C5", square_grid({"r", "s", "t"}, -3, 3), printed_seq, printed_h);
    o.require(literal_matches || hits.size() == 1, "(ii) printed prefixes reproduced by one parameter point");
    if (!literal_matches && hits.size() == 1) {
      const CaseReport fixed = run_case({"C5", hits[0], 30, 9});
      o.require(fixed.verdict == Verdict::confirmed && fixed.predicted == q({"1", "0", "-5"}),
                "(ii) (1,0,-5) confirmed");
      nlohmann::ordered_json a;
      a["claim"] = "g_n(-2,-2,1) sequence and Hankel prefixes";
      a["printed_sequence"] = text(printed_seq);
      a["literal_params"] = bindings_text(literal.params);
      a["literal_sequence"] = text(prefix(literal.sequence, 13));
      a["literal_hankel"] = text(prefix(literal.hankel, 9));
      a["reproducing_params"] = bindings_text(hits[0]);
      a["report"] = to_json(fixed);
      write_artifact("typo-c5-example-label", a);
      o.note("(ii) typo artifact: printed prefixes come from " + bindings_text(hits[0]) + ", not (-2,-2,1)");
    } else if (literal_matches) {
      o.require(literal.verdict == Verdict::confirmed, "(ii) (1,0,-5) confirmed");
    }
  }
  {
    const CaseReport c = run_case({"C5", bind({{"r", -3}, {"s", 0}, {"t", -1}}), 30, 9});
    o.require(prefix(c.sequence, 14) ==
                  q({"1", "1", "0", "-3", "-7", "-7", "7", "42", "78", "35", "-217", "-695", "-907", "523"}),
              "(iii) sequence prefix");
    o.require(prefix(c.hankel, 9) == q({"1", "-1", "-2", "-3", "11", "23", "4", "-355", "-1326"}), "(iii) Hankel");
    o.require(c.verdict == Verdict::confirmed && c.predicted == q({"1", "0", "3"}), "(iii) (1,0,3) confirmed");
  }
  {
    const auto printed_seq = q({"1", "-1", "3", "-10", "26", "-75", "224", "-659", "1979", "-6025", "18452",
                                "-57028", "177625"});
    const auto printed_h =
        q({"1", "2", "-15", "-182", "-4864", "85976", "26865504", "5387832064", "687205582336"});
    const Bindings literal_b = bind({{"r", 1}, {"s", 1}, {"t", 1}, {"u", 2}, {"v", -1}});
    const auto literal_seq = cf_sequence(FamilyId::conj5, literal_b, 17);
    const auto literal_h = hankel_transform<Rational>(literal_seq, 8);
    const bool literal_matches = prefix(literal_seq, 13) == printed_seq && literal_h == printed_h;
    std::vector<Bindings> hits;
    for (long r = -3; r <= 3; ++r) {
      for (long s = -3; s <= 3; ++s) {
        for (long t = -3; t <= 3; ++t) {
          const Bindings b = bind({{"r", r}, {"s", s}, {"t", t}, {"u", 2}, {"v", -1}});
          const auto seq = cf_sequence(FamilyId::conj5, b, 17);
          if (prefix(seq, 13) == printed_seq && hankel_transform<Rational>(seq, 8) == printed_h) hits.push_back(b);
        }
      }
    }
    o.require(literal_matches || hits.size() == 1, "(iv) Hankel prefix reproduced by one parameter point");
    const CaseReport c = run_case({"EX5B", {}, 0, 0});
    o.require(prefix(c.hankel, 9) == printed_h, "(iv) EX5B Hankel prefix");
    o.require(c.verdict == Verdict::confirmed && c.predicted == q({"16", "0", "728"}), "(iv) (16,0,728) confirmed");
    if (!literal_matches && hits.size() == 1) {
      o.require(hits[0] == c.params, "(iv) EX5B uses the reproducing point");
      nlohmann::ordered_json a;
      a["claim"] = "(r,s,t,u,v)=(1,1,1,2,-1) sequence and Hankel prefixes";
      a["literal_sequence"] = text(prefix(literal_seq, 13));
      a["literal_hankel"] = text(literal_h);
      a["reproducing_params"] = bindings_text(hits[0]);
      a["report"] = to_json(c);
      write_artifact("typo-c5-weighted-label", a);
      o.note("(iv) typo artifact: printed prefixes come from " + bindings_text(hits[0]) + ", not r=1");
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  Grid g = square_grid({"r", "s"}, -2, 2);
  g["t"] = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
  const SweepResult s = sweep("C5", g, 25, 12);
  for (const auto& c : s.cases) {
    const Rational r = c.params.at("r"), t = c.params.at("t");
    const Rational alpha = t * t * (r + Rational(2)) * (r + Rational(2));
    o.require(!c.predicted || (*c.predicted)[0] == alpha, "alpha formula");
  }
  judge_sweep(o, s, "C5");
  return o;
}

Outcome criterion7() {
  Outcome o;
  {
    const CaseReport c = run_case({"EX6A", {}, 45, 17});
    o.require(prefix(c.sequence, 13) == q({"1", "1", "2", "8", "32", "133", "569", "2450", "10569", "45643", "197206",
                                           "852239", "3683553"}),
              "EX6A sequence");
    o.require(prefix(c.hankel, 10) == q({"1", "1", "-8", "-161", "-1333", "631", "1570896", "194685449",
                                         "8871803329", "-1552662557863"}),
              "EX6A Hankel");
    o.require(all_identities_hold(c.hankel, q({"-101/3", "-484/3", "4299", "23359/3"})),
              "EX6A cross-multiplied check n=8..17");
    o.require(c.verdict == Verdict::confirmed, "EX6A verdict");
  }
  {
    const CaseReport c = run_case({"EX6B", {}, 45, 17});
    o.require(prefix(c.sequence, 13) ==
                  q({"1", "1", "2", "5", "12", "30", "77", "199", "518", "1357", "3572", "9443", "25064"}),
              "EX6B sequence");
    o.require(prefix(c.hankel, 12) ==
                  q({"1", "1", "-1", "-4", "-8", "-13", "57", "241", "1093", "792", "-30661", "-246182"}),
              "EX6B Hankel");
    o.require(all_identities_hold(c.hankel, q({"1/2", "-5/2", "11/2", "17/2"})),
              "EX6B cross-multiplied check n=8..17");
    o.require(c.verdict == Verdict::confirmed, "EX6B verdict");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* id : {"C6", "C7", "C8"}) {
    std::vector<Rational> grid;
    std::string poles;
    for (long r = -4; r <= 5; ++r) {
      if (predicted_params(id, bind({{"r", r}}))) {
        grid.emplace_back(r);
      } else {
        poles += (poles.empty() ? "" : ",") + std::to_string(r);
      }
    }
    const SweepResult s = sweep(id, Grid{{"r", grid}}, 45, 17);
    for (const auto& c : s.cases) {
      const std::string at = std::string(id) + " r=" + to_string(c.params.at("r"));
      o.require(c.fit && c.predicted && membership(*c.fit, *c.predicted), at + " membership");
      o.require(c.predicted && all_identities_hold(c.hankel, *c.predicted), at + " direct check");
    }
    judge_sweep(o, s, id);
    o.note(std::string(id) + " poles skipped: " + (poles.empty() ? "none" : poles));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  cf::ParamValues<Poly> p{{"r", Poly::variable("r")}};
  const auto seq = cf::expand_fixpoint<Poly>(family_expression(FamilyId::conj7), p, 12).coefficients();
  const auto h = hankel_transform<Poly>(seq, 5);
  std::vector<Poly> printed;
  for (const char* t : {"1", "1", "-2*r", "-1 - 4*r - r^2 + 2*r^3 - r^4", "-1 - 5*r - 6*r^2 + r^3 - 5*r^4 + 4*r^5 - r^6",
                        "-1 - 6*r - 7*r^2 + 12*r^3 + 12*r^4 + r^5 - 5*r^6 + r^7"}) {
    printed.push_back(Poly::parse(t));
  }
  o.require(h == printed, "Hankel transform over Poly[r]");

  const std::vector<std::vector<long>> array{{1},
                                             {1},
                                             {2},
                                             {4, 1},
                                             {8, 2, 1},
                                             {17, 5, 2, 1},
                                             {37, 13, 6, 2, 1},
                                             {82, 32, 16, 7, 2, 1},
                                             {185, 80, 41, 19, 8, 2, 1},
                                             {423, 201, 108, 51, 22, 9, 2, 1},
                                             {978, 505, 282, 140, 62, 25, 10, 2, 1}};
  bool rows = true;
  for (std::size_t n = 0; n < array.size(); ++n) {
    const auto c = seq[n].univariate_coefficients("r");
    std::vector<Rational> expected(array[n].begin(), array[n].end());
    rows = rows && c == expected;
  }
  o.require(rows, "coefficient array rows 0..10");
  const std::vector<long> printed_column{1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 97};
  bool first_ten = true;
  for (std::size_t n = 0; n < 10; ++n) first_ten = first_ten && seq[n].constant_term() == Rational(printed_column[n]);
  o.require(first_ten, "first column 1,1,2,4,8,17,37,82,185,423");
  const Rational eleventh = seq[10].constant_term();
  o.require(eleventh == Rational(978), "11th value recomputed");
  if (eleventh != Rational(printed_column[10])) {
    nlohmann::ordered_json a;
    a["claim"] = "first column of the coefficient array";
    a["printed_value_n10"] = "97";
    a["computed_value_n10"] = to_string(eleventh);
    a["array_row_n10"] = seq[10].to_string();
    write_artifact("typo-poly-first-column", a);
    o.note("typo artifact: 11th value is " + to_string(eleventh) + ", printed 97");
  }
  return o;
}

Rational random_param(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  return Rational(num(rng), den(rng));
}

Bindings random_bindings(FamilyId id, std::mt19937_64& rng) {
  Bindings b;
  for (const auto& spec : family_info(id).params) {
    Rational v = random_param(rng);
    if ((spec.name == "t" || spec.name == "u" || spec.name == "v" || spec.name == "w") && v.is_zero()) v = Rational(1);
    b[spec.name] = v;
  }
  return b;
}

Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational total(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][j] * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t bindings_checked = 0;
  for (const auto& info : all_families()) {
    const cf::Expr e = family_expression(info.id);
    for (int trial = 0; trial < 25; ++trial) {
      const Bindings b = random_bindings(info.id, rng);
      const auto p = cf::lift<Rational>(resolve_params(info.id, b));
      const auto fix = cf::expand_fixpoint<Rational>(e, p, 40).coefficients();
      const auto quad = cf::expand_quadratic<Rational>(e, p, 40).coefficients();
      const auto rio = catalan_form_series<Rational>(info.id, p, 40).coefficients();
      o.require(fix == quad && fix == rio, "(a) " + info.name + " " + bindings_text(b));
      if (info.has_closed_form) {
        const auto sums = family_sequence<Rational>(info.id, p, 26);
        o.require(prefix(fix, 26) == sums, "(d) " + info.name + " " + bindings_text(b));
      }
      ++bindings_checked;
    }
  }
  o.note("(a),(d) " + std::to_string(bindings_checked) + " bindings, 25 per family, order 40 / n <= 25");

  std::uniform_int_distribution<long> entry(-4, 4);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<Rational> m(n, n);
      std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          // Sparse entries force pivot swaps.
          const Rational v = trial % 3 == 0 && entry(rng) > 0 ? Rational(0) : Rational(entry(rng), 1 + (trial % 2));
          m(i, j) = v;
          rows[i][j] = v;
        }
      }
      o.require(bareiss_det(m) == cofactor_det(rows), "(b) bareiss vs cofactor " + std::to_string(n));
    }
  }

  for (int trial = 0; trial < 10; ++trial) {
    cf::JFraction j;
    for (int k = 0; k < 6; ++k) j.a.push_back(random_param(rng));
    for (int k = 0; k < 5; ++k) {
      Rational b = random_param(rng);
      if (b.is_zero()) b = Rational(1);
      j.b.push_back(b);
    }
    const auto series = cf::expand(j, 10).coefficients();
    o.require(hankel_transform<Rational>(series, 5) == cf::jfraction_hankel(j, 5), "(c) trial " + std::to_string(trial));
  }
  o.note("(b) 140 matrices up to 6x6, (c) 10 J-fractions with 5 levels");
  return o;
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"ex1 expansion, Hankel powers of two and Somos-4", criterion1},
      {"EX1R family predicts ((r-1)^2, 4r)", criterion2},
      {"C1 closed-form Hankel and Somos-4", criterion3},
      {"C2, C3, C4 sweeps", criterion4},
      {"Somos-6 catalog examples", criterion5},
      {"C5 coefficient formulas", criterion6},
      {"Somos-8 catalog examples", criterion7},
      {"C6, C7, C8 membership", criterion8},
      {"Polynomial Hankel over Poly[r]", criterion9},
      {"Oracle equivalence properties", criterion10},
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int a = 1; a < argc; ++a) {
    const std::size_t k = std::stoul(argv[a]);
    if (k >= 1 && k <= criteria.size()) selected[k - 1] = true;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::string detail;
    for (const auto& d : o.details) detail += (detail.empty() ? "" : "; ") + d;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
  }
  return all ? 0 : 1;
}
