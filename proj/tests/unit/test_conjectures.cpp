#include <doctest.h>

#include <set>

#include "seqlab/conjectures/case.hpp"
#include "seqlab/conjectures/catalog.hpp"
#include "seqlab/conjectures/report.hpp"
#include "seqlab/error.hpp"
#include "seqlab/hankel/hankel.hpp"

using namespace seqlab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

std::vector<Rational> range(long lo, long hi) {
  std::vector<Rational> out;
  for (long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("catalog ids and shapes") {
  std::set<std::string> ids;
  for (const auto& c : all_conjectures()) {
    ids.insert(c.id);
    CHECK(c.mask.size() == c.order / 2);
    CHECK(c.formulas.size() == c.order / 2);
    validate_order(c.order);
  }
  CHECK(ids == std::set<std::string>{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "EX1R", "EX5A", "EX5B", "EX6A",
                                     "EX6B"});
  CHECK(conjecture_info("C5").order == 6);
  CHECK(conjecture_info("C8").order == 8);
  CHECK_THROWS_AS(conjecture_info("C9"), DomainError);
}

TEST_CASE("predicted parameters") {
  CHECK(*predicted_params("C1", {{"r", Rational(0)}, {"s", Rational(1)}}) == ints({0, 4}));
  CHECK(*predicted_params("EX1R", {{"r", Rational(1)}}) == ints({0, 4}));
  CHECK(*predicted_params("EX5A", {}) == ints({9, 0, 23}));
  CHECK_FALSE(predicted_params("C7", {{"r", Rational(3)}}).has_value());
  CHECK_FALSE(predicted_params("C6", {{"r", Rational(-1)}}).has_value());
  CHECK_THROWS_AS(predicted_params("C1", {{"r", Rational(0)}}), DomainError);
  CHECK_THROWS_AS(predicted_params("nope", {}), DomainError);
}

TEST_CASE("case bindings merge fixed names") {
  const auto& ex5b = conjecture_info("EX5B");
  const auto b = case_bindings(ex5b, {});
  CHECK(b.at("u") == Rational(2));
  CHECK(case_bindings(ex5b, b) == b);
  auto clash = b;
  clash["u"] = Rational(3);
  CHECK_THROWS_AS(case_bindings(ex5b, clash), DomainError);
  CHECK_THROWS_AS(case_bindings(conjecture_info("C1"), {{"r", Rational(1)}, {"q", Rational(1)}}), DomainError);
}

TEST_CASE("example case is confirmed") {
  const auto r = run_case({"EX1R", {{"r", Rational(1)}}});
  CHECK(r.verdict == Verdict::confirmed);
  CHECK(r.terms == default_terms(4));
  CHECK(r.hankel_terms == default_hankel_terms(4));
  CHECK(r.hankel.size() == r.hankel_terms + 1);
  CHECK(r.sequence.size() == r.terms);
  CHECK(std::vector<Rational>(r.sequence.begin(), r.sequence.begin() + 5) == ints({1, 1, 3, 7, 19}));
  // h_n = 2^floor((n+1)^2/4)
  for (std::size_t n = 0; n < r.hankel.size(); ++n) {
    CHECK(r.hankel[n] == pow(Rational(2), static_cast<long>((n + 1) * (n + 1) / 4)));
  }
  REQUIRE(r.fit);
  CHECK(r.fit->status == FitStatus::unique);
  CHECK(r.fit->particular == ints({0, 4}));
  CHECK_FALSE(r.failing_n);
}

TEST_CASE("hankel prefix of the Somos-6 example") {
  const auto r = run_case({"EX5A", {}, 0, 6});
  CHECK(r.hankel == ints({1, 3, 2, -23, -231, -1987, -41482}));
  // 1 row, 2 free unknowns
  CHECK(r.verdict == Verdict::underdetermined);
  CHECK(is_degenerate(r.verdict));
  const auto full = run_case({"EX5A", {}});
  CHECK(full.verdict == Verdict::confirmed);
}

TEST_CASE("poles are degenerate") {
  const auto r = run_case({"C7", {{"r", Rational(3)}}, 25, 12});
  CHECK(r.verdict == Verdict::pole);
  CHECK(to_string(r.verdict) == "degenerate(pole)");
  CHECK(to_json(r)["predicted"] == "pole");
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::confirmed) == "confirmed");
  CHECK(to_string(Verdict::zero_hankel) == "degenerate(zero-hankel)");
  CHECK(to_string(Verdict::underdetermined) == "degenerate(underdetermined)");
  CHECK(to_string(Verdict::error) == "degenerate(error)");
  CHECK_FALSE(is_degenerate(Verdict::refuted));
  CHECK_FALSE(is_degenerate(Verdict::confirmed));
}

TEST_CASE("bad requests throw rather than report") {
  CHECK_THROWS_AS(run_case({"C1", {{"r", Rational(1)}}}), DomainError);
  CHECK_THROWS_AS(run_case({"C42", {}}), DomainError);
  CHECK_THROWS(run_case({"EX1R", {{"r", Rational(1)}}, 10, 12}));
}

TEST_CASE("report json has a fixed field set and is deterministic") {
  const ConjectureCase c{"C5", {{"r", Rational(-2)}, {"s", Rational(-2)}, {"t", Rational(1)}}, 25, 12};
  const auto a = to_json(run_case(c));
  const auto b = to_json(run_case(c));
  CHECK(a.dump() == b.dump());
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"id", "params", "terms", "hankel_terms", "sequence", "hankel", "fit_status",
                                         "fit_solution", "fit_basis", "predicted", "verdict", "failing_n", "notes"});
  CHECK(a["params"]["r"] == "-2");
  CHECK(a["params"].size() == 3);
  CHECK(a["failing_n"].is_null());
}

TEST_CASE("sweep order, summary and threading") {
  const Grid grid{{"s", range(-1, 1)}, {"r", range(0, 1)}};
  const auto one = sweep("C1", grid, 13, 6, 1);
  REQUIRE(one.cases.size() == 6);
  // r varies slowest.
  CHECK(one.cases[0].params.at("r") == Rational(0));
  CHECK(one.cases[0].params.at("s") == Rational(-1));
  CHECK(one.cases[1].params.at("s") == Rational(0));
  CHECK(one.cases[3].params.at("r") == Rational(1));
  CHECK(one.summary.confirmed + one.summary.refuted + one.summary.degenerate == 6);
  CHECK(one.summary.refuted == 0);
  const auto many = sweep("C1", grid, 13, 6, 4);
  CHECK(to_json(one).dump() == to_json(many).dump());
  const auto j = to_json(one);
  CHECK(j["summary"]["cases"] == 6);
  const auto table = to_table(one);
  CHECK(table.find("confirmed") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') >= 7);
}

TEST_CASE("sweep edge cases") {
  CHECK(sweep("C1", {{"r", {}}, {"s", range(0, 2)}}).cases.empty());
  CHECK_THROWS_AS(sweep("C1", {}), DomainError);
  CHECK_THROWS_AS(sweep("C1", {{"r", range(0, 1)}}), DomainError);
  CHECK(sweep("EX5A", {}, 0, 0, 1).cases.size() == 1);
}

TEST_CASE("fitted parameters satisfy the checked identities on every confirmed case") {
  const auto res = sweep("C2", {{"r", range(-2, 2)}, {"s", range(-2, 2)}}, 25, 12, 1);
  for (const auto& c : res.cases) {
    if (c.verdict != Verdict::confirmed) continue;
    REQUIRE(c.predicted);
    const auto rel = SomosRelation::make(4, *c.predicted, conjecture_info("C2").mask);
    CHECK(somos_check(c.hankel, rel).passed());
    CHECK(hankel_transform<Rational>(c.sequence, c.hankel_terms) == c.hankel);
  }
}
