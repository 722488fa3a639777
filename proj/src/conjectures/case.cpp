#include "seqlab/conjectures/case.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "seqlab/cfexpr/expand.hpp"
#include "seqlab/hankel/hankel.hpp"
#include "seqlab/riordan/families.hpp"

namespace seqlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted-at-n";
    case Verdict::pole: return "degenerate(pole)";
    case Verdict::zero_hankel: return "degenerate(zero-hankel)";
    case Verdict::underdetermined: return "degenerate(underdetermined)";
    case Verdict::error: return "degenerate(error)";
  }
  return "degenerate(error)";
}

bool is_degenerate(Verdict v) {
  return v != Verdict::confirmed && v != Verdict::refuted;
}

std::size_t default_terms(unsigned order) {
  return order == 8 ? 45 : 40;
}

std::size_t default_hankel_terms(unsigned order) {
  return order == 8 ? 17 : 12;
}

namespace {

std::optional<std::size_t> first_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t count) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size()))};
}

// Fills r.sequence from the continued fraction and records disagreement
// of the Catalan form and of the binomial sums as notes.
void generate(CaseReport& r, FamilyId family, const Bindings& fb) {
  const auto params = cf::lift<Rational>(fb);
  const std::size_t order = r.terms - 1;
  r.sequence = head(cf::expand_fixpoint<Rational>(family_expression(family), params, order).coefficients(),
                    r.terms);

  const auto riordan = catalan_form_series<Rational>(family, params, order).coefficients();
  if (const auto n = first_difference(r.sequence, riordan)) {
    r.notes.push_back("catalan form disagrees with the continued fraction at n=" + std::to_string(*n));
  }
  if (!family_info(family).has_closed_form) return;
  const auto amended = family_sequence<Rational>(family, params, r.terms, SumVariant::amended);
  if (const auto n = first_difference(r.sequence, amended)) {
    r.notes.push_back("binomial sum disagrees with the continued fraction at n=" + std::to_string(*n));
  }
  if (printed_sum_differs(family)) {
    try {
      const auto printed = family_sequence<Rational>(family, params, r.terms, SumVariant::printed);
      if (const auto n = first_difference(r.sequence, printed)) {
        r.notes.push_back("printed binomial sum differs from the continued fraction at n=" + std::to_string(*n) +
                          " (printed " + to_string(printed[*n]) + ", expected " + to_string(r.sequence[*n]) + ")");
      }
    } catch (const DivisionByZero&) {
      r.notes.push_back("printed binomial sum is undefined here (negative power of a zero parameter)");
    }
  }
}

std::string tuple_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

void classify(CaseReport& r, const ConjectureInfo& info) {
  const FitResult& fit = *r.fit;
  const auto rel = SomosRelation::make(info.order, *r.predicted, info.mask);
  const CheckReport check = somos_check(r.hankel, rel);
  const bool zero_in_window = std::any_of(r.hankel.begin(), r.hankel.end(), [](const Rational& h) { return h.is_zero(); });
  if (zero_in_window) r.notes.push_back("zero Hankel term within the fit window");

  if (!check.passed()) {
    const BilinearCheck& bad = check.rows[check.failing.front() - info.order];
    r.verdict = Verdict::refuted;
    r.failing_n = bad.n;
    r.failing_identity = bad;
    r.notes.push_back("bilinear identity fails at n=" + std::to_string(bad.n) + ": lhs=" + to_string(bad.lhs) +
                      ", rhs=" + to_string(bad.rhs));
    if (fit.status == FitStatus::unique) {
      std::vector<Rational> delta;
      for (std::size_t i = 0; i < fit.particular.size(); ++i) delta.push_back(fit.particular[i] - (*r.predicted)[i]);
      r.notes.push_back("suspected typo: fitted " + tuple_text(fit.particular) + ", fitted minus predicted " +
                        tuple_text(delta));
    }
    return;
  }
  if (!membership(fit, *r.predicted)) {
    throw std::logic_error("predicted tuple passes the direct check but lies outside the fit set");
  }
  if (fit.status == FitStatus::unique) {
    r.verdict = Verdict::confirmed;
    return;
  }
  const std::size_t unknowns = static_cast<std::size_t>(std::count(info.mask.begin(), info.mask.end(), true));
  const std::size_t rows = fit.last_n + 1 - fit.first_n;
  if (zero_in_window) {
    r.verdict = Verdict::zero_hankel;
  } else if (rows < unknowns) {
    r.verdict = Verdict::underdetermined;
  } else {
    r.verdict = Verdict::confirmed;
    r.notes.push_back("fit underdetermined; predicted tuple lies in the solution set");
  }
}

}  // namespace

CaseReport run_case(const ConjectureCase& c) {
  const ConjectureInfo& info = conjecture_info(c.id);
  CaseReport r;
  r.id = info.id;
  r.params = case_bindings(info, c.bindings);
  r.terms = c.terms ? c.terms : default_terms(info.order);
  r.hankel_terms = c.hankel_terms ? c.hankel_terms : default_hankel_terms(info.order);
  if (r.terms < 2 * r.hankel_terms + 1) {
    throw DomainError("terms must be at least 2*hankel_terms + 1 (" + std::to_string(2 * r.hankel_terms + 1) +
                      ")");
  }
  try {
    const Bindings fb = resolve_params(info.family, r.params);
    generate(r, info.family, fb);
    r.hankel = hankel_transform<Rational>(r.sequence, r.hankel_terms);
    r.fit = somos_fit(r.hankel, info.order, info.mask);
    r.predicted = predicted_params(info.id, r.params);
    if (!r.predicted) {
      r.verdict = Verdict::pole;
      r.notes.push_back("a predicted-parameter denominator vanishes");
      return r;
    }
    classify(r, info);
  } catch (const std::logic_error&) {
    throw;
  } catch (const std::exception& e) {
    r.verdict = Verdict::error;
    r.notes.push_back(std::string("stage error: ") + e.what());
  }
  return r;
}

namespace {

std::vector<Bindings> grid_points(const Grid& grid) {
  std::vector<Bindings> points{Bindings{}};
  for (const auto& [name, values] : grid) {
    std::vector<Bindings> next;
    next.reserve(points.size() * values.size());
    for (const auto& p : points) {
      for (const auto& v : values) {
        Bindings b = p;
        b[name] = v;
        next.push_back(std::move(b));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace

SweepResult sweep(const std::string& id, const Grid& grid, std::size_t terms, std::size_t hankel_terms,
                  unsigned jobs) {
  const ConjectureInfo& info = conjecture_info(id);
  SweepResult out;
  out.id = info.id;
  if (grid.empty() && !info.params.empty()) throw DomainError("sweep grid is empty");
  const std::vector<Bindings> points = grid_points(grid);
  out.cases.resize(points.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size() && !failed; i = next++) {
      try {
        out.cases[i] = run_case(ConjectureCase{info.id, points[i], terms, hankel_terms});
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, points.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& c : out.cases) {
    if (c.verdict == Verdict::confirmed) {
      ++out.summary.confirmed;
    } else if (c.verdict == Verdict::refuted) {
      ++out.summary.refuted;
    } else {
      ++out.summary.degenerate;
    }
  }
  return out;
}

}  // namespace seqlab
