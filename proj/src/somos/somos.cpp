#include "seqlab/somos/somos.hpp"

#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

void validate_order(unsigned order) {
  if (order != 4 && order != 6 && order != 8) {
    throw DomainError("Somos order must be 4, 6 or 8, got " + std::to_string(order));
  }
}

SomosMask full_mask(unsigned order) {
  validate_order(order);
  return SomosMask(order / 2, true);
}

SomosMask parse_mask(const std::string& text, unsigned order) {
  validate_order(order);
  SomosMask mask;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "1") {
      mask.push_back(true);
    } else if (item == "0") {
      mask.push_back(false);
    } else {
      throw DomainError("mask entries must be 0 or 1, got '" + item + "'");
    }
  }
  if (mask.size() != order / 2) {
    throw DomainError("mask for Somos-" + std::to_string(order) + " needs " +
                      std::to_string(order / 2) + " entries");
  }
  return mask;
}

SomosRelation SomosRelation::make(unsigned order, std::vector<Rational> coefficients, SomosMask mask) {
  validate_order(order);
  if (coefficients.size() != order / 2) {
    throw DomainError("Somos-" + std::to_string(order) + " needs " + std::to_string(order / 2) +
                      " coefficients");
  }
  if (mask.empty()) {
    mask.resize(order / 2);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !coefficients[i].is_zero();
  }
  if (mask.size() != order / 2) throw DomainError("mask length mismatch");
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i] && !coefficients[i].is_zero()) {
      throw DomainError("coefficient " + std::to_string(i + 1) + " is masked but nonzero");
    }
  }
  return SomosRelation{order, std::move(coefficients), std::move(mask)};
}

namespace {

// a_{n-i} a_{n-k+i} for i = 1..k/2.
std::vector<Rational> window_products(std::span<const Rational> seq, std::size_t n, unsigned k) {
  std::vector<Rational> out;
  out.reserve(k / 2);
  for (unsigned i = 1; i <= k / 2; ++i) out.push_back(seq[n - i] * seq[n - k + i]);
  return out;
}

}  // namespace

CheckReport somos_check(std::span<const Rational> seq, const SomosRelation& rel) {
  validate_order(rel.order);
  if (seq.size() < rel.order + 1) throw InsufficientTerms(rel.order + 1, seq.size());
  CheckReport report;
  report.order = rel.order;
  for (std::size_t n = rel.order; n < seq.size(); ++n) {
    BilinearCheck row;
    row.n = n;
    row.lhs = seq[n] * seq[n - rel.order];
    const auto w = window_products(seq, n, rel.order);
    for (std::size_t i = 0; i < w.size(); ++i) row.rhs += rel.coefficients[i] * w[i];
    if (!row.holds()) report.failing.push_back(n);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::unique: return "unique";
    case FitStatus::underdetermined: return "underdetermined";
    case FitStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

namespace {

struct System {
  Matrix<Rational> a;
  RationalVector b;
};

System build_rows(std::span<const Rational> seq, unsigned k, const std::vector<std::size_t>& free,
                  std::size_t last_n) {
  const std::size_t rows = last_n - k + 1;
  System sys{Matrix<Rational>(rows, free.size()), RationalVector(rows)};
  for (std::size_t n = k; n <= last_n; ++n) {
    const auto w = window_products(seq, n, k);
    for (std::size_t j = 0; j < free.size(); ++j) sys.a(n - k, j) = w[free[j]];
    sys.b[n - k] = seq[n] * seq[n - k];
  }
  return sys;
}

std::vector<Rational> embed(const RationalVector& reduced, const std::vector<std::size_t>& free,
                            std::size_t width) {
  std::vector<Rational> out(width, Rational(0));
  for (std::size_t j = 0; j < free.size(); ++j) out[free[j]] = reduced[j];
  return out;
}

}  // namespace

FitResult somos_fit(std::span<const Rational> seq, unsigned order, const SomosMask& mask) {
  validate_order(order);
  if (mask.size() != order / 2) throw DomainError("mask length mismatch");
  if (seq.size() < order + 1) throw InsufficientTerms(order + 1, seq.size());

  FitResult fit;
  fit.order = order;
  fit.mask = mask;
  fit.first_n = order;
  fit.last_n = seq.size() - 1;

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) free.push_back(i);
  }
  const std::size_t width = order / 2;

  if (free.empty()) {
    // Nothing to solve for: the all-zero relation either holds or it does not.
    const auto report = somos_check(seq, SomosRelation{order, std::vector<Rational>(width), mask});
    fit.particular.assign(width, Rational(0));
    fit.status = report.passed() ? FitStatus::unique : FitStatus::inconsistent;
    fit.first_failing_n = report.first_failure();
    return fit;
  }

  const System sys = build_rows(seq, order, free, fit.last_n);
  const AffineSolutionSet sol = exact_solve(sys.a, sys.b);
  fit.rank = sol.rank;
  if (!sol.consistent) {
    fit.status = FitStatus::inconsistent;
    // Smallest prefix of rows that is already inconsistent.
    for (std::size_t last = order; last <= fit.last_n; ++last) {
      const System partial = build_rows(seq, order, free, last);
      if (!exact_solve(partial.a, partial.b).consistent) {
        fit.first_failing_n = last;
        break;
      }
    }
    return fit;
  }
  fit.particular = embed(sol.particular, free, width);
  for (const auto& v : sol.basis) fit.basis.push_back(embed(v, free, width));
  fit.status = sol.unique() ? FitStatus::unique : FitStatus::underdetermined;
  if (fit.status == FitStatus::unique) {
    const auto report = somos_check(seq, SomosRelation{order, fit.particular, mask});
    if (!report.passed()) throw std::logic_error("unique Somos fit failed re-verification");
  }
  return fit;
}

bool membership(const FitResult& fit, const std::vector<Rational>& candidate) {
  if (fit.status == FitStatus::inconsistent) return false;
  if (candidate.size() != fit.order / 2) return false;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (!fit.mask[i] && !candidate[i].is_zero()) return false;
  }
  AffineSolutionSet set;
  set.consistent = true;
  set.particular = fit.particular;
  set.basis = fit.basis;
  return set.contains(candidate);
}

}  // namespace seqlab
