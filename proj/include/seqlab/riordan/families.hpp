#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/cfexpr/ast.hpp"
#include "seqlab/cfexpr/expand.hpp"
#include "seqlab/riordan/riordan.hpp"

namespace seqlab {

// Generating-function families g = 1/(A(x) - B(x) g).
enum class FamilyId { ex1, conj1, conj2, conj3, conj4, conj5, conj6, conj7, conj8, ex5a, ex6a, ex6b };

struct ParamSpec {
  std::string name;
  std::optional<Rational> fallback;
};

struct FamilyInfo {
  FamilyId id;
  std::string name;
  std::vector<ParamSpec> params;
  std::string cf_text;   // continued-fraction equation in the expression DSL
  bool has_closed_form;  // binomial-sum formula for g_n available
  // Where a printed Catalan-form denominator is inconsistent with the
  // continued fraction; empty when they agree.
  std::string catalan_form_note;
};

const std::vector<FamilyInfo>& all_families();
const FamilyInfo& family_info(FamilyId id);
FamilyId parse_family(const std::string& name);
std::vector<std::string> param_names(FamilyId id);

// Fills defaults and rejects unknown or missing names.
Bindings resolve_params(FamilyId id, const Bindings& given);

cf::Expr family_expression(FamilyId id);

// Which binomial sum to evaluate. `printed` transcribes the displayed
// formula literally; `amended` is the sum that actually expands the
// Catalan form. They coincide for ex1, conj6 and conj7.
enum class SumVariant { amended, printed };

bool printed_sum_differs(FamilyId id);

template <Ring R>
RiordanArray<R> catalan_form(FamilyId id, const cf::ParamValues<R>& params, std::size_t order);

// Riordan array applied to the Catalan numbers, through `order`.
template <Ring R>
Series<R> catalan_form_series(FamilyId id, const cf::ParamValues<R>& params, std::size_t order);

template <Ring R>
R closed_form_gn(FamilyId id, const cf::ParamValues<R>& params, std::size_t n,
                 SumVariant variant = SumVariant::amended);

template <Ring R>
std::vector<R> family_sequence(FamilyId id, const cf::ParamValues<R>& params, std::size_t count,
                               SumVariant variant = SumVariant::amended);

}  // namespace seqlab
