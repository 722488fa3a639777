#include "seqlab/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "seqlab/cfexpr/expand.hpp"
#include "seqlab/cfexpr/parser.hpp"
#include "seqlab/cli/io.hpp"
#include "seqlab/conjectures/report.hpp"
#include "seqlab/error.hpp"
#include "seqlab/hankel/hankel.hpp"
#include "seqlab/riordan/families.hpp"

namespace seqlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string expr;
  std::string params;
  std::string symbolic;
  std::string method = "fixpoint";
  std::size_t terms = 0;
  std::optional<std::size_t> hankel_terms;
  unsigned order = 4;
  std::string mask;
  std::string coeffs;
  std::string input = "-";
  std::string output = "-";
  std::string format;
  std::string conjecture;
  std::string artifacts;
  std::vector<std::string> grid;
  unsigned jobs = 0;
  bool no_header = false;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::vector<RingElem> read(const std::string& path) {
    if (path == "-") return read_column(in_);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open input file '" + path + "'");
    return read_column(f);
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    f << text;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::string header(const std::string& verb, const Options& o) {
  if (o.no_header) return "";
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return "# seqlab " + verb + " " + stamp + "\n";
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ",") + i;
  return s;
}

// Parameter names and numeric bindings for a family or a free expression.
struct Target {
  cf::Expr expr;
  std::optional<FamilyId> family;
  Bindings numeric;
  std::vector<std::string> symbols;
};

Target resolve_target(const Options& o) {
  if (o.family.empty() == o.expr.empty()) throw UsageError("give exactly one of --family or --expr");
  Bindings given = parse_bindings(o.params);
  std::vector<std::string> symbols = split_list(o.symbolic);
  std::sort(symbols.begin(), symbols.end());
  for (const auto& s : symbols) {
    if (given.count(s)) throw UsageError("parameter '" + s + "' is both bound and symbolic");
  }
  if (!o.expr.empty()) {
    std::vector<std::string> names = symbols;
    for (const auto& [k, v] : given) names.push_back(k);
    return Target{cf::parse(o.expr, names), std::nullopt, given, symbols};
  }
  const FamilyId id = parse_family(o.family);
  const auto names = param_names(id);
  for (const auto& s : symbols) {
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw UsageError("family " + o.family + " has no parameter '" + s + "'");
    }
  }
  Bindings numeric;
  if (symbols.empty()) {
    numeric = resolve_params(id, given);
  } else {
    for (const auto& [k, v] : given) {
      if (std::find(names.begin(), names.end(), k) == names.end()) {
        throw UsageError("family " + o.family + " has no parameter '" + k + "'");
      }
    }
    for (const auto& spec : family_info(id).params) {
      if (given.count(spec.name)) {
        numeric[spec.name] = given.at(spec.name);
      } else if (std::find(symbols.begin(), symbols.end(), spec.name) == symbols.end()) {
        if (!spec.fallback) throw UsageError("family " + o.family + " needs parameter '" + spec.name + "'");
        numeric[spec.name] = *spec.fallback;
      }
    }
  }
  return Target{family_expression(id), id, numeric, symbols};
}

template <Ring R>
cf::ParamValues<R> values_for(const Target& t) {
  cf::ParamValues<R> out = cf::lift<R>(t.numeric);
  if constexpr (std::is_same_v<R, Poly>) {
    for (const auto& s : t.symbols) out.emplace(s, Poly::variable(s));
  }
  return out;
}

template <Ring R>
std::vector<R> expand_target(const Target& t, const std::string& method, std::size_t terms) {
  const auto params = values_for<R>(t);
  const std::size_t order = terms - 1;
  std::vector<R> c;
  if (method == "fixpoint") {
    c = cf::expand_fixpoint<R>(t.expr, params, order).coefficients();
  } else if (method == "quadratic") {
    c = cf::expand_quadratic<R>(t.expr, params, order).coefficients();
  } else if (method == "riordan" || method == "sum") {
    if (!t.family) throw UsageError("--method " + method + " needs --family");
    if (method == "sum") return family_sequence<R>(*t.family, params, terms);
    c = catalan_form_series<R>(*t.family, params, order).coefficients();
  } else {
    throw UsageError("unknown --method '" + method + "'");
  }
  c.resize(terms, R(0));
  return c;
}

std::vector<RingElem> expand_elems(const Target& t, const std::string& method, std::size_t terms) {
  if (t.symbols.empty()) {
    const auto v = expand_target<Rational>(t, method, terms);
    return wrap<Rational>(v);
  }
  const auto v = expand_target<Poly>(t, method, terms);
  return wrap<Poly>(v);
}

std::size_t max_hankel_index(std::size_t terms) {
  if (terms == 0) throw InsufficientTerms(1, 0);
  return (terms - 1) / 2;
}

FitResult fit_column(const std::vector<RingElem>& seq, unsigned order, const std::string& mask_text) {
  validate_order(order);
  const SomosMask mask = mask_text.empty() ? full_mask(order) : parse_mask(mask_text, order);
  const auto values = to_rationals(seq);
  return somos_fit(values, order, mask);
}

int run_expand(const Options& o, Io& io) {
  if (o.terms == 0) throw UsageError("--terms must be at least 1");
  const Target t = resolve_target(o);
  io.write(o.output, header("expand", o) + write_column(expand_elems(t, o.method, o.terms)));
  return kOk;
}

int run_hankel(const Options& o, Io& io) {
  const auto seq = io.read(o.input);
  const std::size_t m = o.hankel_terms ? *o.hankel_terms : max_hankel_index(seq.size());
  io.write(o.output, header("hankel", o) + write_column(hankel_transform(std::span<const RingElem>(seq), m)));
  return kOk;
}

int run_check(const Options& o, Io& io) {
  const auto coeffs = parse_rationals(o.coeffs);
  const SomosMask mask = o.mask.empty() ? SomosMask{} : parse_mask(o.mask, o.order);
  const auto rel = SomosRelation::make(o.order, coeffs, mask);
  const auto values = to_rationals(io.read(o.input));
  const CheckReport report = somos_check(values, rel);
  std::string text = header("check", o);
  if (o.format == "report") {
    nlohmann::ordered_json j;
    j["order"] = o.order;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) j["coefficients"].push_back(to_string(c));
    j["passed"] = report.passed();
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
      j["rows"].push_back({{"n", row.n}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"holds", row.holds()}});
    }
    text = j.dump(2) + "\n";
  } else {
    text += "n,lhs,rhs,holds\n";
    for (const auto& row : report.rows) {
      text += std::to_string(row.n) + "," + to_string(row.lhs) + "," + to_string(row.rhs) + "," +
              (row.holds() ? "yes" : "no") + "\n";
    }
    text += "# " + std::string(report.passed() ? "pass" : "fail") + " rows=" + std::to_string(report.rows.size()) +
            " failing=" + std::to_string(report.failing.size()) + "\n";
  }
  io.write(o.output, text);
  return report.passed() ? kOk : kDomainError;
}

nlohmann::ordered_json fit_json(const FitResult& fit) {
  nlohmann::ordered_json j;
  j["order"] = fit.order;
  j["status"] = to_string(fit.status);
  j["rank"] = fit.rank;
  j["first_n"] = fit.first_n;
  j["last_n"] = fit.last_n;
  j["first_failing_n"] = fit.first_failing_n ? nlohmann::ordered_json(*fit.first_failing_n) : nlohmann::ordered_json();
  j["particular"] = nlohmann::ordered_json::array();
  for (const auto& v : fit.particular) j["particular"].push_back(to_string(v));
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : fit.basis) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : b) row.push_back(to_string(v));
    j["basis"].push_back(row);
  }
  return j;
}

int run_fit(const Options& o, Io& io) {
  const FitResult fit = fit_column(io.read(o.input), o.order, o.mask);
  if (o.format == "report") {
    io.write(o.output, fit_json(fit).dump(2) + "\n");
  } else {
    io.write(o.output, header("fit", o) + write_fit(fit));
  }
  return kOk;
}

std::string mask_text(const SomosMask& mask) {
  std::vector<std::string> bits;
  for (bool b : mask) bits.push_back(b ? "1" : "0");
  return join(bits);
}

int run_verify(const Options& o, Io& io) {
  if (o.conjecture.empty()) throw UsageError("verify needs --conjecture");
  const ConjectureInfo& info = conjecture_info(o.conjecture);
  const CaseReport r = run_case(ConjectureCase{info.id, parse_bindings(o.params), o.terms,
                                               o.hankel_terms.value_or(0)});
  if (!o.artifacts.empty()) {
    const std::filesystem::path dir(o.artifacts);
    std::filesystem::create_directories(dir);
    io.write((dir / "sequence.csv").string(), write_column(r.sequence));
    io.write((dir / "hankel.csv").string(), write_column(r.hankel));
    if (r.fit) io.write((dir / "fit.csv").string(), write_fit(*r.fit));
    io.write((dir / "report.json").string(), to_json(r).dump(2) + "\n");
    io.write((dir / "mask.txt").string(), mask_text(info.mask) + "\n");
  }
  if (o.format == "table") {
    SweepResult s{r.id, {r}, {}};
    s.summary.confirmed = r.verdict == Verdict::confirmed;
    s.summary.refuted = r.verdict == Verdict::refuted;
    s.summary.degenerate = is_degenerate(r.verdict);
    io.write(o.output, to_table(s));
  } else {
    io.write(o.output, to_json(r).dump(2) + "\n");
  }
  return r.verdict == Verdict::pole || r.verdict == Verdict::error ? kDomainError : kOk;
}

int run_sweep(const Options& o, Io& io) {
  if (o.conjecture.empty()) throw UsageError("sweep needs --conjecture");
  Grid grid;
  for (const auto& axis : o.grid) {
    auto [name, values] = parse_grid_axis(axis);
    if (!grid.emplace(name, std::move(values)).second) throw UsageError("grid axis '" + name + "' given twice");
  }
  const SweepResult s = sweep(o.conjecture, grid, o.terms, o.hankel_terms.value_or(0), o.jobs);
  io.write(o.output, o.format == "table" ? to_table(s) : to_json(s).dump(2) + "\n");
  return kOk;
}

template <Ring R>
std::string catalan_lines(FamilyId id, const Target& t, std::size_t terms) {
  const auto params = values_for<R>(t);
  const auto arr = catalan_form<R>(id, params, terms - 1);
  std::string s;
  auto line = [&](const std::string& name, const Series<R>& series) {
    std::vector<std::string> items;
    for (std::size_t i = 0; i < terms && i <= series.order(); ++i) items.push_back(to_string(series[i]));
    s += name + ": " + join(items) + "\n";
  };
  line("catalan_g", arr.g());
  line("catalan_m", arr.multiplier());
  const auto via_riordan = catalan_form_series<R>(id, params, terms - 1);
  const auto via_cf = cf::expand_fixpoint<R>(t.expr, params, terms - 1);
  s += std::string("catalan_agrees_with_cf: ") + (via_riordan.coefficients() == via_cf.coefficients() ? "yes" : "no") +
       "\n";
  return s;
}

int run_cf(const Options& o, Io& io) {
  const Target t = resolve_target(o);
  std::string s = "expression: " + t.expr.to_string() + "\n";
  s += "parameters: " + join(t.expr.params()) + "\n";
  s += "g_degree: " + std::to_string(t.expr.cleared_g_degree()) + "\n";
  if (t.family) {
    const auto& info = family_info(*t.family);
    if (!info.catalan_form_note.empty()) s += "note: " + info.catalan_form_note + "\n";
    const std::size_t terms = o.terms ? o.terms : 8;
    s += t.symbols.empty() ? catalan_lines<Rational>(*t.family, t, terms) : catalan_lines<Poly>(*t.family, t, terms);
  }
  io.write(o.output, s);
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel-transform and Somos-recurrence laboratory", "seqlab"};
  app.require_subcommand(1);
  Options o;

  auto* expand = app.add_subcommand("expand", "Power-series coefficients of a generating function as CSV");
  auto* hankel = app.add_subcommand("hankel", "Hankel transform h_0..h_m of a CSV sequence");
  auto* check = app.add_subcommand("check", "Check a Somos relation on a CSV sequence");
  auto* fit = app.add_subcommand("fit", "Fit Somos coefficients to a CSV sequence");
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline for one conjecture case");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a conjecture over a parameter grid");
  auto* cf_cmd = app.add_subcommand("cf", "Inspect a continued-fraction equation and its Catalan form");

  for (auto* sub : {expand, cf_cmd}) {
    sub->add_option("--family", o.family, "Family id (ex1, conj1..conj8, ex5a, ex6a, ex6b)");
    sub->add_option("--expr", o.expr, "Equation right-hand side E(x, g)");
    sub->add_option("--params", o.params, "Numeric bindings, e.g. r=1,s=-2/3");
    sub->add_option("--symbolic", o.symbolic, "Parameters kept as polynomial variables, e.g. r,s");
  }
  expand->add_option("--terms", o.terms, "Number of coefficients")->required();
  expand->add_option("--method", o.method, "fixpoint, quadratic, riordan or sum")
      ->check(CLI::IsMember({"fixpoint", "quadratic", "riordan", "sum"}));
  cf_cmd->add_option("--terms", o.terms, "Number of Catalan-form coefficients shown");

  for (auto* sub : {hankel, check, fit}) sub->add_option("--input", o.input, "Input CSV, '-' for stdin");
  hankel->add_option("--hankel-terms", o.hankel_terms, "Largest Hankel index m");
  for (auto* sub : {check, fit}) {
    sub->add_option("--order", o.order, "Somos order k (even, >= 4)")->required();
    sub->add_option("--mask", o.mask, "Free coefficients, e.g. 1,0,1");
  }
  check->add_option("--coeffs", o.coeffs, "Coefficients c_1..c_{k/2}")->required();

  for (auto* sub : {verify, sweep_cmd}) {
    sub->add_option("--conjecture", o.conjecture, "C1..C8, EX1R, EX5A, EX5B, EX6A, EX6B")->required();
    sub->add_option("--terms", o.terms, "Sequence length (default by Somos order)");
    sub->add_option("--hankel-terms", o.hankel_terms, "Largest Hankel index m (default by Somos order)");
  }
  verify->add_option("--params", o.params, "Numeric bindings, e.g. r=1,s=2");
  verify->add_option("--artifacts", o.artifacts, "Directory for intermediate CSV files and the report");
  sweep_cmd->add_option("--grid", o.grid, "Axis name=lo..hi or name=v1,v2 (repeatable)");
  sweep_cmd->add_option("--jobs", o.jobs, "Worker threads (0: hardware concurrency)");

  for (auto* sub : {check, fit}) {
    sub->add_option("--format", o.format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
  }
  for (auto* sub : {verify, sweep_cmd}) {
    sub->add_option("--format", o.format, "report or table")->check(CLI::IsMember({"report", "table"}));
  }
  for (auto* sub : {expand, hankel, check, fit, verify, sweep_cmd, cf_cmd}) {
    sub->add_option("--output", o.output, "Output path, '-' for stdout");
    sub->add_flag("--no-header", o.no_header, "Omit the timestamped header comment");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  Io io(in, out);
  try {
    if (expand->parsed()) return run_expand(o, io);
    if (hankel->parsed()) return run_hankel(o, io);
    if (check->parsed()) return run_check(o, io);
    if (fit->parsed()) return run_fit(o, io);
    if (verify->parsed()) return run_verify(o, io);
    if (sweep_cmd->parsed()) return run_sweep(o, io);
    return run_cf(o, io);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace seqlab::cli
