#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "seqlab/cli/cli.hpp"
#include "seqlab/cli/io.hpp"
#include "seqlab/error.hpp"

using namespace seqlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("seqlab-cli-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("io helpers") {
  std::istringstream in("# header\n1\n\n-1/2\n3\n");
  const auto col = cli::read_column(in);
  REQUIRE(col.size() == 3);
  CHECK(cli::write_column(col) == "1\n-1/2\n3\n");
  const auto b = cli::parse_bindings("r=1, s=-2/3");
  CHECK(b.at("s") == Rational::parse("-2/3"));
  CHECK(cli::parse_bindings("").empty());
  CHECK_THROWS(cli::parse_bindings("r"));
  CHECK(cli::split_list(" a , b,c") == std::vector<std::string>{"a", "b", "c"});
  const auto [name, values] = cli::parse_grid_axis("r=-1..2");
  CHECK(name == "r");
  CHECK(values.size() == 4);
  CHECK(cli::parse_grid_axis("t=0,1/2").second[1] == Rational::parse("1/2"));
  CHECK(cli::parse_grid_axis("r=3..1").second.empty());
  CHECK_THROWS(cli::parse_grid_axis("r3..1"));
}

TEST_CASE("expand prints the example sequence") {
  const auto r = run({"expand", "--family", "ex1", "--terms", "11", "--no-header"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1\n1\n3\n7\n19\n51\n143\n407\n1183\n3487\n10415\n");
  for (const std::string method : {"quadratic", "riordan", "sum"}) {
    CHECK(run({"expand", "--family", "ex1", "--terms", "11", "--no-header", "--method", method}).out == r.out);
  }
  const auto with_header = run({"expand", "--family", "ex1", "--terms", "3"});
  CHECK(with_header.out.rfind("# seqlab expand ", 0) == 0);
}

TEST_CASE("expand with a symbolic parameter") {
  const auto r = run({"expand", "--family", "conj7", "--symbolic", "r", "--terms", "4", "--no-header"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1\n1\n2\n4 + r\n");
  const auto e = run({"expand", "--expr", "1 + x*g^2", "--terms", "6", "--no-header"});
  CHECK(e.out == "1\n1\n2\n5\n14\n42\n");
}

TEST_CASE("hankel, check and fit on a Somos-6 column") {
  const std::string h = "1\n3\n2\n-23\n-231\n-1987\n-41482\n";
  const auto ok = run({"check", "--order", "6", "--coeffs", "9,0,23", "--input", "-", "--no-header"}, h);
  CHECK(ok.code == cli::kOk);
  const auto bad = run({"check", "--order", "6", "--coeffs", "9,0,24", "--input", "-", "--no-header"}, h);
  CHECK(bad.code == cli::kDomainError);
  const auto fit = run({"fit", "--order", "6", "--mask", "1,0,1", "--input", "-", "--no-header"}, h);
  CHECK(fit.code == cli::kOk);
  CHECK(fit.out.find("status=underdetermined") != std::string::npos);
  const auto catalan = run({"hankel", "--input", "-", "--hankel-terms", "2", "--no-header"}, "1\n1\n2\n5\n14\n");
  CHECK(catalan.out == "1\n1\n1\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"expand", "--family", "ex1"}).code == cli::kUsageError);
  CHECK(run({"expand", "--family", "nope", "--terms", "3"}).code == cli::kDomainError);
  CHECK(run({"expand", "--expr", "1 + x*", "--terms", "3"}).code == cli::kDomainError);
  CHECK(run({"hankel", "--input", "-", "--hankel-terms", "4"}, "1\n2\n").code == cli::kDomainError);
  CHECK(run({"check", "--order", "5", "--coeffs", "1,1", "--input", "-"}, "1\n1\n1\n1\n1\n1\n").code ==
        cli::kDomainError);
  CHECK(run({"verify", "--conjecture", "C7", "--params", "r=3", "--terms", "25", "--hankel-terms", "12"}).code ==
        cli::kDomainError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify report") {
  const auto r = run({"verify", "--conjecture", "EX1R", "--params", "r=1"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "confirmed");
  CHECK(j["predicted"] == nlohmann::json::array({"0", "4"}));
  CHECK(j["fit_solution"] == nlohmann::json::array({"0", "4"}));
  CHECK(j["hankel"][4] == "64");
  CHECK(run({"verify", "--conjecture", "EX1R", "--params", "r=1"}).out == r.out);
}

TEST_CASE("sweep table and report") {
  const auto t = run({"sweep", "--conjecture", "C1", "--grid", "r=0..1", "--grid", "s=1,2", "--terms", "13",
                      "--hankel-terms", "6", "--format", "table"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.find("confirmed") != std::string::npos);
  const auto j = run({"sweep", "--conjecture", "C1", "--grid", "r=0..1", "--grid", "s=1,2", "--terms", "13",
                      "--hankel-terms", "6", "--jobs", "2"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["summary"]["cases"] == 4);
  CHECK(parsed["summary"]["refuted"] == 0);
}

TEST_CASE("cf inspection") {
  const auto r = run({"cf", "--family", "ex1", "--terms", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("catalan_agrees_with_cf") != std::string::npos);
}

TEST_CASE("stages compose to the verify artifacts") {
  const auto dir = scratch("compose");
  const std::string seq = (dir / "seq.csv").string();
  const std::string hk = (dir / "hankel.csv").string();
  const std::string ft = (dir / "fit.csv").string();
  REQUIRE(run({"expand", "--family", "ex1", "--params", "r=1", "--terms", "40", "--no-header", "--output", seq})
              .code == cli::kOk);
  REQUIRE(run({"hankel", "--input", seq, "--hankel-terms", "12", "--no-header", "--output", hk}).code == cli::kOk);
  REQUIRE(run({"fit", "--order", "4", "--input", hk, "--no-header", "--output", ft}).code == cli::kOk);
  const auto art = dir / "artifacts";
  REQUIRE(run({"verify", "--conjecture", "EX1R", "--params", "r=1", "--artifacts", art.string()}).code == cli::kOk);
  CHECK(slurp(art / "sequence.csv") == slurp(seq));
  CHECK(slurp(art / "hankel.csv") == slurp(hk));
  CHECK(slurp(art / "fit.csv") == slurp(ft));
  CHECK(slurp(art / "mask.txt") == "1,1\n");
  CHECK(nlohmann::json::parse(slurp(art / "report.json"))["verdict"] == "confirmed");
  fs::remove_all(dir);
}

TEST_CASE("binary pipes through stdin and stdout") {
  const std::string cli = SEQLAB_CLI_PATH;
  const auto dir = scratch("pipe");
  const auto out = dir / "out.txt";
  const std::string cmd = "\"" + cli + "\" expand --family ex1 --terms 9 | \"" + cli +
                          "\" hankel --input - --hankel-terms 4 --no-header > \"" + out.string() + "\"";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out) == "1\n2\n4\n16\n64\n");
  const std::string fail = "\"" + cli + "\" expand --terms 3 >/dev/null 2>&1";
  const int status = std::system(fail.c_str());
  CHECK(WEXITSTATUS(status) == cli::kUsageError);
  fs::remove_all(dir);
}
