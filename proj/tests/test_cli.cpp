#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semihom/serialize.hpp"
#include "semihom_cli/cli.hpp"

using namespace semihom;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("resolve") {
  auto r = invoke({"resolve", "--n", "3", "--d", "2", "--m", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 divisors") != std::string::npos);
  CHECK(r.out.find("E(2,1)  N=4  nu=5") != std::string::npos);

  r = invoke({"resolve", "--n", "3", "--d", "5", "--m", "4", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["chain"]["divisors"].size() == 2);
  CHECK(doc["chain"].get<ResolutionChain>() == build_minimal_resolution(3, 5, 4));
  CHECK(doc["m_divisors"].get<MDivisorList>() == m_divisors(build_minimal_resolution(3, 5, 4)));

  r = invoke({"resolve", "--n", "3", "--d", "2", "--m", "4", "--format", "csv"});
  CHECK(r.out.rfind("kappa,r,N,nu,kind,m_index\n", 0) == 0);
  CHECK(count_lines(r.out) == 5);

  r = invoke({"resolve", "--n", "1", "--d", "2", "--m", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be ≥ 2") != std::string::npos);

  r = invoke({"resolve", "--n", "3", "--d", "1", "--m", "100000"});
  CHECK(r.code == 3);
}

TEST_CASE("cohomology") {
  auto r = invoke({"cohomology", "--n", "3", "--d", "5", "--m", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("H_c^26 = Z^64") != std::string::npos);
  CHECK(r.out.find("H_c^28 = Z\n") != std::string::npos);

  r = invoke({"cohomology", "--n", "3", "--d", "5", "--m", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m < d") != std::string::npos);
  r = invoke({"cohomology", "--n", "3", "--d", "5", "--m", "4", "--format", "csv"});
  CHECK(r.out == "degree,rank,torsion\n");

  r = invoke({"cohomology", "--n", "3", "--d", "1", "--m", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("requires d ≥ 2") != std::string::npos);

  r = invoke({"cohomology", "--n", "4", "--d", "3", "--m", "9", "--format", "json"});
  auto doc = Json::parse(r.out);
  CHECK(doc["cohomology"].get<GradedGroup>() == contact_cohomology(4, 3, 9));
  CHECK(doc["motivic_class"].get<MotivicClass>() == contact_class(4, 3, 9));
}

TEST_CASE("floer") {
  auto r = invoke({"floer", "--n", "3", "--d", "3", "--m", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not determined") != std::string::npos);
  r = invoke({"floer", "--n", "3", "--d", "5", "--m", "10", "--format", "json"});
  auto doc = Json::parse(r.out);
  CHECK(doc["result"].get<FloerResult>() == floer_cohomology(3, 5, 10));
  CHECK(doc["shift"] == 42);
}

TEST_CASE("nash") {
  auto r = invoke({"nash", "--n", "3", "--d", "4", "--m", "8", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).get<ValuationReport>() == valuation_report(3, 4, 8));
  r = invoke({"nash", "--n", "3", "--d", "2", "--m", "4"});
  CHECK(r.out.find("essential=2 contact=1 dlt=0") != std::string::npos);
}

TEST_CASE("scatter") {
  auto r = invoke({"scatter", "--nmax", "40", "--dmax", "40", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 38 * 39 + 1);
  CHECK(r.out.find("\n3,3,pink\n") != std::string::npos);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    int n = 0, d = 0;
    char cls[16] = {};
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%15s", &n, &d, cls) == 3);
    if (d > 2 * n - 2) CHECK(std::string(cls) == "blue");
  }

  auto path = std::filesystem::temp_directory_path() / "semihom_scatter_test.svg";
  r = invoke({"scatter", "--nmax", "10", "--dmax", "10", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.rfind("<svg", 0) == 0);
  std::filesystem::remove(path);

  CHECK(invoke({"scatter", "--nmax", "2", "--dmax", "10"}).code == 2);
  CHECK(invoke({"scatter", "--nmax", "10", "--dmax", "201"}).code == 2);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--f", "x0^2+x1^2+x2^2", "--m", "4", "--primes", "3,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: all strata match") != std::string::npos);

  r = invoke({"verify", "--f",
              R"({"n":3,"terms":[{"exps":[3,0,0],"coeff":1},{"exps":[0,3,0],"coeff":1},{"exps":[0,0,3],"coeff":1}]})",
              "--m", "4", "--primes", "3,5,7", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["match"] == true);
  CHECK(doc["results"][0]["status"] == "skipped");
  CHECK(doc["results"][1]["report"].get<JetCountReport>() ==
        count_contact_jets(fermat(3, 3), 4, 5));

  CHECK(invoke({"verify", "--f", "x0^2+x1^2", "--m", "3", "--primes", "4"}).code == 2);
  CHECK(invoke({"verify", "--f", "x0 + x1", "--m", "3"}).code == 2);
  CHECK(invoke({"verify", "--f", "x0^2+x1^2+x2^2", "--m", "6", "--primes", "7", "--budget", "1000"})
            .code == 3);
}

TEST_CASE("euler") {
  for (auto [n, d, m, value] : {std::tuple{"3", "2", "4", "2"}, std::tuple{"3", "2", "3", "0"},
                                std::tuple{"4", "3", "6", "-15"}}) {
    auto r = invoke({"euler", "--n", n, "--d", d, "--m", m, "--format", "json"});
    CHECK(r.code == 0);
    auto doc = Json::parse(r.out);
    CHECK(doc["euler_characteristic"].dump() == value);
    CHECK(doc["lefschetz_number"].dump() == value);
    CHECK(doc["match"] == true);
  }
}

TEST_CASE("argument errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"resolve", "--n", "3", "--d", "2"}).code == 2);
  CHECK(invoke({"resolve", "--n", "x", "--d", "2", "--m", "3"}).code == 2);
  CHECK(invoke({"resolve", "--n", "3", "--d", "2", "--m", "3", "--format", "xml"}).code == 2);
  CHECK(invoke({"floer", "--n", "3", "--d", "2", "--m", "3", "--format", "csv"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("structured output is deterministic") {
  std::vector<std::vector<std::string>> cases = {
      {"resolve", "--n", "4", "--d", "3", "--m", "20", "--format", "json"},
      {"cohomology", "--n", "5", "--d", "3", "--m", "12", "--format", "json"},
      {"floer", "--n", "3", "--d", "6", "--m", "13", "--format", "json"},
      {"nash", "--n", "4", "--d", "4", "--m", "17", "--format", "json"},
      {"scatter", "--nmax", "12", "--dmax", "12", "--format", "json"},
      {"verify", "--f", "x0^2+x1^2+x2^2+x0^3", "--m", "3", "--format", "json"},
      {"euler", "--n", "3", "--d", "4", "--m", "8", "--format", "json"},
  };
  for (const auto& args : cases) {
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
  }
}
