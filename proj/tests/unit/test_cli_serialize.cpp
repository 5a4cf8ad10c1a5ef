#include <regex>
#include <sstream>

#include "jack/cli.hpp"
#include "jack/jack_graph.hpp"
#include "jack/serialize.hpp"
#include "support.hpp"

using namespace jack;
using namespace jack::testing;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "jack");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return CliRun{code, out.str(), err.str()};
}

bool all_fractions(const Json& coeffs) {
  static const std::regex fraction("-?[0-9]+/[1-9][0-9]*");
  for (const Json& c : coeffs) {
    if (!std::regex_match(c.get<std::string>(), fraction)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("field elements round trip through JSON") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const KField x = random_kfield(rng, 3);
    const Json j = kfield_to_json(x);
    CHECK(all_fractions(j.at("num")));
    CHECK(all_fractions(j.at("den")));
    CHECK(kfield_from_json(j) == x);
    CHECK(kfield_from_json(Json::parse(j.dump())) == x);
  }
  CHECK(kfield_to_json(KField(2L)).dump() == R"({"den":["1/1"],"num":["2/1"]})");
  CHECK_THROWS_AS(kfield_from_json(Json::parse(R"({"num":["1/1"]})")), Error);
  CHECK_THROWS_AS(kfield_from_json(Json::parse(R"({"num":["1/1"],"den":[]})")), Error);
}

TEST_CASE("polynomials round trip through JSON") {
  const HookLabel label = HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}));
  const SuperPoly j = build_jack(comp({0, 1, 1, 0}), label);
  CHECK(superpoly_from_json(superpoly_to_json(j)) == j);
  const FermionPoly t = build_T(label);
  const Json tj = fermion_to_json(t);
  CHECK(tj.at("N") == 4);
  CHECK(tj.at("m") == 2);
  CHECK(fermion_from_json(tj) == t);
  const Json lj = label_to_json(label);
  CHECK(lj.at("E") == Json::array({2, 3, 4}));
  CHECK(lj.at("family") == 0);
  CHECK(lj.at("T_norm_sq") == "3/1");
}

TEST_CASE("FNV-1a digests") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("command line: successful runs") {
  const CliRun tableau = run({"tableau", "--N", "8", "--m", "3", "--set", "2,5,7,8"});
  CHECK(tableau.code == kExitOk);
  CHECK(tableau.out.find("row: 8,6,4,3,1") != std::string::npos);
  CHECK(tableau.out.find("col: 7,5,2") != std::string::npos);

  const CliRun norm = run({"--json", "norm", "--N", "4", "--m", "2", "--set", "2,3,4", "--alpha", "0,1,1,0", "--oracle"});
  CHECK(norm.code == kExitOk);
  const Json nj = Json::parse(norm.out);
  CHECK(nj.at("oracle_agrees") == true);
  CHECK(kfield_from_json(nj.at("value")) ==
        KField(3L) * lin(1, -3) * lin(1, 2) * lin(1, -1) / (lin(1, 1) * lin(1, -2)));

  const CliRun series = run({"series", "--N", "6", "--m", "2"});
  CHECK(series.code == kExitOk);
  CHECK(series.out.find("0,0,0,1,1,2,2,2,1,1") != std::string::npos);

  const CliRun minnorm = run({"--json", "minnorm", "--N", "4", "--m", "1", "--s", "0", "--k", "1"});
  CHECK(minnorm.code == kExitOk);

  const CliRun generators = run({"--json", "generators", "--N", "4", "--m", "2", "--family", "1", "--degree", "5"});
  CHECK(generators.code == kExitOk);
  const Json gj = Json::parse(generators.out);
  CHECK(gj.at("consistent") == true);
  CHECK(gj.at("degrees").size() == 6);
  CHECK(gj.at("degrees")[5].at("tableaux") == "10");

  const CliRun selftest = run({"selftest", "--only", "6"});
  CHECK(selftest.code == kExitOk);
  CHECK(selftest.out.find("PASS") != std::string::npos);
}

TEST_CASE("command line: output is deterministic") {
  const std::vector<std::string> args{"--json", "build", "--N", "4", "--m", "2", "--set", "2,3,4", "--alpha", "1,0,2,0"};
  const CliRun first = run(args);
  clear_jack_cache();
  const CliRun second = run(args);
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);
  const CliRun pretty = run({"build", "--pretty", "--N", "4", "--m", "2", "--set", "2,3,4", "--alpha", "1,0,2,0"});
  CHECK(pretty.code == kExitOk);
  CHECK(superpoly_from_json(Json::parse(first.out)) == build_jack(comp({1, 0, 2, 0}), HookLabel::make(Family::Zero, 2, set_of(4, {2, 3, 4}))));
}

TEST_CASE("command line: failures map to exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"build", "--N", "4", "--m", "2", "--set", "2,3,4", "--alpha", "0,1,x,0"}).code == kExitUsage);
  CHECK(run({"build", "--N", "5", "--m", "2", "--set", "2,3,4", "--alpha", "0,1,1,0"}).code == kExitUsage);
  CHECK(run({"series", "--N", "6"}).code == kExitUsage);
  CHECK(run({"generators", "--N", "4", "--m", "2", "--kappa0", "x"}).code == kExitUsage);
  const CliRun rejected = run({"supernorm", "--N", "4", "--m", "2", "--set", "2,3,4", "--lambda", "2,1,1,0"});
  CHECK(rejected.code == kExitPrecondition);
  CHECK(rejected.err.find("NotColumnStrict") != std::string::npos);
  const CliRun big = run({"tableau", "--N", "13", "--m", "2", "--set", "11,12,13"});
  CHECK(big.code == kExitPrecondition);
  CHECK(big.err.find("LimitExceeded") != std::string::npos);
  CHECK(run({"--unsafe-limits", "tableau", "--N", "13", "--m", "2", "--set", "11,12,13"}).code == kExitOk);
  CHECK(run({"build", "--N", "3", "--m", "1", "--set", "2,3", "--alpha", "21,0,0"}).code == kExitPrecondition);
}
