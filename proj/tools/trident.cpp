// Command-line front end: triples, family curves, sieving, certificates and
// the reproduction suite.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "trident/family_uv.hpp"
#include "trident/json_io.hpp"
#include "trident/repro.hpp"
#include "trident/sieve.hpp"
#include "trident/triples.hpp"

using namespace trident;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rat> parse_all(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  for (const auto& s : xs) out.push_back(parse_rat(s));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json curve_json(const SplitCurve& S) {
  return {{"roots", {to_json(S.e1), to_json(S.e2), to_json(S.e3)}}, {"curve", to_json(S.curve())}};
}

json induced_json(const DiophTriple& T) {
  InducedCurve I = induced_curve(T);
  json j = curve_json(I.curve);
  j["P"] = to_json(I.P);
  j["S"] = to_json(I.S);
  return j;
}

int cmd_triple(const std::vector<std::string>& args) {
  auto q = parse_all(args);
  DiophTriple T = validate_triple(q[0], q[1], q[2]);
  json out = to_json(T);
  out["induced"] = induced_json(T);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_build(const std::vector<std::string>& uv, const std::vector<std::string>& t, const std::string& cuboid) {
  int given = !uv.empty() + !t.empty() + !cuboid.empty();
  if (given != 1) throw UsageError("build needs exactly one of --uv, --t, --cuboid");
  json out;
  DiophTriple T;
  if (!uv.empty()) {
    auto v = parse_all(uv);
    UVParams q{v[0], v[1]};
    TripleParams p = uv_to_t(q);
    T = uv_to_triple(q);
    UVFamilyCurve F = uv_curve(q);
    out["params"] = {{"u", to_json(q.u)}, {"v", to_json(q.v)}};
    out["t"] = {to_json(p.t1), to_json(p.t2), to_json(p.t3)};
    json sec;
    sec["P"] = to_json(F.P);
    sec["R"] = to_json(F.R);
    sec["T1"] = to_json(F.T1);
    sec["T2"] = to_json(F.T2);
    sec["T3"] = to_json(F.T3);
    out["model"] = {{"A", to_json(F.A)}, {"B", to_json(F.B)}, {"sections", sec}};
  } else if (!t.empty()) {
    auto v = parse_all(t);
    TripleParams p{v[0], v[1], v[2]};
    T = lasic(p);
    out["t"] = {to_json(p.t1), to_json(p.t2), to_json(p.t3)};
    auto sq = square_conditions(p);
    out["square_conditions"] = {sq[0], sq[1], sq[2]};
  } else {
    Rat m = parse_rat(cuboid);
    TripleParams p = cuboid_params(m);
    CuboidSides s = cuboid_sides(m);
    T = lasic(p);
    out["m"] = to_json(m);
    out["sides"] = {to_json(s.s1), to_json(s.s2), to_json(s.s3), to_json(s.s4)};
    out["t"] = {to_json(p.t1), to_json(p.t2), to_json(p.t3)};
  }
  out["triple"] = to_json(T);
  out["induced"] = induced_json(T);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_sieve(const SieveConfig& cfg) {
  for (const SieveRecord& r : sieve_grid(cfg)) std::cout << to_json(r).dump() << "\n";
  return kOk;
}

int cmd_certify(const std::string& curve_path, const std::string& points_path, int expect) {
  CurveQ E = curve_from_json(read_json_file(curve_path));
  json pj = read_json_file(points_path);
  if (pj.is_object() && pj.contains("points")) pj = pj["points"];
  auto pts = points_from_json(pj);
  IndependenceCertificate c = independence_bound(E, pts, curve_path);
  std::cout << to_json(c).dump(2) << "\n";
  return expect >= 0 && c.bound < expect ? kFail : kOk;
}

int cmd_reproduce(const std::string& suite, bool text, bool timing) {
  ReproReport rep = reproduce(suite);
  if (text) {
    for (const auto& c : rep.checks) {
      std::cout << status_name(c.status) << " " << c.name;
      if (!c.detail.empty()) std::cout << "  " << c.detail;
      std::cout << "\n";
      if (c.status == Status::Fail) std::cout << "  witness: " << c.witness.dump() << "\n";
    }
    std::cout << rep.count(Status::Pass) << " passed, " << rep.count(Status::Fail) << " failed, "
              << rep.count(Status::Skip) << " skipped\n";
  } else {
    std::cout << rep.to_json(timing).dump(2) << "\n";
  }
  return rep.ok() ? kOk : kFail;
}

int threads_from_env() {
  const char* s = std::getenv("TRIDENT_THREADS");
  if (!s || !*s) return 0;
  try {
    int n = std::stoi(s);
    if (n < 1) throw UsageError("TRIDENT_THREADS must be a positive integer");
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("TRIDENT_THREADS must be a positive integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic curves from rational Diophantine triples"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (overrides TRIDENT_THREADS)")->check(CLI::PositiveNumber);

  auto* triple = app.add_subcommand("triple", "triple utilities");
  triple->require_subcommand(1);
  auto* validate = triple->add_subcommand("validate", "check that a, b, c form a rational Diophantine triple");
  std::vector<std::string> abc;
  validate->add_option("abc", abc, "a b c")->expected(3)->required();

  auto* build = app.add_subcommand("build", "triple and induced curve from parameters");
  std::vector<std::string> uv, tt;
  std::string cuboid;
  build->add_option("--uv", uv, "u v")->expected(2);
  build->add_option("--t", tt, "t1 t2 t3")->expected(3);
  build->add_option("--cuboid", cuboid, "m");

  auto* sieve = app.add_subcommand("sieve", "Mestre-Nagao search over the (u,v) family");
  SieveConfig cfg;
  sieve->add_option("--u-num-max", cfg.u_num_max)->check(CLI::NonNegativeNumber);
  sieve->add_option("--u-den-max", cfg.u_den_max)->check(CLI::NonNegativeNumber);
  sieve->add_option("--v-num-max", cfg.v_num_max)->check(CLI::NonNegativeNumber);
  sieve->add_option("--v-den-max", cfg.v_den_max)->check(CLI::NonNegativeNumber);
  sieve->add_flag("--diag", cfg.diag, "only u = v");
  sieve->add_option("--n1", cfg.n1, "first prime cutoff")->check(CLI::PositiveNumber);
  sieve->add_option("--n2", cfg.n2, "second prime cutoff")->check(CLI::PositiveNumber);
  sieve->add_option("--s1-min", cfg.s1_min, "first stage threshold");
  sieve->add_option("--s2-min", cfg.s2_min, "second stage threshold");
  sieve->add_flag("--certify", cfg.certify, "run the descent on cells passing both stages");
  sieve->add_flag("--root-number", cfg.root_number_filter, "require root number 1 (not implemented)");

  auto* certify = app.add_subcommand("certify", "rank lower bound by 2-descent");
  std::string curve_path, points_path;
  int expect = -1;
  certify->add_option("--curve", curve_path, "JSON curve file")->required();
  certify->add_option("--points", points_path, "JSON point list file")->required();
  certify->add_option("--expect", expect, "exit 1 when the bound is below this");

  auto* repro = app.add_subcommand("reproduce", "run the reproduction suite");
  std::string suite;
  std::vector<std::string> names = repro_suites();
  names.push_back("all");
  repro->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  bool text = false, no_timing = false;
  repro->add_flag("--text", text, "one line per check instead of JSON");
  repro->add_flag("--no-timing", no_timing, "leave timing fields out of the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (threads == 0) threads = threads_from_env();
    if (threads > 0) omp_set_num_threads(threads);
    cfg.threads = threads;
    if (*validate) return cmd_triple(abc);
    if (*build) return cmd_build(uv, tt, cuboid);
    if (*sieve) return cmd_sieve(cfg);
    if (*certify) return cmd_certify(curve_path, points_path, expect);
    if (*repro) return cmd_reproduce(suite, text, !no_timing);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
