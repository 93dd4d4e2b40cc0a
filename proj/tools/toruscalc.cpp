#include <CLI11.hpp>

#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "toruscalc/census.hpp"
#include "toruscalc/framed_link.hpp"
#include "toruscalc/mapping_torus.hpp"
#include "toruscalc/report.hpp"
#include "toruscalc/surgery.hpp"

namespace {

using namespace toruscalc;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

// JSON goes to standard output, human diagnostics to standard error, so
// that scans can be piped without scraping.
void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Precedence: --budget flag, then TORUSCALC_BUDGET, then the default.  A
// malformed environment value is an error, not a silent fallback.
std::size_t resolve_budget(const CLI::Option* flag, long long flag_value) {
  if (flag->count() > 0) return static_cast<std::size_t>(flag_value);
  if (const char* env = std::getenv("TORUSCALC_BUDGET")) {
    std::string s(env);
    long long v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v <= 0)
      throw std::invalid_argument("TORUSCALC_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultCosetBudget;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return 0;
    case Verdict::inconclusive:
      return 2;
    case Verdict::failed:
      return 1;
  }
  return 1;
}

int run_verify(long long m, long long n, long long mp, long long np,
               std::size_t budget) {
  auto t0 = Clock::now();
  SphereVerification v = verify_sphere(m, n, mp, np, budget);
  emit(verification_report("verify-sphere", "Theorem 3.3", v));
  std::cerr << "verify-sphere: " << to_string(v.verdict) << " in "
            << ms_since(t0) << " ms\n";
  return exit_for(v.verdict);
}

int run_scan(long long range, bool parallel, std::size_t budget) {
  auto t0 = Clock::now();
  std::vector<std::array<long long, 4>> tuples;
  for (long long m = -range; m <= range; ++m)
    for (long long n = -range; n <= range; ++n)
      for (long long mp = -range; mp <= range; ++mp)
        for (long long np = -range; np <= range; ++np)
          tuples.push_back({m, n, mp, np});

  // Tuples are independent; workers drop each finished report into its
  // preassigned slot, so the emitted array is identical with and without
  // --parallel.
  std::vector<Json> reports(tuples.size());
  std::atomic<bool> bad{false};
  auto work = [&](std::size_t k) {
    try {
      SphereVerification v = verify_sphere(tuples[k][0], tuples[k][1],
                                           tuples[k][2], tuples[k][3], budget);
      reports[k] = verification_report("scan", "Proposition 3.5", v);
    } catch (const std::exception& e) {
      std::cerr << "scan: " << e.what() << '\n';
      bad = true;
    }
  };
  if (parallel && tuples.size() > 1) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > tuples.size()) workers = static_cast<unsigned>(tuples.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tuples.size();) work(k);
      });
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t k = 0; k < tuples.size(); ++k) work(k);
  }
  if (bad) return 1;

  Json arr = Json::array();
  std::size_t certified = 0, inconclusive = 0, failed = 0;
  for (Json& rep : reports) {
    const std::string& v = rep["verdict"].get_ref<const std::string&>();
    if (v == "certified")
      ++certified;
    else if (v == "inconclusive")
      ++inconclusive;
    else
      ++failed;
    arr.push_back(std::move(rep));
  }
  emit(arr);
  std::cerr << "scan: " << tuples.size() << " tuples, certified=" << certified
            << " inconclusive=" << inconclusive << " failed=" << failed
            << '\n';
  std::cerr << "scan: done in " << ms_since(t0) << " ms\n";
  return failed ? 1 : inconclusive ? 2 : 0;
}

int run_cs_search(int bound) {
  std::vector<IntMatrix> hits = cs_search(bound);
  Json out;
  out["command"] = "cs-search";
  out["claim"] = "Section 4";
  out["bound"] = bound;
  out["count"] = hits.size();
  Json arr = Json::array();
  for (const IntMatrix& h : hits) {
    Json one;
    one["matrix"] = json_matrix(h);
    one["cs_condition"] = json_int(cs_condition(h));
    arr.push_back(std::move(one));
  }
  out["hits"] = std::move(arr);
  emit(out);
  return 0;
}

int run_factor(const std::string& matrix_text) {
  IntMatrix m = parse_matrix(matrix_text);
  std::vector<Transvection> factors = factor_transvections(m);
  Json out;
  out["command"] = "factor";
  out["claim"] = "Theorem 4.2";
  out["matrix"] = json_matrix(m);
  out["factor_count"] = factors.size();
  Json arr = Json::array();
  for (const Transvection& t : factors)
    arr.push_back(Json{{"i", t.i}, {"j", t.j}, {"k", t.k}});
  out["factors"] = std::move(arr);
  emit(out);
  return 0;
}

int run_mt_h1(const std::string& matrix_text) {
  MappingTorus mt{parse_matrix(matrix_text)};
  Json out;
  out["command"] = "mt-h1";
  out["claim"] = "Section 4";
  out["matrix"] = json_matrix(mt.monodromy);
  out["h1"] = json_invariants(abelianization(torus_presentation(mt)));
  out["cs_condition"] = json_int(cs_condition(mt.monodromy));
  out["circle_surgery_group"] = json_invariants(circle_surgery_group(mt));
  emit(out);
  return 0;
}

constexpr const char* kKnotNote =
    "the linking matrix determines h1 but not the knot type of any component";

int run_y3(long long m, long long n) {
  FramedLink y = build_Y(m, n);
  Json out;
  out["command"] = "y3";
  out["claim"] = "Proposition 4.1";
  out["m"] = m;
  out["n"] = n;
  out["labels"] = y.labels;
  out["linking_matrix"] = json_matrix(y.lk);
  out["h1"] = json_invariants(link_h1(y));
  out["note"] = kKnotNote;
  emit(out);
  return 0;
}

int run_link_h1(const std::string& matrix_text) {
  IntMatrix lk = parse_matrix(matrix_text);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lk.rows(); ++i)
    labels.push_back("K" + std::to_string(i + 1));
  FramedLink l(std::move(lk), std::move(labels));
  Json out;
  out["command"] = "link-h1";
  out["claim"] = "Proposition 4.1";
  out["linking_matrix"] = json_matrix(l.lk);
  out["h1"] = json_invariants(link_h1(l));
  out["note"] = kKnotNote;
  emit(out);
  return 0;
}

int run_census(const std::string& presentation_text, unsigned bound) {
  Presentation p = parse_presentation(presentation_text);
  Json out;
  out["command"] = "census";
  out["claim"] = "Section 4";
  out["bound"] = bound;
  out["presentation"] = to_string(p);
  Json arr = Json::array();
  for (const CensusEntry& e : quotient_census(p, bound))
    arr.push_back(Json{{"target", e.target}, {"homomorphisms", e.hom_count}});
  out["counts"] = std::move(arr);
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toruscalc: invariant certificates for torus-surgery models"};
  app.require_subcommand(1);

  long long m = 0, n = 0, mp = 0, np = 0;
  long long budget = static_cast<long long>(kDefaultCosetBudget);
  long long range = 0;
  bool parallel = false;
  int bound = 1;
  unsigned census_bound = 120;
  std::string matrix_text;
  std::string presentation_text;
  bool json_flag = false;  // output is always JSON; accepted for pipelines

  CLI::App* verify = app.add_subcommand(
      "verify-sphere", "chi, H1, and coset certificate for one tuple");
  verify->add_option("--m", m, "degree of the T_ac surgery, first copy")
      ->required();
  verify->add_option("--n", n, "degree of the T_bc surgery, first copy")
      ->required();
  verify->add_option("--mp", mp, "degree of the T_ac surgery, second copy")
      ->required();
  verify->add_option("--np", np, "degree of the T_bc surgery, second copy")
      ->required();
  CLI::Option* verify_budget =
      verify->add_option("--budget", budget, "maximum live cosets")
          ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* scan =
      app.add_subcommand("scan", "verify every tuple in [-R,R]^4");
  scan->add_option("--range", range, "half-width R of the parameter box")
      ->required()
      ->check(CLI::NonNegativeNumber);
  scan->add_flag("--parallel", parallel, "verify tuples on a worker pool");
  CLI::Option* scan_budget =
      scan->add_option("--budget", budget, "maximum live cosets per tuple")
          ->check(CLI::PositiveNumber);
  scan->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* cs = app.add_subcommand(
      "cs-search", "enumerate det(phi - I) = +-1 monodromies by entry bound");
  cs->add_option("--bound", bound, "entry bound, 0..3")->required();
  cs->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* factor = app.add_subcommand(
      "factor", "factor a det +1 matrix into unit transvections");
  factor->add_option("--matrix", matrix_text, "rows 'a,b,..;c,d,..'")
      ->required();
  factor->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* mt = app.add_subcommand(
      "mt-h1", "H1 and circle-surgery invariants of a mapping torus");
  mt->add_option("--matrix", matrix_text, "3x3 monodromy, det +1")->required();
  mt->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* y3 = app.add_subcommand(
      "y3", "linking matrix and H1 of the Y surgery diagram");
  y3->add_option("--m", m, "framing of the mu_a meridian")->required();
  y3->add_option("--n", n, "framing of the mu_b meridian")->required();
  y3->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* lh = app.add_subcommand(
      "link-h1", "H1 of surgery on a framed link from its linking matrix");
  lh->add_option("--matrix", matrix_text, "symmetric linking matrix")
      ->required();
  lh->add_flag("--json", json_flag, "emit JSON (always on)");

  CLI::App* census = app.add_subcommand(
      "census", "count quotients among small cyclic and symmetric groups");
  census
      ->add_option("--presentation", presentation_text,
                   "'gens: a,b rels: ...' text")
      ->required();
  census->add_option("--bound", census_bound, "largest target order, <= 120");
  census->add_flag("--json", json_flag, "emit JSON (always on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (*verify)
      return run_verify(m, n, mp, np, resolve_budget(verify_budget, budget));
    if (*scan)
      return run_scan(range, parallel, resolve_budget(scan_budget, budget));
    if (*cs) return run_cs_search(bound);
    if (*factor) return run_factor(matrix_text);
    if (*mt) return run_mt_h1(matrix_text);
    if (*y3) return run_y3(m, n);
    if (*lh) return run_link_h1(matrix_text);
    if (*census) return run_census(presentation_text, census_bound);
  } catch (const std::exception& e) {
    std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what()
              << '\n';
    return 1;
  }
  std::cerr << app.help();
  return 1;
}
