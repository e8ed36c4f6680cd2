// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tlg/harness/figures.hpp"
#include "tlg/harness/gof.hpp"
#include "tlg/harness/theorems.hpp"
#include "tlg/tlg.hpp"

using namespace tlg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome figure_criterion(FigureId id) {
  Stopwatch sw;
  const FigureSeries fs = reproduce_figure(id);
  const double t = sw.seconds();
  Outcome o;
  o.pass = fs.expectation_met && fs.x.size() == 512 && t < 1.0;
  o.detail = fs.detail + "; " + fmt(t) + " s";
  if (!fs.expectation_met && fs.verdict.witness) {
    o.detail += "; witness x=" + fmt(fs.verdict.witness->x);
  }
  return o;
}

constexpr TheoremId kOrderSuites[] = {TheoremId::t3_1, TheoremId::c3_1, TheoremId::t3_2,
                                      TheoremId::t3_3, TheoremId::t3_4, TheoremId::t3_5,
                                      TheoremId::t3_6};

struct SuiteRun {
  std::vector<SuiteReport> reports;
  double seconds = 0.0;
};

const SuiteRun& order_suites() {
  static const SuiteRun run = [] {
    SuiteRun r;
    Stopwatch sw;
    for (TheoremId id : kOrderSuites) r.reports.push_back(theorem_property_suite(id));
    r.seconds = sw.seconds();
    return r;
  }();
  return run;
}

Outcome c1() { return figure_criterion(FigureId::fig1a); }
Outcome c2() { return figure_criterion(FigureId::fig1b); }
Outcome c3() { return figure_criterion(FigureId::fig2a); }
Outcome c4() { return figure_criterion(FigureId::fig2b); }

Outcome c5() {
  const SuiteRun& run = order_suites();
  std::size_t violations = 0, checks = 0;
  std::string per;
  for (const SuiteReport& r : run.reports) {
    violations += r.violations.size();
    checks += r.checks_run;
    per += " " + std::string(to_string(r.id)) + "=" + std::to_string(r.violations.size());
  }
  return {violations == 0 && run.seconds < 60.0,
          std::to_string(checks) + " comparisons, " + std::to_string(violations) +
              " violations (" + per.substr(1) + "); " + fmt(run.seconds) + " s"};
}

Outcome c6() {
  SuiteOptions o;
  o.trials = 100;
  const SuiteReport r = theorem_property_suite(TheoremId::l2_3, o);
  const std::vector<double> a{1.0, 2.0, 3.0};
  const double d2 = tau_convexity_check(0.5, a).min_second_difference;
  const double err = std::fabs(d2 - 4.0 / 21.0);
  return {r.pass() && r.checks_run == 100 && err <= 1e-12,
          std::to_string(r.violations.size()) + " of 100 draws failed; hand value " + fmt(d2) +
              " (error " + fmt(err) + ")"};
}

Outcome c7() {
  SuiteOptions o;
  o.trials = 100;
  const SuiteReport r = theorem_property_suite(TheoremId::l2_4, o);
  return {r.pass() && r.checks_run == 100,
          std::to_string(r.violations.size()) + " of 100 pairs violate sum x^2 <= sum y^2 + 1e-12"};
}

Outcome c8() {
  const TLGParams e{1.0, 1.0, BaselineSpec::exponential(1.0)};
  double worst_e = 0.0;
  for (double x : build_grid(GridOptions{}, e)) {
    worst_e = std::max(worst_e, std::fabs(tlg_cdf(e, x) + std::expm1(-2.0 * x)));
  }
  double worst_u = 0.0;
  for (double a : {0.25, 0.5, 1.0, 2.0, 7.5}) {
    const TLGParams u{a, 1.0, BaselineSpec::uniform01()};
    for (double x : build_grid(GridOptions{}, u)) {
      worst_u = std::max(worst_u, std::fabs(tlg_cdf(u, x) - std::pow(x * (2.0 - x), a)));
    }
  }
  return {worst_e <= 1e-12 && worst_u <= 1e-12,
          "max abs error exponential " + fmt(worst_e) + ", uniform " + fmt(worst_u)};
}

Outcome c9() {
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> par(0.1, 10.0), bp(0.5, 3.0), uu(0.01, 0.99);
  double worst_rt = 0.0, worst_fd = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = par(rng), t = par(rng);
    BaselineSpec g;
    switch (i % 4) {
      case 0: g = BaselineSpec::uniform01(); break;
      case 1: g = BaselineSpec::exponential(bp(rng)); break;
      case 2: g = BaselineSpec::weibull(bp(rng), bp(rng)); break;
      default: g = BaselineSpec::log_logistic(bp(rng), bp(rng)); break;
    }
    const TLGParams p{a, t, g};
    for (int k = 0; k < 5; ++k) {
      const double u = uu(rng);
      const double x = tlg_quantile(p, u);
      worst_rt = std::max(worst_rt, std::fabs(tlg_cdf(p, x) - u));
      const double h = 1e-5 * x;
      const double fd = (tlg_cdf(p, x + h) - tlg_cdf(p, x - h)) / (2.0 * h);
      worst_fd = std::max(worst_fd, std::fabs(fd / tlg_pdf(p, x) - 1.0));
    }
  }
  return {worst_rt <= 1e-10 && worst_fd <= 1e-6,
          "max roundtrip error " + fmt(worst_rt) + ", max pdf/fd relative error " + fmt(worst_fd)};
}

Outcome c10() {
  const BaselineSpec g = BaselineSpec::exponential(1.0);
  const SystemSpec series = make_system(Topology::series, {1.0, 1.0}, {1.0, 1.0}, g);
  const SystemSpec parallel = make_system(Topology::parallel, {0.5, 2.0}, {0.7, 1.5}, g);
  Stopwatch sw;
  const GofReport a = monte_carlo_gof(series, 100000, 42);
  const GofReport b = monte_carlo_gof(parallel, 100000, 43);
  const double t = sw.seconds();
  return {a.ks < 0.01 && b.ks < 0.01 && t < 10.0,
          "KS series " + fmt(a.ks) + ", parallel " + fmt(b.ks) + "; " + fmt(t) + " s"};
}

Outcome c11() {
  const SuiteRun& run = order_suites();
  std::size_t pairs = 0, broken = 0;
  for (const SuiteReport& r : run.reports) {
    pairs += r.audit_pairs;
    broken += r.audit_violations;
  }
  return {broken == 0 && pairs > 0,
          std::to_string(pairs) + " audited pairs, " + std::to_string(broken) + " broken chains"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"fig1a hazard difference non-negative", c1},
      {"fig1b density ratio rises then falls", c2},
      {"fig2a cdf difference non-negative", c3},
      {"fig2b density ratio rises then falls", c4},
      {"order theorem suites, 200 trials each", c5},
      {"tau convexity and hand value", c6},
      {"sum of squares under majorization", c7},
      {"closed-form cdf identities", c8},
      {"quantile roundtrip and pdf finite difference", c9},
      {"Monte-Carlo KS at 1e5 samples", c10},
      {"implication chain lr => hr => st", c11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    only = std::strtoul(argv[2], nullptr, 10);
    if (only < 1 || only > criteria().size()) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", criteria().size());
      return 2;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only && i + 1 != only) continue;
    Outcome o;
    try {
      o = criteria()[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria()[i].name,
                o.detail.c_str());
  }
  return all_pass ? 0 : 1;
}
