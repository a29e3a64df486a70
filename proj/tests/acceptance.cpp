// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to hypchrom binary>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "hypchrom/hoffman.hpp"
#include "hypchrom/selfcheck.hpp"
#include "hypchrom/spherical.hpp"
#include "hypchrom/spindle.hpp"
#include "oracles.hpp"

using namespace hypchrom;
namespace fs = std::filesystem;

namespace {

// Tolerances, fixed before the build.
constexpr double kConstantTol = 1e-9;
constexpr double kLimitSlack = 1e-6;
constexpr double kLimitGap = 0.005;  // bound(200) vs 1 - 1/nu, from the reference run
constexpr double kL1Tol = 1e-6;
constexpr double kL1At100 = 0.026089996074362730;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void limit_constants_criterion() {
  LimitConstants c;
  const double t = seconds([&] { c = limit_constants(); });
  const bool ok = std::abs(c.rho - oracle::kRho) < kConstantTol &&
                  std::abs(c.nu - oracle::kNu) < kConstantTol &&
                  std::abs(c.nu - (-0.217)) < 5e-4 && std::abs(c.limit - 5.6) < 0.05 && t < 0.1;
  report(1, ok, fmt("rho=%.12f nu=%.12f limit=%.9f time=%.4fs", c.rho, c.nu, c.limit, t));
}

void threshold_criterion() {
  HoffmanResult r4, r12;
  const double t4 = seconds([&] { r4 = hoffman_bound(4.0); });
  const double t12 = seconds([&] { r12 = hoffman_bound(12.0); });
  const bool ok = r4.bound > 4.0 && r12.bound > 5.0 && t4 < 1.0 && t12 < 1.0;
  report(2, ok,
         fmt("bound(4)=%.9f (%.3fs) bound(12)=%.9f (%.3fs)", r4.bound, t4, r12.bound, t12));
}

void sweep_criterion() {
  std::vector<HoffmanResult> results;
  const double t = seconds([&] { results = sweep(1.0, 200.0, 1.0); });
  const double limit = limit_constants().limit;
  bool monotone = true;
  bool below = true;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (k > 0 && results[k].bound < results[k - 1].bound) monotone = false;
    if (!(results[k].bound < limit + kLimitSlack)) below = false;
  }
  const double gap = std::abs(results.back().bound - limit);
  const bool ok = results.size() == 200 && monotone && below && gap < kLimitGap && t < 60.0;
  report(3, ok,
         fmt("points=%zu monotone=%d below_limit=%d bound(200)=%.9f gap=%.6f time=%.2fs",
             results.size(), monotone, below, results.back().bound, gap, t));
}

void group_criterion(int id, const CheckGroup& g) { report(id, g.passed, g.name + ": " + g.detail); }

void l1_criterion() {
  const double a = l1_deviation(SpectralProfile(1.0));
  const double b = l1_deviation(SpectralProfile(10.0));
  const double c = l1_deviation(SpectralProfile(100.0));
  const bool ok = a > b && b > c && std::abs(c - kL1At100) < kL1Tol;
  report(6, ok, fmt("l1(1)=%.12f l1(10)=%.12f l1(100)=%.12f", a, b, c));
}

void geometry_criterion() {
  const CheckGroup cocycle = check_cocycle(1000, 0xc0c);
  const CheckGroup isometry = check_isometry(1000, 0x150);
  report(7, cocycle.passed && isometry.passed, cocycle.detail + "; " + isometry.detail);
}

void spindle_criterion() {
  bool ok = true;
  double worst = 0.0;
  std::size_t chi = 0;
  const double t = seconds([&] {
    for (const double d : {0.5, 1.0, 4.0, 12.0}) {
      try {
        const SpindleEmbedding s = build_spindle(d);
        worst = std::max(worst, s.max_deviation);
        ok = ok && s.max_deviation < kSpindleTolerance;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    chi = chromatic_number(spindle_graph());
  });
  ok = ok && chi == 4 && t < 1.0;
  report(8, ok, fmt("max_deviation=%.3g chromatic_number=%zu time=%.4fs", worst, chi, t));
}

void determinism_criterion(const char* cli) {
  const fs::path dir = fs::temp_directory_path() / "hypchrom_acceptance";
  fs::create_directories(dir);
  const fs::path a = dir / "run1.csv";
  const fs::path b = dir / "run2.csv";
  auto run = [&](const fs::path& out) {
    const std::string cmd = std::string("\"") + cli + "\" sweep --from 1 --to 50 --step 1 --out \"" +
                            out.string() + "\" > /dev/null";
    return std::system(cmd.c_str());
  };
  const int s1 = run(a);
  const int s2 = run(b);
  const std::string x = slurp(a);
  const std::string y = slurp(b);
  const bool ok = s1 == 0 && s2 == 0 && !x.empty() && x == y;
  report(9, ok, fmt("exit=%d,%d bytes=%zu,%zu identical=%d", s1, s2, x.size(), y.size(), x == y));
  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <hypchrom binary>\n");
    return 2;
  }
  limit_constants_criterion();
  threshold_criterion();
  sweep_criterion();
  group_criterion(4, check_oracle_grid());
  group_criterion(5, check_envelope(10000, 0xe1));
  l1_criterion();
  geometry_criterion();
  spindle_criterion();
  determinism_criterion(argv[1]);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
