// Copyright 2026 The olsconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "olsconv/cli.h"
#include "olsconv/config.h"
#include "olsconv/distributions.h"
#include "olsconv/engine.h"
#include "olsconv/errors.h"
#include "olsconv/gof.h"
#include "olsconv/random.h"
#include "olsconv/regression.h"
#include "olsconv/results_csv.h"
#include "olsconv/selfcheck.h"
#include "oracles.h"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/student_t_distribution.hpp>

namespace olsconv {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 20240501;

struct Verdict {
  bool ok;
  std::string detail;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

bool Within(double v, double center, double tol) { return std::fabs(v - center) <= tol; }

unsigned Threads() { return std::max(1u, std::thread::hardware_concurrency()); }

CellResult Cell(const char* y, const char* x, const char* z, std::size_t n,
                std::size_t R, std::size_t B) {
  std::optional<DistributionSpec> zs;
  if (z != nullptr) zs = LookupDistribution(z);
  const CellSpec c =
      MakeCell(LookupDistribution(y), LookupDistribution(x), zs, n, R, B);
  return RunCell(c, kSeed, {kDefaultAlpha, Threads()});
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict MomentTable() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto lines = CheckMomentTable();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t entries = 0, agree = 0;
  std::string bad;
  for (const auto& l : lines) {
    entries += 2;
    if (l.ok) {
      agree += 2;
    } else {
      bad += " " + l.name;
    }
  }
  const bool ok = entries == 22 && agree == 22 && secs < 1.0;
  return {ok, Fmt("%zu/%zu entries agree to 2 dp in %.3f s (limit 1 s)%s", agree,
                  entries, secs, bad.c_str())};
}

Verdict OlsOracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 pick(kSeed);
  RandomStream stream(kSeed);
  const auto& cat = Catalog();
  double worst = 0.0;
  std::size_t compared = 0, degenerate = 0;
  for (int inst = 0; inst < 10000; ++inst) {
    const bool two = inst % 2 == 1;
    const std::size_t n = 4 + pick() % 97;
    const auto& ys = cat[pick() % cat.size()];
    const auto& xs = cat[pick() % cat.size()];
    const auto& zs = cat[pick() % cat.size()];
    const auto y = DrawSample(ys, n, stream).values;
    const auto x = DrawSample(xs, n, stream).values;
    const auto z = DrawSample(zs, n, stream).values;
    try {
      std::vector<double> got;
      std::vector<testing::BigFloat> ref;
      if (two) {
        const FitResult r = FitTwo(y, x, z);
        got = {r.t_x, *r.t_z};
        ref = testing::HighPrecisionSlopeT(y, {x, z});
      } else {
        got = {FitSimple(y, x).t_x};
        ref = testing::HighPrecisionSlopeT(y, {x});
      }
      for (std::size_t j = 0; j < got.size(); ++j) {
        const double rel = std::fabs(got[j] / ref[j].convert_to<double>() - 1.0);
        worst = std::max(worst, std::isnan(rel) ? 1e300 : rel);
      }
      ++compared;
    } catch (const DegenerateFit&) {
      ++degenerate;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = worst <= 1e-10 && secs < 10.0 && compared + degenerate == 10000 &&
                  compared >= 9900;
  return {ok, Fmt("%zu instances compared (%zu degenerate skipped), worst relative "
                  "error %.2e (limit 1e-10), %.2f s (limit 10 s)",
                  compared, degenerate, worst, secs)};
}

Verdict GofCalibration() {
  const auto t0 = std::chrono::steady_clock::now();
  boost::random::mt19937 gen(static_cast<std::uint32_t>(kSeed));
  boost::random::student_t_distribution<double> t28(28.0);
  std::size_t rej[3] = {0, 0, 0};
  constexpr std::size_t kB = 500, kM = 1000;
  std::vector<double> t(kM);
  for (std::size_t b = 0; b < kB; ++b) {
    for (auto& v : t) v = t28(gen);
    const GofReport r = TestAgainstT(t, 28);
    rej[0] += r.p_ad <= kDefaultAlpha;
    rej[1] += r.p_cvm <= kDefaultAlpha;
    rej[2] += r.p_ks <= kDefaultAlpha;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double ad = rej[0] / double(kB), cvm = rej[1] / double(kB), ks = rej[2] / double(kB);
  const bool ok = Within(ad, 0.05, 0.03) && Within(cvm, 0.05, 0.03) &&
                  Within(ks, 0.05, 0.03) && secs < 60.0;
  return {ok, Fmt("AD %.3f, CvM %.3f, KS %.3f (target 0.05 +/- 0.03), %.2f s", ad, cvm,
                  ks, secs)};
}

Verdict AlreadyAtN4() {
  bool ok = true;
  std::string detail;
  for (auto [y, x] : {std::pair{"normal", "normal"}, std::pair{"uniform", "laplace"}}) {
    for (std::size_t n : {4, 10, 30}) {
      const CellResult r = Cell(y, x, nullptr, n, 1000, 500);
      ok = ok && Within(r.ad_reject_rate, 0.05, 0.03);
      detail += Fmt("%s%s/%s n=%zu: %.3f", detail.empty() ? "" : "; ", y, x, n,
                    r.ad_reject_rate);
    }
  }
  return {ok, "AD reject (target 0.05 +/- 0.03) " + detail};
}

Verdict BetaConvergence() {
  const CellResult n4 = Cell("beta_0.1_0.1", "beta_0.1_0.1", nullptr, 4, 1000, 500);
  const CellResult n8 = Cell("beta_0.1_0.1", "beta_0.1_0.1", nullptr, 8, 1000, 500);
  const bool ok = n4.ad_reject_rate > 0.15 && Within(n8.ad_reject_rate, 0.05, 0.03);
  return {ok, Fmt("AD reject n=4 %.3f (need > 0.15), n=8 %.3f (target 0.05 +/- 0.03)",
                  n4.ad_reject_rate, n8.ad_reject_rate)};
}

Verdict LogNormalNonConvergence() {
  const CellResult r = Cell("lognormal_2", "lognormal_2", nullptr, 1000, 1000, 200);
  return {r.ad_reject_rate > 0.9,
          Fmt("AD reject at n=1000, B=200: %.3f (need > 0.9)", r.ad_reject_rate)};
}

Verdict LogNormalTypeOne() {
  const CellResult r = Cell("lognormal_2", "lognormal_2", nullptr, 30, 1000, 500);
  return {Within(r.type1_rate_x, 0.06, 0.01),
          Fmt("Type-I rate at n=30: %.5f (target 0.06 +/- 0.01)", r.type1_rate_x)};
}

Verdict MultivariateRobustness() {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {10, 30}) {
    const CellResult a = Cell("normal", "lognormal_1", "normal", n, 1000, 200);
    const CellResult b = Cell("normal", "lognormal_1", "lognormal_1", n, 1000, 200);
    const double diff = std::fabs(a.ad_reject_rate - b.ad_reject_rate);
    ok = ok && diff < 0.05;
    detail += Fmt("%sn=%zu: z=normal %.3f, z=lognormal_1 %.3f, |diff| %.3f",
                  detail.empty() ? "" : "; ", n, a.ad_reject_rate, b.ad_reject_rate, diff);
  }
  return {ok, detail + " (limit 0.05)"};
}

Verdict Determinism() {
  const RunConfig config = ParseConfigText(R"({
    "y_dists": ["normal", "lognormal_2"],
    "x_dists": ["uniform", "beta_0.1_0.1"],
    "n_preset": "paper54",
    "R": 20, "B": 10
  })");
  const auto cells = ExpandConfig(config);
  const fs::path dir = fs::temp_directory_path() /
                       ("olsconv_accept_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  GridOptions one, eight;
  one.workers = 1;
  eight.workers = 8;
  RunGrid(cells, kSeed, dir / "w1.csv", one);
  RunGrid(cells, kSeed, dir / "w8.csv", eight);
  const std::string a = CanonicalizeResults(ReadFile(dir / "w1.csv"));
  const std::string b = CanonicalizeResults(ReadFile(dir / "w8.csv"));
  fs::remove_all(dir);
  const auto rows = std::count(a.begin(), a.end(), '\n') - 1;
  return {a == b && rows == 216,
          Fmt("%zu cells, %ld rows each, sorted CSVs %s", cells.size(), rows,
              a == b ? "byte-equal" : "DIFFER")};
}

Verdict GridArithmetic() {
  std::ostringstream out, err;
  const char* argv[] = {"olsconv", "expand"};
  const int code = RunCli(2, argv, out, err);
  const std::string s = out.str();
  const auto lines = std::count(s.begin(), s.end(), '\n');
  const std::size_t levels = ResolveNPreset(kStandardNPreset).size();
  return {code == 0 && lines == 6534 && levels == 54,
          Fmt("expand emitted %ld cells (need 6534), n preset has %zu levels (need 54)",
              lines, levels)};
}

}  // namespace
}  // namespace olsconv

int main() {
  using namespace olsconv;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"moment table", MomentTable},
      {"OLS oracle", OlsOracle},
      {"GoF calibration", GofCalibration},
      {"convergence already at n=4", AlreadyAtN4},
      {"Beta(0.1,0.1) converges by n=8", BetaConvergence},
      {"LogNormal(0,2) non-convergence", LogNormalNonConvergence},
      {"LogNormal(0,2) Type-I at n=30", LogNormalTypeOne},
      {"multivariate robustness", MultivariateRobustness},
      {"determinism across workers", Determinism},
      {"grid arithmetic", GridArithmetic},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s [%.1f s]\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += !v.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
