// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check compares against an independent oracle
// (closed forms, brute-force scans, finite differences, replayed draws).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "oracles.hpp"
#include "wakefarm/optimize.hpp"
#include "wakefarm/pipeline.hpp"
#include "wakefarm/power.hpp"
#include "wakefarm/reduction_table.hpp"
#include "wakefarm/taylor.hpp"

namespace {

using namespace wakefarm;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string format(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::shared_ptr<const ReductionTable> table2m() {
  static const auto t = std::make_shared<const ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  return t;
}

PowerFunctional taylor_setup_functional() {
  const Site site{0.0, 640.0, 0.0, 320.0};
  PowerFunctional f{default_alpha(TurbineSpec{}), linear_gradient_flow(), table2m(), site};
  f.validate();
  return f;
}

// Least-squares slope of log y against log x, computed here rather than
// through the library so the fit itself is independent.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1. Taylor remainder orders.
Verdict taylor_orders() {
  const PowerFunctional f = taylor_setup_functional();
  Rng rng(derive_seed(RngSeed{0}, 11));
  const Layout m = random_layout(2, f.site, rng);
  const double j0 = f.value(m);
  const auto g = f.gradient(m);
  double lo0 = 1e9, hi0 = -1e9, lo1 = 1e9, hi1 = -1e9;
  bool ok = true;
  for (int d = 0; d < 5; ++d) {
    const auto dir = random_unit_direction(m.size(), rng);
    double slope = 0.0;
    for (std::size_t k = 0; k < dir.size(); ++k) slope += g[k] * dir[k];
    std::vector<double> h, r0, r1;
    for (int level = 0; level < 6; ++level) {
      const double step = 0.5 / std::pow(2.0, level);
      Layout p = m;
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += step * dir[k];
      const double jp = f.value(p);
      h.push_back(step);
      r0.push_back(std::abs(jp - j0));
      r1.push_back(std::abs(jp - j0 - step * slope));
    }
    if (*std::min_element(r1.begin(), r1.end()) <= 0.0 || *std::min_element(r0.begin(), r0.end()) <= 0.0) {
      ok = false;
      continue;
    }
    const double s0 = loglog_slope(h, r0), s1 = loglog_slope(h, r1);
    lo0 = std::min(lo0, s0);
    hi0 = std::max(hi0, s0);
    lo1 = std::min(lo1, s1);
    hi1 = std::max(hi1, s1);
    ok = ok && s0 >= 0.9 && s0 <= 1.1 && s1 >= 1.9 && s1 <= 2.1;
  }
  return {ok, format("R0 slopes %.4f..%.4f, R1 slopes %.4f..%.4f over 5 directions", lo0, hi0, lo1, hi1)};
}

// 2. Gradient against central differences.
Verdict gradient_fd() {
  const PowerFunctional f = taylor_setup_functional();
  Rng rng(2);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    // A quarter of the domain so most turbines sit in each other's tables.
    const Layout m = random_layout(n, Site{0.0, 320.0, 0.0, 160.0}, rng);
    const auto fd = testing::central_differences([&](const Layout& l) { return f.value(l); }, m, 1e-2);
    worst = std::max(worst, testing::relative_error(f.gradient(m), fd));
  }
  return {worst <= 1e-5, format("worst relative error %.3e on 20 layouts of 2-8 turbines (tol 1e-5)", worst)};
}

// 3. Evaluation cost scaling.
Verdict cost_scaling() {
  const PowerFunctional f = taylor_setup_functional();
  std::vector<double> ns, times;
  volatile double sink = 0.0;
  for (int n : {8, 16, 32, 64}) {
    Rng rng(3 + n);
    const Layout m = random_layout(n, f.site, rng);
    int loops = 1;
    for (;;) {
      const auto t0 = Clock::now();
      for (int k = 0; k < loops; ++k) sink = sink + f.value(m);
      if (std::chrono::duration<double>(Clock::now() - t0).count() > 2e-3) break;
      loops *= 2;
    }
    std::vector<double> samples;
    for (int s = 0; s < 31; ++s) {
      const auto t0 = Clock::now();
      for (int k = 0; k < loops; ++k) sink = sink + f.value(m);
      samples.push_back(std::chrono::duration<double>(Clock::now() - t0).count() / loops);
    }
    std::nth_element(samples.begin(), samples.begin() + 15, samples.end());
    ns.push_back(n);
    times.push_back(samples[15]);
  }
  const double slope = loglog_slope(ns, times);
  return {slope >= 1.5 && slope <= 2.5,
          format("exponent %.3f (median us: N=8 %.2f, 16 %.2f, 32 %.2f, 64 %.2f)", slope, times[0] * 1e6,
                 times[1] * 1e6, times[2] * 1e6, times[3] * 1e6)};
}

// Brute-force maximum of J for N = 1 or 2 on a 2 m lattice over the site. The
// double-basin flow points along +x everywhere, so each wake is evaluated in
// a frame that is a plain lattice displacement.
double brute_force_double_basin(const Scenario& s, const ReductionTable& table, double alpha, bool& frame_ok) {
  const double h = 2.0;
  const int nx = static_cast<int>(std::lround(s.site.width() / h)) + 1;
  const int ny = static_cast<int>(std::lround(s.site.height() / h)) + 1;
  std::vector<double> s3(static_cast<std::size_t>(nx) * ny);
  frame_ok = true;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const Vec2 u = s.ambient->velocity({s.site.x_min + i * h, s.site.y_min + j * h});
      frame_ok = frame_ok && u.y == 0.0 && u.x > 0.0;
      s3[static_cast<std::size_t>(j) * nx + i] = u.x * u.x * u.x;
    }
  double best = *std::max_element(s3.begin(), s3.end());
  if (s.n_turbines == 1) return alpha * best;

  // r3[(di + nx - 1) + (dj + ny - 1) * (2nx - 1)] = r(di h, dj h)^3
  const int wx = 2 * nx - 1, wy = 2 * ny - 1;
  std::vector<double> r3(static_cast<std::size_t>(wx) * wy);
  for (int dj = -(ny - 1); dj <= ny - 1; ++dj)
    for (int di = -(nx - 1); di <= nx - 1; ++di) {
      const double r = table.factor({di * h, dj * h});
      r3[static_cast<std::size_t>(dj + ny - 1) * wx + (di + nx - 1)] = r * r * r;
    }
  best = 0.0;
  const int total = nx * ny;
  for (int a = 0; a < total; ++a) {
    const int ia = a % nx, ja = a / nx;
    for (int b = a; b < total; ++b) {
      const int ib = b % nx, jb = b / nx;
      // Turbine a receives b's wake at displacement a - b and vice versa.
      const double ra = r3[static_cast<std::size_t>(ja - jb + ny - 1) * wx + (ia - ib + nx - 1)];
      const double rb = r3[static_cast<std::size_t>(jb - ja + ny - 1) * wx + (ib - ia + nx - 1)];
      best = std::max(best, s3[a] * ra + s3[b] * rb);
    }
  }
  return alpha * best;
}

// 4. Hybrid beats local on the double-basin preset. The brute-force scan
// certifies that the global optimum lies at least 10% above the local-only
// result; each hybrid run must beat local by 10%, end with every turbine past
// the barrier and not exceed the scanned optimum beyond lattice resolution.
Verdict hybrid_beats_local() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 1}) {
    const Scenario s = make_double_basin_scenario(2.5, 1.5, 1.0, n);
    const double alpha = default_alpha(s.turbine);
    const ObjectivePtr obj = make_wake_objective(s, table2m(), alpha);
    bool frame_ok = false;
    const double j_star = brute_force_double_basin(s, *table2m(), alpha, frame_ok);
    const RunReport local = run_local_only(s, obj, LocalOptConfig{});
    ok = ok && frame_ok && j_star >= 1.10 * local.j_final;
    for (const GlobalStage stage : {GlobalStage::genetic, GlobalStage::basin_hopping}) {
      int good = 0, at_optimum = 0;
      double worst_ratio = 1e9;
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        HybridPlan plan;
        plan.stage1 = stage;
        plan.stage1_objective = obj;
        plan.stage2_objective = obj;
        const RunReport h = run_hybrid(s, plan, RngSeed{seed});
        const double ratio = h.j_final / local.j_final;
        worst_ratio = std::min(worst_ratio, ratio);
        bool past_barrier = true;
        for (const Vec2 p : h.final_layout.unpack()) past_barrier = past_barrier && p.x > 150.0;
        good += ratio >= 1.10 && past_barrier && h.j_final <= 1.01 * j_star;
        at_optimum += h.j_final >= 0.98 * j_star;
      }
      ok = ok && good >= 19;
      detail += format("N=%d %s %d/20 (worst J/J_local %.3f, %d/20 within 2%% of J*); ", n, to_string(stage), good,
                       worst_ratio, at_optimum);
    }
    detail += format("N=%d brute-force J*/J_local %.3f; ", n, j_star / local.j_final);
  }
  if (!detail.empty()) detail.resize(detail.size() - 2);
  return {ok, detail};
}

// 5. GA operator laws.
Verdict ga_operator_laws() {
  Rng rng(5);
  std::vector<double> fitness(100);
  for (double& v : fitness) v = rng.uniform();
  const auto survivors = ga_select(fitness, 0.70);
  bool ok = survivors.size() == 70;

  const Site site{0.0, 320.0, 0.0, 160.0};
  const Layout outside(std::vector<double>(10, -1.0));
  long fittest_mutations = 0, least_mutations = 0, genes = 0;
  for (int t = 0; t < 10000; ++t) {
    const Layout a = ga_mutate_fitness_proportionate(outside, 1.0, 0.07, site, rng);
    const Layout b = ga_mutate_fitness_proportionate(outside, 0.0, 0.07, site, rng);
    for (std::size_t k = 0; k < a.size(); ++k, ++genes) {
      fittest_mutations += a[k] != -1.0;
      least_mutations += b[k] != -1.0;
    }
  }
  const double least_rate = static_cast<double>(least_mutations) / genes;
  ok = ok && fittest_mutations == 0 && std::abs(least_rate - 0.07) <= 0.005;

  const Layout pa(std::vector<double>(8, 0.0)), pb(std::vector<double>(8, 1.0));
  std::vector<int> from_b(8, 0);
  for (int t = 0; t < 10000; ++t) {
    const Layout c = ga_crossover_uniform(pa, pb, rng);
    for (std::size_t k = 0; k < 8; ++k) from_b[k] += c[k] == 1.0;
  }
  double worst = 0.0;
  for (int v : from_b) worst = std::max(worst, std::abs(v / 1e4 - 0.5));
  ok = ok && worst <= 0.02;
  return {ok, format("kept %zu/100; fittest mutated %ld of %ld genes; least-fit rate %.4f; crossover max |f-0.5| %.4f",
                     survivors.size(), fittest_mutations, genes, least_rate, worst)};
}

// 6. Metropolis acceptance.
Verdict metropolis() {
  Rng rng(6);
  bool ok = true;
  double worst = 0.0;
  for (const double ratio : {-0.05, -0.3, -1.0, -3.0}) {
    const double temperature = 2.0e6;
    int accepted = 0;
    for (int t = 0; t < 100000; ++t) accepted += metropolis_accept(ratio * temperature, temperature, rng);
    worst = std::max(worst, std::abs(accepted / 1e5 - std::exp(ratio)));
  }
  // Random (dJ, T) pairs: the expected count is the sum of the Boltzmann factors.
  double expected = 0.0;
  int accepted = 0;
  for (int t = 0; t < 100000; ++t) {
    const double temperature = rng.uniform(0.1, 10.0);
    const double delta = -rng.uniform(0.0, 20.0);
    expected += std::exp(delta / temperature);
    accepted += metropolis_accept(delta, temperature, rng);
  }
  const double mixed = std::abs((accepted - expected) / 1e5);
  int uphill = 0;
  for (int t = 0; t < 100000; ++t) uphill += metropolis_accept(rng.uniform(0.0, 5.0), rng.uniform(0.1, 10.0), rng);
  ok = worst <= 0.01 && mixed <= 0.01 && uphill == 100000;
  return {ok, format("max |rate - exp(dJ/T)| %.4f at fixed ratios, %.4f over random pairs; uphill %d/100000", worst,
                     mixed, uphill)};
}

// 7. Wake-model structure.
Verdict wake_structure() {
  const ReductionTable& t = *table2m();
  const GridGeometry& g = t.samples().grid;
  const double d = TurbineSpec{}.diameter;
  bool centreline = true;
  int checked = 0;
  for (int i = 0; i < g.nx - 1; ++i) {
    const double x0 = g.node(i, 0).x;
    if (x0 <= 0.0) continue;
    centreline = centreline && t.factor({x0, 0.0}) < 1.0;
    ++checked;
  }
  const double lobe_up = t.factor({0.0, 0.9 * d}), lobe_down = t.factor({0.0, -0.9 * d});

  PowerFunctional f{1.0, uniform_flow({2.0, 0.0}), table2m(), Site{-100.0, 500.0, -100.0, 100.0}};
  const Layout row({0.0, 0.0, 5 * d, 0.0, 10 * d, 0.0});
  std::vector<const WakeModel*> models(3, &t);
  std::vector<double> speed;
  for (std::size_t i = 0; i < 3; ++i) speed.push_back(norm(reduced_velocity(models, row, row.position(i), *f.ambient)));
  const bool decreasing = speed[0] > speed[1] && speed[1] > speed[2];
  return {centreline && checked > 0 && lobe_up > 1.0 && lobe_down > 1.0 && decreasing,
          format("centreline r<1 at %d nodes: %s; lobes r(0,+-0.9D) = %.4f, %.4f; row speeds %.4f > %.4f > %.4f",
                 checked, centreline ? "yes" : "no", lobe_up, lobe_down, speed[0], speed[1], speed[2])};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 8. CLI determinism: every command twice with identical inputs.
Verdict cli_determinism() {
  using namespace wakefarm::cli;
  const fs::path root = fs::temp_directory_path() / "wakefarm_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root);
  std::ostringstream sink;
  int compared = 0, differing = 0;
  bool codes_ok = true;
  auto compare_dirs = [&](const fs::path& a, const fs::path& b) {
    for (const auto& e : fs::directory_iterator(a)) {
      ++compared;
      if (slurp(e.path()) != slurp(b / e.path().filename())) ++differing;
    }
  };

  for (const char* optimizer : {"local", "hybrid-ga", "hybrid-bh"}) {
    for (const char* scenario : {"channel-1", "headland-3"}) {
      RunOptions o;
      o.optimizer = optimizer;
      o.scenario = scenario;
      o.assignments = {"snapshots=true"};
      const std::string tag = std::string(optimizer) + "_" + scenario;
      GlobalOptions g;
      g.seed = 17;
      g.out = (root / (tag + "_a")).string();
      codes_ok = codes_ok && cmd_run(o, g, sink, sink) == kExitOk;
      g.out = (root / (tag + "_b")).string();
      codes_ok = codes_ok && cmd_run(o, g, sink, sink) == kExitOk;
      // config.json echoes output_dir, so it legitimately differs.
      fs::remove(root / (tag + "_a") / "config.json");
      fs::remove(root / (tag + "_b") / "config.json");
      compare_dirs(root / (tag + "_a"), root / (tag + "_b"));
    }
  }

  std::ostringstream ta, tb;
  GlobalOptions g;
  g.seed = 17;
  cmd_taylor_test(RunOptions{}, g, ta, sink);
  cmd_taylor_test(RunOptions{}, g, tb, sink);
  ++compared;
  differing += ta.str() != tb.str();

  TableOptions t;
  t.output = root / "table_a.txt";
  codes_ok = codes_ok && cmd_gen_wake_table(t, sink, sink) == kExitOk;
  t.output = root / "table_b.txt";
  codes_ok = codes_ok && cmd_gen_wake_table(t, sink, sink) == kExitOk;
  ++compared;
  differing += slurp(root / "table_a.txt") != slurp(root / "table_b.txt");

  const fs::path run_dir = root / "hybrid-ga_channel-1_a";
  {
    RunOptions o;
    GlobalOptions gr;
    gr.out = run_dir.string();
    gr.seed = 17;
    cmd_run(o, gr, sink, sink);  // restore config.json for render
  }
  codes_ok = codes_ok && cmd_render(run_dir, root / "a.svg", sink, sink) == kExitOk;
  codes_ok = codes_ok && cmd_render(run_dir, root / "b.svg", sink, sink) == kExitOk;
  ++compared;
  differing += slurp(root / "a.svg") != slurp(root / "b.svg");

  fs::remove_all(root);
  return {codes_ok && differing == 0 && compared > 0,
          format("%d output pairs compared across run/taylor-test/gen-wake-table/render, %d differ", compared,
                 differing)};
}

// 9. Optimizer sanity oracles.
Verdict optimizer_oracles() {
  const Site site{0.0, 320.0, 0.0, 160.0};
  const std::vector<double> target{-50.0, 80.0, 400.0, 200.0, 123.4, 56.7};
  const std::vector<double> projected{0.0, 80.0, 320.0, 160.0, 123.4, 56.7};
  const auto quad = testing::concave_quadratic(target);
  LocalOptConfig tight;
  tight.gradient_tolerance = 1e-8;
  Rng rng(9);
  double worst_quad = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto res = local_ascent(*quad, random_layout(3, site, rng), site, tight);
    double dist = 0.0;
    for (std::size_t k = 0; k < projected.size(); ++k) dist += std::pow(res.layout[k] - projected[k], 2);
    worst_quad = std::max(worst_quad, std::sqrt(dist));
  }

  const testing::TwoGaussians two;
  const auto peak = testing::brute_force_peak([&](Vec2 p) { return two.value(p); }, site);
  const Layout start({two.low.x, two.low.y});
  int bh_found = 0, ga_found = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BasinHopConfig bh;
    bh.seed = RngSeed{seed};
    bh.local.gradient_tolerance = 1e-9;
    const auto b = basin_hopping(*two.objective(), start, site, bh);
    bh_found += norm(b.layout.position(0) - peak.best) <= 1.0;

    GAConfig ga;
    ga.max_iterations = 200;
    ga.seed = RngSeed{seed};
    const auto g = ga_run(*two.objective(false), 1, site, ga, std::vector<Layout>{start});
    const Vec2 p = g.layout.position(0);
    ga_found += norm(p - peak.best) < norm(p - two.low) && g.value > two.low_height;
  }
  return {worst_quad <= 1e-6 && bh_found >= 19 && ga_found >= 19,
          format("quadratic worst distance %.2e m; basin-hopping within 1 m of peak (%.2f, %.2f) %d/20; GA in peak "
                 "basin %d/20",
                 worst_quad, peak.best.x, peak.best.y, bh_found, ga_found)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Taylor remainder orders", 10, taylor_orders},
      {2, "gradient vs finite differences", 30, gradient_fd},
      {3, "evaluation cost scaling", 60, cost_scaling},
      {4, "hybrid beats local on double-basin", 300, hybrid_beats_local},
      {5, "GA operator laws", 30, ga_operator_laws},
      {6, "Metropolis acceptance", 10, metropolis},
      {7, "wake-model structure", 5, wake_structure},
      {8, "CLI determinism", 60, cli_determinism},
      {9, "optimizer sanity oracles", 120, optimizer_oracles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                seconds, c.limit_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
