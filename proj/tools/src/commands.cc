/*
 * Copyright 2026 The zmpo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <new>
#include <ostream>
#include <string>
#include <system_error>
#include <utility>

#include <CLI11.hpp>

#include "json_util.hpp"
#include "serve.hpp"
#include "zmpo/fit.hpp"
#include "zmpo/mpo_builder.hpp"
#include "zmpo/mpo_cache.hpp"
#include "zmpo/signal_io.hpp"
#include "zmpo/signals.hpp"

namespace zmpo::tools {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Oracle work above this many point-sample products is subsampled.
constexpr std::uint64_t kVerifyBudget = std::uint64_t{1} << 31;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw ResourceError("cannot write " + path.string());
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create " + dir.string() + ": " + ec.message());
}

struct LoadedSignal {
  SignalVector x;
  TransformParams params;
};

LoadedSignal load_input(const std::string& input, std::size_t n, TransformParams p) {
  if (n == 0 && !fs::is_regular_file(input)) {
    throw ParameterError("--n is required when --input is a signal spec");
  }
  if (n != 0) {
    p.n = n;
    p.validate();
    check_memory(estimate_transform_bytes(n), "a transform at n = " + std::to_string(n));
  }
  SignalVector x = n == 0 ? read_signal_file(input) : load_signal(input, n);
  if (n != 0 && x.n() != n) {
    throw ShapeError("input has " + std::to_string(x.size()) + " samples, expected 2^" +
                     std::to_string(n));
  }
  p.n = x.n();
  p.validate();
  check_memory(estimate_transform_bytes(p.n), "a transform at n = " + std::to_string(p.n));
  return {std::move(x), p};
}

TransformResult run_pipeline(const LoadedSignal& s,
                             const std::optional<fs::path>& cache, json* cache_info) {
  if (!cache) return transform(s.x, s.params);
  bool hit = false;
  const TransformParams& p = s.params;
  const auto t0 = Clock::now();
  MatrixProductOperator zt = load_or_build_zt(*cache, p.n, p.omega_r, p.omega_i, p.tau, &hit);
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  TransformResult r = transform(s.x, p, zt);
  r.timings.build = seconds;
  if (cache_info) {
    *cache_info = {{"path", zt_cache_path(*cache, p.n, p.omega_r, p.omega_i, p.tau).string()},
                   {"hit", hit}};
  }
  return r;
}

GridWindow resolve_window(const WindowOptions& o, std::uint64_t big_n) {
  if (o.count == 0) throw ParameterError("--count must be positive");
  GridWindow w;
  w.count = static_cast<std::size_t>(std::min<std::uint64_t>(o.count, big_n));
  if (o.stride) w.count = o.count;
  w.stride = o.stride.value_or(big_n / w.count);
  w.k0 = o.k0.value_or(0);
  w.l0 = o.l0.value_or(0);
  check_window(w, big_n);
  return w;
}

std::string scan_csv(const GridScan& scan) {
  std::string out = "k,l,re_z,im_z,re_chi,im_chi,abs_chi\n";
  for (const GridSample& g : scan.samples) {
    out += std::to_string(g.k) + ',' + std::to_string(g.l) + ',' + fmt(g.z.real()) + ',' +
           fmt(g.z.imag()) + ',' + fmt(g.chi.real()) + ',' + fmt(g.chi.imag()) + ',' +
           fmt(std::abs(g.chi)) + '\n';
  }
  return out;
}

// Oracle comparison over the scanned points, evenly subsampled when the
// direct sums would be too expensive.
ErrorReport verify_scan(const SignalVector& x, const TransformParams& p, const GridScan& scan) {
  const std::uint64_t total = scan.samples.size();
  const std::uint64_t step =
      std::max<std::uint64_t>(1, (total * p.grid_size() + kVerifyBudget - 1) / kVerifyBudget);
  std::vector<GridPoint> points;
  std::vector<Complex> approx;
  for (std::uint64_t i = 0; i < total; i += step) {
    points.push_back({scan.samples[i].k, scan.samples[i].l});
    approx.push_back(scan.samples[i].chi);
  }
  return error_metrics(approx, direct_oracle(x, p, points), x);
}

json transform_manifest(const std::string& input, const TransformResult& r,
                        const GridWindow& w) {
  return {{"command", "transform"},
          {"input", input},
          {"params", params_json(r.params)},
          {"validated", r.validated},
          {"window", window_json(w)},
          {"bonds", bonds_json(r)},
          {"timings", timings_json(r.timings)}};
}

// --- bench ---------------------------------------------------------------

struct BenchCsv {
  std::string text = "suite,signal,n,tau,omega_r,omega_i,metric,value\n";

  void add(const std::string& suite, const std::string& signal, std::size_t n, double tau,
           double wr, double wi, const std::string& metric, double value) {
    text += suite + ',' + signal + ',' + std::to_string(n) + ',' + fmt(tau) + ',' + fmt(wr) +
            ',' + fmt(wi) + ',' + metric + ',' + fmt(value) + '\n';
  }
};

json line_fit_json(const LineFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

json spectrum_fit_json(const BondSpectrumReport& r) {
  std::size_t bond = 0;
  for (std::size_t b = 0; b < r.bond_dimensions.size(); ++b) {
    if (r.bond_dimensions[b] > r.bond_dimensions[bond]) bond = b;
  }
  const std::vector<double>& s = r.spectra[bond];
  std::vector<double> positive;
  for (double v : s) {
    if (v > 0.0) positive.push_back(v);
  }
  json j = {{"bond", bond}, {"dimension", r.bond_dimensions[bond]}};
  if (positive.size() >= 2) {
    ExponentialFit f = exponential_fit(positive);
    j["amplitude"] = f.amplitude;
    j["rate"] = f.rate;
    j["r_squared"] = f.r_squared;
  }
  return j;
}

// Mean successive ratio over the later half of a curve minus the mean over
// the earlier half; negative means the growth rate is falling.
double ratio_trend(const std::vector<double>& v) {
  std::vector<double> ratios;
  for (std::size_t i = 1; i < v.size(); ++i) ratios.push_back(v[i] / v[i - 1]);
  if (ratios.size() < 2) return 0.0;
  const std::size_t half = ratios.size() / 2;
  double early = 0.0, late = 0.0;
  for (std::size_t i = 0; i < half; ++i) early += ratios[i];
  for (std::size_t i = ratios.size() - half; i < ratios.size(); ++i) late += ratios[i];
  return (late - early) / static_cast<double>(half);
}

void bench_bonds(const BenchOptions& o, BenchCsv& csv, json& summary, std::ostream& log) {
  const std::size_t lo = o.n_min ? o.n_min : 4;
  const std::size_t hi = o.n_max ? o.n_max : 14;
  json rows = json::array();
  std::vector<double> dt_curve, qft_curve, zt_curve;
  bool product_bound = true, strict_from_8 = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    check_memory(estimate_transform_bytes(n), "operators at n = " + std::to_string(n));
    MatrixProductOperator dt = build_dt_mpo(n, o.omega_r, o.tau);
    MatrixProductOperator qft = build_qft_mpo(n, o.omega_i, o.tau);
    MatrixProductOperator zt = compose_zt(dt, qft, o.tau);
    const std::size_t d = dt.max_bond_dimension(), q = qft.max_bond_dimension(),
                      z = zt.max_bond_dimension();
    csv.add("bonds", "", n, o.tau, o.omega_r, o.omega_i, "max_bond_dt", static_cast<double>(d));
    csv.add("bonds", "", n, o.tau, o.omega_r, o.omega_i, "max_bond_qft", static_cast<double>(q));
    csv.add("bonds", "", n, o.tau, o.omega_r, o.omega_i, "max_bond_zt", static_cast<double>(z));
    product_bound = product_bound && z <= d * q;
    if (n >= 8) strict_from_8 = strict_from_8 && z < d * q;
    dt_curve.push_back(static_cast<double>(d));
    qft_curve.push_back(static_cast<double>(q));
    zt_curve.push_back(static_cast<double>(z));
    json row = {{"n", n}, {"dt", d}, {"qft", q}, {"zt", z}};
    if (n == hi) {
      row["spectrum_fit"] = {{"dt", spectrum_fit_json(bond_spectrum(dt))},
                             {"qft", spectrum_fit_json(bond_spectrum(qft))},
                             {"zt", spectrum_fit_json(bond_spectrum(zt))}};
    }
    rows.push_back(row);
    log << "bonds n=" << n << " dt=" << d << " qft=" << q << " zt=" << z << std::endl;
  }
  summary["rows"] = rows;
  summary["zt_within_product"] = product_bound;
  summary["zt_strictly_below_product_from_n8"] = strict_from_8;
  summary["ratio_trend"] = {{"dt", ratio_trend(dt_curve)},
                            {"qft", ratio_trend(qft_curve)},
                            {"zt", ratio_trend(zt_curve)}};
}

std::vector<double> default_taus() {
  std::vector<double> t;
  for (int e = -14; e <= -4; ++e) t.push_back(std::pow(10.0, e));
  return t;
}

void bench_error(const BenchOptions& o, BenchCsv& csv, json& summary, std::ostream& log) {
  const std::size_t n = o.error_n;
  if (n < 1 || n > 12) throw ParameterError("error suite supports 1 <= n <= 12");
  const std::uint64_t big_n = std::uint64_t{1} << n;
  check_memory(3 * big_n * big_n * sizeof(Complex) + estimate_transform_bytes(n),
               "the error suite at n = " + std::to_string(n));
  const std::string signal = o.signals.empty() ? "gaussian_noise" : o.signals.front();
  const SignalVector x = gen_signal(parse_signal_kind(signal), n);
  TransformParams p;
  p.n = n;
  p.omega_r = o.omega_r;
  p.omega_i = o.omega_i;
  const std::vector<Complex> exact = dense_grid_oracle(x, p);
  const std::vector<double> taus = o.taus.empty() ? default_taus() : o.taus;
  std::vector<double> used, dmax, dmean;
  json rows = json::array();
  for (double tau : taus) {
    p.tau = tau;
    TransformResult r = transform(x, p);
    GridScan scan = GridEvaluator(r.output, p).scan({0, 0, 1, static_cast<std::size_t>(big_n)});
    std::vector<Complex> approx;
    approx.reserve(scan.samples.size());
    for (const GridSample& g : scan.samples) approx.push_back(g.chi);
    ErrorReport e = error_metrics(approx, exact, x);
    csv.add("error", signal, n, tau, p.omega_r, p.omega_i, "delta_max", e.delta_max);
    csv.add("error", signal, n, tau, p.omega_r, p.omega_i, "delta_mean", e.delta_mean);
    rows.push_back({{"tau", tau}, {"delta_max", e.delta_max}, {"delta_mean", e.delta_mean},
                    {"output_max_bond", r.output_max_bond()}});
    if (e.delta_max > 0.0 && e.delta_mean > 0.0) {
      used.push_back(tau);
      dmax.push_back(e.delta_max);
      dmean.push_back(e.delta_mean);
    }
    log << "error tau=" << tau << " delta_max=" << e.delta_max
        << " delta_mean=" << e.delta_mean << std::endl;
  }
  summary["rows"] = rows;
  if (used.size() >= 2) {
    const LineFit fmax = log_log_fit(used, dmax);
    const LineFit fmean = log_log_fit(used, dmean);
    summary["fit_delta_max"] = line_fit_json(fmax);
    summary["fit_delta_mean"] = line_fit_json(fmean);
    summary["prefactor_delta_max"] = power_law_prefactor(used, dmax, 0.5);
    summary["prefactor_delta_mean"] = power_law_prefactor(used, dmean, 0.5);
  }
}

void bench_runtime(const BenchOptions& o, BenchCsv& csv, json& summary, std::ostream& log) {
  const std::size_t lo = o.n_min ? o.n_min : 10;
  const std::size_t hi = o.n_max ? o.n_max : 16;
  const std::vector<std::string> signals =
      o.signals.empty()
          ? std::vector<std::string>{"sinusoid", "multi_decay", "cusp", "gaussian_noise"}
          : o.signals;
  json fits = json::object();
  bool core_le_full = true;
  for (const std::string& signal : signals) {
    const SignalKind kind = parse_signal_kind(signal);
    std::vector<double> sizes, full;
    for (std::size_t n = lo; n <= hi; ++n) {
      check_memory(estimate_transform_bytes(n), "a transform at n = " + std::to_string(n));
      TransformParams p;
      p.n = n;
      p.omega_r = o.omega_r;
      p.omega_i = o.omega_i;
      p.tau = o.tau;
      const TransformResult r = transform(gen_signal(kind, n), p);
      csv.add("runtime", signal, n, p.tau, p.omega_r, p.omega_i, "runtime_full_seconds",
              r.timings.full());
      csv.add("runtime", signal, n, p.tau, p.omega_r, p.omega_i, "runtime_core_seconds",
              r.timings.core());
      core_le_full = core_le_full && r.timings.core() <= r.timings.full();
      sizes.push_back(static_cast<double>(p.grid_size()));
      full.push_back(r.timings.full());
      log << "runtime " << signal << " n=" << n << " full=" << r.timings.full()
          << " core=" << r.timings.core() << std::endl;
    }
    if (sizes.size() >= 2) {
      fits[signal] = {{"log_log", line_fit_json(log_log_fit(sizes, full))},
                      {"linear", line_fit_json(linear_fit(sizes, full))}};
    }
  }
  summary["fits"] = fits;
  summary["core_le_full"] = core_le_full;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const FormatError*>(&e) || dynamic_cast<const ParameterError*>(&e) ||
      dynamic_cast<const ShapeError*>(&e) || dynamic_cast<const RangeError*>(&e) ||
      dynamic_cast<const LayoutError*>(&e) || dynamic_cast<const CLI::ParseError*>(&e)) {
    return kExitParseError;
  }
  return kExitNumericError;
}

std::uint64_t memory_budget_bytes() {
  constexpr std::uint64_t kDefaultMiB = 4096;
  const char* env = std::getenv("ZMPO_MEMORY_BUDGET_MB");
  if (env == nullptr || *env == '\0') return kDefaultMiB << 20;
  std::uint64_t mib = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, mib);
  if (ec != std::errc() || ptr != end || mib == 0 || mib > (std::uint64_t{1} << 40)) {
    throw ParameterError(std::string("ZMPO_MEMORY_BUDGET_MB must be a positive integer, got '") +
                         env + "'");
  }
  return mib << 20;
}

void check_memory(std::uint64_t bytes, const std::string& what) {
  const std::uint64_t budget = memory_budget_bytes();
  if (bytes > budget) {
    throw ResourceError(what + " needs about " + std::to_string(bytes >> 20) +
                        " MiB, over the " + std::to_string(budget >> 20) +
                        " MiB budget (set ZMPO_MEMORY_BUDGET_MB to raise it)");
  }
}

std::uint64_t estimate_transform_bytes(std::size_t n) {
  // The first TT-SVD unfolding holds a few copies of the signal; the paired
  // and output states are bounded by 2n sites of bond at most 2^(n/2 + 2),
  // capped at 512.
  const std::uint64_t big_n = std::uint64_t{1} << std::min<std::size_t>(n, 62);
  const std::uint64_t bond = std::min<std::uint64_t>(512, std::uint64_t{4} << (n / 2));
  return 8 * big_n * sizeof(Complex) + 2 * n * 2 * bond * bond * sizeof(Complex) * 4;
}

void run_transform(const TransformOptions& o, std::ostream& log) {
  if (o.out.empty()) throw ParameterError("--out is required");
  const LoadedSignal s = load_input(o.input, o.n, o.params);
  const std::uint64_t big_n = s.params.grid_size();
  const GridWindow w = resolve_window(o.window, big_n);
  check_memory(static_cast<std::uint64_t>(w.count) * w.count * (sizeof(GridSample) + 128),
               "a scan window of " + std::to_string(w.count) + "^2 points");
  json cache_info;
  const TransformResult r = run_pipeline(s, o.mpo_cache, &cache_info);
  const GridScan scan = GridEvaluator(r.output, s.params).scan(w);
  json manifest = transform_manifest(o.input, r, w);
  if (!cache_info.is_null()) manifest["mpo_cache"] = cache_info;
  manifest["max_abs_chi"] = scan.max_abs();
  if (o.verify) manifest["verify"] = error_json(verify_scan(s.x, s.params, scan));
  ensure_directory(o.out);
  write_text(o.out / "scan.csv", scan_csv(scan));
  write_json(o.out / "manifest.json", manifest);
  log << "n=" << s.params.n << " output bond " << r.output_max_bond() << ", "
      << scan.samples.size() << " samples written to " << (o.out / "scan.csv").string();
  if (o.verify) log << ", delta_max " << manifest["verify"]["delta_max"].get<double>();
  log << std::endl;
}

void run_bench(const BenchOptions& o, std::ostream& log) {
  BenchCsv csv;
  json summary = {{"suite", o.suite}};
  if (o.suite == "bonds") {
    bench_bonds(o, csv, summary, log);
  } else if (o.suite == "error") {
    bench_error(o, csv, summary, log);
  } else if (o.suite == "runtime") {
    bench_runtime(o, csv, summary, log);
  } else {
    throw ParameterError("unknown bench suite '" + o.suite + "'");
  }
  ensure_directory(o.out);
  write_text(o.out / ("bench_" + o.suite + ".csv"), csv.text);
  write_json(o.out / ("bench_" + o.suite + "_summary.json"), summary);
}

void run_poles(const PolesOptions& o, std::ostream& result, std::ostream& log) {
  const LoadedSignal s = load_input(o.input, o.n, o.params);
  const TransformResult r = run_pipeline(s, o.mpo_cache, nullptr);
  const GridEvaluator eval(r.output, s.params);
  PoleSearchOptions search;
  search.initial_stride = o.initial_stride;
  search.count = o.count;
  search.refine_levels = o.levels;
  search.threshold = o.threshold;
  search.zoom_cells = o.zoom_cells;
  search.max_candidates = o.max_candidates;
  search.keep_scans = o.dump_levels;
  const PoleSearchResult found = find_poles(eval, search);

  json candidates = json::array();
  for (const PoleCandidate& c : found.candidates) candidates.push_back(candidate_json(c));
  json j = {{"command", "poles"},
            {"input", o.input},
            {"params", params_json(s.params)},
            {"validated", r.validated},
            {"options",
             {{"threshold", o.threshold},
              {"initial_stride", o.initial_stride},
              {"count", o.count},
              {"levels", o.levels},
              {"zoom_cells", o.zoom_cells},
              {"max_candidates", o.max_candidates}}},
            {"candidates", candidates},
            {"notes", found.notes}};
  if (o.dump_levels && !o.out) throw ParameterError("--dump-levels requires --out");
  if (!o.out) {
    result << j.dump(2) << std::endl;
    return;
  }
  ensure_directory(*o.out);
  if (o.dump_levels) {
    json dumps = json::array();
    std::size_t index = 0;
    for (const LevelScan& level : found.scans) {
      const std::string name =
          "level" + std::to_string(level.level) + "_window" + std::to_string(index++) + ".csv";
      write_text(*o.out / name, scan_csv(level.scan));
      dumps.push_back({{"level", level.level}, {"file", name},
                       {"window", window_json(level.scan.window)}});
    }
    j["level_dumps"] = dumps;
  }
  write_json(*o.out / "poles.json", j);
  log << found.candidates.size() << " candidate(s) written to "
      << (*o.out / "poles.json").string() << std::endl;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor-network z-transform: transforms, benchmarks, pole search, JSON API",
               "zmpo"};
  app.require_subcommand(1);

  auto add_transform_flags = [](CLI::App* cmd, std::string& input, std::size_t& n,
                                TransformParams& p, std::optional<fs::path>& cache) {
    cmd->add_option("--input", input, "Signal file (.csv, .zsig) or spec kind[:key=value,...]")
        ->required();
    cmd->add_option("--n", n, "Qubits per register; N = 2^n (default: from the file)");
    cmd->add_option("--wr", p.omega_r, "Radial scale omega_r")->capture_default_str();
    cmd->add_option("--wi", p.omega_i, "Angular scale omega_i")->capture_default_str();
    cmd->add_option("--tau", p.tau, "Relative SVD cutoff")->capture_default_str();
    cmd->add_option("--mpo-cache", cache, "Directory caching built operators");
  };

  TransformOptions topt;
  CLI::App* t = app.add_subcommand("transform", "Transform a signal and scan a grid window");
  add_transform_flags(t, topt.input, topt.n, topt.params, topt.mpo_cache);
  t->add_option("--out", topt.out, "Output directory")->required();
  t->add_option("--k0", topt.window.k0, "Window origin on the radial axis");
  t->add_option("--l0", topt.window.l0, "Window origin on the angular axis");
  t->add_option("--stride", topt.window.stride, "Window stride (power of two)");
  t->add_option("--count", topt.window.count, "Samples per window axis")->capture_default_str();
  t->add_flag("--verify", topt.verify, "Compare the scan against direct summation");

  BenchOptions bopt;
  bopt.out = ".";
  CLI::App* b = app.add_subcommand("bench", "Benchmark suites as CSV");
  b->add_option("suite", bopt.suite, "bonds, error or runtime")
      ->required()
      ->check(CLI::IsMember({"bonds", "error", "runtime"}));
  b->add_option("--out", bopt.out, "Output directory")->capture_default_str();
  b->add_option("--n-min", bopt.n_min, "Smallest n (bonds, runtime)");
  b->add_option("--n-max", bopt.n_max, "Largest n (bonds, runtime)");
  b->add_option("--error-n", bopt.error_n, "n for the error suite")->capture_default_str();
  b->add_option("--taus", bopt.taus, "Cutoffs for the error suite")->delimiter(',');
  b->add_option("--signals", bopt.signals, "Signal kinds")->delimiter(',');
  b->add_option("--wr", bopt.omega_r, "Radial scale omega_r")->capture_default_str();
  b->add_option("--wi", bopt.omega_i, "Angular scale omega_i")->capture_default_str();
  b->add_option("--tau", bopt.tau, "Cutoff for bonds and runtime")->capture_default_str();

  PolesOptions popt;
  CLI::App* p = app.add_subcommand("poles", "Coarse-to-fine pole search");
  add_transform_flags(p, popt.input, popt.n, popt.params, popt.mpo_cache);
  p->add_option("--out", popt.out, "Output directory (default: JSON on stdout)");
  p->add_option("--threshold", popt.threshold, "Peak threshold relative to the window maximum")
      ->capture_default_str();
  p->add_option("--initial-stride", popt.initial_stride, "Coarse stride (default N / count)");
  p->add_option("--count", popt.count, "Samples per window axis")->capture_default_str();
  p->add_option("--levels", popt.levels, "Refinement levels")->capture_default_str();
  p->add_option("--zoom-cells", popt.zoom_cells, "Parent cells spanned by a refined window")
      ->capture_default_str();
  p->add_option("--max-candidates", popt.max_candidates, "Candidates followed per window")
      ->capture_default_str();
  p->add_flag("--dump-levels", popt.dump_levels, "Write every scanned window as CSV");

  ServeOptions sopt;
  CLI::App* s = app.add_subcommand("serve", "HTTP JSON API over transform sessions");
  s->add_option("--host", sopt.host, "Bind address")->capture_default_str();
  s->add_option("--port", sopt.port, "Port (0 picks a free one)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (t->parsed()) run_transform(topt, err);
    if (b->parsed()) run_bench(bopt, err);
    if (p->parsed()) run_poles(popt, out, err);
    if (s->parsed()) run_server(sopt, err);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory" << std::endl;
    return kExitNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return exit_code_for(e);
  }
  return kExitOk;
}

}  // namespace zmpo::tools
