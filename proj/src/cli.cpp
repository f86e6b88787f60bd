#include "expstab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "expstab/estimator.hpp"
#include "expstab/explorer.hpp"
#include "expstab/series.hpp"
#include "expstab/system_spec.hpp"
#include "expstab/version.hpp"

namespace expstab::cli {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitInconclusive = 4;

std::string fmt(double v, int digits = 6) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fmt_g(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json_to(const std::string& path, const json& doc, std::ostream& out) {
  if (path == "-") {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << doc.dump(2) << "\n";
}

json report_shell(const std::string& command, json config, double wall_ms) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["config"] = std::move(config);
  doc["wall_ms"] = wall_ms;
  return doc;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::optional<StabilityEnvelope> parse_envelope_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double N, alpha, beta;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &N, &alpha, &beta) != 3)
    throw std::invalid_argument(
        "--envelope expects \"N,alpha,beta\" (three numbers)");
  if (!(N >= 1.0)) throw std::invalid_argument("--envelope: N must be >= 1");
  if (beta == 0.0) return StabilityEnvelope::ues(std::log(N), alpha);
  return StabilityEnvelope::es(std::log(N), alpha, beta);
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string spec_path;
  index_t horizon = 400;
  EstimatorConfig cfg;
  std::string json_out, csv_out;
};

int run_classify(const ClassifyArgs& a, std::ostream& out) {
  Timer timer;
  const SystemSpec spec = load_system_spec(a.spec_path);
  const EvolutionFamily fam = to_family(spec);
  const ClassificationReport rep = classify(fam, a.horizon, a.cfg);

  out << "class=" << to_string(rep.verdict) << " alpha=" << fmt(rep.alpha_hat)
      << " beta=" << fmt(rep.beta_hat) << " horizon=" << rep.horizon
      << (rep.boundary ? " boundary" : "") << "\n";

  if (!a.csv_out.empty()) {
    std::ofstream f(a.csv_out);
    if (!f) throw std::invalid_argument("cannot open output file: " + a.csv_out);
    f << "n,logK\n";
    for (index_t n = 0; n < rep.log_K.size(); ++n)
      f << n << "," << fmt_g(rep.log_K[n]) << "\n";
  }

  if (!a.json_out.empty()) {
    json cfg;
    cfg["spec"] = emit_system_spec(spec);
    cfg["horizon"] = a.horizon;
    cfg["tol_alpha"] = a.cfg.tol_alpha;
    cfg["tol_beta"] = a.cfg.tol_beta;
    cfg["gap_floor"] = a.cfg.gap_floor;
    cfg["eps_alpha"] = a.cfg.eps_alpha;
    json doc = report_shell("classify", std::move(cfg), timer.ms());
    json res;
    res["class"] = to_string(rep.verdict);
    json implied = json::array();
    for (StabilityClass c : implied_classes(rep.verdict))
      implied.push_back(to_string(c));
    res["implied"] = implied;
    res["alpha_hat"] = ext_real(rep.alpha_hat);
    res["alpha_used"] = ext_real(rep.alpha_used);
    res["beta_hat"] = ext_real(rep.beta_hat);
    res["superlinear"] = rep.superlinear;
    res["boundary"] = rep.boundary;
    res["horizon"] = rep.horizon;
    json cert;
    cert["checked"] = rep.certificate_checked;
    cert["pass"] = rep.certificate.pass;
    cert["margin"] = ext_real(rep.certificate.margin);
    cert["worst_m"] = rep.certificate.worst_m;
    cert["worst_n"] = rep.certificate.worst_n;
    cert["downgraded"] = rep.downgraded;
    res["certificate"] = cert;
    doc["result"] = res;
    write_json_to(a.json_out, doc, out);
  }
  return rep.verdict == StabilityClass::None ? kExitNegative : kExitOk;
}

// ------------------------------------------------------------------- datko

struct DatkoArgs {
  std::string spec_path;
  double d = 0.0;
  double c_weight = 0.0;
  std::optional<index_t> n;
  std::optional<index_t> p;
  index_t horizon = 400;
  std::string envelope;
  std::optional<double> bound_D;
  std::uint64_t probe_seed = 7;
  std::string json_out;
};

json series_json(const SeriesReport& rep) {
  json r;
  r["partial_sum_log"] = ext_real(rep.partial_sum.log());
  r["terms_used"] = rep.terms_used;
  if (rep.tail_unbounded)
    r["tail_log"] = "unbounded";
  else if (rep.tail_bound)
    r["tail_log"] = ext_real(rep.tail_bound->log());
  r["bound_log"] = ext_real(rep.bound_checked.log());
  r["empirical_log"] = ext_real(rep.empirical_constant.log());
  r["divergent"] = rep.divergent;
  r["verdict"] = to_string(rep.verdict);
  json w;
  w["n"] = rep.witness.n;
  w["p"] = rep.witness.p;
  r["witness"] = w;
  return r;
}

int series_exit(const SeriesReport& rep) {
  switch (rep.verdict) {
    case SeriesVerdict::Pass: return kExitOk;
    case SeriesVerdict::Fail: return kExitNegative;
    case SeriesVerdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int run_datko(const DatkoArgs& a, std::ostream& out) {
  Timer timer;
  const SystemSpec spec = load_system_spec(a.spec_path);
  const EvolutionFamily fam = to_family(spec);
  const NormTable table = build_norm_table(fam, a.horizon);
  const auto probes = make_probes(fam.dimension(), fam.norm(), a.probe_seed);

  SeriesReport rep;
  std::string mode;
  if (!a.n) {
    mode = "uniform";
    rep = datko_check_uniform(table, probes, a.horizon);
    out << "datko-uniform empirical_D_log=" << fmt(rep.empirical_constant.log())
        << " divergent=" << (rep.divergent ? "yes" : "no")
        << " verdict=" << to_string(rep.verdict) << " horizon=" << a.horizon
        << "\n";
  } else {
    mode = "single";
    const index_t n = *a.n;
    const index_t p = a.p.value_or(n);
    const auto env = parse_envelope_flag(a.envelope);
    double bound_D;
    if (a.bound_D)
      bound_D = *a.bound_D;
    else if (env)
      bound_D = derive_datko_constant(std::exp(env->log_prefactor()),
                                      env->alpha(), env->beta(), a.d);
    else
      throw std::invalid_argument(
          "datko: single-start mode needs --bound-D or --envelope");
    SeriesBound bound;
    bound.log_coef = std::log(bound_D);
    bound.weight = a.c_weight;
    bound.ref = SeriesBound::Ref::PropagatedX;
    // Worst probe decides: Fail > Inconclusive > Pass, then smallest margin.
    bool first = true;
    for (const auto& x : probes) {
      const SeriesReport r = datko_sum(table, a.d, n, p, x, a.horizon, bound, env);
      auto rank = [](const SeriesReport& s) {
        return s.verdict == SeriesVerdict::Fail
                   ? 2
                   : (s.verdict == SeriesVerdict::Inconclusive ? 1 : 0);
      };
      const double margin = r.bound_checked.log() - r.partial_sum.log();
      const double prev_margin =
          rep.bound_checked.log() - rep.partial_sum.log();
      if (first || rank(r) > rank(rep) ||
          (rank(r) == rank(rep) && margin < prev_margin)) {
        rep = r;
        first = false;
      }
    }
    out << "datko partial_sum_log=" << fmt(rep.partial_sum.log()) << " tail_log="
        << (rep.tail_unbounded
                ? std::string("unbounded")
                : (rep.tail_bound ? fmt(rep.tail_bound->log())
                                  : std::string("none")))
        << " bound_log=" << fmt(rep.bound_checked.log())
        << " verdict=" << to_string(rep.verdict) << " n=" << rep.witness.n
        << " p=" << rep.witness.p << "\n";
  }

  if (!a.json_out.empty()) {
    json cfg;
    cfg["spec"] = emit_system_spec(spec);
    cfg["d"] = a.d;
    cfg["c_weight"] = a.c_weight;
    cfg["horizon"] = a.horizon;
    cfg["mode"] = mode;
    json doc = report_shell("datko", std::move(cfg), timer.ms());
    doc["result"] = series_json(rep);
    write_json_to(a.json_out, doc, out);
  }
  return series_exit(rep);
}

// --------------------------------------------------------------- barbashin

struct BarbashinArgs {
  std::string spec_path;
  double b = 0.0;
  double c_weight = 0.0;
  std::optional<index_t> m;
  index_t n_low = 0;
  index_t horizon = 400;
  std::string envelope;
  std::optional<double> bound_B;
  bool operator_mode = false;
  std::uint64_t probe_seed = 7;
  std::string json_out;
};

int run_barbashin(const BarbashinArgs& a, std::ostream& out) {
  Timer timer;
  const SystemSpec spec = load_system_spec(a.spec_path);
  const EvolutionFamily fam = to_family(spec);
  const NormTable table = build_norm_table(fam, a.horizon);

  SeriesReport rep;
  std::string mode;
  if (a.operator_mode) {
    mode = "operator";
    rep = barbashin_check_operator(table, a.b, a.horizon);
    out << "barbashin-operator empirical_B_log="
        << fmt(rep.empirical_constant.log())
        << " divergent=" << (rep.divergent ? "yes" : "no")
        << " verdict=" << to_string(rep.verdict) << " horizon=" << a.horizon
        << "\n";
  } else {
    mode = "single";
    const index_t m = a.m.value_or(a.horizon);
    const auto env = parse_envelope_flag(a.envelope);
    double bound_B;
    if (a.bound_B)
      bound_B = *a.bound_B;
    else if (env)
      bound_B = derive_barbashin_constant(std::exp(env->log_prefactor()),
                                          env->alpha(), env->beta(), a.b);
    else
      throw std::invalid_argument(
          "barbashin: single-sum mode needs --bound-B or --envelope");
    const auto probes =
        make_probes(fam.dimension(), dual_norm_of(fam.norm()), a.probe_seed);
    bool first = true;
    for (const auto& x : probes) {
      const SeriesReport r = barbashin_sum(table, a.b, m, a.n_low, x,
                                           a.c_weight, std::log(bound_B));
      const double margin = r.bound_checked.log() - r.partial_sum.log();
      const double prev = rep.bound_checked.log() - rep.partial_sum.log();
      if (first || (r.verdict == SeriesVerdict::Fail &&
                    rep.verdict != SeriesVerdict::Fail) ||
          (r.verdict == rep.verdict && margin < prev)) {
        rep = r;
        first = false;
      }
    }
    out << "barbashin partial_sum_log=" << fmt(rep.partial_sum.log())
        << " bound_log=" << fmt(rep.bound_checked.log())
        << " verdict=" << to_string(rep.verdict) << " m=" << rep.witness.n
        << " n_low=" << rep.witness.p << "\n";
  }

  if (!a.json_out.empty()) {
    json cfg;
    cfg["spec"] = emit_system_spec(spec);
    cfg["b"] = a.b;
    cfg["c_weight"] = a.c_weight;
    cfg["horizon"] = a.horizon;
    cfg["mode"] = mode;
    json doc = report_shell("barbashin", std::move(cfg), timer.ms());
    doc["result"] = series_json(rep);
    write_json_to(a.json_out, doc, out);
  }
  return series_exit(rep);
}

// ------------------------------------------------------------------ evolve

int run_evolve(const std::string& spec_path, index_t horizon,
               const std::string& out_path, std::ostream& out) {
  const SystemSpec spec = load_system_spec(spec_path);
  const EvolutionFamily fam = to_family(spec);
  const NormTable table = build_norm_table(fam, horizon);
  std::ostream* dst = &out;
  std::ofstream f;
  if (out_path != "-") {
    f.open(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    dst = &f;
  }
  *dst << "m,n,log_norm\n";
  for (index_t n = 0; n <= horizon; ++n)
    for (index_t m = n; m <= horizon; ++m)
      *dst << m << "," << n << "," << fmt_g(table.entry_log(m, n)) << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- explore

ExplorerConfig parse_explorer_config(const json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("explore config: document must be a JSON object");
  const std::set<std::string> allowed = {
      "generators", "dimensions", "radii",          "seeds",
      "seed_base",  "horizon",    "top_k",          "max_candidates",
      "doubling_tol", "weight",   "norm",           "extra_probes"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("explore config: unknown field '" + it.key() +
                                  "'");
  ExplorerConfig cfg;
  if (doc.contains("generators"))
    cfg.generators = doc["generators"].get<std::vector<std::string>>();
  if (doc.contains("dimensions"))
    cfg.dimensions = doc["dimensions"].get<std::vector<std::size_t>>();
  if (doc.contains("radii")) cfg.radii = doc["radii"].get<std::vector<double>>();
  if (doc.contains("seeds")) cfg.seed_count = doc["seeds"].get<std::uint64_t>();
  if (doc.contains("seed_base"))
    cfg.seed_base = doc["seed_base"].get<std::uint64_t>();
  if (doc.contains("horizon")) cfg.horizon = doc["horizon"].get<index_t>();
  if (doc.contains("top_k")) cfg.top_k = doc["top_k"].get<std::size_t>();
  if (doc.contains("max_candidates"))
    cfg.max_candidates = doc["max_candidates"].get<std::size_t>();
  if (doc.contains("doubling_tol"))
    cfg.doubling_tol = doc["doubling_tol"].get<double>();
  if (doc.contains("weight")) cfg.weight = doc["weight"].get<double>();
  if (doc.contains("extra_probes"))
    cfg.extra_probes = doc["extra_probes"].get<std::size_t>();
  if (doc.contains("norm")) {
    const std::string n = doc["norm"].get<std::string>();
    if (n == "l1")
      cfg.norm = VectorNorm::L1;
    else if (n == "l2")
      cfg.norm = VectorNorm::L2;
    else if (n == "linf")
      cfg.norm = VectorNorm::Linf;
    else
      throw std::invalid_argument("explore config: bad norm '" + n + "'");
  }
  return cfg;
}

json record_json(const CandidateRecord& r) {
  json j;
  j["generator"] = r.generator;
  j["seed"] = r.seed;
  j["dimension"] = r.dimension;
  j["radius"] = r.radius;
  j["horizon"] = r.horizon;
  j["log_pointwise_B"] = ext_real(r.log_pointwise_B);
  j["log_operator_B"] = ext_real(r.log_operator_B);
  j["pointwise_bounded"] = r.pointwise_bounded;
  j["operator_bounded"] = r.operator_bounded;
  j["alpha_hat"] = ext_real(r.alpha_hat);
  j["log_score"] = ext_real(r.log_score);
  return j;
}

int run_explore(const std::string& config_path, const std::string& out_path,
                bool resume, std::optional<std::size_t> top_k_flag,
                std::ostream& out) {
  std::ifstream in(config_path);
  if (!in)
    throw std::invalid_argument("cannot open explore config: " + config_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("explore config is not valid JSON: " +
                                std::string(e.what()));
  }
  ExplorerConfig cfg = parse_explorer_config(doc);
  if (top_k_flag) cfg.top_k = *top_k_flag;

  using Key = std::tuple<std::string, std::uint64_t, std::size_t, double>;
  std::set<Key> done;
  if (resume) {
    std::ifstream existing(out_path);
    std::string line;
    while (existing && std::getline(existing, line)) {
      if (line.empty()) continue;
      const json r = json::parse(line, nullptr, false);
      if (r.is_discarded()) continue;
      done.insert({r["generator"].get<std::string>(),
                   r["seed"].get<std::uint64_t>(),
                   r["dimension"].get<std::size_t>(),
                   r["radius"].get<double>()});
    }
  }

  bool truncated = false;
  const std::vector<CandidateRecord> all = search_counterexample(cfg, &truncated);

  std::ofstream f(out_path, resume ? std::ios::app : std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  std::size_t written = 0;
  for (const CandidateRecord& r : all) {
    if (done.count({r.generator, r.seed, r.dimension, r.radius})) continue;
    f << record_json(r).dump() << "\n";
    ++written;
  }

  out << "explore candidates=" << all.size() << " written=" << written
      << " resumed=" << done.size() << (truncated ? " truncated" : "") << "\n";
  std::size_t shown = 0;
  for (const CandidateRecord& r : all) {
    if (shown++ >= cfg.top_k) break;
    out << "  " << r.generator << " seed=" << r.seed << " dim=" << r.dimension
        << " radius=" << fmt(r.radius, 3)
        << " pw_bounded=" << (r.pointwise_bounded ? "yes" : "no")
        << " alpha=" << fmt(r.alpha_hat) << " log_score=" << fmt(r.log_score)
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"time-varying discrete-time linear system stability toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  ClassifyArgs ca;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "estimate the strongest stability class");
  classify_cmd->add_option("spec", ca.spec_path, "system spec JSON file")
      ->required();
  classify_cmd->add_option("--horizon", ca.horizon, "table horizon");
  classify_cmd->add_option("--tol-alpha", ca.cfg.tol_alpha, "rate tolerance");
  classify_cmd->add_option("--tol-beta", ca.cfg.tol_beta,
                           "prefactor-slope tolerance");
  classify_cmd->add_option("--gap-floor", ca.cfg.gap_floor,
                           "smallest gap used in slope fits");
  classify_cmd->add_option("--eps-alpha", ca.cfg.eps_alpha,
                           "relative shrink of alpha before the K scan");
  classify_cmd->add_option("--boundary-tol", ca.cfg.boundary_tol,
                           "margin that raises the boundary flag");
  classify_cmd->add_option("--json", ca.json_out, "write a JSON report ('-' = stdout)");
  classify_cmd->add_option("--csv", ca.csv_out, "write the (n, logK) curve as CSV");

  DatkoArgs da;
  CLI::App* datko_cmd = app.add_subcommand(
      "datko", "forward weighted series check (sum over m of e^{d(m-n)}||A_m^p x||)");
  datko_cmd->add_option("spec", da.spec_path, "system spec JSON file")->required();
  datko_cmd->add_option("--d", da.d, "series weight d >= 0");
  datko_cmd->add_option("--c-weight", da.c_weight, "bound growth weight c");
  index_t datko_n = 0;
  CLI::Option* datko_n_opt = datko_cmd->add_option(
      "--n", datko_n, "start index (omit to run the uniform sup check)");
  index_t datko_p = 0;
  CLI::Option* datko_p_opt =
      datko_cmd->add_option("--p", datko_p, "propagation origin p <= n");
  datko_cmd->add_option("--horizon", da.horizon, "summation horizon");
  datko_cmd->add_option("--envelope", da.envelope,
                        "N,alpha,beta envelope for tail bounds / derived D");
  double datko_bound = 0.0;
  CLI::Option* datko_bound_opt =
      datko_cmd->add_option("--bound-D", datko_bound, "bound constant D");
  datko_cmd->add_option("--json", da.json_out, "write a JSON report");

  BarbashinArgs ba;
  CLI::App* barb_cmd = app.add_subcommand(
      "barbashin",
      "dual weighted series check (sum over k of e^{b(m-k)}||(A_m^k)* x*||)");
  barb_cmd->add_option("spec", ba.spec_path, "system spec JSON file")->required();
  barb_cmd->add_option("--b", ba.b, "series weight b >= 0");
  barb_cmd->add_option("--c-weight", ba.c_weight, "bound growth weight c");
  index_t barb_m = 0;
  CLI::Option* barb_m_opt =
      barb_cmd->add_option("--m", barb_m, "sum target m (default: horizon)");
  barb_cmd->add_option("--n-low", ba.n_low, "lower summation limit");
  barb_cmd->add_option("--horizon", ba.horizon, "table horizon");
  barb_cmd->add_option("--envelope", ba.envelope,
                       "N,alpha,beta envelope from which B is derived");
  double barb_bound = 0.0;
  CLI::Option* barb_bound_opt =
      barb_cmd->add_option("--bound-B", barb_bound, "bound constant B");
  barb_cmd->add_flag("--operator", ba.operator_mode,
                     "operator-norm sums sup_m sum_k e^{b(m-k)}||A_m^k||");
  barb_cmd->add_option("--json", ba.json_out, "write a JSON report");

  std::string ev_spec, ev_out = "-";
  index_t ev_horizon = 400;
  CLI::App* evolve_cmd =
      app.add_subcommand("evolve", "dump the norm table as m,n,log_norm CSV");
  evolve_cmd->add_option("spec", ev_spec, "system spec JSON file")->required();
  evolve_cmd->add_option("--horizon", ev_horizon, "table horizon");
  evolve_cmd->add_option("--out", ev_out, "output CSV path ('-' = stdout)");

  std::string ex_config, ex_out = "candidates.jsonl";
  bool ex_resume = false;
  std::size_t ex_topk = 0;
  CLI::App* explore_cmd = app.add_subcommand(
      "explore", "search for pointwise-Barbashin conjecture candidates");
  explore_cmd->add_option("config", ex_config, "explorer config JSON file")
      ->required();
  explore_cmd->add_option("--out", ex_out, "JSON-lines output path");
  explore_cmd->add_flag("--resume", ex_resume,
                        "skip candidates already present in --out");
  CLI::Option* ex_topk_opt =
      explore_cmd->add_option("--top-k", ex_topk, "summary lines to print");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*classify_cmd) return run_classify(ca, out);
    if (*datko_cmd) {
      if (*datko_n_opt) da.n = datko_n;
      if (*datko_p_opt) da.p = datko_p;
      if (*datko_bound_opt) da.bound_D = datko_bound;
      return run_datko(da, out);
    }
    if (*barb_cmd) {
      if (*barb_m_opt) ba.m = barb_m;
      if (*barb_bound_opt) ba.bound_B = barb_bound;
      return run_barbashin(ba, out);
    }
    if (*evolve_cmd) return run_evolve(ev_spec, ev_horizon, ev_out, out);
    if (*explore_cmd)
      return run_explore(ex_config, ex_out, ex_resume,
                         *ex_topk_opt ? std::optional<std::size_t>(ex_topk)
                                      : std::nullopt,
                         out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace expstab::cli
