#include "ddp/enumeration.hpp"
#include "ddp/error.hpp"
#include "ddp/evaluator.hpp"
#include "ddp/io.hpp"
#include "ddp/qseries.hpp"
#include "ddp/saddle.hpp"
#include "ddp/scaling.hpp"
#include "ddp/theta.hpp"
#include "ddp/verification/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef DDP_VERSION
#define DDP_VERSION "unknown"
#endif

namespace {

using json = nlohmann::ordered_json;
using ddp::io::format_double;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double tail_cutoff = 1e-16;
  double quadrature_tol = 1e-14;
  double stability_tol = 1e-12;
  std::string format;  // empty: the subcommand's natural format
  std::string out;
  unsigned threads = 0;  // 0: hardware concurrency

  bool csv(bool by_default = false) const { return format.empty() ? by_default : format == "csv"; }
  unsigned thread_count() const { return threads ? threads : std::max(1u, std::thread::hardware_concurrency()); }
  ddp::evaluator::EvalOptions eval() const {
    ddp::evaluator::EvalOptions o;
    o.tail_cutoff = tail_cutoff;
    o.stability_tol = stability_tol;
    return o;
  }
  ddp::airy::ThetaOptions theta() const {
    ddp::airy::ThetaOptions o;
    o.rel_tol = quadrature_tol;
    return o;
  }
  void validate() const {
    if (!(tail_cutoff > 0) || !(quadrature_tol > 0) || !(stability_tol > 0))
      throw UsageError("tolerances must be positive");
  }
};

// JSON text with every double in 17-digit form; strings escaped by nlohmann.
void dump(std::string& out, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(k).dump() + ": ";
        dump(out, v, indent + 2);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
      return;
    }
    case json::value_t::array: {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump(out, j[i], indent);
      }
      out += "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no nan/inf literals.
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

// Config echo and version, attached to every JSON report.
json g_provenance = json::object();

std::string to_text(json j) {
  if (j.is_object() && !g_provenance.empty()) j["provenance"] = g_provenance;
  std::string s;
  dump(s, j);
  s += '\n';
  return s;
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty() || cfg.out == "-") std::cout << content << std::flush;
  else ddp::io::atomic_write(cfg.out, content);
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string upper_env(std::string name) {
  for (auto& c : name) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return "DDP_" + name;
}

// Every long option gets an environment fallback DDP_<NAME>.
void attach_env(CLI::App& app) {
  for (CLI::Option* o : app.get_options()) {
    const auto& names = o->get_lnames();
    if (names.empty() || names.front() == "help" || names.front() == "config" || o->get_expected_min() == 0) continue;
    o->envname(upper_env(names.front()));
  }
  for (CLI::App* sub : app.get_subcommands({})) attach_env(*sub);
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(e[-1]))) --e;
  const auto r = std::from_chars(b, e, v);
  if (r.ec != std::errc() || r.ptr != e) throw UsageError("cannot parse " + what + ": '" + s + "'");
  return v;
}

// w,t,epsilon rows; a header line is skipped when it does not parse.
std::vector<ddp::evaluator::ModelPoint> read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open grid file " + path);
  std::vector<ddp::evaluator::ModelPoint> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 3) throw UsageError(path + ":" + std::to_string(lineno) + ": expected w,t,epsilon");
    if (lineno == 1 && f[0].find_first_of("0123456789") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    pts.push_back({parse_double(f[0], where), parse_double(f[1], where), parse_double(f[2], where)});
  }
  return pts;
}

// ---- subcommands --------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, std::int64_t max_m, bool brute) {
  if (max_m < 0) throw UsageError("--max-m must be non-negative");
  const auto table = brute ? ddp::enumeration::enumerate_bruteforce(max_m)
                           : ddp::enumeration::CountTable::from_series(
                                 ddp::enumeration::series_from_funeq(static_cast<std::size_t>(max_m)));
  if (cfg.csv(true)) {
    std::ostringstream os;
    ddp::enumeration::write_counts_csv(os, table);
    emit(cfg, os.str());
    return 0;
  }
  std::vector<std::pair<ddp::enumeration::CountKey, ddp::BigInt>> rows(table.entries().begin(), table.entries().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.m, x.first.k, x.first.n) < std::tie(y.first.m, y.first.k, y.first.n);
  });
  json arr = json::array();
  for (const auto& [key, c] : rows) {
    json row{{"k", key.k}, {"m", key.m}, {"n", key.n}};
    if (c <= std::numeric_limits<std::uint64_t>::max()) row["count"] = c.convert_to<std::uint64_t>();
    else row["count"] = c.str();
    arr.push_back(std::move(row));
  }
  emit(cfg, to_text(json{{"max_m", max_m}, {"method", brute ? "brute-force" : "functional-equation"},
                         {"counts", std::move(arr)}}));
  return 0;
}

int cmd_phi(const RunConfig& cfg, double a, double t, double q, unsigned shift) {
  if (!(std::abs(q) < 1.0)) throw UsageError("--q must satisfy |q| < 1");
  const auto r = ddp::qseries::phi_series<double, double>(a, t, q, shift, 1e-17, 1000000);
  if (cfg.csv()) emit(cfg, "value,terms\n" + format_double(r.value) + "," + std::to_string(r.terms) + "\n");
  else emit(cfg, to_text(json{{"value", r.value}, {"terms", r.terms}}));
  return 0;
}

int cmd_eval_g(const RunConfig& cfg, double w, double t, double eps, const std::string& grid) {
  const auto opt = cfg.eval();
  if (!grid.empty()) {
    const auto pts = read_grid(grid);
    std::vector<ddp::evaluator::EvalResult> res(pts.size());
    std::vector<std::string> errors(pts.size());
    ddp::io::parallel_for(pts.size(), cfg.thread_count(), [&](std::size_t i) {
      try {
        res[i] = ddp::evaluator::eval_G_backward(pts[i], opt);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    });
    std::string out = "w,t,epsilon,G,gap\n";
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const bool failed = !errors[i].empty();
      ok &= !failed && !res[i].flagged;
      if (failed) std::cerr << "row " << i + 1 << ": " << errors[i] << "\n";
      out += ddp::io::csv_line({format_double(pts[i].w), format_double(pts[i].t), format_double(pts[i].epsilon),
                                failed ? "nan" : format_double(res[i].G),
                                failed ? "nan" : format_double(res[i].stability_gap)});
    }
    emit(cfg, out);
    return ok ? 0 : kExitCheckFailed;
  }
  const auto r = ddp::evaluator::eval_G_backward({w, t, eps}, opt);
  if (cfg.csv())
    emit(cfg, "G,N,stability_gap\n" + format_double(r.G) + "," + std::to_string(r.N) + "," +
                  format_double(r.stability_gap) + "\n");
  else
    emit(cfg, to_text(json{{"G", r.G}, {"N", r.N}, {"stability_gap", r.stability_gap}, {"flagged", r.flagged}}));
  return r.flagged ? kExitCheckFailed : 0;
}

int cmd_saddles(const RunConfig& cfg, double a, double t) {
  const auto s = ddp::saddle::saddles(ddp::saddle::PhaseContext(a, t));
  json roots = json::array();
  for (const auto& z : s.z) roots.push_back(complex_json(z));
  emit(cfg, to_text(json{{"a", a},
                         {"t", t},
                         {"roots", roots},
                         {"case", ddp::saddle::to_string(s.case_tag)},
                         {"t_c_minus", optional_json(s.t_c_minus)},
                         {"t_c_plus", optional_json(s.t_c_plus)},
                         {"z_c_minus", optional_json(s.z_c_minus)},
                         {"z_c_plus", optional_json(s.z_c_plus)},
                         {"symmetric_residuals", s.symmetric_residuals}}));
  return 0;
}

int cmd_trace(const RunConfig& cfg, double a, double t, int only, double radius_cap) {
  const ddp::saddle::PhaseContext ctx(a, t);
  const auto s = ddp::saddle::saddles(ctx);
  ddp::saddle::TraceOptions opt;
  opt.radius_cap = radius_cap;
  std::string out = "path_id,re,im,re_f,im_f\n";
  bool all_ok = true;
  for (int j = 0; j < 3; ++j) {
    if (only && only != j + 1) continue;
    for (int d = 0; d < 2; ++d) {
      const int id = 2 * j + d;
      const auto dir = d == 0 ? ddp::saddle::Direction::Upper : ddp::saddle::Direction::Lower;
      try {
        const auto p = ddp::saddle::trace_descent(ctx, s.z[static_cast<std::size_t>(j)], dir, opt);
        for (std::size_t i = 0; i < p.points.size(); ++i)
          out += ddp::io::csv_line({std::to_string(id), format_double(p.points[i].real()),
                                    format_double(p.points[i].imag()), format_double(p.f_values[i].real()),
                                    format_double(p.f_values[i].imag())});
      } catch (const ddp::PathLostError& e) {
        all_ok = false;
        std::cerr << "path " << id << " (z" << j + 1 << (d == 0 ? " upper" : " lower") << "): " << e.what()
                  << " near " << e.last_good() << "\n";
      }
    }
  }
  emit(cfg, out);
  return all_ok ? 0 : kExitCheckFailed;
}

int cmd_theta(const RunConfig& cfg, int k, double s1, std::optional<double> s2) {
  if (k != 3 && k != 4) throw UsageError("--k must be 3 or 4");
  if (k == 3 && s2) throw UsageError("--s2 applies to k=4 only");
  std::vector<ddp::airy::Complex> s{s1};
  if (k == 4) s.push_back(s2.value_or(0.0));
  const auto v = ddp::airy::theta(k, s, 0, cfg.theta());
  json j{{"k", k}, {"s1", s1}};
  if (k == 4) j["s2"] = s[1].real();
  j["value"] = complex_json(v);
  if (k == 4) {
    const auto p = ddp::airy::theta4_partials(s[0], s[1], cfg.theta());
    j["d_s1"] = complex_json(p.d1);
    j["d_s2"] = complex_json(p.d2);
  }
  emit(cfg, to_text(j));
  return 0;
}

int cmd_scaling_check(const RunConfig& cfg, double delta, double tau, double eps) {
  const auto r = ddp::airy::theorem1_check({delta, tau, eps}, cfg.eval(), cfg.theta());
  emit(cfg, to_text(json{{"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"deviation", r.lhs - r.rhs},
                         {"s1", r.s1},
                         {"s2", r.s2},
                         {"phi", r.phi},
                         {"N", r.eval.N},
                         {"stability_gap", r.eval.stability_gap}}));
  return r.eval.flagged ? kExitCheckFailed : 0;
}

int cmd_fig7(const RunConfig& cfg, double lo, double hi, double step, bool stability) {
  if (!(hi > lo) || !(step > 0)) throw UsageError("fig7: need --s-max > --s-min and --step > 0");
  std::vector<double> s;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) s.push_back(lo + static_cast<double>(i) * step);
  auto opt = cfg.eval();
  opt.check_stability = stability;
  const auto d = ddp::airy::fig7_data(s, {1e-4, 1e-5, 1e-6}, cfg.thread_count(), opt, cfg.theta());
  std::string out = "s,F_exact,F_eps1e-4,F_eps1e-5,F_eps1e-6\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += ddp::io::csv_line({format_double(s[i]), format_double(d.exact[i]), format_double(d.approx[0][i]),
                              format_double(d.approx[1][i]), format_double(d.approx[2][i])});
  emit(cfg, out);
  return 0;
}

json fit_json(const ddp::airy::PowerFit& f, double expected) {
  return json{{"fitted", f.exponent}, {"expected", expected}, {"r2", f.r2}, {"flagged", f.flagged}};
}

int cmd_table1(const RunConfig& cfg) {
  const auto rows = ddp::airy::table1_report();
  bool flagged = false;
  if (cfg.csv()) {
    std::string out = "w,gamma_u,gamma_u_expected,gamma_u_r2,gamma_t,gamma_t_expected,gamma_t_r2,phi_cr,phi_cr_expected\n";
    for (const auto& r : rows) {
      flagged |= r.gamma_u.flagged || r.gamma_t.flagged;
      out += ddp::io::csv_line({format_double(r.w), format_double(r.gamma_u.exponent), format_double(r.expected_gamma_u),
                                format_double(r.gamma_u.r2), format_double(r.gamma_t.exponent),
                                format_double(r.expected_gamma_t), format_double(r.gamma_t.r2),
                                format_double(r.phi_cr()), format_double(r.expected_phi_cr())});
    }
    emit(cfg, out);
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      flagged |= r.gamma_u.flagged || r.gamma_t.flagged;
      arr.push_back(json{{"w", r.w},
                         {"label", r.label},
                         {"gamma_u", fit_json(r.gamma_u, r.expected_gamma_u)},
                         {"gamma_t", fit_json(r.gamma_t, r.expected_gamma_t)},
                         {"phi_cr", json{{"fitted", r.phi_cr()}, {"expected", r.expected_phi_cr()}}}});
    }
    emit(cfg, to_text(json{{"rows", arr}}));
  }
  return flagged ? kExitCheckFailed : 0;
}

int cmd_verify_all(const RunConfig& cfg) {
  json arr = json::array();
  bool ok = true;
  const bool as_json = !cfg.csv() && !cfg.out.empty();
  ddp::acceptance::run_all(cfg.thread_count(), [&](const ddp::acceptance::CriterionResult& r) {
    ok &= r.pass;
    std::cout << ddp::acceptance::format_line(r) << std::endl;
    std::cerr << "  [" << r.id << "] " << r.seconds << " s\n";
    arr.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  });
  if (as_json) emit(cfg, to_text(json{{"passed", ok}, {"criteria", arr}}));
  return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Dyck paths: exact enumeration, q-series, evaluation and scaling analysis", "ddp"};
  app.set_version_flag("--version", std::string(DDP_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file (sections [subcommand] for subcommand options)");
  app.get_config_ptr()->check(CLI::ExistingFile);

  RunConfig cfg;
  app.add_option("--tail-cutoff", cfg.tail_cutoff, "Backward recursion starts where t·q^N falls below this")
      ->capture_default_str();
  app.add_option("--quadrature-tol", cfg.quadrature_tol, "Relative tolerance of the Θ_k quadrature")
      ->capture_default_str();
  app.add_option("--stability-tol", cfg.stability_tol, "Flag threshold for the N-doubling gap")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format (default: csv for enumerate/trace/fig7, json otherwise)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps (0: all cores)")->capture_default_str();

  // enumerate
  std::int64_t max_m = 6;
  bool brute = false;
  auto* en = app.add_subcommand("enumerate", "Exact counts p(k, m, n) of paths by jumps, half-length and area");
  en->add_option("--max-m", max_m, "Largest half-length")->required();
  en->add_flag("--brute-force", brute, "Enumerate step sequences instead of iterating the functional equation");
  en->add_option("--out", cfg.out, "Output file (default stdout)");

  // qseries phi
  double qa = 0, qt = 0, qq = 0;
  unsigned shift = 0;
  auto* qs = app.add_subcommand("qseries", "Basic hypergeometric series");
  qs->require_subcommand(1);
  qs->fallthrough();
  auto* phi = qs->add_subcommand("phi", "φ(a, q^shift·t, q)");
  phi->add_option("--a", qa)->required();
  phi->add_option("--t", qt)->required();
  phi->add_option("--q", qq)->required();
  phi->add_option("--shift", shift)->capture_default_str();

  // eval-g
  double ew = 0, et = 0, ee = 0;
  std::string grid;
  auto* ev = app.add_subcommand("eval-g", "G(w, t, e^{-ε}) by backward recursion");
  auto* ev_w = ev->add_option("--w", ew);
  auto* ev_t = ev->add_option("--t", et);
  auto* ev_e = ev->add_option("--epsilon", ee);
  ev->add_option("--tol", cfg.stability_tol, "Same as --stability-tol");
  auto* ev_grid = ev->add_option("--grid", grid, "CSV of w,t,epsilon rows; streams w,t,epsilon,G,gap")
                      ->check(CLI::ExistingFile)
                      ->excludes(ev_w, ev_t, ev_e);
  ev->add_option("--out", cfg.out, "Output file (default stdout)");

  // saddles / trace
  double sa = 0, st = 0;
  auto* sd = app.add_subcommand("saddles", "Saddle points of the phase function");
  sd->add_option("--a", sa)->required();
  sd->add_option("--t", st)->required();
  int only = 0;
  double radius_cap = ddp::saddle::TraceOptions{}.radius_cap;
  auto* tr = app.add_subcommand("trace", "Steepest-descent paths from the saddles");
  tr->add_option("--a", sa)->required();
  tr->add_option("--t", st)->required();
  tr->add_option("--out", cfg.out, "Output CSV (default stdout)");
  tr->add_option("--saddle", only, "Trace only z_j (1-3)")->check(CLI::Range(0, 3));
  tr->add_option("--radius-cap", radius_cap)->capture_default_str();

  // theta
  int tk = 4;
  double ts1 = 0;
  std::optional<double> ts2;
  auto* th = app.add_subcommand("theta", "Generalised Airy integral Θ_k");
  th->add_option("--k", tk)->required();
  th->add_option("--s1", ts1)->required();
  th->add_option("--s2", ts2);

  // scaling-check
  double sdelta = 0, stau = 0, seps = 0;
  auto* sc = app.add_subcommand("scaling-check", "Ratio G against its scaling form 3(1 + 2^{1/4}Φ(s1,s2)ε^{1/4})");
  sc->add_option("--delta", sdelta)->required();
  sc->add_option("--tau", stau)->required();
  sc->add_option("--epsilon", seps)->required();

  // fig7
  double s_min = -6.0, s_max = 2.0, s_step = 0.05;
  bool stability = false;
  auto* f7 = app.add_subcommand("fig7", "Scaling function F(s) and its finite-ε approximations");
  f7->add_option("--out", cfg.out, "Output CSV (default stdout)");
  f7->add_option("--s-min", s_min)->capture_default_str();
  f7->add_option("--s-max", s_max)->capture_default_str();
  f7->add_option("--step", s_step)->capture_default_str();
  f7->add_flag("--stability", stability, "Also run the N-doubling check at every point");

  auto* t1 = app.add_subcommand("table1", "Fitted critical exponents");
  t1->add_option("--out", cfg.out, "Output file (default stdout)");
  auto* va = app.add_subcommand("verify-all", "Run every acceptance criterion");
  va->add_option("--out", cfg.out, "Also write a JSON report here");

  attach_env(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  g_provenance = json{{"version", DDP_VERSION}, {"config", app.config_to_str(true, false)}};
  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    cfg.validate();
    if (*en) rc = cmd_enumerate(cfg, max_m, brute);
    else if (*phi) rc = cmd_phi(cfg, qa, qt, qq, shift);
    else if (*ev) {
      if (!ev_grid->count() && (!ev_w->count() || !ev_t->count() || !ev_e->count()))
        throw UsageError("eval-g needs --w, --t and --epsilon, or --grid");
      rc = cmd_eval_g(cfg, ew, et, ee, grid);
    } else if (*sd) rc = cmd_saddles(cfg, sa, st);
    else if (*tr) rc = cmd_trace(cfg, sa, st, only, radius_cap);
    else if (*th) rc = cmd_theta(cfg, tk, ts1, ts2);
    else if (*sc) rc = cmd_scaling_check(cfg, sdelta, stau, seps);
    else if (*f7) rc = cmd_fig7(cfg, s_min, s_max, s_step, stability);
    else if (*t1) rc = cmd_table1(cfg);
    else if (*va) rc = cmd_verify_all(cfg);
  } catch (const UsageError& e) {
    std::cerr << "ddp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ddp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << to_text(json{{"error", e.what()}});
    return kExitCheckFailed;
  }
  std::cerr << "wall-clock: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
            << " s\n";
  return rc;
}
