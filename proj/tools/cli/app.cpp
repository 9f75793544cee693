#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>

#include "expression.hpp"
#include "osci/ccf.hpp"
#include "osci/error.hpp"
#include "osci/oracle.hpp"
#include "osci/problem.hpp"

namespace osci::cli {
namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> log = [] {
    auto l = spdlog::stderr_logger_st("osci");
    l->set_pattern("[osci %l] %v");
    const char* env = std::getenv("OSCI_LOG");
    l->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
    return l;
  }();
  return log;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string complex_text(cplx z) {
  return g17(z.real()) + (z.imag() < 0 ? " - " : " + ") + g17(std::abs(z.imag())) + "i";
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::integrate: return "integrate";
    case Mode::table: return "table";
    case Mode::sweep: return "sweep";
    case Mode::oracle: return "oracle";
  }
  return "";
}

const char* vary_name(asymcheck::SweepVariable v) {
  switch (v) {
    case asymcheck::SweepVariable::omega: return "omega";
    case asymcheck::SweepVariable::k: return "k";
    case asymcheck::SweepVariable::omega_eq_2k: return "omega_eq_2k";
  }
  return "";
}

ProblemParams params_for(const RunConfig& cfg, double varied) {
  switch (cfg.vary) {
    case asymcheck::SweepVariable::omega:
      return {cfg.alpha, cfg.beta, cfg.nu, cfg.k.front(), varied};
    case asymcheck::SweepVariable::k:
      return {cfg.alpha, cfg.beta, cfg.nu, varied, cfg.omega.front()};
    case asymcheck::SweepVariable::omega_eq_2k:
      return {cfg.alpha, cfg.beta, cfg.nu, 0.5 * varied, varied};
  }
  throw DomainError(Stage::cli, "unknown sweep variable");
}

ProblemParams single_params(const RunConfig& cfg) {
  if (cfg.vary == asymcheck::SweepVariable::omega_eq_2k) return params_for(cfg, cfg.omega.front());
  return {cfg.alpha, cfg.beta, cfg.nu, cfg.k.front(), cfg.omega.front()};
}

oracle::OracleConfig oracle_config() {
  oracle::OracleConfig oc;
  oc.warn = [](std::string_view msg) { logger()->warn("{}", msg); };
  return oc;
}

ccf::MethodConfig method_config(int N, int s) {
  ccf::MethodConfig m;
  m.N = N;
  m.s = s;
  m.start.oracle = oracle_config();
  return m;
}

json config_json(const RunConfig& cfg) {
  json j;
  j["mode"] = mode_name(cfg.mode);
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["nu"] = cfg.nu;
  j["k"] = cfg.k;
  j["omega"] = cfg.omega;
  j["N"] = cfg.N;
  j["s"] = cfg.s;
  j["f"] = cfg.f;
  j["vary"] = vary_name(cfg.vary);
  return j;
}

struct Prepared {
  Expr expr;
  cheb::Integrand f;
};

Prepared prepare(const RunConfig& cfg, int derivative_order) {
  Expr e = resolve_integrand(cfg.f);
  validate(e, derivative_order);
  logger()->debug("integrand: {}", to_string(e));
  return {e, make_integrand(e, derivative_order)};
}

void run_integrate(const RunConfig& cfg, std::ostream& out) {
  const int N = cfg.N.front();
  const int s = cfg.s.front();
  const Prepared prep = prepare(cfg, s);
  const ProblemParams p = single_params(cfg);
  const ccf::QuadResult r = ccf::ccf_integrate(prep.f, p, method_config(N, s));
  logger()->info("moments: starting {}, forward {}, bvp {}", r.n_moments_starting,
                 r.n_moments_forward, r.n_moments_bvp);
  switch (cfg.format) {
    case Format::csv:
      out << "value_re,value_im,est_error,n_starting,n_forward,n_bvp,starting_from_oracle\n"
          << g17(r.value.real()) << ',' << g17(r.value.imag()) << ',' << g17(r.est_error) << ','
          << r.n_moments_starting << ',' << r.n_moments_forward << ',' << r.n_moments_bvp << ','
          << (r.starting_from_oracle ? 1 : 0) << '\n';
      break;
    case Format::json: {
      json j;
      j["value_re"] = r.value.real();
      j["value_im"] = r.value.imag();
      j["est_error"] = r.est_error;
      j["config"] = config_json(cfg);
      j["timings_ms"] = {{"interpolation", r.timings.interpolation_ms},
                         {"starting", r.timings.starting_ms},
                         {"recurrence", r.timings.recurrence_ms},
                         {"summation", r.timings.summation_ms}};
      j["moments"] = {{"starting", r.n_moments_starting},
                      {"forward", r.n_moments_forward},
                      {"bvp", r.n_moments_bvp},
                      {"starting_from_oracle", r.starting_from_oracle}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::pretty:
      out << "value       " << complex_text(r.value) << '\n'
          << "est_error   " << sci(r.est_error) << '\n'
          << "moments     starting " << r.n_moments_starting << ", forward " << r.n_moments_forward
          << ", bvp " << r.n_moments_bvp << (r.starting_from_oracle ? " (oracle start)" : "") << '\n'
          << "timings_ms  interpolation " << sci(r.timings.interpolation_ms) << ", starting "
          << sci(r.timings.starting_ms) << ", recurrence " << sci(r.timings.recurrence_ms)
          << ", summation " << sci(r.timings.summation_ms) << '\n';
      break;
  }
}

void run_oracle(const RunConfig& cfg, std::ostream& out) {
  const Prepared prep = prepare(cfg, 0);
  const ProblemParams p = single_params(cfg);
  const cplx v = oracle::reference_integral(prep.f, p, oracle_config());
  switch (cfg.format) {
    case Format::csv:
      out << "value_re,value_im\n" << g17(v.real()) << ',' << g17(v.imag()) << '\n';
      break;
    case Format::json: {
      json j;
      j["value_re"] = v.real();
      j["value_im"] = v.imag();
      j["est_error"] = oracle::OracleConfig{}.rel_tol * std::abs(v);
      j["config"] = config_json(cfg);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::pretty:
      out << "value  " << complex_text(v) << '\n';
      break;
  }
}

void run_table(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double>& values =
      cfg.vary == asymcheck::SweepVariable::k ? cfg.k : cfg.omega;
  const int max_N = *std::max_element(cfg.N.begin(), cfg.N.end());
  const int max_s = *std::max_element(cfg.s.begin(), cfg.s.end());
  const Prepared prep = prepare(cfg, max_s + 2);
  const oracle::OracleConfig oc = oracle_config();
  const std::string var = cfg.vary == asymcheck::SweepVariable::k ? "k" : "omega";

  std::vector<cplx> refs;
  std::vector<std::string> ref_kind;
  std::vector<std::vector<ccf::ConvergenceCell>> columns;
  for (const double v : values) {
    const ProblemParams p = params_for(cfg, v);
    const bool use_oracle = cfg.reference == Reference::oracle ||
                            (cfg.reference == Reference::automatic && p.k() + p.omega() <= oc.frequency_cap);
    cplx ref;
    if (use_oracle) {
      ref = oracle::reference_integral(prep.f, p, oc);
    } else {
      ref = ccf::ccf_integrate(prep.f, p, method_config(max_N + 12, max_s + 2)).value;
    }
    logger()->info("{} = {}: reference {} ({})", var, v, complex_text(ref), use_oracle ? "oracle" : "ccf");
    refs.push_back(ref);
    ref_kind.push_back(use_oracle ? "oracle" : "ccf");
    columns.push_back(ccf::convergence_table(prep.f, p, cfg.N, cfg.s, ref, method_config(max_N, 0)));
  }

  const std::size_t rows = columns.front().size();
  switch (cfg.format) {
    case Format::csv: {
      out << "s,N";
      for (const double v : values) out << ',' << var << '=' << g17(v);
      out << "\nreference_re,";
      for (const cplx& r : refs) out << ',' << g17(r.real());
      out << "\nreference_im,";
      for (const cplx& r : refs) out << ',' << g17(r.imag());
      out << '\n';
      for (std::size_t i = 0; i < rows; ++i) {
        out << columns.front()[i].s << ',' << columns.front()[i].N;
        for (const auto& col : columns) out << ',' << g17(col[i].rel_error);
        out << '\n';
      }
      break;
    }
    case Format::json: {
      json j;
      j["config"] = config_json(cfg);
      j["reference"] = json::array();
      for (std::size_t c = 0; c < values.size(); ++c) {
        j["reference"].push_back({{var, values[c]},
                                  {"value_re", refs[c].real()},
                                  {"value_im", refs[c].imag()},
                                  {"source", ref_kind[c]}});
      }
      j["cells"] = json::array();
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < values.size(); ++c) {
          j["cells"].push_back({{"s", columns[c][i].s},
                                {"N", columns[c][i].N},
                                {var, values[c]},
                                {"rel_error", columns[c][i].rel_error}});
        }
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::pretty: {
      char buf[64];
      out << "  s    N";
      for (const double v : values) {
        std::snprintf(buf, sizeof buf, "  %14s", (var + "=" + g17(v)).c_str());
        out << buf;
      }
      out << '\n';
      for (std::size_t i = 0; i < rows; ++i) {
        std::snprintf(buf, sizeof buf, "%3d %4d", columns.front()[i].s, columns.front()[i].N);
        out << buf;
        for (const auto& col : columns) {
          std::snprintf(buf, sizeof buf, "  %14s", sci(col[i].rel_error).c_str());
          out << buf;
        }
        out << '\n';
      }
      for (std::size_t c = 0; c < values.size(); ++c) {
        out << "reference " << var << '=' << g17(values[c]) << ": " << complex_text(refs[c]) << " ("
            << ref_kind[c] << ")\n";
      }
      break;
    }
  }
}

void run_sweep(const RunConfig& cfg, std::ostream& out) {
  asymcheck::ScalingSpec spec;
  spec.variable = cfg.vary;
  spec.range = {cfg.lo, cfg.hi, cfg.step};
  spec.alpha = cfg.alpha;
  spec.beta = cfg.beta;
  spec.nu = cfg.nu;
  spec.k = cfg.k.front();
  spec.omega = cfg.omega.front();
  const int N = cfg.N.front();
  const int s = cfg.s.front();
  const asymcheck::Order order =
      cfg.quantity == asymcheck::Quantity::integral_magnitude
          ? asymcheck::magnitude_order(cfg.vary, cfg.alpha, cfg.beta, cfg.nu)
          : asymcheck::error_order(cfg.vary, s, cfg.alpha, cfg.beta, cfg.nu);
  spec.exponent = cfg.exponent.value_or(order.exponent);
  spec.log_factor = !cfg.exponent && order.log_factor;
  logger()->info("sweep over {}: exponent {}{}", vary_name(cfg.vary), spec.exponent,
                 spec.log_factor ? ", divided by 1 + ln x" : "");

  const bool need_f = cfg.quantity == asymcheck::Quantity::ccf_error;
  const Prepared prep = need_f ? prepare(cfg, s + 2) : Prepared{nullptr, cheb::Integrand{nullptr}};
  const std::vector<asymcheck::SeriesPoint> series =
      asymcheck::scaled_series(spec, cfg.quantity, prep.f, method_config(N, s), cfg.threads);

  switch (cfg.format) {
    case Format::csv:
      out << "x,raw,scaled\n";
      for (const auto& pt : series) out << g17(pt.x) << ',' << g17(pt.raw) << ',' << g17(pt.scaled) << '\n';
      break;
    case Format::json: {
      json j;
      j["config"] = config_json(cfg);
      j["exponent"] = spec.exponent;
      j["log_factor"] = spec.log_factor;
      j["series"] = json::array();
      for (const auto& pt : series) j["series"].push_back({{"x", pt.x}, {"raw", pt.raw}, {"scaled", pt.scaled}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::pretty: {
      char buf[96];
      for (const auto& pt : series) {
        std::snprintf(buf, sizeof buf, "%10g  %12.5e  %12.5e\n", pt.x, pt.raw, pt.scaled);
        out << buf;
      }
      if (series.size() >= 2) {
        out << "max/min (upper half) " << sci(asymcheck::max_over_min(series, series.size() / 2)) << '\n';
      }
      break;
    }
  }
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
  if (dynamic_cast<const AccuracyError*>(&e)) return "accuracy";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence";
  if (dynamic_cast<const SingularError*>(&e)) return "singular";
  return "error";
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Clenshaw-Curtis-Filon quadrature for x^a (1-x)^b e^{2ikx} H_nu(omega x) weights", "osci"};
  app.option_defaults()->always_capture_default();

  const std::map<std::string, Mode> modes{{"integrate", Mode::integrate},
                                          {"table", Mode::table},
                                          {"sweep", Mode::sweep},
                                          {"oracle", Mode::oracle}};
  const std::map<std::string, Format> formats{{"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}};
  const std::map<std::string, asymcheck::SweepVariable> vars{{"omega", asymcheck::SweepVariable::omega},
                                                             {"k", asymcheck::SweepVariable::k},
                                                             {"omega_eq_2k", asymcheck::SweepVariable::omega_eq_2k}};
  const std::map<std::string, Reference> refs{{"auto", Reference::automatic},
                                              {"oracle", Reference::oracle},
                                              {"ccf", Reference::ccf}};
  const std::map<std::string, asymcheck::Quantity> quantities{{"magnitude", asymcheck::Quantity::integral_magnitude},
                                                              {"error", asymcheck::Quantity::ccf_error}};

  app.add_option("--mode", cfg.mode, "integrate | table | sweep | oracle")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->option_text("NAME");
  app.add_option("--alpha", cfg.alpha, "exponent of x");
  app.add_option("--beta", cfg.beta, "exponent of 1 - x");
  app.add_option("--nu", cfg.nu, "Hankel order");
  app.add_option("--k", cfg.k, "frequency of e^{2ikx} (comma list in table mode)")
      ->delimiter(',')
      ->option_text("FLOAT[,...]");
  app.add_option("--omega", cfg.omega, "Hankel frequency (comma list in table mode)")
      ->delimiter(',')
      ->option_text("FLOAT[,...]");
  app.add_option("--N", cfg.N, "interpolation degree (comma list in table mode)")
      ->delimiter(',')
      ->check(CLI::Range(2, 1 << 24))
      ->option_text("INT[,...]");
  app.add_option("--s", cfg.s, "endpoint derivative order (comma list in table mode)")
      ->delimiter(',')
      ->check(CLI::Range(0, 64))
      ->option_text("INT[,...]");
  app.add_option("--f", cfg.f, "integrand expression in x, or ex41 | ex42 | ex43 | one");
  app.add_option("--out", cfg.out, "output file, - for stdout");
  app.add_option("--format", cfg.format, "pretty | csv | json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("NAME");
  app.add_option("--vary", cfg.vary, "parameter varied by table and sweep: omega | k | omega_eq_2k")
      ->transform(CLI::CheckedTransformer(vars, CLI::ignore_case))
      ->option_text("NAME");
  app.add_option("--reference", cfg.reference, "table reference: auto | oracle | ccf")
      ->transform(CLI::CheckedTransformer(refs, CLI::ignore_case))
      ->option_text("NAME");
  app.add_option("--quantity", cfg.quantity, "sweep quantity: magnitude | error")
      ->transform(CLI::CheckedTransformer(quantities, CLI::ignore_case))
      ->option_text("NAME");
  app.add_option("--lo", cfg.lo, "sweep start");
  app.add_option("--hi", cfg.hi, "sweep end");
  app.add_option("--step", cfg.step, "sweep step");
  app.add_option("--exponent", cfg.exponent, "sweep scaling exponent (default: theoretical order)");
  app.add_option("--threads", cfg.threads, "sweep worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  }
  return cfg;
}

void run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k.empty() || cfg.omega.empty() || cfg.N.empty() || cfg.s.empty()) {
    throw DomainError(Stage::cli, "parameter lists must not be empty");
  }
  if (cfg.mode != Mode::table &&
      (cfg.k.size() > 1 || cfg.omega.size() > 1 || cfg.N.size() > 1 || cfg.s.size() > 1)) {
    throw DomainError(Stage::cli, "parameter lists are only accepted in table mode");
  }
  switch (cfg.mode) {
    case Mode::integrate: run_integrate(cfg, out); break;
    case Mode::table: run_table(cfg, out); break;
    case Mode::sweep: run_sweep(cfg, out); break;
    case Mode::oracle: run_oracle(cfg, out); break;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "osci: " << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out != "-") {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      err << "osci: cannot open " << cfg.out << " for writing\n";
      return 4;
    }
    sink = &file;
  }

  auto report = [&](const std::exception& e, std::string_view stage) {
    if (cfg.format == Format::json) {
      json j;
      j["error"] = {{"kind", error_kind(e)}, {"stage", stage}, {"message", e.what()}};
      *sink << j.dump(2) << '\n';
    }
    err << "osci: " << stage << ": " << e.what() << '\n';
  };

  try {
    run(cfg, *sink);
  } catch (const ParseError& e) {
    report(e, to_string(e.stage()));
    return 2;
  } catch (const Error& e) {
    report(e, to_string(e.stage()));
    return e.stage() == Stage::parse || e.stage() == Stage::cli ? 2 : 3;
  } catch (const std::exception& e) {
    report(e, "unknown");
    return 4;
  }
  return 0;
}

}  // namespace osci::cli
