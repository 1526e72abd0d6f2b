#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/matrix_file.hpp"
#include "trineq/evaluate.hpp"
#include "trineq/reference_cases.hpp"
#include "trineq/search.hpp"
#include "trineq/suite.hpp"

namespace trineq::cli {

namespace {

using nlohmann::json;

constexpr const char* kMatrixKeys[] = {"x", "y", "rho", "a", "b", "h"};

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_text(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

enum class Format { text, machine };

struct InputOptions {
  std::map<std::string, std::string> paths;
  std::optional<double> nu, alpha, s, t, d;
  std::string f, g;
  bool skip_hypothesis = false;
  int samples = 200;
  std::uint64_t seed = 0;

  void add_to(CLI::App& app) {
    for (const char* key : kMatrixKeys) {
      app.add_option_function<std::string>(
          std::string("--") + key, [this, key](const std::string& p) { paths[key] = p; },
          std::string("matrix file for ") + key);
    }
    app.add_option("--nu", nu, "deformation parameter in (0,1]");
    app.add_option("--alpha", alpha, "skew parameter in [0,1]");
    app.add_option("--s", s, "Audenaert exponent in [0,1]");
    app.add_option("--t", t, "exponent for frac-power and L_t");
    app.add_option("--d", d, "trace constraint for the first variational identity");
    app.add_option("--f", f, "scalar function, e.g. power:0.3 or mix:0.5");
    app.add_option("--g", g, "scalar function, e.g. power:0.7");
    app.add_flag("--skip-hypothesis", skip_hypothesis, "do not enforce I <= Y <= X for thm32_lower");
    app.add_option("--samples", samples, "random candidates for the variational checks");
    app.add_option("--seed", seed, "seed for the variational candidates");
  }

  CaseInputs build() const {
    CaseInputs in;
    for (const auto& [key, path] : paths) in.set(key, read_hermitian(path));
    in.nu = nu;
    in.alpha = alpha;
    in.s = s;
    in.t = t;
    in.d = d;
    if (!f.empty()) in.f = ScalarFnSpec::parse(f);
    if (!g.empty()) in.g = ScalarFnSpec::parse(g);
    in.hypothesis = skip_hypothesis ? HypothesisPolicy::skip : HypothesisPolicy::enforce;
    in.samples = samples;
    in.seed = seed;
    return in;
  }
};

Format parse_format(const std::string& s) { return s == "machine" ? Format::machine : Format::text; }

json report_json(const GapReport& r) {
  json j = {{"id", to_string(r.id)},
            {"case", r.provenance.case_name},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"gap", r.gap},
            {"holds", r.holds},
            {"tolerance", r.tolerance},
            {"expectation", to_string(r.expectation)},
            {"applicable", r.applicable}};
  if (!r.provenance.params.empty()) j["params"] = r.provenance.params;
  if (r.provenance.seed) j["seed"] = *r.provenance.seed;
  if (r.provenance.dim > 0) j["dim"] = r.provenance.dim;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void print_report(std::ostream& out, const GapReport& r, Format fmt) {
  if (fmt == Format::machine) {
    out << report_json(r).dump() << '\n';
    return;
  }
  out << to_string(r.id) << ' ' << (r.provenance.case_name.empty() ? "-" : r.provenance.case_name) << ' '
      << g12(r.gap) << ' ' << (r.holds ? "true" : "false");
  if (!r.applicable) out << " [not applicable]";
  if (r.expectation != Expectation::none) out << " expect=" << to_string(r.expectation);
  if (!r.provenance.params.empty()) out << " " << r.provenance.params;
  if (!r.note.empty() && r.applicable) out << " (" << r.note << ")";
  out << '\n';
}

void print_matrix(std::ostream& out, const HermMatrix& m) {
  for (Index j = 0; j < m.dim(); ++j) {
    for (Index k = 0; k < m.dim(); ++k) {
      out << (k ? "  " : "") << complex_text(m(j, k));
    }
    out << '\n';
  }
}

json matrix_json(const HermMatrix& m) {
  json rows = json::array();
  for (Index j = 0; j < m.dim(); ++j) {
    json row = json::array();
    for (Index k = 0; k < m.dim(); ++k) row.push_back({m(j, k).real(), m(j, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

// ---- eval -----------------------------------------------------------------

int cmd_eval(const std::string& name, const InputOptions& opts, Format fmt, std::optional<double> tol,
             std::ostream& out) {
  const CaseInputs in = opts.build();
  const auto names = quantity_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) {
    const QuantityValue v = evaluate_quantity(name, in);
    if (fmt == Format::machine) {
      json j = {{"quantity", name}};
      if (const double* x = std::get_if<double>(&v)) j["value"] = *x;
      if (const Complex* z = std::get_if<Complex>(&v)) j["value"] = {z->real(), z->imag()};
      if (const HermMatrix* m = std::get_if<HermMatrix>(&v)) j["value"] = matrix_json(*m);
      out << j.dump() << '\n';
    } else if (const double* x = std::get_if<double>(&v)) {
      out << g12(*x) << '\n';
    } else if (const Complex* z = std::get_if<Complex>(&v)) {
      out << complex_text(*z) << '\n';
    } else {
      print_matrix(out, std::get<HermMatrix>(v));
    }
    return kOk;
  }

  const std::optional<InequalityId> id = parse_inequality_id(name);
  if (!id) throw DomainError("unknown quantity or inequality '" + name + "'");
  GapReport r = evaluate_gap(*id, in);
  if (tol) retolerance(r, *tol);
  r.expectation = is_proved(*id) ? Expectation::holds : Expectation::none;
  r.provenance.case_name = "input";
  if (fmt == Format::machine) {
    out << report_json(r).dump() << '\n';
  } else {
    out << "lhs " << g12(r.lhs) << "\nrhs " << g12(r.rhs) << "\ngap " << g17(r.gap) << "\nholds "
        << (r.holds ? "true" : "false") << '\n';
    for (const auto& t : r.detail) {
      if (t.name != "lhs" && t.name != "rhs") out << t.name << ' ' << g12(t.value) << '\n';
    }
  }
  return r.unexpected() ? kViolations : kOk;
}

// ---- check ----------------------------------------------------------------

struct CheckOptions {
  std::string target = "all";
  std::uint64_t seed = 42;
  int samples = 100;
  std::vector<int> dims;
  std::vector<double> nu, alpha;
  std::optional<double> tol;
  unsigned threads = 1;
  bool reference_only = false;
  bool no_trivial = false;
  int candidates = 20;
};

int cmd_check(const CheckOptions& o, Format fmt, std::ostream& out) {
  RunConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.reference_only ? 0 : o.samples;
  if (!o.dims.empty()) cfg.dims.assign(o.dims.begin(), o.dims.end());
  if (!o.nu.empty()) cfg.nu_grid = o.nu;
  if (!o.alpha.empty()) cfg.alpha_grid = o.alpha;
  cfg.rel_tol = o.tol;
  cfg.threads = o.threads;
  cfg.include_trivial_cases = !(o.reference_only || o.no_trivial);
  cfg.variational_candidates = o.candidates;
  if (o.target != "all") {
    const std::optional<InequalityId> id = parse_inequality_id(o.target);
    if (!id) throw DomainError("unknown inequality id '" + o.target + "'");
    cfg.ids = {*id};
  }

  const std::vector<GapReport> reports = run_suite(cfg);
  for (const auto& r : reports) print_report(out, r, fmt);
  const SuiteSummary s = summarize(reports);
  if (fmt == Format::machine) {
    out << json{{"summary", {{"reports", s.reports},
                             {"violations", s.violations},
                             {"unexpected", s.unexpected},
                             {"not_applicable", s.not_applicable},
                             {"errors", s.errors}}}}
               .dump()
        << '\n';
  } else {
    out << "summary: " << s.reports << " reports, " << s.violations << " violations, " << s.unexpected
        << " unexpected, " << s.not_applicable << " not applicable, " << s.errors << " errors\n";
  }
  return s.ok() ? kOk : kViolations;
}

// ---- search ---------------------------------------------------------------

struct SearchOptions {
  std::string id;
  int dim = 2;
  std::string kind = "auto";
  double scale = 1.0;
  std::vector<double> nu, alpha, s;
  std::string f, g;
  std::size_t budget = 20000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string out_dir = "search_out";
};

int cmd_search(const SearchOptions& o, Format fmt, std::ostream& out) {
  const std::optional<InequalityId> id = parse_inequality_id(o.id);
  if (!id) throw DomainError("unknown inequality id '" + o.id + "'");
  // "auto" keeps the id's own input kinds; observable never overrides them.
  const std::optional<SampleKind> kind =
      o.kind == "auto" ? std::optional(SampleKind::observable) : parse_sample_kind(o.kind);
  if (!kind) throw DomainError("unknown sample kind '" + o.kind + "'");

  SearchParams params;
  params.nu_grid = o.nu;
  params.alpha_grid = o.s.empty() ? o.alpha : o.s;
  if (!o.f.empty()) params.f = ScalarFnSpec::parse(o.f);
  if (!o.g.empty()) params.g = ScalarFnSpec::parse(o.g);
  params.workers = o.workers;

  const SearchRecord rec = minimize_gap(*id, SampleSpec{o.dim, *kind, o.scale, o.seed}, o.budget, params);
  if (rec.best_inputs.matrices.empty()) throw DomainError("search found no admissible candidate");

  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;
  std::ostringstream replay_cmd;
  replay_cmd << "trineq eval " << to_string(*id);
  for (const auto& [key, m] : rec.best_inputs.matrices) {
    const std::filesystem::path p = dir / (key + ".json");
    write_matrix_file(p, MatrixFile{key, m.matrix()});
    files.push_back(p.string());
    replay_cmd << " --" << key << ' ' << p.string();
  }
  json params_json = json::object();
  auto add_param = [&](const char* name, const std::optional<double>& v) {
    if (!v) return;
    params_json[name] = *v;
    replay_cmd << " --" << name << ' ' << g17(*v);
  };
  const auto needed = required_params(*id);
  for (const char* name : {"nu", "alpha", "s"}) {
    if (std::find(needed.begin(), needed.end(), name) == needed.end()) continue;
    add_param(name, name == std::string("nu") ? rec.best_inputs.nu
                    : name == std::string("alpha") ? rec.best_inputs.alpha
                                                   : rec.best_inputs.s);
  }
  if (*id == InequalityId::thm42_fg) {
    if (rec.best_inputs.f && rec.best_inputs.g) {
      params_json["f"] = rec.best_inputs.f->name();
      params_json["g"] = rec.best_inputs.g->name();
      replay_cmd << " --f " << rec.best_inputs.f->name() << " --g " << rec.best_inputs.g->name();
    } else {
      add_param("alpha", rec.best_inputs.alpha);
    }
  }

  GapReport best = evaluate_gap(*id, rec.best_inputs);
  best.expectation = is_proved(*id) ? Expectation::holds : Expectation::none;

  json record = {{"id", to_string(*id)},      {"best_gap", rec.best_gap}, {"evaluations", rec.evaluations},
                 {"seed", rec.seed},          {"dim", o.dim},             {"params", params_json},
                 {"files", files},            {"holds", best.holds},      {"replay", replay_cmd.str()}};
  std::ofstream(dir / "record.json") << record.dump(2) << '\n';

  if (fmt == Format::machine) {
    out << record.dump() << '\n';
  } else {
    out << "id " << to_string(*id) << "\nbest_gap " << g17(rec.best_gap) << "\nevaluations "
        << rec.evaluations << "\nseed " << rec.seed << "\nholds " << (best.holds ? "true" : "false")
        << "\n";
    for (const auto& f : files) out << "wrote " << f << '\n';
    out << "replay: " << replay_cmd.str() << '\n';
  }
  return best.unexpected() ? kViolations : kOk;
}

// ---- reproduce ------------------------------------------------------------

int cmd_reproduce(const std::string& target, Format fmt, std::ostream& out) {
  std::vector<Reproduction> rows;
  if (target == "all") {
    rows = reproduce_all();
  } else {
    rows.push_back(reproduce(target));
  }
  bool all_pass = true;
  if (fmt == Format::text) {
    out << std::left << std::setw(20) << "case" << std::setw(22) << "quantity" << std::setw(20) << "expected"
        << std::setw(22) << "computed" << std::setw(20) << "|difference|"
        << "pass\n";
  }
  for (const auto& rep : rows) {
    all_pass = all_pass && rep.pass();
    for (const auto& f : rep.facts) {
      const std::string diff = f.expected ? g12(f.difference) : "-";
      if (fmt == Format::machine) {
        json j = {{"case", rep.name},     {"quantity", f.label}, {"expected", f.expected_text},
                  {"computed", f.computed}, {"tolerance", f.tolerance}, {"pass", f.pass}};
        if (f.expected) j["difference"] = f.difference;
        out << j.dump() << '\n';
      } else {
        out << std::left << std::setw(20) << rep.name << std::setw(22) << f.label << std::setw(20)
            << f.expected_text << std::setw(22) << g12(f.computed) << std::setw(20) << diff
            << (f.pass ? "yes" : "NO") << '\n';
      }
    }
  }
  if (fmt == Format::text) {
    out << rows.size() << " cases, " << (all_pass ? "all pass" : "FAILURES") << '\n';
  }
  return all_pass ? kOk : kViolations;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checker for matrix trace and uncertainty inequalities"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<double> tol;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  auto* eval = app.add_subcommand("eval", "evaluate a quantity or an inequality gap on matrix files");
  std::string eval_name;
  InputOptions eval_opts;
  eval->set_help_flag("--help", "print this help message and exit");
  eval->add_option("name", eval_name, "quantity name or inequality id")->required();
  eval_opts.add_to(*eval);
  eval->add_option("--tol", tol, "relative tolerance factor");
  eval->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  auto* check = app.add_subcommand("check", "run the seeded property suite");
  CheckOptions copts;
  check->add_option("target", copts.target, "inequality id or 'all'");
  check->add_option("--seed", copts.seed);
  check->add_option("--samples", copts.samples);
  check->add_option("--dim", copts.dims, "dimensions, e.g. 2,3")->delimiter(',');
  check->add_option("--nu", copts.nu, "nu grid")->delimiter(',');
  check->add_option("--alpha", copts.alpha, "alpha grid")->delimiter(',');
  check->add_option("--tol", copts.tol, "relative tolerance factor");
  check->add_option("--threads", copts.threads);
  check->add_option("--candidates", copts.candidates, "variational candidates per instance");
  check->add_flag("--reference-only,--paper-cases", copts.reference_only,
                  "only the registered reference cases");
  check->add_flag("--no-trivial", copts.no_trivial, "skip the trivial identity cases");
  check->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  auto* search = app.add_subcommand("search", "minimize an inequality gap by random search");
  SearchOptions sopts;
  search->add_option("id", sopts.id, "inequality id")->required();
  search->add_option("--dim", sopts.dim);
  search->add_option("--kind", sopts.kind, "auto, psd, pd, unit_trace_pair or loewner_chain");
  search->add_option("--scale", sopts.scale);
  search->add_option("--nu", sopts.nu, "nu grid")->delimiter(',');
  search->add_option("--alpha", sopts.alpha, "alpha grid")->delimiter(',');
  search->add_option("--s", sopts.s, "s grid for audenaert_raw")->delimiter(',');
  search->add_option("--f", sopts.f);
  search->add_option("--g", sopts.g);
  search->add_option("--budget", sopts.budget);
  search->add_option("--seed", sopts.seed);
  search->add_option("--workers", sopts.workers);
  search->add_option("--out", sopts.out_dir, "directory for the best inputs");
  search->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  auto* repro = app.add_subcommand("reproduce", "recompute the registered reference values");
  std::string repro_target = "all";
  repro->add_option("case", repro_target, "case name or 'all'");
  repro->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (eval->parsed()) return cmd_eval(eval_name, eval_opts, fmt, tol, out);
    if (check->parsed()) return cmd_check(copts, fmt, out);
    if (search->parsed()) return cmd_search(sopts, fmt, out);
    if (repro->parsed()) return cmd_reproduce(repro_target, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace trineq::cli
