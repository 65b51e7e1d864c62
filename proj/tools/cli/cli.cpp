#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdbetti/asymptotics.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/formulas.hpp"
#include "sdbetti/hochster.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/json_io.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"
#include "suites.hpp"

#ifndef SDBETTI_DEFAULT_FIXTURES
#define SDBETTI_DEFAULT_FIXTURES "fixtures"
#endif

namespace sdbetti::cli {

namespace {

using nlohmann::json;

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoul(value));
  } catch (const std::exception&) {
    throw InvalidArgument(std::string(name) + " is not a number");
  }
}

SimplicialComplex load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_complex(arg);
  try {
    return standard_complex(arg);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("'" + arg + "' is neither a file nor a known complex");
  }
}

const std::map<std::string, std::string> kModeNames = {
    {"none", "none"}, {"bary", "bary"}, {"barycentric", "bary"}, {"edge", "edge"}, {"edgewise", "edge"}};

// Accepts the long spellings and maps them to "bary" / "edge".
CLI::Transformer mode_check(bool allow_none) {
  auto names = kModeNames;
  if (!allow_none) names.erase("none");
  CLI::Transformer t(names, CLI::ignore_case);
  t.description(allow_none ? "none, bary or edge" : "bary or edge");
  return t;
}

SimplicialComplex apply_mode(const SimplicialComplex& c, const std::string& mode, int r) {
  if (mode == "none") return c;
  if (mode == "bary") return barycentric_iter(c, r);
  if (mode == "edge") return edgewise(c, r);
  throw InvalidArgument("unknown mode '" + mode + "'");
}

SubdivisionMode parse_mode(const std::string& mode, int r) {
  if (mode == "bary") return SubdivisionMode::barycentric(r);
  if (mode == "edge") return SubdivisionMode::edgewise(r);
  throw InvalidArgument("mode must be bary or edge");
}

// "0..3,7,9..12"
std::string ranges(const std::vector<int>& v) {
  std::string out;
  for (std::size_t a = 0; a < v.size();) {
    std::size_t b = a;
    while (b + 1 < v.size() && v[b + 1] == v[b] + 1) ++b;
    if (!out.empty()) out += ",";
    out += std::to_string(v[a]);
    if (b > a) out += ".." + std::to_string(v[b]);
    a = b + 1;
  }
  return out.empty() ? "-" : out;
}

void write_text(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidArgument("cannot write " + path);
  file << text << "\n";
}

json report_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {{"suite", rep.suite},
          {"status", rep.ok() ? "pass" : "fail"},
          {"counts",
           {{"pass", rep.count(CheckStatus::Pass)},
            {"fail", rep.count(CheckStatus::Fail)},
            {"observed", rep.count(CheckStatus::Observed)}}},
          {"checks", checks}};
}

void print_report(std::ostream& out, const VerificationReport& rep, bool verbose) {
  for (const auto& c : rep.checks) {
    if (!verbose && c.status == CheckStatus::Pass) continue;
    out << to_string(c.status) << " " << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << rep.suite << ": " << (rep.ok() ? "pass" : "fail") << " (" << rep.count(CheckStatus::Pass) << " passed, "
      << rep.count(CheckStatus::Fail) << " failed, " << rep.count(CheckStatus::Observed) << " observed)\n";
}

std::string betti_csv(const BettiTable& t) {
  std::ostringstream s;
  const int pdim = t.pdim();
  const int reg = t.reg();
  s << "i";
  for (int j = 0; j <= reg; ++j) s << "," << j;
  for (int i = 0; i <= pdim; ++i) {
    s << "\n" << i;
    for (int j = 0; j <= reg; ++j) s << "," << t.at(i, j);
  }
  return s.str();
}

json betti_json(const BettiTable& t, const SimplicialComplex& c) {
  const auto inv = ring_invariants(t, c);
  json rows = json::array();
  for (int i = 0; i <= inv.pdim; ++i) {
    json row = json::array();
    for (int j = 0; j <= inv.reg; ++j) row.push_back(t.at(i, j));
    rows.push_back(row);
  }
  return {{"field", t.field().name()}, {"vertices", c.num_vertices()}, {"pdim", inv.pdim},
          {"reg", inv.reg},            {"depth", inv.depth},           {"t1", inv.t1},
          {"table", rows}};
}

struct Common {
  std::string field = "q";
  std::size_t gate = 0;
  unsigned workers = 0;

  [[nodiscard]] HochsterOptions options() const {
    HochsterOptions o;
    o.vertex_gate = gate;
    o.workers = workers;
    return o;
  }
};

void add_engine_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--field", common.field, "q or gf<p>")->capture_default_str();
  cmd->add_option("--gate", common.gate, "largest vertex count for Hochster enumeration (env SDBETTI_GATE)")
      ->capture_default_str();
  cmd->add_option("--workers", common.workers, "worker threads, 0 = hardware (env SDBETTI_WORKERS)")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of Stanley-Reisner rings of subdivided complexes"};
  app.name("sdbetti");
  app.require_subcommand(1);

  Common common;
  std::function<int()> action;

  try {
    common.gate = env_size("SDBETTI_GATE", HochsterOptions{}.vertex_gate);
    common.workers = static_cast<unsigned>(env_size("SDBETTI_WORKERS", 0));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  // info
  std::string input;
  bool as_json = false;
  auto* info = app.add_subcommand("info", "summary of a complex (JSON file or named complex)");
  info->add_option("input", input, "path or name such as cycle:6")->required();
  info->add_option("--field", common.field, "q or gf<p>")->capture_default_str();
  info->add_flag("--json", as_json, "JSON output");
  info->callback([&] {
    action = [&] {
      const auto c = load_input(input);
      const auto field = FieldSpec::parse(common.field);
      const auto betti = reduced_betti(c, field);
      if (as_json) {
        json j = {{"vertices", c.num_vertices()},
                  {"dimension", c.dim()},
                  {"facets", c.facets().size()},
                  {"f_vector", c.f_vector().entries()},
                  {"pure", c.is_pure()},
                  {"flag", is_flag(c)},
                  {"max_minimal_non_face", max_minimal_non_face_size(c)},
                  {"reduced_betti", betti.values()},
                  {"field", field.name()}};
        out << j.dump(2) << "\n";
        return 0;
      }
      out << "vertices: " << c.num_vertices() << "\n"
          << "dimension: " << c.dim() << "\n"
          << "facets: " << c.facets().size() << "\n"
          << "f-vector: " << to_string(c.f_vector()) << "\n"
          << "pure: " << (c.is_pure() ? "yes" : "no") << "\n"
          << "flag: " << (is_flag(c) ? "yes" : "no") << "\n"
          << "max minimal non-face: " << max_minimal_non_face_size(c) << "\n"
          << "reduced betti (" << field.name() << "):";
      for (int k = -1; k <= c.dim(); ++k) out << " " << betti[k];
      out << "\n";
      return 0;
    };
  });

  // subdivide
  std::string mode = "bary";
  int r = 1;
  std::string output;
  auto* sub = app.add_subcommand("subdivide", "barycentric or edgewise subdivision");
  sub->add_option("input", input, "path or name")->required();
  sub->add_option("--mode", mode, "bary or edge")->transform(mode_check(false))->capture_default_str();
  sub->add_option("--r", r, "number of rounds (bary) or edgewise factor")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("-o,--output", output, "write JSON here instead of stdout");
  sub->callback([&] {
    action = [&] {
      const auto c = apply_mode(load_input(input), mode, r);
      write_text(out, complex_to_json(c, 2), output);
      if (!output.empty()) out << "wrote " << output << ": " << c.num_vertices() << " vertices, f = " << to_string(c.f_vector()) << "\n";
      return 0;
    };
  });

  // betti
  std::string format = "csv";
  std::string betti_mode = "none";
  auto* betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula");
  betti->add_option("input", input, "path or name")->required();
  add_engine_options(betti, common);
  betti->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  betti->add_option("--mode", betti_mode, "subdivide first: none, bary or edge")
      ->transform(mode_check(true))
      ->capture_default_str();
  betti->add_option("--r", r, "subdivision parameter")->check(CLI::PositiveNumber)->capture_default_str();
  betti->callback([&] {
    action = [&] {
      const auto c = apply_mode(load_input(input), betti_mode, r);
      const auto table = graded_betti_table(c, FieldSpec::parse(common.field), common.options());
      if (format == "json") out << betti_json(table, c).dump(2) << "\n";
      else out << betti_csv(table) << "\n";
      return 0;
    };
  });

  // strands
  int d = 0;
  int strand_j = 0;
  std::string asymptotic;
  auto* strands = app.add_subcommand("strands", "predicted vanishing pattern of the Betti strands");
  strands->add_option("--mode", mode, "bary or edge")->transform(mode_check(false))->capture_default_str();
  strands->add_option("--d", d, "simplex has d vertices");
  strands->add_option("--r", r, "edgewise factor (edge mode) or rounds (asymptotic)");
  strands->add_option("--j", strand_j, "single strand (default: all)");
  strands->add_option("--asymptotic", asymptotic, "complex for the large-r windows");
  strands->callback([&] {
    action = [&] {
      if (!asymptotic.empty()) {
        const auto c = load_input(asymptotic);
        for (const auto& w : asymptotic_window(c, parse_mode(mode, r))) {
          if (strand_j != 0 && w.j != strand_j) continue;
          out << "j=" << w.j << " nonzero " << w.begin.get_str() << ".." << w.end.get_str() << "\n";
        }
        return 0;
      }
      if (d < 2) throw InvalidArgument("strands: --d >= 2 is required");
      std::size_t n = 0;
      if (mode == "edge") {
        mpz_class count;
        mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(r + d - 1), static_cast<unsigned long>(d - 1));
        n = count.get_ui();
      }
      for (int j = 1; j < d; ++j) {
        if (strand_j != 0 && j != strand_j) continue;
        const auto p = mode == "edge" ? predict_strand_edgewise(d, j, r, n) : predict_strand_bar(d, j);
        out << "j=" << j << " pdim " << p.pdim << " nonzero " << ranges(p.indices(Claim::Nonzero)) << " unknown "
            << ranges(p.indices(Claim::Unknown)) << " zero " << ranges(p.indices(Claim::Zero)) << "\n";
      }
      return 0;
    };
  });

  // limits
  auto* limits = app.add_subcommand("limits", "face-number asymptotics of iterated subdivisions");
  limits->require_subcommand(1);
  auto* lambda = limits->add_subcommand("lambda", "transfer matrix f(sd Δ) = f(Δ) Λ_d");
  lambda->add_option("--d", d, "dimension + 1")->required();
  lambda->callback([&] {
    action = [&] {
      const auto l = lambda_matrix(d);
      const auto e = eigendecompose(l);
      out << "Lambda:\n" << l.matrix.to_string() << "\nP:\n" << e.p.to_string() << "\nP^-1:\n"
          << e.p_inv.to_string() << "\nvertex constant: " << limit_vertex_constant(d).get_str() << "\n";
      return 0;
    };
  });
  auto* poly = limits->add_subcommand("polynomial", "lim f_j(sd^r Δ)/(d!)^r for every j");
  poly->add_option("input", input, "path or name")->required();
  poly->callback([&] {
    action = [&] {
      const auto c = load_input(input);
      const auto f = c.f_vector();
      const auto coeffs = limit_polynomial(f, eigendecompose(lambda_matrix(f.d())));
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out << "f" << static_cast<int>(k) - 1 << " " << coeffs[k].get_str() << "\n";
      }
      return 0;
    };
  });
  auto* ratio = limits->add_subcommand("ratio", "limit of the last-strand nonvanishing ratio");
  ratio->add_option("input", input, "path or name")->required();
  ratio->add_option("--field", common.field, "q or gf<p>")->capture_default_str();
  ratio->callback([&] {
    action = [&] {
      const auto c = load_input(input);
      const auto field = FieldSpec::parse(common.field);
      const auto cyc = minimal_top_cycle(c, field);
      out << "limit " << last_strand_limit(c, field).get_str() << "\n"
          << "cycle facets " << cyc.support.size() << " over " << cyc.field.name() << ", f = " << to_string(cyc.f)
          << "\n";
      return 0;
    };
  });

  // generate
  auto* generate = app.add_subcommand("generate", "write fixture complexes");
  generate->require_subcommand(1);
  int gp = 0;
  int gq = 1;
  int gc = 1;
  auto* example = generate->add_subcommand("limit-example", "sphere plus stacked facets with limit p/q");
  example->add_option("--d", d, "dimension + 1")->required();
  example->add_option("--p", gp, "numerator")->required();
  example->add_option("--q", gq, "denominator")->required();
  example->add_option("--scale,--c", gc, "scale")->capture_default_str();
  example->add_option("-o,--output", output, "write JSON here instead of stdout");
  example->callback([&] {
    action = [&] {
      write_text(out, complex_to_json(build_limit_example(d, gp, gq, gc), 2), output);
      return 0;
    };
  });
  std::string descriptor;
  auto* named = generate->add_subcommand("standard", "a named complex such as cycle:6 or rp2_six");
  named->add_option("descriptor", descriptor, "name")->required();
  named->add_option("-o,--output", output, "write JSON here instead of stdout");
  named->callback([&] {
    action = [&] {
      write_text(out, complex_to_json(standard_complex(descriptor), 2), output);
      return 0;
    };
  });

  // verify
  std::string suite;
  std::vector<int> vds;
  int vr = 0;
  int dmax = 0;
  std::string report_path;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "check predictions against computation");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_engine_options(verify, common);
  verify->add_option("--d", vds, "simplex has d vertices; a comma list runs each")->delimiter(',');
  verify->add_option("--r", vr, "subdivision parameter");
  verify->add_option("--dmax", dmax, "largest d for enumeration suites");
  verify->add_option("--input", input, "complex for suites that accept one");
  verify->add_option("--mode", mode, "bary or edge")->transform(mode_check(false))->capture_default_str();
  verify->add_flag("--json", as_json, "print the JSON report");
  verify->add_option("--report", report_path, "also write the JSON report here");
  verify->add_flag("-v,--verbose", verbose, "list passing checks too");
  verify->callback([&] {
    action = [&] {
      SuiteParams params;
      if (vr != 0) params.r = vr;
      params.dmax = dmax;
      params.field = FieldSpec::parse(common.field);
      params.options = common.options();
      params.mode = mode;
      if (!input.empty()) params.input = load_input(input);
      VerificationReport rep;
      rep.suite = suite;
      if (vds.empty()) vds.push_back(0);
      for (int dv : vds) {
        if (dv != 0) params.d = dv;
        auto part = run_suite(suite, params);
        if (vds.size() > 1) {
          for (auto& c : part.checks) c.name = "d=" + std::to_string(dv) + " " + c.name;
        }
        rep.append(part);
      }
      if (!report_path.empty()) write_text(out, report_json(rep).dump(2), report_path);
      if (as_json) out << report_json(rep).dump(2) << "\n";
      else print_report(out, rep, verbose);
      return rep.ok() ? 0 : 1;
    };
  });

  // selftest
  std::string fixtures = SDBETTI_DEFAULT_FIXTURES;
  std::string fault;
  auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks");
  selftest->add_option("--fixtures", fixtures, "directory of *.json complexes")->capture_default_str();
  selftest->add_option("--inject-fault", fault, "deliberately break a component (m_closed)")
      ->check(CLI::IsMember({"m_closed"}));
  add_engine_options(selftest, common);
  selftest->callback([&] {
    action = [&] {
      const auto field = FieldSpec::parse(common.field);
      std::vector<VerificationReport> reports;

      VerificationReport mj;
      mj.suite = "mj";
      for (int dd = 2; dd <= 10; ++dd) {
        for (int j = 1; j < dd; ++j) {
          const auto closed = m_closed(dd, j) + (fault == "m_closed" ? 1 : 0);
          mj.expect("m_" + std::to_string(j) + "(" + std::to_string(dd) + ")", closed == m_bruteforce(dd, j));
        }
      }
      reports.push_back(mj);

      SuiteParams params;
      params.field = field;
      params.options = common.options();
      params.d = 3;
      for (const char* name : {"thm-bar", "edgewise", "gorenstein", "link"}) reports.push_back(run_suite(name, params));
      params.d.reset();
      params.dmax = 10;
      reports.push_back(run_suite("appendix", params));
      params.dmax = 4;
      reports.push_back(run_suite("limits", params));
      reports.push_back(fixture_checks(fixtures, field, common.options()));

      bool ok = true;
      for (const auto& rep : reports) {
        ok = ok && rep.ok();
        out << (rep.ok() ? "PASS " : "FAIL ") << rep.suite << " (" << rep.checks.size() << " checks)\n";
        if (!rep.ok()) print_report(out, rep, false);
      }
      out << "selftest: " << (ok ? "pass" : "fail") << "\n";
      return ok ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const GateExceeded& e) {
    err << "gate exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sdbetti::cli
