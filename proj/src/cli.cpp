#include "hypvol/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypvol/bounds.hpp"
#include "hypvol/caps.hpp"
#include "hypvol/errors.hpp"
#include "hypvol/hyptrig.hpp"

namespace hypvol::cli {

namespace {

const char* mode_name(bounds::Mode mode) {
  return mode == bounds::Mode::sound ? "sound" : "paper_text";
}

bounds::Mode mode_from_name(const std::string& name) {
  if (name == "sound") return bounds::Mode::sound;
  if (name == "paper_text") return bounds::Mode::paper_text;
  throw domain_error("unknown mode: " + name);
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string cell_to_json(const verify::Cell& cell) {
  std::string out = "{\"lo\":" + format_double17(cell.lo) +
                    ",\"hi\":" + format_double17(cell.hi);
  if (cell.is_rectangle) {
    out += ",\"y_lo\":" + format_double17(cell.y_lo) +
           ",\"y_hi\":" + format_double17(cell.y_hi);
  }
  return out + "}";
}

std::string cell_to_text(const verify::Cell& cell) {
  if (cell.is_rectangle) {
    return "[" + format_shortest(cell.lo) + "," + format_shortest(cell.hi) +
           "]x[" + format_shortest(cell.y_lo) + "," +
           format_shortest(cell.y_hi) + "]";
  }
  return "[" + format_shortest(cell.lo) + "," + format_shortest(cell.hi) +
         ")";
}

verify::Cell cell_from_json(const nlohmann::json& j) {
  verify::Cell cell;
  cell.lo = j.at("lo").get<double>();
  cell.hi = j.at("hi").get<double>();
  if (j.contains("y_lo")) {
    cell.y_lo = j.at("y_lo").get<double>();
    cell.y_hi = j.at("y_hi").get<double>();
    cell.is_rectangle = true;
  }
  return cell;
}

}  // namespace

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

std::string format_shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const verify::VerificationReport& report,
                           bool full) {
  std::ostringstream out;
  out << "{\"lemma_id\":\"" << verify::lemma_name(report.lemma_id) << "\""
      << ",\"mode\":\"" << mode_name(report.mode) << "\""
      << ",\"threshold\":" << format_double17(report.threshold)
      << ",\"min_value\":" << format_double17(report.min_value)
      << ",\"min_cell\":" << cell_to_json(report.min_cell)
      << ",\"passed\":" << (report.passed ? "true" : "false")
      << ",\"cell_count\":" << report.cells.size()
      << ",\"timing_seconds\":" << format_double17(report.timing_seconds);
  if (full) {
    out << ",\"cells\":[";
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
      const verify::CellResult& cr = report.cells[i];
      if (i) out << ",";
      std::string cell_json = cell_to_json(cr.cell);
      cell_json.pop_back();
      out << cell_json
          << ",\"bound_value\":" << format_double17(cr.bound_value)
          << ",\"branch_info\":\"" << escape_json(cr.branch_info) << "\"}";
    }
    out << "]";
  }
  out << "}";
  return out.str();
}

verify::VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  verify::VerificationReport report;
  std::string lemma = j.at("lemma_id").get<std::string>();
  bool known = false;
  for (auto id :
       {verify::LemmaId::evil_star, verify::LemmaId::no_short_geodesic,
        verify::LemmaId::short_geodesic}) {
    if (lemma == verify::lemma_name(id)) {
      report.lemma_id = id;
      known = true;
    }
  }
  if (!known) throw domain_error("unknown lemma_id: " + lemma);
  report.mode = mode_from_name(j.at("mode").get<std::string>());
  report.threshold = j.at("threshold").get<double>();
  report.min_value = j.at("min_value").get<double>();
  report.min_cell = cell_from_json(j.at("min_cell"));
  report.passed = j.at("passed").get<bool>();
  report.timing_seconds = j.at("timing_seconds").get<double>();
  if (j.contains("cells")) {
    for (const auto& jc : j.at("cells")) {
      verify::CellResult cr;
      cr.cell = cell_from_json(jc);
      cr.bound_value = jc.at("bound_value").get<double>();
      cr.branch_info = jc.at("branch_info").get<std::string>();
      report.cells.push_back(std::move(cr));
    }
  }
  return report;
}

std::string summary_line(const verify::VerificationReport& report) {
  std::string line = std::string(verify::lemma_name(report.lemma_id)) +
                     ": min " + format_shortest(report.min_value) + " at " +
                     cell_to_text(report.min_cell) + " threshold " +
                     format_shortest(report.threshold) +
                     (report.passed ? " -> PASS" : " -> FAIL");
  return line;
}

namespace {

std::string render_text(const verify::VerificationReport& report,
                        bool full) {
  std::ostringstream out;
  out << "lemma: " << verify::lemma_name(report.lemma_id) << "\n"
      << "mode: " << mode_name(report.mode) << "\n"
      << "cell_count: " << report.cells.size() << "\n"
      << "min_value: " << format_shortest(report.min_value) << "\n"
      << "min_cell: " << cell_to_text(report.min_cell) << "\n"
      << "threshold: " << format_shortest(report.threshold) << "\n";
  if (std::isfinite(report.closure_value)) {
    out << "closure_value: " << format_shortest(report.closure_value)
        << "\n";
  }
  out << "passed: " << (report.passed ? "yes" : "no") << "\n"
      << "timing_seconds: " << format_shortest(report.timing_seconds)
      << "\n";
  if (full) {
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
      const verify::CellResult& cr = report.cells[i];
      out << "  " << i << " " << cell_to_text(cr.cell) << " "
          << format_shortest(cr.bound_value) << " " << cr.branch_info
          << "\n";
    }
  }
  out << summary_line(report) << "\n";
  return out.str();
}

const char* kCellCsvHeader =
    "lemma,index,lo,hi,y_lo,y_hi,bound_value,branch_info\n";

std::string render_csv_cells(const verify::VerificationReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const verify::CellResult& cr = report.cells[i];
    out << verify::lemma_name(report.lemma_id) << "," << i << ","
        << format_shortest(cr.cell.lo) << "," << format_shortest(cr.cell.hi)
        << ",";
    if (cr.cell.is_rectangle) {
      out << format_shortest(cr.cell.y_lo) << ","
          << format_shortest(cr.cell.y_hi);
    } else {
      out << ",";
    }
    out << "," << format_shortest(cr.bound_value) << "," << cr.branch_info
        << "\n";
  }
  return out.str();
}

// Writes body to the configured destination.  Returns false (with a
// message) when the file cannot be opened.
bool write_output(const RunConfig& config, const std::string& body,
                  bool* wrote_to_stdout) {
  if (config.output_path.empty()) {
    std::cout << body;
    *wrote_to_stdout = true;
    return true;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output file: " << config.output_path << "\n";
    return false;
  }
  file << body;
  *wrote_to_stdout = false;
  return true;
}

int as_checked_int(double x, const char* what) {
  double r = std::round(x);
  if (std::abs(x - r) > 1e-9 || std::abs(r) > 1e9) {
    throw domain_error(std::string(what) + " must be an integer, got " +
                       format_shortest(x));
  }
  return static_cast<int>(r);
}

struct EvalEntry {
  int arity;
  const char* formula;
  std::function<double(const std::vector<double>&,
                       const numerics::Tolerances&)>
      fn;
};

const std::map<std::string, EvalEntry>& eval_registry() {
  using Args = std::vector<double>;
  using Tol = numerics::Tolerances;
  static const std::map<std::string, EvalEntry> registry = {
      {"ball_volume",
       {1, "B(r) = pi (sinh 2r - 2r)",
        [](const Args& a, const Tol&) { return hyptrig::ball_volume(a[0]); }}},
      {"kappa",
       {2, "volume of the cap of the R-ball cut at plane distance w",
        [](const Args& a, const Tol&) { return caps::kappa(a[0], a[1]); }}},
      {"iota",
       {4,
        "volume of the intersection of two caps at distances w1, w2 and "
        "angle alpha",
        [](const Args& a, const Tol& t) {
          return caps::iota_general(a[0], a[1], a[2], a[3], t);
        }}},
      {"sigma",
       {4, "volume of the union of two caps: kappa + kappa' - iota",
        [](const Args& a, const Tol& t) {
          return caps::sigma_union(a[0], a[1], a[2], a[3], t);
        }}},
      {"phi_n",
       {3,
        "arccosh(cosh n delta + (cosh n delta - 1)(cosh D - cosh delta)/"
        "(cosh delta + 1))",
        [](const Args& a, const Tol&) {
          return hyptrig::phi_n(as_checked_int(a[0], "n"), a[1], a[2]);
        }}},
      {"psi",
       {2, "arccos(coth x tanh(y/2)) for 0 < y <= 2x",
        [](const Args& a, const Tol&) { return hyptrig::psi(a[0], a[1]); }}},
      {"theta",
       {2, "arccos(tanh w / tanh R) for 0 < w < R",
        [](const Args& a, const Tol&) {
          return hyptrig::cap_angle_theta(a[0], a[1]);
        }}},
      {"omega",
       {3, "arcsinh sqrt((cosh D - cosh l)/(cosh l - cos theta))",
        [](const Args& a, const Tol&) {
          return hyptrig::omega(a[0], a[1], a[2]);
        }}},
      {"rho_k",
       {3,
        "(1/2) log((k-2)/(1/2 - 1/(1+e^D) - 1/(1+e^lambda)) - 1)",
        [](const Args& a, const Tol&) {
          return hyptrig::rho_k(as_checked_int(a[0], "k"), a[1], a[2]);
        }}},
      {"rho_short",
       {1, "(1/2) log((e^l + 3)/(e^l - 1))",
        [](const Args& a, const Tol&) { return hyptrig::rho_short(a[0]); }}},
      {"h2",
       {1, "edge distance of the regular tetrahedron of side 2R",
        [](const Args& a, const Tol&) { return hyptrig::h_n(2, a[0]); }}},
      {"h3",
       {1, "vertex distance of the regular tetrahedron of side 2R",
        [](const Args& a, const Tol&) { return hyptrig::h_n(3, a[0]); }}},
      {"boroczky_d",
       {1, "packing density bound d(r) = (3 beta - pi)(sinh 2r - 2r)/tau",
        [](const Args& a, const Tol& t) {
          return hyptrig::boroczky_profile(a[0], t).density;
        }}},
      {"vbor",
       {2, "ball-neighborhood volume bound at center distance rho > h3(R)",
        [](const Args& a, const Tol& t) {
          return hyptrig::v_bor(a[0], a[1], t);
        }}},
      {"vnear",
       {1, "near-volume lower bound at displacement D",
        [](const Args& a, const Tol& t) { return bounds::v_near(a[0], t); }}},
      {"vfar",
       {2, "far-volume lower bound at displacement D and cutoff lambda",
        [](const Args& a, const Tol&) { return bounds::v_far(a[0], a[1]); }}},
      {"vn",
       {2, "B(lambda/2) - 2 kappa(lambda/2, l/2)",
        [](const Args& a, const Tol&) { return bounds::v_n(a[0], a[1]); }}},
      {"w",
       {2, "v_far(l, lambda) + v_n(l, lambda)",
        [](const Args& a, const Tol&) {
          return bounds::w_total(a[0], a[1]);
        }}},
      {"wstar",
       {2, "w evaluated on the curve lambda = 2 rho(l) + y",
        [](const Args& a, const Tol&) { return bounds::w_star(a[0], a[1]); }}},
      {"chi",
       {2, "rho_4(l, 2 rho(l) + y) - (h + (2 rho(l) + y)/2)",
        [](const Args& a, const Tol&) { return bounds::chi(a[0], a[1]); }}},
      {"delta_ab",
       {2, "negativity certificate for the power-displacement comparison",
        [](const Args& a, const Tol&) {
          return bounds::delta_ab(a[0], a[1]);
        }}},
  };
  return registry;
}

}  // namespace

int cmd_eval(const RunConfig& config) {
  const auto& registry = eval_registry();
  auto it = registry.find(config.target);
  if (it == registry.end()) {
    std::cerr << "unknown eval target: " << config.target << "\n";
    return kExitUsage;
  }
  const EvalEntry& entry = it->second;
  if (static_cast<int>(config.args.size()) != entry.arity) {
    std::cerr << "eval " << config.target << " expects " << entry.arity
              << " argument(s), got " << config.args.size() << "\n";
    return kExitUsage;
  }
  double value = entry.fn(config.args, config.tol);
  std::ostringstream body;
  switch (config.format) {
    case OutputFormat::text:
      body << format_double17(value) << "\n"
           << "# " << config.target << ": " << entry.formula << "\n";
      break;
    case OutputFormat::json: {
      body << "{\"target\":\"" << config.target << "\",\"args\":[";
      for (std::size_t i = 0; i < config.args.size(); ++i) {
        if (i) body << ",";
        body << format_double17(config.args[i]);
      }
      body << "],\"value\":" << format_double17(value) << ",\"formula\":\""
           << escape_json(entry.formula) << "\"}\n";
      break;
    }
    case OutputFormat::csv: {
      body << "target,args,value\n" << config.target << ",";
      for (std::size_t i = 0; i < config.args.size(); ++i) {
        if (i) body << ";";
        body << format_shortest(config.args[i]);
      }
      body << "," << format_shortest(value) << "\n";
      break;
    }
  }
  bool to_stdout = false;
  if (!write_output(config, body.str(), &to_stdout)) return kExitUsage;
  return kExitPass;
}

int cmd_verify(const RunConfig& config) {
  std::vector<verify::VerificationReport> reports;
  bool want_evil = config.target == "evil-star" || config.target == "all";
  bool want_near =
      config.target == "no-short-geodesic" || config.target == "all";
  bool want_short =
      config.target == "short-geodesic" || config.target == "all";
  if (!want_evil && !want_near && !want_short) {
    std::cerr << "unknown verify target: " << config.target << "\n";
    return kExitUsage;
  }
  if (want_evil) reports.push_back(verify::verify_evil_star());
  if (want_near) {
    verify::GridSpec grid = verify::default_no_short_geodesic_grid();
    grid.refinement_factor = config.refinement;
    reports.push_back(
        verify::verify_no_short_geodesic(grid, config.mode, config.threads));
  }
  if (want_short) {
    verify::GridSpec grid = verify::default_short_geodesic_grid();
    grid.refinement_factor = config.refinement;
    reports.push_back(verify::verify_short_geodesic(grid, config.threads));
  }

  std::ostringstream body;
  switch (config.format) {
    case OutputFormat::text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) body << "\n";
        body << render_text(reports[i], config.full);
      }
      break;
    case OutputFormat::json:
      if (reports.size() == 1) {
        body << report_to_json(reports[0], config.full) << "\n";
      } else {
        body << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i) body << ",";
          body << report_to_json(reports[i], config.full);
        }
        body << "]\n";
      }
      break;
    case OutputFormat::csv:
      body << kCellCsvHeader;
      for (const auto& report : reports) body << render_csv_cells(report);
      break;
  }

  bool to_stdout = false;
  if (!write_output(config, body.str(), &to_stdout)) return kExitUsage;
  bool all_passed = true;
  for (const auto& report : reports) all_passed &= report.passed;
  if (config.format != OutputFormat::text) {
    std::ostream& where = to_stdout ? std::cerr : std::cout;
    for (const auto& report : reports) {
      where << summary_line(report) << "\n";
    }
  }
  return all_passed ? kExitPass : kExitThresholdFail;
}

namespace {

struct TableRange {
  double start;
  double end;
  double step;
  int count;  // number of points, inclusive of both ends hit by the step
};

TableRange make_range(double start, double end, double step) {
  if (!(step > 0.0) || end < start) {
    throw domain_error("empty table range");
  }
  TableRange range;
  range.start = start;
  range.end = end;
  range.step = step;
  range.count =
      static_cast<int>(std::floor((end - start) / step + 1e-9)) + 1;
  return range;
}

}  // namespace

int cmd_table(const RunConfig& config) {
  const bounds::Constants& consts = bounds::constants();
  std::ostringstream body;
  const auto& a = config.args;
  try {
    if (config.target == "vnear" || config.target == "bound-sum") {
      if (a.size() != 3) {
        std::cerr << "table " << config.target
                  << " expects <start> <end> <step>\n";
        return kExitUsage;
      }
      TableRange range = make_range(a[0], a[1], a[2]);
      body << (config.target == "vnear" ? "D,v_near,branch\n"
                                        : "D,bound_sum,branch\n");
      for (int i = 0; i < range.count; ++i) {
        double D = range.start + i * range.step;
        double value = bounds::v_near(D, config.tol);
        if (config.target == "bound-sum") {
          value += bounds::v_far(D, consts.lambda0);
        }
        body << format_shortest(D) << "," << format_shortest(value) << ","
             << (D < 0.7 ? "nought" : "third-power") << "\n";
      }
    } else if (config.target == "vfar") {
      if (a.size() != 3 && a.size() != 4) {
        std::cerr << "table vfar expects <start> <end> <step> [lambda]\n";
        return kExitUsage;
      }
      double lambda = a.size() == 4 ? a[3] : consts.lambda0;
      TableRange range = make_range(a[0], a[1], a[2]);
      body << "D,v_far,branch\n";
      for (int i = 0; i < range.count; ++i) {
        double D = range.start + i * range.step;
        double Z = bounds::z_gap(D, lambda);
        const char* branch =
            Z <= 0.0 ? "zero" : (Z <= consts.h ? "ball" : "distant");
        body << format_shortest(D) << ","
             << format_shortest(bounds::v_far(D, lambda)) << "," << branch
             << "\n";
      }
    } else if (config.target == "wstar") {
      if (a.size() != 6) {
        std::cerr << "table wstar expects <l_start> <l_end> <l_step> "
                     "<y_start> <y_end> <y_step>\n";
        return kExitUsage;
      }
      TableRange lr = make_range(a[0], a[1], a[2]);
      TableRange yr = make_range(a[3], a[4], a[5]);
      body << "l,y,w_star,branch\n";
      for (int il = 0; il < lr.count; ++il) {
        double l = lr.start + il * lr.step;
        for (int iy = 0; iy < yr.count; ++iy) {
          double y = yr.start + iy * yr.step;
          double z = bounds::chi(l, y) + consts.h;
          const char* branch =
              z <= 0.0 ? "zero" : (z <= consts.h ? "ball" : "distant");
          body << format_shortest(l) << "," << format_shortest(y) << ","
               << format_shortest(bounds::w_star(l, y)) << "," << branch
               << "\n";
        }
      }
    } else {
      std::cerr << "unknown table target: " << config.target << "\n";
      return kExitUsage;
    }
  } catch (const domain_error& e) {
    std::string what = e.what();
    if (what == "empty table range") {
      std::cerr << "table: " << what << "\n";
      return kExitUsage;
    }
    throw;
  }
  bool to_stdout = false;
  if (!write_output(config, body.str(), &to_stdout)) return kExitUsage;
  return kExitPass;
}

int run(int argc, const char* const* argv) {
  RunConfig config;
  std::string format_name = "text";
  std::string mode_name_arg = "sound";

  CLI::App app{"hyperbolic volume bound calculator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value configuration file");
  app.add_option("--format", format_name, "output format: text, json, csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", config.output_path, "write output to a file");
  app.add_option("--mode", mode_name_arg,
                 "interval-bound coefficient mode: sound, paper_text")
      ->check(CLI::IsMember({"sound", "paper_text"}));
  app.add_option("--refinement", config.refinement,
                 "multiply every grid subdivision count")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads,
                 "worker threads for sweeps (0 = hardware)")
      ->envname("HYPVOL_THREADS");
  app.add_flag("--full", config.full, "include per-cell results in reports");
  app.add_option("--quad-abs", config.tol.quad_abs,
                 "absolute quadrature tolerance");
  app.add_option("--quad-rel", config.tol.quad_rel,
                 "relative quadrature tolerance");
  app.add_option("--root-tol", config.tol.root_tol,
                 "bracketed root tolerance");
  app.add_option("--domain-clamp", config.tol.domain_clamp,
                 "clamp width for boundary roundoff");

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate one library function");
  eval_cmd->add_option("target", config.target, "function name")->required();
  eval_cmd->add_option("args", config.args, "function arguments");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification sweep");
  verify_cmd
      ->add_option("target", config.target,
                   "evil-star, no-short-geodesic, short-geodesic, or all")
      ->required();

  CLI::App* table_cmd =
      app.add_subcommand("table", "emit a CSV table of a bound function");
  table_cmd
      ->add_option("target", config.target,
                   "vnear, vfar, wstar, or bound-sum")
      ->required();
  table_cmd->add_option("args", config.args, "range arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  config.format = format_name == "json"
                      ? OutputFormat::json
                      : (format_name == "csv" ? OutputFormat::csv
                                              : OutputFormat::text);
  config.mode = mode_from_name(mode_name_arg);
  if (eval_cmd->parsed()) {
    config.command = Command::eval;
  } else if (verify_cmd->parsed()) {
    config.command = Command::verify;
  } else {
    config.command = Command::table;
  }

  try {
    config.tol.validate();
    switch (config.command) {
      case Command::eval:
        return cmd_eval(config);
      case Command::verify:
        return cmd_verify(config);
      case Command::table:
        return cmd_table(config);
    }
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const convergence_error& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const bracket_error& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitNonConvergence;
  }
  return kExitUsage;
}

}  // namespace hypvol::cli
