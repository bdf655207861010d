#include "torustour/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "torustour/analysis.hpp"
#include "torustour/board_io.hpp"
#include "torustour/generators.hpp"
#include "torustour/search.hpp"
#include "torustour/solvers.hpp"
#include "torustour/tour.hpp"

namespace torustour::cli {

namespace {

using nlohmann::json;

Board load_board(const std::string& path) {
  if (path == "-") return read_board(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open board file: " + path);
  return read_board(in);
}

Orientation load_orientation(const std::string& path) {
  if (path == "-") return read_orientation(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open orientation file: " + path);
  return read_orientation(in);
}

std::vector<int> split_ints(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (values.empty()) throw Error(ErrorCode::parse_error, std::string(what) + " is empty");
  return values;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto sep = text.find(':');
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": expected N or LO:HI");
  }
}

json orientation_json(const Orientation& orientation) {
  return json{{"r", orientation.row_string()}, {"c", orientation.col_string()}};
}

json report_json(const SolveReport& report) {
  json out{{"verdict", verdict_name(report.verdict)}, {"method", report.method}};
  if (!report.detail.empty()) out["detail"] = report.detail;
  if (report.reason) out["reason"] = reason_name(*report.reason);
  if (report.orientation) out["orientation"] = orientation_json(*report.orientation);
  if (report.tour_length) out["tour_length"] = *report.tour_length;
  if (report.tested) out["tested"] = *report.tested;
  if (report.witness)
    out["witness"] = json{{"rows", report.witness->rows}, {"cols", report.witness->cols}};
  return out;
}

int report_exit(const SolveReport& report) {
  switch (report.verdict) {
    case Verdict::solution: return exit_solution;
    case Verdict::proven_none: return exit_none;
    case Verdict::unknown: return exit_unknown;
  }
  return exit_unknown;
}

void print_report(std::ostream& out, const SolveReport& report, bool as_json) {
  if (as_json) {
    out << report_json(report).dump() << '\n';
    return;
  }
  out << "verdict: " << verdict_name(report.verdict) << '\n';
  out << "method: " << report.method << '\n';
  if (report.reason) out << "reason: " << reason_name(*report.reason) << '\n';
  if (!report.detail.empty()) out << "detail: " << report.detail << '\n';
  if (report.witness) {
    out << "witness rows:";
    for (int r : report.witness->rows) out << ' ' << r;
    out << "\nwitness cols:";
    for (int c : report.witness->cols) out << ' ' << c;
    out << '\n';
  }
  if (report.orientation) {
    out << "orientation:\n" << orientation_to_string(*report.orientation);
    if (report.tour_length) out << "tour length: " << *report.tour_length << '\n';
  }
  if (report.tested) out << "tested: " << *report.tested << '\n';
}

struct GenerateArgs {
  std::string family;
  int n = 0, m = 0, k = 0, s = 0, ell = 0;
  std::string diagonals;
  std::string output = "-";
};

Board build_family_board(const GenerateArgs& args) {
  if (args.family == "totally_filled") return gen_totally_filled(args.n, args.m ? args.m : args.n);
  if (args.family == "kdiagonal")
    return gen_kdiagonal({args.n, split_ints(args.diagonals, "--diagonals")});
  if (args.family == "cyclic") return gen_cyclic_kdiagonal(args.n, args.k);
  if (args.family == "width") return gen_width_kdiagonal(args.n, args.k, args.s);
  if (args.family == "almost") return gen_almost(args.n, args.k, args.ell);
  throw Error(ErrorCode::parse_error, "unknown family: " + args.family);
}

SolveReport solve_family_spec(const std::vector<int>& values) {
  if (values.size() == 2) return solve_cyclic_kdiagonal(values[0], values[1]);
  if (values.size() == 3) {
    const int n = values[0], k = values[1], s = values[2];
    if (k < 1 || k * (s + 1) != n)
      throw Error(ErrorCode::invalid_family_parameters, "width family spec needs k(s+1) = n");
    std::vector<int> indices;
    for (int i = 0; i < k; ++i) indices.push_back(1 + i * (s + 1));
    return solve_width_kdiagonal(n, k, s, {n, std::move(indices)});
  }
  if (values.size() == 4) {
    const int n = values[0], k = values[1], s = values[2], ell = values[3];
    std::vector<int> indices;
    if (s == n - k) {
      for (int i = 1; i <= k; ++i) indices.push_back(i);
    } else {
      if (k * (s + 1) != n)
        throw Error(ErrorCode::invalid_family_parameters,
                    "almost family spec needs s = n-k (cyclic) or k(s+1) = n");
      for (int i = 0; i < k; ++i) indices.push_back(1 + i * (s + 1));
    }
    return solve_almost_kdiagonal(n, k, s, ell, {n, std::move(indices)});
  }
  throw Error(ErrorCode::parse_error, "--family expects n,k or n,k,s or n,k,s,ell");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toroidal tour toolkit: orientation-driven tours on partially filled arrays"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "emit a board in the text format");
  generate->add_option("--family", gen.family,
                       "totally_filled | kdiagonal | cyclic | width | almost")
      ->required();
  generate->add_option("--n", gen.n, "rows / board size")->required();
  generate->add_option("--m", gen.m, "columns (totally_filled)");
  generate->add_option("--k", gen.k, "filled diagonal count");
  generate->add_option("--s", gen.s, "uniform empty-strip width");
  generate->add_option("--ell", gen.ell, "extra cell column");
  generate->add_option("--diagonals", gen.diagonals, "comma list of diagonal indices");
  generate->add_option("-o,--output", gen.output, "output file, '-' = stdout");

  // analyze
  std::string analyze_board;
  auto* analyze = app.add_subcommand("analyze", "classify a board and check necessary conditions");
  analyze->add_option("board", analyze_board, "board file, '-' = stdin")->required();

  // solve
  std::string solve_board;
  std::string solve_family;
  std::uint64_t solve_budget = 0;
  unsigned solve_threads = 1;
  bool solve_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "decide or construct a covering orientation");
  solve_cmd->add_option("board", solve_board, "board file, '-' = stdin");
  solve_cmd->add_option("--family", solve_family, "n,k | n,k,s | n,k,s,ell construct-and-solve");
  solve_cmd->add_option("--budget", solve_budget, "search fallback candidate cap");
  solve_cmd->add_option("--threads", solve_threads, "search fallback threads");
  solve_cmd->add_flag("--json", solve_json, "machine-readable report");

  // search
  std::string search_board;
  bool restrict_rows = false;
  std::uint64_t search_budget = 0;
  unsigned search_threads = 1;
  bool search_json = false;
  auto* search_cmd = app.add_subcommand("search", "exhaustive orientation search");
  search_cmd->add_option("board", search_board, "board file, '-' = stdin")->required();
  search_cmd->add_flag("--restrict-R", restrict_rows, "pin the row vector to all +1");
  search_cmd->add_option("--budget", search_budget, "candidate cap");
  search_cmd->add_option("--threads", search_threads, "worker threads");
  search_cmd->add_flag("--json", search_json, "machine-readable report");

  // census
  std::string census_family;
  std::string census_n, census_m;
  int census_k = 0;
  bool census_json = false;
  auto* census_cmd = app.add_subcommand("census", "solution-existence table over a family");
  census_cmd->add_option("--family", census_family, "totally_filled | cyclic | almost")
      ->required();
  census_cmd->add_option("--n", census_n, "N or LO:HI")->required();
  census_cmd->add_option("--m", census_m, "N or LO:HI (totally_filled)");
  census_cmd->add_option("--k", census_k, "filled diagonal count (cyclic/almost)");
  census_cmd->add_flag("--json", census_json, "JSON rows instead of TSV");

  // verify
  std::string verify_board, verify_orientation;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check an orientation against a board");
  verify_cmd->add_option("board", verify_board, "board file")->required();
  verify_cmd->add_option("orientation", verify_orientation, "orientation file")->required();
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  // render
  std::string render_board, render_orientation, render_start;
  bool render_ascii = false;
  auto* render_cmd = app.add_subcommand("render", "step-numbered grid of the tour");
  render_cmd->add_option("board", render_board, "board file")->required();
  render_cmd->add_option("orientation", render_orientation, "orientation file")->required();
  render_cmd->add_option("--start", render_start, "start cell r,c (default: first filled)");
  render_cmd->add_flag("--ascii", render_ascii, "plain-text arrows");

  std::vector<const char*> argv;
  argv.push_back("torustour");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_solution;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*generate) {
      const Board board = build_family_board(gen);
      if (gen.output == "-") {
        write_board(out, board);
      } else {
        std::ofstream file(gen.output);
        if (!file) throw Error(ErrorCode::parse_error, "cannot open output file: " + gen.output);
        write_board(file, board);
      }
      return exit_solution;
    }

    if (*analyze) {
      const Board board = load_board(analyze_board);
      validate(board);
      const FamilyProfile profile = classify(board);
      const ClosureCheck closure = minimal_closed(board);
      json report{{"n", board.rows()},
                  {"m", board.cols()},
                  {"filled", board.filled_count()},
                  {"family", family_name(profile.kind)},
                  {"parity_ok", parity_ok(board)},
                  {"minimal_closed", closure.minimal}};
      if (profile.k) report["k"] = *profile.k;
      if (profile.width) report["s"] = *profile.width;
      if (profile.extra_col) report["ell"] = *profile.extra_col;
      report["standard_form_shift"] = {profile.standard_form_shift.first,
                                       profile.standard_form_shift.second};
      if (!profile.diagonals.empty()) report["diagonals"] = profile.diagonals;
      if (closure.witness)
        report["witness"] =
            json{{"rows", closure.witness->rows}, {"cols", closure.witness->cols}};
      out << report.dump() << '\n';
      return exit_solution;
    }

    if (*solve_cmd) {
      SolveReport report;
      if (!solve_family.empty()) {
        report = solve_family_spec(split_ints(solve_family, "--family"));
      } else if (!solve_board.empty()) {
        SolveOptions options;
        if (solve_budget > 0) options.search_budget = solve_budget;
        options.threads = solve_threads;
        report = solve(load_board(solve_board), options);
      } else {
        err << "solve needs a board file or --family\n";
        return exit_usage;
      }
      print_report(out, report, solve_json);
      return report_exit(report);
    }

    if (*search_cmd) {
      const Board board = load_board(search_board);
      SearchOptions options;
      options.restrict_rows_to_plus_one = restrict_rows;
      if (search_budget > 0) options.budget = search_budget;
      options.threads = search_threads;
      const SearchOutcome outcome = exhaustive(board, options);
      if (search_json) {
        const char* verdict =
            outcome.found ? "solution" : (outcome.exhausted ? "proven_none" : "unknown");
        json report{{"verdict", verdict},
                    {"found", outcome.found.has_value()},
                    {"tested", outcome.tested},
                    {"restricted", outcome.restricted},
                    {"exhausted", outcome.exhausted}};
        if (outcome.found) report["orientation"] = orientation_json(*outcome.found);
        out << report.dump() << '\n';
      } else {
        if (outcome.found) {
          out << "found after " << outcome.tested << " candidates:\n";
          write_orientation(out, *outcome.found);
        } else if (outcome.exhausted) {
          out << "exhausted " << outcome.tested << " candidates: no solution\n";
        } else {
          out << "inconclusive after " << outcome.tested << " candidates\n";
        }
      }
      return outcome.found ? exit_solution : (outcome.exhausted ? exit_none : exit_unknown);
    }

    if (*census_cmd) {
      const auto [n_lo, n_hi] = parse_range(census_n, "--n");
      std::vector<CensusCase> cases;
      if (census_family == "totally_filled") {
        const auto [m_lo, m_hi] = parse_range(census_m.empty() ? census_n : census_m, "--m");
        for (int n = n_lo; n <= n_hi; ++n)
          for (int m = m_lo; m <= m_hi; ++m)
            cases.push_back({"n=" + std::to_string(n) + ",m=" + std::to_string(m),
                             gen_totally_filled(n, m)});
      } else if (census_family == "cyclic") {
        if (census_k < 1) throw Error(ErrorCode::parse_error, "census cyclic needs --k");
        for (int n = std::max(n_lo, census_k); n <= n_hi; ++n)
          cases.push_back({"n=" + std::to_string(n) + ",k=" + std::to_string(census_k),
                           gen_cyclic_kdiagonal(n, census_k)});
      } else if (census_family == "almost") {
        if (census_k < 1) throw Error(ErrorCode::parse_error, "census almost needs --k");
        for (int n = std::max(n_lo, census_k + 1); n <= n_hi; ++n)
          for (int ell = 2; ell <= n - census_k + 1; ++ell)
            cases.push_back({"n=" + std::to_string(n) + ",k=" + std::to_string(census_k) +
                                 ",ell=" + std::to_string(ell),
                             gen_almost(n, census_k, ell)});
      } else {
        throw Error(ErrorCode::parse_error, "unknown census family: " + census_family);
      }
      const auto rows = census(cases);
      if (census_json) {
        json list = json::array();
        for (const auto& row : rows) {
          json item{{"params", row.params},
                    {"has_solution", row.has_solution},
                    {"tested", row.tested}};
          if (row.witness) item["orientation"] = orientation_json(*row.witness);
          list.push_back(std::move(item));
        }
        out << list.dump() << '\n';
      } else {
        out << "params\thas_solution\twitness_r\twitness_c\ttested\n";
        for (const auto& row : rows) {
          out << row.params << '\t' << (row.has_solution ? "true" : "false") << '\t'
              << (row.witness ? row.witness->row_string() : "-") << '\t'
              << (row.witness ? row.witness->col_string() : "-") << '\t' << row.tested << '\n';
        }
      }
      return exit_solution;
    }

    if (*verify_cmd) {
      const Board board = load_board(verify_board);
      validate(board);
      const Orientation orientation = load_orientation(verify_orientation);
      const auto parts = cycle_structure(board, orientation);
      const bool solved = parts.size() == 1;
      std::vector<std::size_t> lengths;
      for (const auto& part : parts) lengths.push_back(part.cells.size());
      if (verify_json) {
        out << json{{"verdict", solved ? "solution" : "not_a_solution"},
                    {"solution", solved},
                    {"cycles", lengths}}
                   .dump()
            << '\n';
      } else {
        out << (solved ? "solution" : "not a solution") << "\ncycle lengths:";
        for (auto len : lengths) out << ' ' << len;
        out << '\n';
      }
      return solved ? exit_solution : exit_none;
    }

    if (*render_cmd) {
      const Board board = load_board(render_board);
      validate(board);
      const Orientation orientation = load_orientation(render_orientation);
      Cell start = board.first_cell();
      if (!render_start.empty()) {
        const auto values = split_ints(render_start, "--start");
        if (values.size() != 2) throw Error(ErrorCode::parse_error, "--start expects r,c");
        start = {values[0], values[1]};
      }
      out << render_tour(board, orientation, start, render_ascii);
      return exit_solution;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::parse_error:
      case ErrorCode::empty_row:
      case ErrorCode::empty_column:
      case ErrorCode::invalid_board:
      case ErrorCode::cell_not_filled:
      case ErrorCode::dimension_mismatch:
        return exit_format;
      default:
        return exit_usage;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
  return exit_usage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace torustour::cli
