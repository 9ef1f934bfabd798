#include "synreg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "synreg/errors.hpp"
#include "synreg/grid.hpp"
#include "synreg/json_io.hpp"
#include "synreg/positions.hpp"
#include "synreg/program.hpp"
#include "synreg/program_poset.hpp"
#include "synreg/render.hpp"
#include "synreg/resources.hpp"
#include "synreg/statespace.hpp"

namespace synreg {

namespace {

using nlohmann::json;
using Command = CliConfig::Command;
using Format = CliConfig::Format;

// Usage and input problems, reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return slurp(f);
}

std::vector<std::int64_t> parse_bounds(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--grid expects comma-separated nonnegative integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("--grid needs at least one bound");
  return out;
}

template <class Point>
std::string region_lines(const Region<Point>& r) {
  std::vector<std::string> lines;
  for (const auto& i : r) lines.push_back(to_string(i));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Program load_program(const CliConfig& cfg, std::istream& in) {
  try {
    return parse_program(read_file(cfg.input, in));
  } catch (const SyntaxError& e) {
    throw UsageError(std::string("syntax error at ") + e.what());
  }
}

json load_json(const std::string& path, std::istream& in) {
  try {
    return json::parse(read_file(path, in));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string analysis_text(const Analysis& a, Command cmd) {
  std::ostringstream out;
  out << "positions: " << a.position_count << '\n';
  if (a.unroll)
    out << "note: loops unrolled " << *a.unroll
        << " times; behaviours beyond that depth are not covered\n";
  switch (cmd) {
    case Command::Forbidden:
      out << "forbidden region (" << a.forbidden.size() << " intervals):\n"
          << region_lines(a.forbidden);
      break;
    case Command::Fundamental:
      out << "fundamental region (" << a.fundamental.size() << " intervals):\n"
          << region_lines(a.fundamental);
      break;
    default:
      out << "deadlocks (" << a.deadlocks.size() << "):\n";
      for (const auto& d : a.deadlocks) out << to_string(d) << '\n';
  }
  return out.str();
}

std::string run(const CliConfig& cfg, std::istream& in) {
  const bool as_json = cfg.format == Format::Json;
  switch (cfg.command) {
    case Command::Check: {
      Program prog = load_program(cfg, in);
      require_conservative(prog);
      ConsumptionMap delta = *delta_program(prog);
      if (as_json) {
        json out = {{"conservative", true},
                    {"delta", consumption_to_json(delta)},
                    {"mutexes", mutexes_of(prog)},
                    {"program", print_program(prog)}};
        return out.dump(2) + "\n";
      }
      return print_program(prog) + "\nconservative\ndelta: " + to_string(delta) + "\n";
    }
    case Command::Positions: {
      Program prog = load_program(cfg, in);
      auto all = enumerate_positions(prog, cfg.max_iterations);
      bool conservative = is_conservative(prog);
      if (as_json) {
        json list = json::array();
        for (const auto& p : all) {
          json item = {{"position", position_to_json(p)}};
          if (conservative) item["valid"] = is_valid_state(prog, p);
          list.push_back(std::move(item));
        }
        return json{{"count", all.size()}, {"positions", std::move(list)}}.dump(2) + "\n";
      }
      std::string out;
      for (const auto& p : all) {
        out += to_string(p);
        if (conservative && !is_valid_state(prog, p)) out += "  (invalid)";
        out += '\n';
      }
      return out + std::to_string(all.size()) + " positions\n";
    }
    case Command::Forbidden:
    case Command::Fundamental:
    case Command::Deadlocks: {
      Program prog = load_program(cfg, in);
      Analysis a = analyze(prog, cfg.max_iterations);
      if (as_json) return report_to_json(a).dump(2) + "\n";
      return analysis_text(a, cfg.command);
    }
    case Command::Normalize: {
      if (!cfg.region_file) throw UsageError("normalize needs --region FILE");
      json file = load_json(*cfg.region_file, in);
      json result;
      std::string text;
      if (cfg.grid) {
        Grid grid(*cfg.grid);
        Region<GridPoint> r;
        try {
          r = grid_region_from_json(file, grid);
        } catch (const AnalysisError&) {
          throw;
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        auto n = normalize(grid, r);
        result = region_to_json(n);
        text = region_lines(n);
      } else {
        ProgramPoset poset(load_program(cfg, in), cfg.max_iterations);
        Region<Position> r;
        try {
          r = position_region_from_json(file, poset);
        } catch (const AnalysisError&) {
          throw;
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        auto n = normalize(poset, r);
        result = region_to_json(n);
        text = region_lines(n);
      }
      if (as_json) return result.dump(2) + "\n";
      return text;
    }
    case Command::Render: {
      Program prog = load_program(cfg, in);
      // refuse unsupported shapes before running the analysis
      render_grid(prog, {}, {});
      Analysis a = analyze(prog);
      RenderGrid g = render_grid(prog, {{"forbidden", '#', a.forbidden}}, a.deadlocks);
      if (as_json) {
        json deadlocks = json::array();
        for (const auto& [i, j] : g.deadlock_cells) deadlocks.push_back({i, j});
        json rows = json::array();
        for (std::size_t j = g.cells.size(); j-- > 0;) rows.push_back(g.cells[j]);
        return json{{"x_actions", g.x_actions},
                    {"y_actions", g.y_actions},
                    {"rows", rows},
                    {"deadlocks", deadlocks}}
                   .dump(2) +
               "\n";
      }
      return render_text(g);
    }
  }
  return {};
}

void report_error(std::ostream& err, Format format, const std::string& kind,
                  const std::string& message) {
  if (format == Format::Json)
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  else
    err << "error: " << message << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  static const std::map<std::string, Command> commands = {
      {"check", Command::Check},         {"positions", Command::Positions},
      {"forbidden", Command::Forbidden}, {"fundamental", Command::Fundamental},
      {"deadlocks", Command::Deadlocks}, {"normalize", Command::Normalize},
      {"render", Command::Render}};
  static const std::map<std::string, Format> formats = {{"text", Format::Text},
                                                        {"json", Format::Json}};

  CliConfig cfg;
  CLI::App app{"Analyze concurrent programs with mutexes through regions of positions", "synreg"};
  std::string grid_text;
  std::string command;
  app.add_option("command", command, "check | positions | forbidden | fundamental | "
                                     "deadlocks | normalize | render")
      ->required()
      ->check([&](const std::string& c) {
        return commands.count(c) ? std::string() : "unknown command '" + c + "'";
      });
  app.add_option("input", cfg.input, "program file, '-' for standard input");
  std::string format_text = "text";
  app.add_option("--format", format_text, "text or json")->check([&](const std::string& f) {
    return formats.count(f) ? std::string() : "expected text or json, got '" + f + "'";
  });
  app.add_option("--max-iterations", cfg.max_iterations,
                 "loop bound: unrolling depth for analyses, index bound for positions");
  app.add_option("--region", cfg.region_file, "region file (JSON) for normalize");
  app.add_option("--output", cfg.output_file, "write the report to FILE instead of stdout");
  app.add_option("--grid", grid_text, "normalize over the grid [0,n1]x...x[0,nd], e.g. 5,5");

  // Peek at --format so that usage errors are reported in the right style.
  Format format = Format::Text;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--format" && args[i + 1] == "json") format = Format::Json;
  for (const auto& a : args)
    if (a == "--format=json") format = Format::Json;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, format, "usage", e.what());
    return 2;
  }

  try {
    cfg.command = commands.at(command);
    cfg.format = formats.at(format_text);
    if (!grid_text.empty()) cfg.grid = parse_bounds(grid_text);
    std::string report = run(cfg, in);
    if (cfg.output_file) {
      std::ofstream f(*cfg.output_file);
      if (!f) throw UsageError("cannot write " + *cfg.output_file);
      f << report;
    } else {
      out << report;
    }
    return 0;
  } catch (const AnalysisError& e) {
    report_error(err, cfg.format, e.kind(), e.what());
    return 1;
  } catch (const UsageError& e) {
    report_error(err, cfg.format, "input", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(err, cfg.format, "input", e.what());
    return 2;
  }
}

}  // namespace synreg
