#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hfk11/error.hpp"
#include "hfk11/pipeline.hpp"
#include "hfk11/render.hpp"
#include "hfk11/report.hpp"
#include "hfk11/scan.hpp"
#include "hfk11/verify.hpp"

namespace {

using hfk11::Error;
using hfk11::ErrorCode;

struct Source {
  std::string params;
  std::optional<int> family;
  std::string matchings;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* p = cmd->add_option("--params", src.params, "Parameters p,q,r,s");
  auto* f = cmd->add_option("--family", src.family, "Family member n");
  auto* m = cmd->add_option("--matchings", src.matchings, "JSON file with explicit matchings");
  p->excludes(f, m);
  f->excludes(m);
}

hfk11::OneOneDiagram load(const Source& src) {
  if (src.family) {
    if (*src.family < 0) throw Error(ErrorCode::kParameterRange, "family index must be nonnegative");
    return hfk11::decode(hfk11::family_params(*src.family));
  }
  if (!src.params.empty()) {
    hfk11::RasmussenParams params;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(src.params);
    if (!(in >> params.p >> c1 >> params.q >> c2 >> params.r >> c3 >> params.s) || c1 != ',' || c2 != ',' ||
        c3 != ',' || !(in >> std::ws).eof()) {
      throw Error(ErrorCode::kInputFormat, "--params expects four comma-separated integers");
    }
    return hfk11::decode(params);
  }
  if (!src.matchings.empty()) {
    std::ifstream in(src.matchings);
    if (!in) throw Error(ErrorCode::kInputFormat, "cannot read " + src.matchings);
    std::stringstream text;
    text << in.rdbuf();
    return hfk11::parse_matchings(text.str());
  }
  throw Error(ErrorCode::kInputFormat, "one of --params, --family or --matchings is required");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kInputFormat, "cannot write " + path);
}

int fail(const Error& e) {
  std::cout << hfk11::to_text(hfk11::failure_json(e));
  std::cerr << "hfk11: " << e.what() << "\n";
  return hfk11::is_input_error(e.code()) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology of (1,1)-knots"};
  app.require_subcommand(1);

  Source src;
  std::optional<int> window;
  int drift_shift = 0;
  std::string output, timing, bigon;
  int max_n = 3;
  int p_max = 0;
  unsigned threads = 0;

  auto* compute = app.add_subcommand("compute", "Compute the invariant report");
  add_source(compute, src);
  compute->add_option("--window", window, "Bigon search window (default: automatic)");
  compute->add_option("--drift-shift", drift_shift, "Extra full twists of the through strands");
  compute->add_option("--output", output, "Write the report here instead of stdout");
  compute->add_option("--timing", timing, "Write wall-clock timing to this sidecar file");

  auto* render = app.add_subcommand("render", "Draw the diagram as SVG");
  add_source(render, src);
  render->add_option("--bigon", bigon, "Shade the bigon FROM:TO");
  render->add_option("--window", window, "Bigon search window (default: automatic)");
  render->add_option("--output", output, "Write the SVG here instead of stdout");

  auto* verify = app.add_subcommand("verify-golden", "Check the family against the published tables");
  verify->add_option("--max-n", max_n, "Largest family index")->check(CLI::Range(0, 20));

  auto* scan = app.add_subcommand("scan", "Scan parameter space");
  scan->add_option("--p-max", p_max, "Largest p")->required();
  scan->add_option("--threads", threads, "Worker threads (default: all cores)");
  scan->add_option("--output", output, "Write the stream here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*compute) {
      const auto start = std::chrono::steady_clock::now();
      const hfk11::Analysis a = hfk11::analyze(load(src), {window, drift_shift});
      const std::string text = hfk11::to_text(hfk11::report_json(a));
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(text, output);
      if (!timing.empty()) emit(hfk11::to_text({{"seconds", seconds}}), timing);
    } else if (*render) {
      const hfk11::Analysis a = hfk11::analyze(load(src), {window, 0});
      const hfk11::Bigon* chosen = nullptr;
      if (!bigon.empty()) {
        int from = 0, to = 0;
        char colon = 0;
        std::istringstream in(bigon);
        if (!(in >> from >> colon >> to) || colon != ':' || !(in >> std::ws).eof()) {
          throw Error(ErrorCode::kInputFormat, "--bigon expects FROM:TO");
        }
        for (const auto& b : a.bigons) {
          if (b.from == from && b.to == to) {
            chosen = &b;
            break;
          }
        }
        if (!chosen) throw Error(ErrorCode::kInputFormat, "no bigon from x_" + std::to_string(from) + " to x_" + std::to_string(to));
      }
      emit(hfk11::render_svg(a.diagram, a.realization, chosen), output);
    } else if (*verify) {
      return hfk11::print_checks(hfk11::verify_golden(max_n), std::cout) ? 0 : 2;
    } else if (*scan) {
      std::string text;
      for (const auto& line : hfk11::scan(p_max, threads)) text += line + "\n";
      emit(text, output);
    }
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << "hfk11: internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
