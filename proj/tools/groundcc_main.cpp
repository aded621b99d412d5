// Command-line driver: parse a problem file, run the pipeline, report.
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "groundcc/pipeline.hpp"

namespace {

void usage(std::ostream& os) {
  os << "usage: groundcc [options] <problem-file>\n"
        "options:\n"
        "  --fuel N             inference-step budget (default 100000)\n"
        "  --mode auto          mode is inferred from theory blocks\n"
        "  --trace              log every inference\n"
        "  --json               machine-readable report\n"
        "  --show-presentation  monoid presentation for S(E) (group mode)\n"
        "  --enumerate-nf L     irreducible words up to length L (group mode)\n"
        "  --skip-unit-deduce   no DEDUCE against unit-table rules\n";
}

}  // namespace

int main(int argc, char** argv) {
  groundcc::RunFlags flags;
  std::string path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(1);
      }
      return argv[++i];
    };
    if (arg == "--fuel") {
      flags.fuel = std::stoull(value());
    } else if (arg == "--mode") {
      if (value() != "auto") {
        std::cerr << "only --mode auto is supported\n";
        return 1;
      }
    } else if (arg == "--trace") {
      flags.trace = true;
    } else if (arg == "--json") {
      flags.json = true;
    } else if (arg == "--show-presentation") {
      flags.show_presentation = true;
    } else if (arg == "--enumerate-nf") {
      flags.enumerate_nf = std::stoi(value());
    } else if (arg == "--skip-unit-deduce") {
      flags.skip_unit_deduce = true;
    } else if (arg == "--help" || arg == "-h") {
      usage(std::cout);
      return 0;
    } else if (!arg.empty() && arg[0] == '-') {
      std::cerr << "unknown option " << arg << "\n";
      usage(std::cerr);
      return 1;
    } else if (path.empty()) {
      path = arg;
    } else {
      std::cerr << "more than one problem file\n";
      return 1;
    }
  }
  if (path.empty()) {
    usage(std::cerr);
    return 1;
  }

  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    groundcc::Context ctx;
    groundcc::ProblemFile pf = groundcc::parse_problem(ctx, buf.str());
    groundcc::Report rep = groundcc::run(ctx, pf, flags);
    if (flags.json)
      std::cout << groundcc::report_json(rep).dump(2) << "\n";
    else
      std::cout << groundcc::render_report_text(rep);
    return rep.exit_code;
  } catch (const groundcc::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
