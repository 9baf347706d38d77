// lgb: batch front end for the Laurent / affinoid Gröbner engine.
//
//   lgb gb FILE [--normalize] [--max-basis N] [--precision N]
//   lgb reduce FILE --poly EXPR
//   lgb member FILE --poly EXPR      exit 0 if a member, 3 if not
//   lgb check FILE                   exit 3 if the generators are not a basis
//   lgb info FILE --poly EXPR
//   lgb selftest
//
// FILE may be "-" for standard input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lgb/commands.hpp"

namespace {

bool read_problem(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner bases over Laurent polynomial rings and polytopal affinoid algebras"};
  app.require_subcommand(1);

  std::string file, poly, precision;
  std::size_t max_basis = 500;
  std::int64_t radius = 0;
  bool normalize = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "problem file, or - for stdin")->required();
    sub->add_option("--precision", precision, "precision cap for weight and polytope problems");
    sub->add_option("--radius", radius, "search radius for module generators (0 picks a default)");
  };
  auto* gb = app.add_subcommand("gb", "compute a Gröbner basis of the generators");
  add_common(gb);
  gb->add_flag("--normalize", normalize, "divide each element by its leading coefficient");
  gb->add_option("--max-basis", max_basis, "abort when the basis grows beyond this size");
  for (auto [name, help] : {std::pair{"reduce", "divide --poly by the generators"},
                            std::pair{"member", "decide ideal membership of --poly"},
                            std::pair{"info", "leading data of --poly"}}) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->add_option("--poly", poly, "polynomial in the problem's variables")->required();
    if (std::string(name) == "member") sub->add_option("--max-basis", max_basis, "basis size guard");
  }
  add_common(app.add_subcommand("check", "test whether the generators form a Gröbner basis"));
  app.add_subcommand("selftest", "run the oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lgb::kExitParse;
  }

  lgb::CommandOptions options;
  options.verb = app.get_subcommands().front()->get_name();
  options.max_basis = max_basis;
  options.normalize = normalize;
  options.search_radius = radius;
  if (!poly.empty()) options.poly = poly;
  if (!precision.empty()) {
    try {
      options.precision = mpq_class(precision);
      options.precision->canonicalize();
    } catch (const std::invalid_argument&) {
      std::cerr << "parse error: --precision expects a rational number\n";
      return lgb::kExitParse;
    }
  }
  if (options.verb != "selftest" && !read_problem(file, options.problem_text)) {
    std::cerr << "error: cannot read " << file << "\n";
    return lgb::kExitMath;
  }
  return lgb::run_command(options, std::cout, std::cerr);
}
