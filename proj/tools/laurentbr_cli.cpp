#include <CLI11.hpp>
#include <iostream>

#include "laurentbr/basefield.hpp"
#include "laurentbr/commands.hpp"

using namespace laurentbr;

namespace {

struct Flags {
  std::string base, window, format, p, n, budget;
  std::map<std::string, std::string> args;
  bool search = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in iterated Laurent series fields: symbol algebras and Pfister forms"};
  app.require_subcommand(1);
  Flags flags;

  const std::map<std::string, std::string> desc{
      {"valuation", "valuation of a Laurent polynomial"},
      {"as-reduce", "reduce a Laurent polynomial modulo the Artin-Schreier image"},
      {"division-check", "decide whether a tensor product of symbol algebras is a division algebra"},
      {"symlen", "symbol length bound and verified witness"},
      {"linkage-quad", "non-linked pair of quadratic Pfister forms"},
      {"linkage-bilinear", "non-linked pair of bilinear Pfister forms"},
      {"common-factor", "common factor of two monomial Pfister forms from square classes"},
      {"report-all", "run the reproduction bundle"}};

  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, desc.at(name));
    sub->add_option("--base", flags.base, "base field: F2, F9, F4:w^2+w+1, F2(t), alg-closed (symlen)");
    sub->add_option("--p", flags.p, "characteristic");
    sub->add_option("--n", flags.n, "number of Laurent variables or form size");
    sub->add_option("--window", flags.window, "exponent window lo..hi");
    sub->add_option("--budget", flags.budget, "search budget");
    sub->add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (name == "valuation" || name == "as-reduce") sub->add_option("--expr", flags.args["expr"])->required();
    if (name == "division-check") {
      sub->add_option("--class", flags.args["class"], "symbols [a, b) joined by *")->required();
      sub->add_option("--expect", flags.args["expect"], "division, not-division or unknown");
    }
    if (name == "common-factor") {
      sub->add_option("--phi", flags.args["phi"], "<<a1, a2>>")->required();
      sub->add_option("--psi", flags.args["psi"], "<<a2, a3>>")->required();
    }
    if (name == "linkage-quad") sub->add_flag("--search", flags.search, "run the isotropy search");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Command cmd;
  cmd.name = app.get_subcommands().front()->get_name();
  OutputFormat fmt = OutputFormat::Text;
  try {
    cmd.config = RunConfig::from_environment();
    if (!flags.base.empty()) cmd.config.set("base", flags.base);
    if (!flags.p.empty()) cmd.config.set("p", flags.p);
    if (!flags.n.empty()) cmd.config.set("n", flags.n);
    if (!flags.window.empty()) cmd.config.set("window", flags.window);
    if (!flags.budget.empty()) cmd.config.set("budget", flags.budget);
    if (!flags.format.empty()) cmd.config.set("format", flags.format);
    fmt = cmd.config.format;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& [k, v] : flags.args)
    if (!v.empty()) cmd.args[k] = v;
  if (flags.search) cmd.args["search"] = "1";

  const Report r = run(cmd);
  std::cout << r.render(fmt);
  if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
  return r.exit_code;
}
