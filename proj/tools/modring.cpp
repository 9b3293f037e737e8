// modring: relations, Gröbner bases and characteristic classes of the
// invariant ring <alpha, beta, gamma>.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "modring/cli/command.hpp"

using namespace modring::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Q[alpha, beta, gamma]/I_g"};
  app.require_subcommand(1);

  Command cmd;
  std::string genus = "1";
  std::string format = "text";
  std::string cache_dir;
  std::string target = "q";
  int degree = -1;
  int s_max = -1;

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  const std::map<std::string, ChernTarget> targets{{"q", ChernTarget::Quotient}, {"ng", ChernTarget::Tangent}};

  struct VerbSpec {
    const char* name;
    Verb verb;
    const char* help;
  };
  const VerbSpec verbs[] = {
      {"relations", Verb::Relations, "relation triple (f1, f2, f3) by both constructions"},
      {"groebner", Verb::Groebner, "reduced Groebner basis of I_g and its initial ideal"},
      {"nf", Verb::Nf, "normal form of a polynomial modulo I_g"},
      {"basis", Verb::Basis, "standard monomial basis of the quotient"},
      {"hilbert", Verb::Hilbert, "Hilbert series by weighted degree"},
      {"pairing", Verb::Pairing, "socle coefficient of a top-degree monomial"},
      {"chern", Verb::Chern, "graded total Chern class of phi^*Q or of N_g"},
      {"betti", Verb::Betti, "even Betti numbers with the generator cross-check"},
      {"verify", Verb::Verify, "run every check over a genus range"},
  };

  for (const auto& spec : verbs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("-g,--genus", genus, "genus or range A..B")->required();
    sub->add_option("--format", format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--cache-dir", cache_dir, "directory for cached Groebner bases");
    if (spec.verb == Verb::Nf) sub->add_option("--poly", cmd.poly, "polynomial, e.g. \"a^2 + b\"")->required();
    if (spec.verb == Verb::Pairing)
      sub->add_option("--monomial", cmd.monomial, "monomial of weighted degree 3g-3")->required();
    if (spec.verb == Verb::Chern) {
      sub->add_option("--target", target, "q (phi^*Q) or ng (tangent bundle)")->check(CLI::IsMember({"q", "ng"}));
      sub->add_option("--degree", degree, "highest weighted degree")->check(CLI::NonNegativeNumber);
    }
    if (spec.verb == Verb::Betti) sub->add_option("--smax", s_max, "largest index s")->check(CLI::NonNegativeNumber);
    sub->callback([&cmd, verb = spec.verb] { cmd.verb = verb; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cmd.genus = parse_genus_range(genus);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  cmd.format = formats.at(format);
  if (!cache_dir.empty()) cmd.cache_dir = cache_dir;
  cmd.target = targets.at(target);
  if (degree >= 0) cmd.degree = degree;
  if (s_max >= 0) cmd.s_max = s_max;

  return run_command(cmd, std::cout, std::cerr);
}
