#ifndef MODRING_CLI_COMMAND_HPP
#define MODRING_CLI_COMMAND_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modring/report.hpp"

namespace modring::cli {

enum class Verb { Relations, Groebner, Nf, Basis, Hilbert, Pairing, Chern, Betti, Verify };
enum class Format { Text, Json, Latex };
enum class ChernTarget { Quotient, Tangent };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kParse = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenusRange {
  int first = 1;
  int last = 1;
};

/// "5" or "1..8". Throws UsageError.
GenusRange parse_genus_range(const std::string& text);

struct Command {
  Verb verb = Verb::Verify;
  GenusRange genus;
  Format format = Format::Text;
  std::optional<std::string> cache_dir;
  std::string poly;      // nf
  std::string monomial;  // pairing
  ChernTarget target = ChernTarget::Quotient;
  std::optional<int> degree;  // chern
  std::optional<int> s_max;   // betti
};

/// Every check `verify` runs for one genus, in a fixed order.
std::vector<CheckReport> verify_genus(int genus);

/// Dispatches the verb, writing the result to `out` and diagnostics to `err`.
/// Returns an ExitCode.
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace modring::cli

#endif  // MODRING_CLI_COMMAND_HPP
