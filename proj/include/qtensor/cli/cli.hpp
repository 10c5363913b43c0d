#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtensor/coeff/ratfunc.hpp"
#include "qtensor/combinatorics/partition.hpp"

namespace qtensor::cli {

enum class Command { walks, vectors, psi, verify, norms, specht, decompose, invariants };
enum class Output { text, json };

struct CliConfig {
  Command command = Command::walks;
  int n = 1;
  int r = 0;
  std::optional<combinatorics::Partition> shape;
  std::optional<coeff::Rational> q0;
  Output output = Output::text;
  std::optional<std::string> out_path;
  bool show_psi = false;
};

/// Test seams. When corrupt_record is set, `verify` doubles the first
/// coefficient of that basis record before checking.
struct CliHooks {
  std::optional<std::size_t> corrupt_record;
};

/// Flag grammar, printed on usage errors.
std::string usage();

/// Parses argv (argv[0] is the program name). Throws UsageError.
CliConfig parse_args(const std::vector<std::string>& argv);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exit status: 0 success, 1 failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace qtensor::cli
