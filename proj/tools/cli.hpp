#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geronimus/bigfloat.hpp"
#include "geronimus/errors.hpp"
#include "geronimus/moments.hpp"

namespace geronimus::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kRegularityFailure = 3 };

enum class Kind { single, twofold };
enum class Format { csv, json, latex };

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Fault injection for `verify`: adds 1 to A_level, B_level or C_level.
struct Corruption {
  char which;
  std::size_t level;
};

struct RunConfig {
  std::string measure = "laguerre";
  std::optional<Rational> alpha;
  std::string file;
  Kind kind = Kind::single;
  std::optional<Rational> s0_star;
  std::optional<Corner> corner;
  std::size_t n = 0;
  Format format = Format::json;
  long precision = kDefaultPrecision;
  std::optional<long> decimal;
  std::string output;
  std::string output_dir = ".";
  std::optional<Corruption> corrupt;
  std::optional<std::vector<Rational>> head;
};

Corner parse_corner(const std::string& text);
Corruption parse_corruption(const std::string& text);
std::vector<Rational> parse_list(const std::string& text);

int cmd_transform(const RunConfig& cfg, std::ostream& out);
int cmd_factorize(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Full command line, including the subcommand. Errors are reported on `err`
// and mapped to ExitCode values.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geronimus::cli
