#pragma once

#include <coverkit/expsum.hpp>
#include <coverkit/multidim.hpp>
#include <coverkit/system.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace coverkit::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SystemFile {
  std::size_t dimension = 1;
  std::variant<std::vector<MultiSequence>, System> parsed;
  std::vector<std::string> source;

  bool one_dimensional() const { return dimension == 1; }
  // Throws Error for multidimensional files.
  const System& system() const;
  // Any file as multidimensional sequences; dimension-1 entries lift as-is.
  std::vector<MultiSequence> multi() const;
};

// One entry per line: `<a> <n> [<p>/<q>]` or `<a1>,..,<al> <n1>,..,<nl> [<p>/<q>]`.
// `#` starts a comment; blank lines are ignored.
SystemFile parse_system(std::string_view text);
std::string serialize_system(const SystemFile& file);

// Whitespace-separated values of one period, `p` or `p/q` each.
PeriodicValueTable parse_target(std::string_view text, Field field = Field::rationals());

// `level N`, then per set `modulus n` followed by lines `<t> <coeff>`, where
// <coeff> is a sum of terms `p/q*z^j` meaning (p/q) zeta_N^j.
std::vector<ExpSequence> parse_coefficients(std::string_view text);

// Signed integers separated by commas.
std::vector<std::int64_t> parse_int_csv(std::string_view text);
std::vector<Modulus> parse_modulus_csv(std::string_view text);

Rational parse_rational(std::string_view token);

}  // namespace coverkit::cli
