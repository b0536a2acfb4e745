#pragma once

// Command-line front end: argument parsing into a Command and dispatch with
// deterministic JSON or TSV output.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "swd/segments.hpp"

namespace swd::cli {

/// Malformed invocation; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Default, Json, Tsv };

struct Denom {
  int n;
  int k;
  int l;
  bool operator==(const Denom&) const = default;
};
struct Quiver {
  int n;
  std::int64_t from;
  std::int64_t to;
  bool operator==(const Quiver&) const = default;
};
struct Cartan {
  int n;
  std::int64_t from;
  std::int64_t to;
  bool operator==(const Cartan&) const = default;
};
struct FImage {
  int n;
  Segment segment;
  bool operator==(const FImage&) const = default;
};
struct Phi {
  int n;
  int t;
  int i;
  std::optional<int> sign;
  std::int64_t p;
  bool operator==(const Phi&) const = default;
};
struct Lambda {
  Multisegment segs;
  bool operator==(const Lambda&) const = default;
};
struct De {
  Multisegment segs;
  bool operator==(const De&) const = default;
};
struct CocycleSolve {
  int N;
  std::string path;
  bool series;
  int order;
  bool operator==(const CocycleSolve&) const = default;
};
struct Table {
  int n;
  bool operator==(const Table&) const = default;
};
/// --help at any level; carries the rendered help text.
struct Help {
  std::string text;
  bool operator==(const Help&) const = default;
};

using CommandBody =
    std::variant<Denom, Quiver, Cartan, FImage, Phi, Lambda, De, CocycleSolve, Table, Help>;

struct Command {
  CommandBody body;
  Format format = Format::Default;
  bool operator==(const Command&) const = default;
};

/// Parses the arguments after the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

/// Executes a parsed command. Returns 0 on success and 2 on a library error,
/// which is reported as a JSON object on `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args followed by run; usage errors return 1.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swd::cli
