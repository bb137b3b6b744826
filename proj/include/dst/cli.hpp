#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dst::cli {

enum class Verb {
  Components,
  Fillings,
  Classify,
  Poincare,
  Union,
  Intersect,
  Poset,
  Hilbert,
  PointCount,
  Verify,
};

enum class Format { Json, Table };

/// Parsed command; s defaults to n-1 when absent.
struct CommandRequest {
  Verb verb = Verb::Components;
  std::optional<int> n;
  std::optional<int> s;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> p;
  std::optional<std::vector<int>> word;          // --w for classify
  std::vector<std::pair<int, int>> pairs;        // --pairs
  Format format = Format::Json;
  long long budget = 100000000;
  int threads = 1;
};

struct CommandResult {
  /// 0 success, 1 verification failure, 2 invalid arguments,
  /// 3 enumeration budget exceeded.
  int exit_code = 0;
  std::string output;
};

Verb parse_verb(const std::string& name);

/// Token of the form "i,j" or a bare "i" (meaning the component (i,i)).
std::pair<int, int> parse_pair_token(const std::string& token);

/// Execute a request and render its report; never throws.
CommandResult run(const CommandRequest& request);

}  // namespace dst::cli
