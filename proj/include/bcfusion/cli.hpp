#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bcfusion/root_datum.hpp"
#include "bcfusion/weight.hpp"

namespace bcfusion {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every invariant check for one (family, rank, l) instance. Type C runs the
/// family-independent subset.
std::vector<CheckResult> verify_instance(Family family, int k, int ell);

/// (2,9), (2,11), (2,13), (3,13), (3,15), (4,17)
std::vector<std::pair<int, int>> default_verify_grid();

namespace cli {

enum class Command { kAlcove, kFuse, kMatrix, kChars, kVerify, kDuality, kUnitarity };
enum class Format { kJson, kCsv, kTable };

struct RunConfig {
  Command command = Command::kAlcove;
  Family family = Family::B;
  std::optional<int> rank;
  std::optional<int> ell;
  std::optional<int> z;
  std::optional<Weight> lhs;
  std::optional<Weight> rhs;
  bool all_pairs = false;
  std::vector<std::pair<int, int>> grid;
  int max_ell = 25;
  Format format = Format::kJson;
  std::optional<std::string> output;
};

/// "3/2,1/2" -> doubled (3,1); mixed parity or malformed entries throw ParseError.
Weight parse_weight(const std::string& text);
/// Inverse of parse_weight: "3/2,1/2".
std::string format_weight(const Weight& w);
/// "2:9,3:13" -> {(2,9), (3,13)}
std::vector<std::pair<int, int>> parse_grid(const std::string& text);

/// Executes one command; returns the exit status (0 ok, 1 check failure,
/// 2 usage error).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace bcfusion
