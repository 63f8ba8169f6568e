#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/cover.hpp"
#include "covnum/lp_format.hpp"
#include "json.hpp"

namespace covnum {

enum class ClaimKind {
  count_equality,
  partition,
  forced_class,
  ceiling_replacement,
  cover_feasibility,
  cover_optimality,
  assembly,
};

std::string to_string(ClaimKind kind);

/// conditional: consistent with the evidence but not proven within budget.
enum class Verdict { pass, fail, conditional };

std::string to_string(Verdict v);

/// One checkable step of a covering-number argument.
struct Claim {
  std::string id;      // "s8.forced-a8"
  std::string anchor;  // the proof step it mirrors, in words
  ClaimKind kind = ClaimKind::count_equality;
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::fail;
};

/// How the final value is supported.
enum class EvidenceGrade {
  complete,              // every claim checked internally
  internal_solve,        // optimality of a sub-cover proven by solve_exact
  certificate_and_bound, // external cover meets an internal lower bound
  interval,              // bracketing bounds only
};

std::string to_string(EvidenceGrade g);

struct Report {
  std::string group;
  std::vector<Claim> claims;
  /// Emitted only when every claim passes.
  std::optional<std::uint64_t> sigma;
  /// Bracket on sigma; equal ends when sigma is known.
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  /// The value the argument aims at.
  std::uint64_t target = 0;
  EvidenceGrade grade = EvidenceGrade::complete;
  std::vector<std::string> dependencies;  // external certificates consumed
  std::vector<std::string> notes;

  bool any_failed() const;
  bool all_passed() const;
  const Claim* find(std::string_view id) const;
  nlohmann::json to_json() const;
  /// One line per claim, then the result line.
  std::string to_text() const;
};

struct TheoremOptions {
  unsigned threads = 1;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  /// Run solve_exact on the large sub-instances (S9 (3,6), M12 (6,6)).
  bool extended = false;
  SolveBudget budget;
  /// Local search steps for upper bounds on the large sub-instances.
  std::uint64_t heuristic_steps = 200'000;
  /// Cover files for sub-instances, keyed by group ("S9", "M12"): one label
  /// per line, or r<j> lines as written by a solver.
  std::map<std::string, std::filesystem::path> certificates;
  /// Where j1_instances writes its LP files.
  std::filesystem::path output_dir = ".";
};

Report check_s8(const TheoremOptions& options = {});
Report check_s9(const TheoremOptions& options = {});
Report check_s10(const TheoremOptions& options = {});
Report check_s12(const TheoremOptions& options = {});
Report check_m12(const TheoremOptions& options = {});

struct J1Instances {
  Report report;
  std::vector<std::filesystem::path> lp_files;
  std::vector<LpStats> stats;
};

/// Assembly arithmetic always; with options.extended also expands the
/// classes and writes the 11A x PSL(2,11) and 7A x 2^3:7:3 LP files.
J1Instances j1_instances(const TheoremOptions& options = {});

/// Dispatch on "S8", "S9", "S10", "S12", "M12", "J1".
Report check_theorem(std::string_view group, const TheoremOptions& options = {});

/// Reads a cover for `instance`: label lines, bare r<j> lines or
/// "r<j> <value>" lines. Returns ascending set indices.
std::vector<std::size_t> read_cover_file(const CoverInstance& instance, std::istream& in);

}  // namespace covnum
