#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/bitset.hpp"
#include "covnum/incidence.hpp"

namespace covnum {

/// Universe V = {0..n-1} and one bitset over V per set of U.
struct CoverInstance {
  std::string name;
  std::size_t universe_size = 0;
  std::vector<Bitset> sets;
  std::vector<std::string> labels;  // one per set, e.g. "MS5#17"
  /// Optional partition of V (element classes) for the per-block counting bound.
  std::vector<Bitset> element_groups;

  CoverInstance() = default;
  /// Throws ArgumentError when some element lies in no set or the shapes
  /// disagree.
  CoverInstance(std::string name, std::size_t universe_size, std::vector<Bitset> sets,
                std::vector<std::string> labels = {});

  static CoverInstance from_incidence(const IncidenceMatrix& m, std::string name);

  std::size_t set_count() const { return sets.size(); }
  /// For each element, the sets containing it.
  std::vector<Bitset> element_sets() const;
  std::uint64_t nonzeros() const;
  std::size_t index_of(std::string_view label) const;
};

/// Set S is removed when another set T covers S (equal sets keep the lower
/// index); a set is forced when it alone covers some element.
struct Reduction {
  CoverInstance reduced;
  std::vector<std::size_t> forced;       // indices into the original instance
  std::vector<std::size_t> set_origin;   // reduced set -> original set
  std::vector<std::size_t> element_origin;  // reduced element -> original element
};

Reduction reduce(const CoverInstance& instance);

enum class SolveStatus { optimal, feasible_with_bounds };

std::string to_string(SolveStatus s);

struct CoverSolution {
  std::vector<std::size_t> chosen;  // ascending set indices
  SolveStatus status = SolveStatus::feasible_with_bounds;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  std::size_t size() const { return chosen.size(); }
};

/// Largest residual coverage first, ties to the lowest index, then drops
/// redundant sets from the highest index down.
CoverSolution greedy(const CoverInstance& instance);

/// max over the whole universe and each element group of
/// ceil(|block| / largest intersection of a set with the block).
std::uint64_t counting_lower_bound(const CoverInstance& instance);

/// Exact nonnegative rational.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  std::uint64_t ceil() const { return (num + den - 1) / den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

/// Value of a feasible dual of the LP relaxation (element weights with every
/// set summing to at most 1), found by water-filling on an integer grid and
/// then `iterations` passes raising single elements into remaining slack.
Rational fractional_lower_bound(const CoverInstance& instance, int iterations = 2);

struct BoundReport {
  std::uint64_t counting_bound = 0;
  Rational fractional_bound;
  std::uint64_t best_known = 0;
};

BoundReport bound_report(const CoverInstance& instance, int iterations = 2);

/// Groups sets by the label text before '#' ("MS3#5" is in class MS3) and
/// returns the smallest class that covers the universe on its own, after
/// dropping redundant members. Empty when no class covers.
std::vector<std::size_t> class_cover(const CoverInstance& instance);

/// Weighted local search for small covers: swap one chosen set for one
/// covering a random open element, raising the weight of elements left open.
/// Deterministic for a fixed seed and step count. Starts from `start` when
/// given, otherwise from greedy.
CoverSolution local_search(const CoverInstance& instance, std::uint64_t steps, std::uint64_t seed = 1,
                           const std::vector<std::size_t>* start = nullptr);

/// For instances where every element lies in exactly two sets of `block`, so
/// that the block alone is a vertex cover problem. Anneals over the block sets
/// to leave out; the elements both of whose block sets are left out are then
/// covered greedily by sets outside the block. Deterministic for a fixed seed
/// and step count. Throws ArgumentError when the block has the wrong shape.
CoverSolution pair_block_search(const CoverInstance& instance, const std::vector<std::size_t>& block,
                                std::uint64_t steps, std::uint64_t seed = 1);

struct SolveBudget {
  std::uint64_t nodes = 10'000'000;
  double seconds = 300.0;
  /// Cap on local search steps for the initial incumbent (at most 100 per set).
  std::uint64_t heuristic_steps = 200'000;
};

/// Depth-first branch and bound. Branches on the free set with the largest
/// residual coverage (ties by index), include branch first. A set is forced
/// when it is the last candidate of an element. When every open element has
/// exactly two candidates the residual is a vertex cover problem and is
/// solved as |vertices| - maximum independent set.
CoverSolution solve_exact(const CoverInstance& instance, const SolveBudget& budget = {});

struct VerifyResult {
  bool covers = false;
  std::optional<std::size_t> uncovered;  // a witness element when !covers
};

VerifyResult verify_indices(const CoverInstance& instance, const std::vector<std::size_t>& chosen);
/// Throws ArgumentError for a label not in the instance.
VerifyResult verify_cover(const CoverInstance& instance, const std::vector<std::string>& labels);

/// One label per line; blank lines and '#' comments ignored.
std::vector<std::string> read_certificate(std::istream& in);

/// Maximum independent set of a graph given by adjacency bitsets. Returns
/// the vertex set found and whether it is proven maximum within the node
/// budget.
struct IndependentSetResult {
  std::vector<std::size_t> vertices;
  bool proven = false;
  std::uint64_t nodes = 0;
  std::size_t upper_bound = 0;
};

IndependentSetResult maximum_independent_set(const std::vector<Bitset>& adjacency,
                                             std::uint64_t node_budget = 10'000'000);

}  // namespace covnum
