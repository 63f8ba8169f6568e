#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "covnum/permutation.hpp"

namespace covnum {

/// Default cap on how many elements any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// The base point of every new level is the smallest point moved by the
/// generator that created the level, so the same generator list always gives
/// the same chain and the same enumeration order.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<Point> orbit;             // orbit of base_point, BFS order
    /// transversal[x - 1] maps base_point to x; empty when x is off the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  StabilizerChain() = default;
  /// Throws ArgumentError for an empty list or mixed degrees.
  static StabilizerChain build(const std::vector<Permutation>& generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const noexcept;

  /// Residue of `p` after sifting, and the number of levels it passed.
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;
  bool contains(const Permutation& p) const;

  /// Visits every element exactly once. `threads > 1` splits the work over
  /// the top level's transversal; the visitor must then be thread safe.
  /// Throws BudgetExceeded when order() > budget.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t budget = kDefaultEnumerationBudget,
                        unsigned threads = 1) const;

  /// As for_each_element, but the visitor also receives the worker index
  /// (0 .. threads-1) so callers can keep per-worker accumulators.
  void for_each_element_indexed(
      const std::function<void(unsigned, const Permutation&)>& visit,
      std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 1) const;

  std::vector<Permutation> elements(std::uint64_t budget = kDefaultEnumerationBudget) const;

 private:
  void extend_orbit(Level& level) const;

  int degree_ = 0;
  std::vector<Level> levels_;
};

StabilizerChain build_chain(const std::vector<Permutation>& generators);
bool contains(const StabilizerChain& chain, const Permutation& p);

/// A permutation group given by generators, with its chain built eagerly.
/// Immutable and safe to share across threads.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators);

  int degree() const noexcept { return chain_.degree(); }
  std::uint64_t order() const noexcept { return chain_.order(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const noexcept { return chain_; }
  bool contains(const Permutation& p) const { return chain_.contains(p); }
  bool is_transitive() const;
  /// Orbits on {1..degree}, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;

  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t budget = kDefaultEnumerationBudget,
                        unsigned threads = 1) const {
    chain_.for_each_element(visit, budget, threads);
  }
  void for_each_element_indexed(
      const std::function<void(unsigned, const Permutation&)>& visit,
      std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 1) const {
    chain_.for_each_element_indexed(visit, budget, threads);
  }
  std::vector<Permutation> elements(std::uint64_t budget = kDefaultEnumerationBudget) const {
    return chain_.elements(budget);
  }

  /// The group g^-1 H g, generated by the conjugated generators.
  PermGroup conjugate_by(const Permutation& g) const;

 private:
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

}  // namespace covnum
