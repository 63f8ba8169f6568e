#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/catalog.hpp"
#include "covnum/permutation.hpp"
#include "covnum/stabilizer_chain.hpp"

namespace covnum {

/// A conjugacy class of elements: a cycle type in S_n, a conjugation orbit
/// otherwise.
struct ElementClass {
  enum class Kind { cycle_type, orbit };

  std::string group;
  Kind kind = Kind::cycle_type;
  CycleType type;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  Permutation representative;
  /// The cycle type text, with "a", "b", ... appended when several orbits
  /// share a cycle type.
  std::string name;

  bool is_even() const { return type.is_even(); }
};

/// One cyclic subgroup, named by its least generator.
struct CyclicRep {
  Permutation generator;
  std::uint64_t order = 0;
};

/// base^exponent lies in the excluded class and generates a proper subgroup
/// of <base>.
struct PowerWitness {
  std::string excluded;
  Permutation base;
  long long exponent = 0;
};

struct CyclicClassification {
  std::vector<ElementClass> maximal;
  std::vector<ElementClass> excluded;
  std::vector<PowerWitness> witnesses;  // one per excluded class, same order
};

/// n! / prod(m^k k!) with f! for the f fixed points. n <= 20.
std::uint64_t class_size(int n, const CycleType& t);

/// Every cycle type of S_n, identity first.
std::vector<CycleType> all_cycle_types(int n);

/// A fixed element of type t: cycles on consecutive points, shortest first.
Permutation type_representative(int n, const CycleType& t);

/// Each permutation of type t exactly once, generated combinatorially: the
/// least unplaced point opens the next cycle.
void for_each_of_type(int n, const CycleType& t, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<Permutation> elements_of_type(int n, const CycleType& t,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Elements of G with cycle type t: combinatorial for S_n, a filtered
/// enumeration of G otherwise.
std::vector<Permutation> elements_with_type(const GroupInfo& G, const CycleType& t,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

/// {g^x : x in G}, each element once, in breadth-first order.
std::vector<Permutation> conjugation_orbit(const PermGroup& G, const Permutation& g,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// All element classes of a catalog group (not J1). Sorted by element order,
/// cycle type, then least representative.
std::vector<ElementClass> element_classes(std::string_view group,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Splits the classes into those generating maximal cyclic subgroups and the
/// rest, marking every class met as a proper power of a representative.
CyclicClassification classify_cyclic(std::string_view group,
                                     std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<ElementClass> maximal_cyclic_classes(std::string_view group,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Least element (by image sequence) among the generators of <g>.
Permutation canonical_generator(const Permutation& g);

/// One rep per distinct cyclic subgroup, sorted by generator.
std::vector<CyclicRep> cyclic_reduce(const std::vector<Permutation>& elements);

/// Elements of type t in S_{b1} x S_{b2} x ... (blocks of the given sizes),
/// counted by distributing the cycles over the blocks.
std::uint64_t count_in_young_subgroup(const std::vector<int>& block_sizes, const CycleType& t);

}  // namespace covnum
