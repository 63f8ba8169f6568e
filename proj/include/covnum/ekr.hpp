#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covnum/cover.hpp"
#include "covnum/permutation.hpp"

namespace covnum::ekr {

/// Points here are 0..9; permutations act on 1..10. Every crossing goes
/// through this function.
constexpr Point to_point(int p) { return p + 1; }

constexpr int kPoints = 10;

struct Triple {
  std::array<int, 3> k{};  // ascending

  static Triple make(int a, int b, int c);  // any order; throws ArgumentError on repeats
  bool contains(int p) const { return k[0] == p || k[1] == p || k[2] == p; }
  bool disjoint(const Triple& other) const;
  /// The 3-cycle (k1,k2,k3) in S10.
  Permutation cycle() const;
  std::string to_string() const;  // "(0,1,2)"
  auto operator<=>(const Triple&) const = default;
};

struct DisjointPair {
  std::size_t first = 0;   // index into U
  std::size_t second = 0;  // index into U, first < second
};

struct Universe {
  std::vector<Triple> U;       // lexicographic
  std::vector<DisjointPair> V; // lexicographic in (first, second)

  std::size_t index_of(const Triple& t) const;
};

/// |U| = 120, |V| = 2100.
Universe build_universe();

struct IntersectingFamily {
  std::vector<std::size_t> members;  // indices into the subset list
  bool proven = false;
  /// The point shared by all members, when there is one.
  std::optional<int> star_point;
};

/// Largest pairwise intersecting subfamily of `subsets`, found as a maximum
/// independent set of the disjointness graph.
IntersectingFamily max_intersecting_family(const std::vector<std::vector<int>>& subsets);
IntersectingFamily max_intersecting_family(const Universe& universe);

/// All k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// V as elements, one set per triple holding the pairs it belongs to.
CoverInstance triple_cover_instance(const Universe& universe);

struct TripleCover {
  std::vector<std::size_t> chosen;  // W, indices into U
  bool covers = false;
  bool complement_intersecting = false;
  std::optional<int> complement_star;
  /// Independent check by the general solver on the same instance.
  CoverSolution solver;
};

/// W = U minus a maximum intersecting family.
TripleCover min_cover_by_triples(const Universe& universe);

struct TClass {
  DisjointPair pair;
  std::vector<Permutation> members;  // sorted
};

/// The order-12 elements of <t c> for t in {u u', u^-1 u'} and c one of the
/// three 4-cycles (j1,j2,j3,j4), (j1,j3,j2,j4), (j1,j2,j4,j3) on the other
/// four points. Throws ArgumentError when the triples meet.
TClass t_class(const Universe& universe, const DisjointPair& pair);
TClass t_class(const Triple& u, const Triple& v);

struct PartitionReport {
  std::size_t classes = 0;
  std::uint64_t total = 0;           // sum of class sizes
  std::uint64_t distinct = 0;        // size of the union
  std::uint64_t type_class_size = 0; // elements of type (3^2,4) in S10
  bool all_of_type = false;
  bool all_size_24 = false;

  bool ok() const { return all_of_type && all_size_24 && total == distinct && distinct == type_class_size; }
};

PartitionReport tclass_partition(const Universe& universe, unsigned threads = 1);

struct Ms3Report {
  std::uint64_t per_subgroup = 0;    // (3^2,4) elements in the representative
  std::uint64_t subgroups = 0;
  std::uint64_t elements = 0;
  std::uint64_t k = 0;
  std::string cell;                  // rendered inventory cell
  /// Every element of T(u,u') lies in H(w) exactly for w in {u,u'}, tested
  /// through the representative's stabilizer chain.
  bool incidence_matches = false;
  std::uint64_t membership_tests = 0;
};

Ms3Report ms3_restriction_check(const Universe& universe, unsigned threads = 1);

}  // namespace covnum::ekr
