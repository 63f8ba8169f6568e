#include <random>
#include <sstream>

#include "covnum/cover.hpp"
#include "covnum/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covnum;

namespace {

CoverInstance make(int universe, const std::vector<std::vector<int>>& sets) {
  std::vector<Bitset> bits;
  for (const auto& s : sets) {
    Bitset b(static_cast<std::size_t>(universe));
    for (int e : s) b.set(static_cast<std::size_t>(e));
    bits.push_back(std::move(b));
  }
  return CoverInstance("test", static_cast<std::size_t>(universe), std::move(bits));
}

/// m blocks of size b.
CoverInstance partition_instance(int m, int b) {
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < m; ++i) {
    std::vector<int> s;
    for (int j = 0; j < b; ++j) s.push_back(i * b + j);
    sets.push_back(s);
  }
  return make(m * b, sets);
}

}  // namespace

TEST_CASE("bitset") {
  Bitset a(130);
  a.set(0);
  a.set(64);
  a.set(129);
  CHECK(a.count() == 3);
  CHECK(a.indices() == std::vector<std::size_t>{0, 64, 129});
  CHECK(a.next(1) == 64);
  CHECK(a.next(130) == 130);
  Bitset b(130);
  b.set_all();
  CHECK(b.count() == 130);
  CHECK(a.is_subset_of(b));
  CHECK(a.count_and_not(b) == 0);
  b.and_not(a);
  CHECK_FALSE(a.intersects(b));
  CHECK(b.count() == 127);
}

TEST_CASE("instances must be feasible") {
  CHECK_THROWS_AS(make(3, {{0}, {1}}), ArgumentError);
  CHECK_NOTHROW(make(3, {{0, 2}, {1}}));
}

TEST_CASE("reduce") {
  SUBCASE("unique cover forces a set") {
    const auto r = reduce(make(4, {{0, 1}, {1, 2, 3}, {2, 3}}));
    // set 0 alone covers element 0; then {2,3} is dominated and set 1 is forced
    CHECK(r.forced == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced.universe_size == 0);
  }
  SUBCASE("duplicates collapse to the lower index") {
    const auto r = reduce(make(4, {{0, 1}, {2, 3}, {0, 1}, {0, 2}, {1, 3}}));
    for (std::size_t s : r.set_origin) CHECK(s != 2);
  }
  SUBCASE("idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
      const auto inst = oracle::random_instance(rng);
      const auto once = reduce(make(inst.universe, inst.sets));
      const auto twice = reduce(once.reduced);
      CHECK(twice.forced.empty());
      CHECK(twice.reduced.set_count() == once.reduced.set_count());
      CHECK(twice.reduced.universe_size == once.reduced.universe_size);
    }
  }
}

TEST_CASE("greedy") {
  CHECK(greedy(partition_instance(7, 3)).size() == 7);
  CHECK(greedy(make(5, {{0, 1, 2, 3, 4}, {0}, {1, 2}})).size() == 1);
  // redundancy pass: a greedy pick made redundant later is dropped
  const auto sol = greedy(make(6, {{0, 1, 2, 3}, {0, 1, 4}, {2, 3, 5}}));
  CHECK(sol.size() == 2);
  CHECK(verify_indices(make(6, {{0, 1, 2, 3}, {0, 1, 4}, {2, 3, 5}}), sol.chosen).covers);
}

TEST_CASE("bounds") {
  const auto p = partition_instance(5, 4);
  CHECK(counting_lower_bound(p) == 5);
  CHECK(fractional_lower_bound(p) == Rational{5, 1});
  const auto single = make(6, {{0, 1, 2, 3, 4, 5}, {0, 1}});
  CHECK(fractional_lower_bound(single) == Rational{1, 1});
  // triangle: three pairs on three elements, LP optimum 3/2
  const auto tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(fractional_lower_bound(tri).ceil() == 2);
  CHECK(Rational::make(10, 4).to_string() == "5/2");
}

TEST_CASE("solve_exact agrees with the subset-enumeration oracle") {
  std::mt19937_64 rng(20240607);
  for (int i = 0; i < 200; ++i) {
    const auto inst = oracle::random_instance(rng);
    const int expected = oracle::brute_force_min_cover(inst.universe, inst.sets);
    const auto instance = make(inst.universe, inst.sets);
    const auto sol = solve_exact(instance);
    INFO("instance " << i);
    CHECK(sol.status == SolveStatus::optimal);
    CHECK(static_cast<int>(sol.size()) == expected);
    CHECK(verify_indices(instance, sol.chosen).covers);
    CHECK(verify_indices(instance, greedy(instance).chosen).covers);
    CHECK(counting_lower_bound(instance) <= sol.size());
    CHECK(fractional_lower_bound(instance).ceil() <= sol.size());
    // reduction keeps the optimum
    const auto r = reduce(instance);
    const int reduced = r.reduced.universe_size == 0 ? 0 : static_cast<int>(solve_exact(r.reduced).size());
    CHECK(reduced + static_cast<int>(r.forced.size()) == expected);
    // adding a set never raises the optimum
    auto more = inst.sets;
    more.push_back({0});
    CHECK(oracle::brute_force_min_cover(inst.universe, more) <= expected);
  }
}

TEST_CASE("vertex-cover instances") {
  // 5-cycle: every element (edge) is in exactly two sets (vertices); optimum 3
  const auto c5 = make(5, {{0, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto sol = solve_exact(c5);
  CHECK(sol.status == SolveStatus::optimal);
  CHECK(sol.size() == 3);
}

TEST_CASE("budget exhaustion reports bounds") {
  std::mt19937_64 rng(3);
  std::vector<std::vector<int>> sets(60);
  for (int e = 0; e < 300; ++e) {
    for (int k = 0; k < 3; ++k) sets[std::uniform_int_distribution<int>(0, 59)(rng)].push_back(e);
  }
  const auto instance = make(300, sets);
  const auto sol = solve_exact(instance, SolveBudget{5, 10.0});
  CHECK(verify_indices(instance, sol.chosen).covers);
  CHECK(sol.lower_bound <= sol.upper_bound);
  CHECK(sol.upper_bound == sol.size());
}

TEST_CASE("maximum_independent_set") {
  // Petersen graph, independence number 4
  std::vector<Bitset> adj(10, Bitset(10));
  const auto edge = [&](int a, int b) {
    adj[a].set(b);
    adj[b].set(a);
  };
  for (int i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(i, i + 5);
    edge(5 + i, 5 + (i + 2) % 5);
  }
  const auto mis = maximum_independent_set(adj);
  CHECK(mis.proven);
  CHECK(mis.vertices.size() == 4);
  for (auto a : mis.vertices) {
    for (auto b : mis.vertices) CHECK_FALSE(adj[a].test(b));
  }
}

TEST_CASE("verify_cover and certificates") {
  const auto p = partition_instance(3, 2);
  CHECK(verify_cover(p, {"r1", "r2", "r3"}).covers);
  const auto miss = verify_cover(p, {"r1", "r3"});
  CHECK_FALSE(miss.covers);
  CHECK(*miss.uncovered == 2);
  CHECK_THROWS_AS(verify_cover(p, {"r9"}), ArgumentError);
  std::istringstream text("# chosen\nr1\n\n  r2 \n");
  CHECK(read_certificate(text) == std::vector<std::string>{"r1", "r2"});
  std::istringstream bad("r1 r2\n");
  CHECK_THROWS_AS(read_certificate(bad), ParseError);
}

TEST_CASE("S9 (3,6) instance bounds") {
  const auto info = group_info("S9");
  const PermGroup G(info.generators);
  const auto classes = maximal_classes("S9");
  const auto universe = cyclic_reduce(elements_with_type(info, CycleType::parse("(3,6)", 9)));
  const auto m = build_incidence(universe,
                                 {find_class(classes, "MS3"), find_class(classes, "MS6"), find_class(classes, "MS7")}, G);
  const auto inst = CoverInstance::from_incidence(m, "S9:3,6:MS3,MS6,MS7");
  CHECK(counting_lower_bound(inst) == 70);
  CHECK(fractional_lower_bound(inst).ceil() >= 70);
  const auto r = reduce(inst);
  CHECK(r.forced.empty());
  const auto g = greedy(inst);
  CHECK(g.size() >= 84);
  CHECK(verify_indices(inst, g.chosen).covers);
  // the 84 MS3 members partition the universe
  std::vector<std::string> ms3;
  for (int i = 1; i <= 84; ++i) ms3.push_back("MS3#" + std::to_string(i));
  CHECK(verify_cover(inst, ms3).covers);
  ms3.pop_back();
  CHECK_FALSE(verify_cover(inst, ms3).covers);
}

TEST_CASE("local_search matches the oracle on small instances") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto inst = oracle::random_instance(rng);
    const auto instance = make(inst.universe, inst.sets);
    const auto sol = local_search(instance, 20000, 1);
    INFO("instance " << i);
    CHECK(verify_indices(instance, sol.chosen).covers);
    CHECK(static_cast<int>(sol.size()) == oracle::brute_force_min_cover(inst.universe, inst.sets));
  }
  // same seed, same answer
  const auto p = partition_instance(6, 3);
  CHECK(local_search(p, 500, 9).chosen == local_search(p, 500, 9).chosen);
}

TEST_CASE("pair_block_search") {
  // triangle edges; sets 0-2 are the vertices, set 3 holds every edge
  const auto tri = make(3, {{0, 2}, {0, 1}, {1, 2}, {0, 1, 2}});
  const auto sol = pair_block_search(tri, {0, 1, 2}, 2000, 1);
  CHECK(sol.size() == 1);
  CHECK(sol.chosen == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(pair_block_search(tri, {0, 1}, 10, 1), ArgumentError);

  // random graphs with extra sets: always a cover, never below the optimum
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const int vertices = 6;
    std::vector<std::vector<int>> sets(vertices);
    int edges = 0;
    for (int a = 0; a < vertices; ++a) {
      for (int b = a + 1; b < vertices; ++b) {
        if (rng() % 2) continue;
        sets[a].push_back(edges);
        sets[b].push_back(edges);
        ++edges;
      }
    }
    if (edges == 0) continue;
    for (int extra = 0; extra < 4; ++extra) {
      std::vector<int> s;
      for (int e = 0; e < edges; ++e) {
        if (rng() % 3 == 0) s.push_back(e);
      }
      if (!s.empty()) sets.push_back(s);
    }
    const auto instance = make(edges, sets);
    const auto found = pair_block_search(instance, {0, 1, 2, 3, 4, 5}, 3000, 2);
    INFO("instance " << i);
    CHECK(verify_indices(instance, found.chosen).covers);
    CHECK(static_cast<int>(found.size()) >= oracle::brute_force_min_cover(edges, sets));
    CHECK(found.chosen == pair_block_search(instance, {0, 1, 2, 3, 4, 5}, 3000, 2).chosen);
  }
}

TEST_CASE("class_cover") {
  std::vector<Bitset> sets(4, Bitset(4));
  for (int e : {0, 1, 2, 3}) sets[0].set(e);  // A#1 alone covers
  sets[1].set(0);
  sets[2].set(1);
  sets[2].set(2);
  sets[3].set(3);
  const CoverInstance inst("t", 4, sets, {"A#1", "B#1", "B#2", "B#3"});
  CHECK(class_cover(inst) == std::vector<std::size_t>{0});
  const CoverInstance none("t", 4, {sets[1], sets[2], sets[3]}, {"A#1", "B#1", "B#2"});
  CHECK(class_cover(none).empty());
  const CoverInstance unlabelled("t", 4, sets);
  CHECK(class_cover(unlabelled).empty());
}
