#include <map>
#include <set>
#include <unordered_set>

#include "covnum/classes.hpp"
#include "covnum/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covnum;

namespace {

CycleType T(const char* text, int n) { return CycleType::parse(text, n); }

std::set<std::string> names(const std::vector<ElementClass>& classes) {
  std::set<std::string> out;
  for (const auto& c : classes) out.insert(c.name);
  return out;
}

}  // namespace

TEST_CASE("class_size") {
  CHECK(class_size(9, T("(3,6)", 9)) == 20160);
  CHECK(class_size(8, T("(2^2,4)", 8)) == 1260);
  CHECK(class_size(12, T("(12)", 12)) == 39916800);
  CHECK(class_size(12, T("(12)", 12)) == 462ull * 86400);
  CHECK(class_size(10, T("(3^2,4)", 10)) == 50400);
  CHECK(class_size(5, T("()", 5)) == 1);
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t total = 0;
    for (const auto& t : all_cycle_types(n)) total += class_size(n, t);
    CHECK(total == oracle::factorial(n));
  }
  CHECK(all_cycle_types(8).size() == 22);
  CHECK(all_cycle_types(12).size() == 77);
}

TEST_CASE("elements_of_type generates each element once") {
  const auto check = [](int n, const char* type) {
    const CycleType t = T(type, n);
    const auto elems = elements_of_type(n, t);
    CHECK(elems.size() == class_size(n, t));
    std::unordered_set<Permutation> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == elems.size());
    for (std::size_t i = 0; i < elems.size(); i += 97) CHECK(elems[i].cycle_type() == t);
  };
  check(9, "(3,6)");
  check(10, "(3^2,4)");
  check(4, "(2^2)");
  check(6, "(1)");
  CHECK(elements_of_type(9, T("(3,6)", 9)).size() == 20160);
  CHECK(elements_of_type(10, T("(3^2,4)", 10)).size() == 50400);
  CHECK(elements_of_type(4, T("(2^2)", 4)).size() == 3);
  CHECK_THROWS_AS(elements_of_type(12, T("(12)", 12), 1000), BudgetExceeded);
}

TEST_CASE("every element of S_n has exactly one generated type") {
  // S6 exhaustively: generating all types covers the group once
  std::unordered_set<Permutation> all;
  std::size_t total = 0;
  for (const auto& t : all_cycle_types(6)) {
    for (const auto& g : elements_of_type(6, t)) {
      all.insert(g);
      ++total;
    }
  }
  CHECK(total == 720);
  CHECK(all.size() == 720);
}

TEST_CASE("type_representative") {
  for (const auto& t : all_cycle_types(9)) CHECK(type_representative(9, t).cycle_type() == t);
}

TEST_CASE("conjugation_orbit") {
  const auto info = group_info("M12");
  const PermGroup G(info.generators);
  Permutation six, eleven;
  for (const auto& g : G.elements()) {
    if (six.degree() == 0 && g.cycle_type() == T("(6,6)", 12)) six = g;
    if (eleven.degree() == 0 && g.cycle_type() == T("(11)", 12)) eleven = g;
  }
  CHECK(conjugation_orbit(G, six).size() == 7920);
  CHECK(conjugation_orbit(G, eleven).size() == 8640);
  const auto id = conjugation_orbit(G, Permutation::identity(12));
  CHECK(id.size() == 1);
  CHECK_THROWS_AS(conjugation_orbit(G, six, 100), BudgetExceeded);
}

TEST_CASE("M12 element classes") {
  const auto classes = element_classes("M12");
  CHECK(classes.size() == 15);
  std::uint64_t total = 0;
  std::uint64_t elevens = 0;
  int eleven_orbits = 0;
  for (const auto& c : classes) {
    total += c.size;
    if (c.type == T("(11)", 12)) {
      elevens += c.size;
      ++eleven_orbits;
    }
  }
  CHECK(total == 95040);
  CHECK(eleven_orbits == 2);
  CHECK(elevens == 17280);
}

TEST_CASE("maximal_cyclic_classes of S8") {
  const auto result = classify_cyclic("S8");
  CHECK(names(result.maximal) == std::set<std::string>{"(2^2,4)", "(2,3)", "(2,3^2)", "(6)", "(8)", "(2,5)",
                                                        "(3,4)", "(2,4)", "(2,6)", "(7)", "(3,5)"});
  // every excluded class carries a valid witness
  REQUIRE(result.excluded.size() == result.witnesses.size());
  for (std::size_t i = 0; i < result.excluded.size(); ++i) {
    const auto& w = result.witnesses[i];
    const auto& c = result.excluded[i];
    const Permutation h = w.base.pow(w.exponent);
    CHECK(h.cycle_type() == c.type);
    CHECK(w.base.order() > c.element_order);
  }
  CHECK(names(result.excluded).count("(3)") == 1);
  CHECK(Permutation::parse("(1,2,3)(4,5,6,7,8)", 8).pow(5).cycle_type().to_string() == "(3)");
}

TEST_CASE("maximal_cyclic_classes of S9 and S10 contain the inventory rows") {
  const auto s9 = names(maximal_cyclic_classes("S9"));
  for (const char* row : {"(2^2,4)", "(2,3)", "(2,3^2)", "(6)", "(2^3,3)", "(3,6)", "(8)", "(2,5)", "(3,4)",
                          "(2,7)", "(4,5)", "(9)"}) {
    CHECK(s9.count(row) == 1);
  }
  const auto s10 = names(maximal_cyclic_classes("S10"));
  for (const char* row : {"(2^2,4)", "(2,4^2)", "(2^3,3)", "(2,3^2)", "(2^2,6)", "(3,6)", "(8)", "(10)",
                          "(3^2,4)", "(2,7)", "(4,5)", "(2,3,5)", "(2,6)", "(2,8)", "(9)", "(4,6)",
                          "(2,3,4)", "(3,7)"}) {
    CHECK(s10.count(row) == 1);
  }
  // (6) and (3,4) also generate maximal cyclic subgroups of S10
  CHECK(s10.count("(6)") == 1);
  CHECK(s10.count("(3,4)") == 1);
  CHECK(s10.size() == 20);
}

TEST_CASE("maximal_cyclic_classes of M12") {
  const auto maximal = maximal_cyclic_classes("M12");
  std::set<std::string> types;
  for (const auto& c : maximal) types.insert(c.type.to_string());
  CHECK(types == std::set<std::string>{"(2,3,6)", "(6^2)", "(2,8)", "(4,8)", "(2,10)", "(11)"});
  CHECK(maximal.size() == 7);  // the 11-cycles split into two orbits
}

TEST_CASE("cyclic_reduce") {
  const auto reps = cyclic_reduce(elements_of_type(9, T("(3,6)", 9)));
  CHECK(reps.size() == 10080);
  for (const auto& r : reps) CHECK(canonical_generator(r.generator) == r.generator);

  const auto one = cyclic_reduce({Permutation::parse("(1,2,3,4,5)", 5)});
  CHECK(one.size() == 1);
  CHECK(one[0].order == 5);
  // the 4 generators of a 5-cycle group reduce to the same rep
  const Permutation c = Permutation::parse("(1,2,3,4,5)", 5);
  CHECK(cyclic_reduce({c, c.pow(2), c.pow(3), c.pow(4)}).size() == 1);
}

TEST_CASE("cyclic_reduce on M12 (6,6)") {
  const auto info = group_info("M12");
  const auto elems = elements_with_type(info, T("(6,6)", 12));
  CHECK(elems.size() == 7920);
  const auto reps = cyclic_reduce(elems);
  CHECK(reps.size() == 3960);
  // count * generators of matching type per cyclic group = class size
  CHECK(reps.size() * 2 == elems.size());
}

TEST_CASE("count_in_young_subgroup matches enumeration") {
  const std::vector<std::vector<int>> shapes{{3, 5}, {2, 6}, {4, 4}, {1, 7}, {2, 3, 3}};
  for (const auto& shape : shapes) {
    std::vector<std::vector<Point>> blocks;
    Point next = 1;
    for (int b : shape) {
      std::vector<Point> block;
      for (int i = 0; i < b; ++i) block.push_back(next++);
      blocks.push_back(block);
    }
    std::map<CycleType, std::uint64_t> counted;
    build_chain(young_subgroup(8, blocks)).for_each_element([&](const Permutation& g) { ++counted[g.cycle_type()]; });
    for (const auto& t : all_cycle_types(8)) {
      INFO(t.to_string());
      const auto it = counted.find(t);
      CHECK(count_in_young_subgroup(shape, t) == (it == counted.end() ? 0 : it->second));
    }
  }
  CHECK(count_in_young_subgroup({11, 1}, T("(4,7)", 12)) == class_size(11, T("(4,7)", 11)));
}

