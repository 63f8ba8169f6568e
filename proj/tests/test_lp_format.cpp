#include <random>
#include <sstream>

#include "covnum/error.hpp"
#include "covnum/lp_format.hpp"
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
  return CoverInstance("lp", static_cast<std::size_t>(universe), std::move(bits));
}

std::string render(const CoverInstance& inst, LpOptions options = {}) {
  std::ostringstream out;
  write_lp(inst, out, options);
  return out.str();
}


}  // namespace

TEST_CASE("minimal instance layout") {
  CHECK(render(make(1, {{0}})) == "Minimize\n + r1\n Subject To\n + r1 > 1\n\\ Variables\nBinary\nr1\nEnd\n");
}

TEST_CASE("small instance layout") {
  const auto inst = make(3, {{0, 1}, {1, 2}});
  CHECK(render(inst) ==
        "Minimize\n + r1 + r2\n Subject To\n + r1 > 1\n + r1 + r2 > 1\n + r2 > 1\n"
        "\\ Variables\nBinary\nr1\nr2\nEnd\n");
  std::ostringstream out;
  CHECK(write_lp(inst, out) == LpStats{3, 2, 4});
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("partition instance has one nonzero per element") {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 6; ++i) blocks.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  CHECK(lp_stats(make(18, blocks)) == LpStats{18, 6, 18});
}

TEST_CASE("round trip recovers the incidence") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto r = oracle::random_instance(rng);
    const auto inst = make(r.universe, r.sets);
    for (std::size_t wrap : {std::size_t{0}, std::size_t{20}}) {
      const auto text = render(inst, {wrap});
      CHECK(text == render(inst, {wrap}));
      const auto p = oracle::parse_lp(text);
      REQUIRE(p.rows.size() == inst.universe_size);
      std::vector<int> all(inst.sets.size());
      for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j + 1);
      CHECK(p.objective == all);
      CHECK(p.binaries == all);
      for (std::size_t e = 0; e < inst.universe_size; ++e) {
        std::vector<int> expected;
        for (std::size_t j = 0; j < inst.sets.size(); ++j) {
          if (inst.sets[j].test(e)) expected.push_back(static_cast<int>(j + 1));
        }
        CHECK(p.rows[e] == expected);
      }
    }
  }
}

TEST_CASE("wrapping keeps lines short") {
  std::vector<std::vector<int>> sets(40, std::vector<int>{0});
  const auto text = render(make(1, sets), {30});
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) CHECK(line.size() <= 34);  // a row may end in " > 1"
}

TEST_CASE("read_solution") {
  std::istringstream a("r1 1\nr2 0\n");
  CHECK(read_solution(a, 2) == std::vector<std::size_t>{0});
  std::istringstream b("# Objective value = 2\nr3 1\nr1 1.0\nr2 -0\n");
  CHECK(read_solution(b, 3) == std::vector<std::size_t>{0, 2});
  std::istringstream bare("r2\nr1\n\n");
  CHECK(read_solution(bare, 2) == std::vector<std::size_t>{0, 1});
  std::istringstream empty("");
  CHECK(read_solution(empty, 4).empty());
  CHECK_FALSE(verify_indices(make(1, {{0}}), {}).covers);

  std::istringstream range("r5 1\n");
  CHECK_THROWS_AS(read_solution(range, 4), ArgumentError);
  std::istringstream zero("r0 1\n");
  CHECK_THROWS_AS(read_solution(zero, 4), ArgumentError);
  for (const char* bad : {"x1 1\n", "r1 0.5\n", "r1 yes\n", "r1 1 1\n", "rr 1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_solution(in, 4), ParseError);
  }
}

TEST_CASE("S9 (3,6) export") {
  const auto info = group_info("S9");
  const PermGroup G(info.generators);
  const auto classes = maximal_classes("S9");
  const auto universe = cyclic_reduce(elements_with_type(info, CycleType::parse("(3,6)", 9)));
  const auto m = build_incidence(universe,
                                 {find_class(classes, "MS3"), find_class(classes, "MS6"), find_class(classes, "MS7")}, G);
  const auto inst = CoverInstance::from_incidence(m, "S9:3,6:MS3,MS6,MS7");
  std::ostringstream out;
  const auto stats = write_lp(inst, out);
  CHECK(stats == LpStats{10080, 1204, 80640});
  CHECK(stats == LpStats{m.row_count(), m.column_count(), m.nonzeros()});
  // MS3 members are the first 84 columns; their indicator covers the instance
  std::string sol;
  for (int j = 1; j <= 1204; ++j) sol += "r" + std::to_string(j) + (j <= 84 ? " 1\n" : " 0\n");
  std::istringstream in(sol);
  const auto chosen = read_solution(in, inst.set_count());
  CHECK(chosen.size() == 84);
  CHECK(verify_indices(inst, chosen).covers);
}
