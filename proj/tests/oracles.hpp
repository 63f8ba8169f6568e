// Independent reference computations used only by the tests. Nothing here
// calls into the stabilizer chain or the cover solver.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "covnum/permutation.hpp"

namespace oracle {

using covnum::Permutation;

inline Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Closure of the generators under composition, by breadth-first search.
inline std::unordered_set<Permutation> closure(const std::vector<Permutation>& gens) {
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(gens.front().degree())};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = queue[head] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Minimum set cover by enumerating every subset of sets (sets <= 20).
/// Sets are given as element-index lists. Returns -1 when infeasible.
inline int brute_force_min_cover(int universe, const std::vector<std::vector<int>>& sets) {
  const std::size_t m = sets.size();
  std::vector<std::uint64_t> masks(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (int e : sets[j]) masks[j] |= std::uint64_t{1} << e;
  }
  const std::uint64_t full = universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
  int best = -1;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m); ++choice) {
    const int size = __builtin_popcountll(choice);
    if (best >= 0 && size >= best) continue;
    std::uint64_t covered = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (choice >> j & 1) covered |= masks[j];
    }
    if ((covered & full) == full) best = size;
  }
  return best;
}

/// A random feasible instance: every element is placed in at least one set.
struct RandomInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
};

inline RandomInstance random_instance(std::mt19937_64& rng, int max_sets = 15, int max_elements = 40) {
  RandomInstance r;
  r.universe = std::uniform_int_distribution<int>(1, max_elements)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_sets)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  r.sets.assign(static_cast<std::size_t>(m), {});
  std::bernoulli_distribution pick(density);
  std::uniform_int_distribution<int> any_set(0, m - 1);
  for (int e = 0; e < r.universe; ++e) {
    bool placed = false;
    for (auto& s : r.sets) {
      if (pick(rng)) {
        s.push_back(e);
        placed = true;
      }
    }
    if (!placed) r.sets[static_cast<std::size_t>(any_set(rng))].push_back(e);
  }
  return r;
}

inline void expect(bool ok, const char* what) {
  if (!ok) throw std::runtime_error(what);
}

// Minimal reader for the subset of the format the writer emits. Returns the
// constraint rows as 1-based variable lists and checks the other sections.
struct ParsedLp {
  std::vector<int> objective;
  std::vector<std::vector<int>> rows;
  std::vector<int> binaries;
};

inline std::vector<int> lp_terms(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string plus, var;
  while (in >> plus) {
    expect(plus == "+", "malformed LP text");
    expect(static_cast<bool>(in >> var), "missing variable");
    expect(var[0] == 'r', "malformed LP text");
    out.push_back(std::stoi(var.substr(1)));
  }
  return out;
}

inline ParsedLp parse_lp(const std::string& text) {
  // joining continuation lines: a line starting with " +" extends the previous one
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(" + ", 0) == 0 && !lines.empty() && lines.back().rfind(" + ", 0) == 0 &&
        lines.back().find(" > 1") == std::string::npos && lines.size() > 1) {
      lines.back() += line;
    } else {
      lines.push_back(line);
    }
  }
  ParsedLp p;
  std::size_t i = 0;
  expect(lines.at(i++) == "Minimize", "malformed LP text");
  p.objective = lp_terms(lines.at(i++));
  expect(lines.at(i++) == " Subject To", "malformed LP text");
  while (lines.at(i) != "\\ Variables") {
    const auto& row = lines[i++];
    expect(row.size() > 4, "malformed LP text");
    expect(row.substr(row.size() - 4) == " > 1", "malformed LP text");
    p.rows.push_back(lp_terms(row.substr(0, row.size() - 4)));
  }
  ++i;
  expect(lines.at(i++) == "Binary", "malformed LP text");
  while (lines.at(i) != "End") p.binaries.push_back(std::stoi(lines[i++].substr(1)));
  expect(i + 1 == lines.size(), "malformed LP text");
  return p;
}

}  // namespace oracle
