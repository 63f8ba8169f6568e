#include "covnum/stabilizer_chain.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

#include "covnum/error.hpp"

namespace covnum {

namespace {

bool fixes_all(const Permutation& p, const std::vector<StabilizerChain::Level>& levels) {
  return std::all_of(levels.begin(), levels.end(), [&](const auto& level) {
    return p(level.base_point) == level.base_point;
  });
}

}  // namespace

void StabilizerChain::extend_orbit(Level& level) const {
  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point - 1] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point x = level.orbit[head];
    for (const auto& s : level.generators) {
      const Point y = s(x);
      if (!level.transversal[y - 1]) {
        level.transversal[y - 1] = *level.transversal[x - 1] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

StabilizerChain StabilizerChain::build(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw ArgumentError("build_chain needs at least one generator");
  StabilizerChain chain;
  chain.degree_ = generators.front().degree();
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != chain.degree_) throw ArgumentError("generators of mixed degree");
    if (!g.is_identity()) strong.push_back(g);
  }
  if (strong.empty()) return chain;

  auto& levels = chain.levels_;
  for (const auto& s : strong) {
    if (fixes_all(s, levels)) levels.push_back(Level{s.smallest_moved_point(), {}, {}, {}});
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (const auto& s : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (s(levels[j].base_point) != levels[j].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels[i].generators.push_back(s);
    }
    chain.extend_orbit(levels[i]);
  }

  // Check every Schreier generator of level i sifts through the levels below
  // it; a non-trivial residue becomes a new strong generator and the check
  // restarts at the level where the residue got stuck.
  auto i = static_cast<long>(levels.size()) - 1;
  while (i >= 0) {
    bool complete = true;
    auto& level = levels[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; oi < level.orbit.size() && complete; ++oi) {
      const Point p = level.orbit[oi];
      for (std::size_t si = 0; si < level.generators.size() && complete; ++si) {
        const Permutation& s = level.generators[si];
        const Point q = s(p);
        Permutation h = *level.transversal[p - 1] * s * level.transversal[q - 1]->inverse();
        // sift h through levels i+1 ..
        std::size_t j = static_cast<std::size_t>(i) + 1;
        for (; j < levels.size(); ++j) {
          const Point x = h(levels[j].base_point);
          const auto& u = levels[j].transversal[x - 1];
          if (!u) break;
          h = h * u->inverse();
        }
        if (h.is_identity()) continue;
        if (j == levels.size()) levels.push_back(Level{h.smallest_moved_point(), {}, {}, {}});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels[l].generators.push_back(h);
          chain.extend_orbit(levels[l]);
        }
        i = static_cast<long>(j);
        complete = false;
      }
    }
    if (complete) --i;
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::uint64_t StabilizerChain::order() const noexcept {
  std::uint64_t result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& p) const {
  if (p.degree() != degree_ && !levels_.empty()) {
    throw ArgumentError("sift: degree mismatch");
  }
  Permutation h = p;
  std::size_t passed = 0;
  for (const auto& level : levels_) {
    const Point x = h(level.base_point);
    const auto& u = level.transversal[x - 1];
    if (!u) break;
    h = h * u->inverse();
    ++passed;
  }
  return {std::move(h), passed};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (levels_.empty()) return p.is_identity();
  if (p.degree() != degree_) throw ArgumentError("contains: degree mismatch");
  // Sift without materialising inverses: track the residue as images only.
  std::vector<std::uint16_t> h(p.raw());
  std::vector<std::uint16_t> tmp(h.size());
  for (const auto& level : levels_) {
    const std::size_t b = static_cast<std::size_t>(level.base_point - 1);
    const auto& u = level.transversal[h[b]];
    if (!u) return false;
    // h := h * u^-1. u maps b to h[b]; compose with the inverse via a lookup.
    const auto& ui = u->raw();
    for (std::size_t k = 0; k < ui.size(); ++k) tmp[ui[k]] = static_cast<std::uint16_t>(k);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = tmp[h[k]];
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] != k) return false;
  }
  return true;
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& visit,
                                       std::uint64_t budget, unsigned threads) const {
  for_each_element_indexed([&](unsigned, const Permutation& g) { visit(g); }, budget, threads);
}

void StabilizerChain::for_each_element_indexed(
    const std::function<void(unsigned, const Permutation&)>& visit, std::uint64_t budget,
    unsigned threads) const {
  const std::uint64_t n = order();
  if (n > budget) throw BudgetExceeded("group enumeration", n, budget);
  if (levels_.empty()) {
    visit(0, Permutation::identity(std::max(degree_, 1)));
    return;
  }
  // Every element is u_0^-1 * u_1^-1 * ... * u_{k-1}^-1 for a unique choice of
  // transversal elements, which puts the largest orbit in the outer loop.
  std::vector<std::vector<Permutation>> inv(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (Point x : levels_[l].orbit) inv[l].push_back(levels_[l].transversal[x - 1]->inverse());
  }
  const std::size_t depth = levels_.size();

  auto run = [&](unsigned worker, std::size_t first, std::size_t stride) {
    std::vector<Permutation> partial(depth, Permutation::identity(degree_));
    std::vector<std::size_t> index(depth, 0);
    // iterative odometer over levels 1..depth-1 for each top-level choice
    for (std::size_t top = first; top < inv[0].size(); top += stride) {
      partial[0] = inv[0][top];
      if (depth == 1) {
        visit(worker, partial[0]);
        continue;
      }
      std::size_t l = 1;
      index[1] = 0;
      while (true) {
        Permutation::compose_into(partial[l - 1], inv[l][index[l]], partial[l]);
        if (l + 1 == depth) {
          visit(worker, partial[l]);
          // advance
          while (l >= 1 && ++index[l] == inv[l].size()) --l;
          if (l == 0) break;
        } else {
          ++l;
          index[l] = 0;
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(inv[0].size())));
  if (workers == 1) {
    run(0, 0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, std::size_t{w}, std::size_t{workers});
  for (auto& t : pool) t.join();
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t budget) const {
  std::vector<Permutation> out;
  out.reserve(std::min<std::uint64_t>(order(), budget));
  for_each_element([&](const Permutation& g) { out.push_back(g); }, budget);
  return out;
}

StabilizerChain build_chain(const std::vector<Permutation>& generators) {
  return StabilizerChain::build(generators);
}

bool contains(const StabilizerChain& chain, const Permutation& p) { return chain.contains(p); }

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::vector<Permutation> generators)
    : generators_(std::move(generators)), chain_(StabilizerChain::build(generators_)) {}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  const int n = degree();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Point>> out;
  for (Point start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<Point> orbit{start};
    seen[start - 1] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : generators_) {
        const Point y = g(orbit[head]);
        if (!seen[y - 1]) {
          seen[y - 1] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

PermGroup PermGroup::conjugate_by(const Permutation& g) const {
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const auto& s : generators_) gens.push_back(s.conjugate_by(g));
  return PermGroup(std::move(gens));
}

}  // namespace covnum
