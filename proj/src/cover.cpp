#include "covnum/cover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "covnum/error.hpp"

namespace covnum {

// ------------------------------------------------------------------ instance

CoverInstance::CoverInstance(std::string name_, std::size_t universe_size_, std::vector<Bitset> sets_,
                             std::vector<std::string> labels_)
    : name(std::move(name_)), universe_size(universe_size_), sets(std::move(sets_)), labels(std::move(labels_)) {
  if (labels.empty()) {
    for (std::size_t j = 0; j < sets.size(); ++j) labels.push_back("r" + std::to_string(j + 1));
  }
  if (labels.size() != sets.size()) throw ArgumentError("one label per set required");
  Bitset covered(universe_size);
  for (const auto& s : sets) {
    if (s.size() != universe_size) throw ArgumentError("set size differs from the universe size");
    covered |= s;
  }
  if (!covered.all()) {
    Bitset missing(universe_size);
    missing.set_all();
    missing.and_not(covered);
    throw ArgumentError("infeasible instance " + name + ": element " + std::to_string(missing.first()) +
                        " lies in no set");
  }
}

CoverInstance CoverInstance::from_incidence(const IncidenceMatrix& m, std::string name) {
  CoverInstance inst(std::move(name), m.row_count(), m.column_bits, m.column_labels);
  std::map<CycleType, Bitset> groups;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    auto [it, fresh] = groups.try_emplace(m.rows[i].generator.cycle_type(), Bitset(m.row_count()));
    it->second.set(i);
  }
  if (groups.size() > 1) {
    for (auto& [t, bits] : groups) inst.element_groups.push_back(std::move(bits));
  }
  return inst;
}

std::vector<Bitset> CoverInstance::element_sets() const {
  std::vector<Bitset> out(universe_size, Bitset(sets.size()));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (std::size_t e = sets[j].first(); e < universe_size; e = sets[j].next(e + 1)) out[e].set(j);
  }
  return out;
}

std::uint64_t CoverInstance::nonzeros() const {
  std::uint64_t n = 0;
  for (const auto& s : sets) n += s.count();
  return n;
}

std::size_t CoverInstance::index_of(std::string_view label) const {
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] == label) return j;
  }
  throw ArgumentError("unknown set label '" + std::string(label) + "' in " + name);
}

std::string to_string(SolveStatus s) {
  return s == SolveStatus::optimal ? "optimal" : "feasible-with-bounds";
}

// ----------------------------------------------------------------- reduction

Reduction reduce(const CoverInstance& instance) {
  const std::size_t n = instance.universe_size;
  const std::size_t m = instance.sets.size();
  const auto elem_sets = instance.element_sets();
  Bitset alive_elements(n);
  alive_elements.set_all();
  Bitset alive_sets(m);
  alive_sets.set_all();
  std::vector<std::size_t> forced;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = alive_elements.first(); e < n; e = alive_elements.next(e + 1)) {
      Bitset cand = elem_sets[e];
      cand &= alive_sets;
      if (cand.count() != 1) continue;
      const std::size_t s = cand.first();
      forced.push_back(s);
      alive_elements.and_not(instance.sets[s]);
      alive_sets.reset(s);
      changed = true;
    }
    std::vector<Bitset> restricted(m);
    for (std::size_t s = alive_sets.first(); s < m; s = alive_sets.next(s + 1)) {
      restricted[s] = instance.sets[s];
      restricted[s] &= alive_elements;
      if (restricted[s].none()) {
        alive_sets.reset(s);
        changed = true;
      }
    }
    for (std::size_t s = alive_sets.first(); s < m; s = alive_sets.next(s + 1)) {
      for (std::size_t t = alive_sets.first(); t < m; t = alive_sets.next(t + 1)) {
        if (t == s || !restricted[s].is_subset_of(restricted[t])) continue;
        if (t > s && restricted[s] == restricted[t]) continue;  // the lower index survives
        alive_sets.reset(s);
        changed = true;
        break;
      }
    }
  }

  Reduction r;
  std::sort(forced.begin(), forced.end());
  r.forced = forced;
  r.element_origin = alive_elements.indices();
  r.set_origin = alive_sets.indices();
  std::vector<Bitset> sets;
  std::vector<std::string> labels;
  for (std::size_t s : r.set_origin) {
    Bitset b(r.element_origin.size());
    for (std::size_t i = 0; i < r.element_origin.size(); ++i) {
      if (instance.sets[s].test(r.element_origin[i])) b.set(i);
    }
    sets.push_back(std::move(b));
    labels.push_back(instance.labels[s]);
  }
  r.reduced = CoverInstance(instance.name, r.element_origin.size(), std::move(sets), std::move(labels));
  return r;
}

// -------------------------------------------------------------------- greedy

namespace {

void drop_redundant(const CoverInstance& instance, std::vector<std::size_t>& chosen) {
  std::vector<int> hits(instance.universe_size, 0);
  for (std::size_t s : chosen) {
    const auto& b = instance.sets[s];
    for (std::size_t e = b.first(); e < b.size(); e = b.next(e + 1)) ++hits[e];
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t i = chosen.size(); i-- > 0;) {
    const auto& b = instance.sets[chosen[i]];
    bool redundant = true;
    for (std::size_t e = b.first(); e < b.size() && redundant; e = b.next(e + 1)) redundant = hits[e] >= 2;
    if (!redundant) continue;
    for (std::size_t e = b.first(); e < b.size(); e = b.next(e + 1)) --hits[e];
    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

}  // namespace

CoverSolution greedy(const CoverInstance& instance) {
  const auto start = std::chrono::steady_clock::now();
  Bitset uncovered(instance.universe_size);
  uncovered.set_all();
  std::vector<std::size_t> chosen;
  while (!uncovered.none()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t s = 0; s < instance.sets.size(); ++s) {
      const std::size_t gain = instance.sets[s].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best_gain == 0) throw ArgumentError("infeasible instance " + instance.name);
    chosen.push_back(best);
    uncovered.and_not(instance.sets[best]);
  }
  drop_redundant(instance, chosen);
  CoverSolution sol;
  sol.chosen = std::move(chosen);
  sol.upper_bound = sol.chosen.size();
  sol.lower_bound = counting_lower_bound(instance);
  sol.status = sol.lower_bound == sol.upper_bound ? SolveStatus::optimal : SolveStatus::feasible_with_bounds;
  sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

std::vector<std::size_t> class_cover(const CoverInstance& instance) {
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t j = 0; j < instance.labels.size(); ++j) {
    const auto& l = instance.labels[j];
    const auto hash = l.find('#');
    if (hash != std::string::npos) classes[l.substr(0, hash)].push_back(j);
  }
  std::vector<std::size_t> best;
  for (auto& [label, members] : classes) {
    if (!verify_indices(instance, members).covers) continue;
    drop_redundant(instance, members);
    if (best.empty() || members.size() < best.size()) best = members;
  }
  return best;
}

// -------------------------------------------------------------- local search

namespace {

class WeightedSearch {
 public:
  explicit WeightedSearch(const CoverInstance& in) : n_(in.universe_size), m_(in.sets.size()) {
    members_.resize(m_);
    owners_.resize(n_);
    for (std::size_t s = 0; s < m_; ++s) {
      const auto& b = in.sets[s];
      for (std::size_t e = b.first(); e < n_; e = b.next(e + 1)) {
        members_[s].push_back(static_cast<std::uint32_t>(e));
        owners_[e].push_back(static_cast<std::uint32_t>(s));
      }
    }
    weight_.assign(n_, 1);
    count_.assign(n_, 0);
    score_.assign(m_, 0);
    stamp_.assign(m_, 0);
    allowed_.assign(m_, 1);
    chosen_.assign(m_, 0);
    open_pos_.assign(n_, SIZE_MAX);
    for (std::size_t e = 0; e < n_; ++e) open_insert(e);
    for (std::size_t s = 0; s < m_; ++s) score_[s] = static_cast<std::int64_t>(members_[s].size());
  }

  std::vector<std::size_t> run(const std::vector<std::size_t>& start, std::uint64_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t s : start) add(s);
    std::vector<std::size_t> best = current();
    std::size_t last_added = SIZE_MAX;
    for (std::uint64_t step = 1; step <= steps; ++step) {
      while (open_.empty()) {
        if (size_ < best.size()) best = current();
        const std::size_t s = pick_removal(SIZE_MAX);
        if (s == SIZE_MAX) return best;
        remove(s);
        stamp_[s] = step;
      }
      const std::size_t out = pick_removal(last_added);
      if (out != SIZE_MAX) {
        remove(out);
        stamp_[out] = step;
      }
      const std::size_t e = open_[std::uniform_int_distribution<std::size_t>(0, open_.size() - 1)(rng)];
      std::size_t in = SIZE_MAX;
      for (auto t : owners_[e]) {
        if (!allowed_[t]) continue;
        if (in == SIZE_MAX || better(t, in)) in = t;
      }
      if (in == SIZE_MAX) in = owners_[e].front();
      add(in);
      stamp_[in] = step;
      last_added = in;
      for (std::size_t u : open_) {
        ++weight_[u];
        for (auto t : owners_[u]) ++score_[t];
      }
    }
    if (open_.empty() && size_ < best.size()) best = current();
    return best;
  }

 private:
  bool better(std::size_t a, std::size_t b) const {
    if (score_[a] != score_[b]) return score_[a] > score_[b];
    return stamp_[a] < stamp_[b];
  }

  std::size_t pick_removal(std::size_t tabu) const {
    std::size_t pick = SIZE_MAX;
    for (std::size_t s : in_solution_) {
      if (s == tabu) continue;
      if (pick == SIZE_MAX || better(s, pick)) pick = s;
    }
    return pick;
  }

  std::vector<std::size_t> current() const {
    std::vector<std::size_t> out(in_solution_.begin(), in_solution_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  void open_insert(std::size_t e) {
    open_pos_[e] = open_.size();
    open_.push_back(e);
  }
  void open_erase(std::size_t e) {
    const std::size_t pos = open_pos_[e];
    open_[pos] = open_.back();
    open_pos_[open_[pos]] = pos;
    open_.pop_back();
    open_pos_[e] = SIZE_MAX;
  }

  std::size_t sole_owner(std::size_t e, std::size_t skip) const {
    for (auto t : owners_[e]) {
      if (chosen_[t] && t != skip) return t;
    }
    return SIZE_MAX;
  }

  void touch_neighbours(std::size_t s) {
    for (auto e : members_[s]) {
      for (auto t : owners_[e]) allowed_[t] = 1;
    }
  }

  void add(std::size_t s) {
    std::int64_t loss = 0;
    for (auto e : members_[s]) {
      if (count_[e] == 0) {
        for (auto t : owners_[e]) {
          if (t != s) score_[t] -= weight_[e];
        }
        open_erase(e);
        loss += weight_[e];
      } else if (count_[e] == 1) {
        score_[sole_owner(e, s)] += weight_[e];
      }
      ++count_[e];
    }
    score_[s] = -loss;
    chosen_[s] = 1;
    in_solution_.push_back(s);
    ++size_;
    touch_neighbours(s);
  }

  void remove(std::size_t s) {
    chosen_[s] = 0;
    in_solution_.erase(std::find(in_solution_.begin(), in_solution_.end(), s));
    --size_;
    std::int64_t gain = 0;
    for (auto e : members_[s]) {
      --count_[e];
      if (count_[e] == 0) {
        for (auto t : owners_[e]) {
          if (t != s) score_[t] += weight_[e];
        }
        open_insert(e);
        gain += weight_[e];
      } else if (count_[e] == 1) {
        score_[sole_owner(e, s)] -= weight_[e];
      }
    }
    score_[s] = gain;
    touch_neighbours(s);
    allowed_[s] = 0;
  }

  std::size_t n_, m_;
  std::vector<std::vector<std::uint32_t>> members_, owners_;
  std::vector<std::int64_t> weight_, score_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint64_t> stamp_;
  std::vector<char> allowed_, chosen_;
  std::vector<std::size_t> in_solution_;
  std::size_t size_ = 0;
  std::vector<std::size_t> open_, open_pos_;
};

}  // namespace

CoverSolution local_search(const CoverInstance& instance, std::uint64_t steps, std::uint64_t seed,
                           const std::vector<std::size_t>* start) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> initial = start ? *start : greedy(instance).chosen;
  if (!verify_indices(instance, initial).covers) throw ArgumentError("local search needs a covering start");
  WeightedSearch search(instance);
  CoverSolution sol;
  sol.chosen = search.run(initial, steps, seed);
  drop_redundant(instance, sol.chosen);
  sol.upper_bound = sol.chosen.size();
  sol.lower_bound = counting_lower_bound(instance);
  sol.status = sol.lower_bound == sol.upper_bound ? SolveStatus::optimal : SolveStatus::feasible_with_bounds;
  sol.nodes = steps;
  sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

// --------------------------------------------------------- pair block search

namespace {

class PairBlockSearch {
 public:
  PairBlockSearch(const CoverInstance& in, const std::vector<std::size_t>& block)
      : block_(block), members_(in.sets.size()), owners_(in.universe_size) {
    std::vector<std::size_t> position(in.sets.size(), SIZE_MAX);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] >= in.sets.size() || position[block[i]] != SIZE_MAX) {
        throw ArgumentError("pair block search: bad block index");
      }
      position[block[i]] = i;
    }
    adjacency_.resize(block.size());
    const auto element_sets = in.element_sets();
    for (std::size_t e = 0; e < in.universe_size; ++e) {
      std::vector<std::size_t> ends;
      const auto& b = element_sets[e];
      for (std::size_t s = b.first(); s < b.size(); s = b.next(s + 1)) {
        if (position[s] != SIZE_MAX) {
          ends.push_back(position[s]);
        } else {
          owners_[e].push_back(static_cast<std::uint32_t>(s));
          members_[s].push_back(static_cast<std::uint32_t>(e));
        }
      }
      if (ends.size() != 2) throw ArgumentError("pair block search: an element does not meet the block twice");
      adjacency_[ends[0]].push_back({ends[1], e});
      adjacency_[ends[1]].push_back({ends[0], e});
    }
    count_.assign(in.sets.size(), 0);
    state_.assign(in.universe_size, 0);
  }

  std::vector<std::size_t> run(std::uint64_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<char> out(block_.size(), 0);
    std::vector<std::size_t> picks;
    std::vector<char> best_out = out;
    std::vector<std::size_t> best_picks;
    std::int64_t gain = 0, best_gain = 0, size = 0;
    for (std::uint64_t step = 0; step < steps; ++step) {
      const double temperature =
          std::max(kFinal, std::exp(std::log(kFinal) * static_cast<double>(step) / static_cast<double>(steps)));
      const std::size_t v = std::uniform_int_distribution<std::size_t>(0, block_.size() - 1)(rng);
      out[v] ^= 1;
      std::vector<std::size_t> trial;
      if (!cover_inside(out, trial)) {
        out[v] ^= 1;
        continue;
      }
      const std::int64_t trial_size = size + (out[v] ? 1 : -1);
      const std::int64_t trial_gain = trial_size - static_cast<std::int64_t>(trial.size());
      if (trial_gain >= gain || unit(rng) < std::exp(static_cast<double>(trial_gain - gain) / temperature)) {
        size = trial_size;
        gain = trial_gain;
        picks = std::move(trial);
        if (gain > best_gain) {
          best_gain = gain;
          best_out = out;
          best_picks = picks;
        }
      } else {
        out[v] ^= 1;
      }
    }
    std::vector<std::size_t> chosen = best_picks;
    for (std::size_t i = 0; i < block_.size(); ++i) {
      if (!best_out[i]) chosen.push_back(block_[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  static constexpr double kFinal = 0.05;

  // Greedy cover, by sets outside the block, of the elements whose two block
  // sets are both left out. False when one of them has no other owner.
  bool cover_inside(const std::vector<char>& out, std::vector<std::size_t>& picks) {
    std::vector<std::size_t> inside, touched;
    for (std::size_t v = 0; v < out.size(); ++v) {
      if (!out[v]) continue;
      for (const auto& [w, e] : adjacency_[v]) {
        if (w > v && out[w]) inside.push_back(e);
      }
    }
    bool ok = true;
    for (std::size_t e : inside) {
      if (owners_[e].empty()) ok = false;
      state_[e] = 1;
      for (auto t : owners_[e]) {
        if (count_[t]++ == 0) touched.push_back(t);
      }
    }
    std::size_t left = ok ? inside.size() : 0;
    while (left > 0) {
      std::size_t pick = SIZE_MAX;
      for (std::size_t t : touched) {
        if (count_[t] == 0) continue;
        if (pick == SIZE_MAX || count_[t] > count_[pick] || (count_[t] == count_[pick] && t < pick)) pick = t;
      }
      picks.push_back(pick);
      for (auto e : members_[pick]) {
        if (state_[e] != 1) continue;
        state_[e] = 2;
        --left;
        for (auto t : owners_[e]) --count_[t];
      }
    }
    for (std::size_t e : inside) state_[e] = 0;
    for (std::size_t t : touched) count_[t] = 0;
    return ok;
  }

  std::vector<std::size_t> block_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;  // (other end, element)
  std::vector<std::vector<std::uint32_t>> members_, owners_;  // sets outside the block only
  std::vector<std::uint32_t> count_;
  std::vector<char> state_;  // 0 idle, 1 open inside, 2 covered inside
};

}  // namespace

CoverSolution pair_block_search(const CoverInstance& instance, const std::vector<std::size_t>& block,
                                std::uint64_t steps, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  PairBlockSearch search(instance, block);
  CoverSolution sol;
  sol.chosen = search.run(steps, seed);
  drop_redundant(instance, sol.chosen);
  sol.upper_bound = sol.chosen.size();
  sol.lower_bound = counting_lower_bound(instance);
  sol.status = sol.lower_bound == sol.upper_bound ? SolveStatus::optimal : SolveStatus::feasible_with_bounds;
  sol.nodes = steps;
  sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

// -------------------------------------------------------------------- bounds

std::uint64_t counting_lower_bound(const CoverInstance& instance) {
  const auto block_bound = [&](const Bitset* block) -> std::uint64_t {
    const std::size_t size = block ? block->count() : instance.universe_size;
    if (size == 0) return 0;
    std::size_t widest = 0;
    for (const auto& s : instance.sets) widest = std::max(widest, block ? s.count_and(*block) : s.count());
    return (size + widest - 1) / widest;
  };
  std::uint64_t bound = block_bound(nullptr);
  for (const auto& g : instance.element_groups) bound = std::max(bound, block_bound(&g));
  return bound;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ArgumentError("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g ? Rational{num / g, den / g} : Rational{0, 1};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational fractional_lower_bound(const CoverInstance& instance, int iterations) {
  const std::size_t n = instance.universe_size;
  const std::size_t m = instance.sets.size();
  if (n == 0) return {0, 1};
  constexpr std::uint64_t kMaxScale = std::uint64_t{1} << 24;
  std::uint64_t scale = 1;
  for (const auto& s : instance.sets) {
    const std::uint64_t c = s.count();
    if (c == 0) continue;
    const std::uint64_t next = std::lcm(scale, c);
    if (next > kMaxScale) {
      scale = kMaxScale;
      break;
    }
    scale = next;
  }

  std::vector<std::vector<std::uint32_t>> sets_of(n);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& b = instance.sets[j];
    for (std::size_t e = b.first(); e < n; e = b.next(e + 1)) sets_of[e].push_back(static_cast<std::uint32_t>(j));
  }
  std::vector<std::uint64_t> y(n, 0), residual(m, scale), active_in(m, 0);
  std::vector<bool> active(n, true);
  for (std::size_t j = 0; j < m; ++j) active_in[j] = instance.sets[j].count();
  std::size_t active_count = n;

  const auto freeze_set = [&](std::size_t j) {
    const auto& b = instance.sets[j];
    for (std::size_t e = b.first(); e < n; e = b.next(e + 1)) {
      if (!active[e]) continue;
      active[e] = false;
      --active_count;
      for (auto k : sets_of[e]) --active_in[k];
    }
  };

  // water-filling: raise every active element by the largest grid step
  // that keeps all sets feasible, then freeze elements of sets that are full
  while (active_count > 0) {
    std::uint64_t delta = UINT64_MAX;
    for (std::size_t j = 0; j < m; ++j) {
      if (active_in[j]) delta = std::min(delta, residual[j] / active_in[j]);
    }
    if (delta > 0) {
      for (std::size_t e = 0; e < n; ++e) {
        if (active[e]) y[e] += delta;
      }
      for (std::size_t j = 0; j < m; ++j) residual[j] -= delta * active_in[j];
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (active_in[j] && residual[j] / active_in[j] == 0) freeze_set(j);
    }
  }
  for (int it = 0; it < iterations; ++it) {
    bool raised = false;
    for (std::size_t e = 0; e < n; ++e) {
      std::uint64_t slack = UINT64_MAX;
      for (auto j : sets_of[e]) slack = std::min(slack, residual[j]);
      if (slack == 0 || slack == UINT64_MAX) continue;
      y[e] += slack;
      for (auto j : sets_of[e]) residual[j] -= slack;
      raised = true;
    }
    if (!raised) break;
  }
  const std::uint64_t total = std::accumulate(y.begin(), y.end(), std::uint64_t{0});
  return Rational::make(total, scale);
}

BoundReport bound_report(const CoverInstance& instance, int iterations) {
  BoundReport r;
  r.counting_bound = counting_lower_bound(instance);
  r.fractional_bound = fractional_lower_bound(instance, iterations);
  r.best_known = greedy(instance).size();
  return r;
}

// --------------------------------------------------- maximum independent set

namespace {

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adjacency, std::uint64_t budget)
      : adj_(std::move(adjacency)), budget_(budget) {}

  void run() {
    Bitset all(adj_.size());
    all.set_all();
    std::vector<std::size_t> current;
    root_bound_ = 0;
    expand(current, all, true);
  }

  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::size_t root_bound_ = 0;

 private:
  void expand(std::vector<std::size_t>& current, Bitset P, bool root) {
    if (++nodes > budget_) {
      aborted = true;
      return;
    }
    // greedy colouring: each colour class is an independent set, so a clique
    // takes at most one vertex per colour
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bitset uncoloured = P;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset q = uncoloured;
      for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
        q.and_not(adj_[v]);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    if (root) root_bound_ = k;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best.size() || aborted) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = P;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(current, std::move(next), false);
      }
      current.pop_back();
      P.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::uint64_t budget_;
};

}  // namespace

IndependentSetResult maximum_independent_set(const std::vector<Bitset>& adjacency, std::uint64_t node_budget) {
  const std::size_t n = adjacency.size();
  IndependentSetResult result;
  if (n == 0) {
    result.proven = true;
    return result;
  }
  // order by degree ascending so low-conflict vertices get low bit indices
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return adjacency[a].count() < adjacency[b].count(); });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Bitset> complement(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = order[i];
    complement[i].set_all();
    complement[i].reset(i);
    for (std::size_t u = adjacency[v].first(); u < n; u = adjacency[v].next(u + 1)) complement[i].reset(position[u]);
  }
  CliqueSearch search(std::move(complement), node_budget);
  search.run();
  for (std::size_t i : search.best) result.vertices.push_back(order[i]);
  std::sort(result.vertices.begin(), result.vertices.end());
  result.proven = !search.aborted;
  result.nodes = search.nodes;
  result.upper_bound = result.proven ? result.vertices.size() : search.root_bound_;
  return result;
}

// ------------------------------------------------------- branch and bound

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const CoverInstance& instance, const SolveBudget& budget)
      : in_(instance), elem_sets_(instance.element_sets()), budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  void seed(std::vector<std::size_t> incumbent) { best_ = std::move(incumbent); }

  std::uint64_t root_bound() {
    Bitset uncovered(in_.universe_size);
    uncovered.set_all();
    Bitset free(in_.sets.size());
    free.set_all();
    std::vector<std::size_t> counts;
    for (std::size_t e = 0; e < in_.universe_size; ++e) counts.push_back(elem_sets_[e].count());
    return residual_bound(uncovered, free, counts);
  }

  void run() {
    Bitset uncovered(in_.universe_size);
    uncovered.set_all();
    Bitset free(in_.sets.size());
    free.set_all();
    search(uncovered, free);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  bool out_of_budget() {
    if (aborted_) return true;
    if (++nodes_ > budget_.nodes) aborted_ = true;
    if ((nodes_ & 255) == 0) {
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > budget_.seconds) aborted_ = true;
    }
    return aborted_;
  }

  /// max(capacity bound, greedy bound from elements with pairwise disjoint
  /// candidate lists).
  std::uint64_t residual_bound(const Bitset& uncovered, const Bitset& free,
                               const std::vector<std::size_t>& counts) const {
    const std::size_t open = uncovered.count();
    if (open == 0) return 0;
    std::vector<std::size_t> gains;
    for (std::size_t s = free.first(); s < free.size(); s = free.next(s + 1)) {
      const std::size_t g = in_.sets[s].count_and(uncovered);
      if (g) gains.push_back(g);
    }
    std::sort(gains.rbegin(), gains.rend());
    std::uint64_t capacity = 0;
    std::size_t sum = 0;
    while (sum < open && capacity < gains.size()) sum += gains[capacity++];

    std::vector<std::size_t> elements = uncovered.indices();
    std::stable_sort(elements.begin(), elements.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });
    Bitset blocked(in_.universe_size);
    std::uint64_t disjoint = 0;
    for (std::size_t e : elements) {
      if (blocked.test(e)) continue;
      ++disjoint;
      Bitset cand = elem_sets_[e];
      cand &= free;
      for (std::size_t s = cand.first(); s < cand.size(); s = cand.next(s + 1)) blocked |= in_.sets[s];
    }
    return std::max(capacity, disjoint);
  }

  void search(Bitset uncovered, Bitset free) {
    if (out_of_budget()) return;
    const std::size_t depth_on_entry = chosen_.size();
    const auto restore = [&] { chosen_.resize(depth_on_entry); };

    // unit propagation
    std::vector<std::size_t> counts(in_.universe_size, 0);
    std::size_t max_count = 0;
    for (bool changed = true; changed;) {
      changed = false;
      max_count = 0;
      for (std::size_t e = uncovered.first(); e < uncovered.size(); e = uncovered.next(e + 1)) {
        const std::size_t c = elem_sets_[e].count_and(free);
        if (c == 0) return restore();
        if (c == 1) {
          Bitset cand = elem_sets_[e];
          cand &= free;
          const std::size_t s = cand.first();
          chosen_.push_back(s);
          uncovered.and_not(in_.sets[s]);
          free.reset(s);
          changed = true;
          continue;
        }
        counts[e] = c;
        max_count = std::max(max_count, c);
      }
    }
    if (uncovered.none()) {
      if (best_.empty() || chosen_.size() < best_.size()) best_ = chosen_;
      return restore();
    }
    if (!best_.empty() && chosen_.size() + residual_bound(uncovered, free, counts) >= best_.size()) {
      return restore();
    }
    if (max_count == 2) {
      solve_vertex_cover(uncovered, free);
      return restore();
    }

    std::size_t branch = free.size(), branch_gain = 0;
    for (std::size_t s = free.first(); s < free.size(); s = free.next(s + 1)) {
      const std::size_t g = in_.sets[s].count_and(uncovered);
      if (g > branch_gain) {
        branch_gain = g;
        branch = s;
      }
    }
    free.reset(branch);
    chosen_.push_back(branch);
    {
      Bitset next = uncovered;
      next.and_not(in_.sets[branch]);
      search(std::move(next), free);
    }
    chosen_.pop_back();
    search(std::move(uncovered), std::move(free));
    restore();
  }

  /// Every open element has exactly two candidate sets: the candidates form
  /// a graph whose edges are the open elements.
  void solve_vertex_cover(const Bitset& uncovered, const Bitset& free) {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> local(in_.sets.size(), SIZE_MAX);
    for (std::size_t s = free.first(); s < free.size(); s = free.next(s + 1)) {
      if (in_.sets[s].intersects(uncovered)) {
        local[s] = vertices.size();
        vertices.push_back(s);
      }
    }
    std::vector<Bitset> adjacency(vertices.size(), Bitset(vertices.size()));
    for (std::size_t e = uncovered.first(); e < uncovered.size(); e = uncovered.next(e + 1)) {
      Bitset cand = elem_sets_[e];
      cand &= free;
      const std::size_t a = cand.first();
      const std::size_t b = cand.next(a + 1);
      adjacency[local[a]].set(local[b]);
      adjacency[local[b]].set(local[a]);
    }
    const std::uint64_t remaining = budget_.nodes > nodes_ ? budget_.nodes - nodes_ : 0;
    const auto mis = maximum_independent_set(adjacency, remaining);
    nodes_ += mis.nodes;
    if (!mis.proven) aborted_ = true;
    const std::size_t cover_size = vertices.size() - mis.vertices.size();
    if (!best_.empty() && chosen_.size() + cover_size >= best_.size()) return;
    std::vector<bool> independent(vertices.size(), false);
    for (std::size_t v : mis.vertices) independent[v] = true;
    std::vector<std::size_t> candidate = chosen_;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!independent[i]) candidate.push_back(vertices[i]);
    }
    best_ = std::move(candidate);
  }

  const CoverInstance& in_;
  std::vector<Bitset> elem_sets_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CoverSolution solve_exact(const CoverInstance& instance, const SolveBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const Reduction r = reduce(instance);
  const CoverInstance& red = r.reduced;

  std::vector<std::size_t> best_reduced;
  std::uint64_t lower = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
  if (red.universe_size > 0) {
    CoverSolution start_point = greedy(red);
    if (const auto by_class = class_cover(red); !by_class.empty() && by_class.size() < start_point.size()) {
      start_point.chosen = by_class;
    }
    const std::uint64_t steps = std::min<std::uint64_t>(budget.heuristic_steps, 100 * red.set_count());
    if (steps > 0) start_point = local_search(red, steps, 1, &start_point.chosen);
    BranchAndBound bb(red, budget);
    lower = std::max<std::uint64_t>({counting_lower_bound(red), fractional_lower_bound(red).ceil(), bb.root_bound()});
    bb.seed(start_point.chosen);
    if (lower < start_point.size()) bb.run();
    best_reduced = bb.best();
    nodes = bb.nodes();
    complete = !bb.aborted();
  }

  CoverSolution sol;
  sol.chosen = r.forced;
  for (std::size_t s : best_reduced) sol.chosen.push_back(r.set_origin[s]);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.upper_bound = sol.chosen.size();
  sol.nodes = nodes;
  if (complete) {
    sol.status = SolveStatus::optimal;
    sol.lower_bound = sol.upper_bound;
  } else {
    sol.status = SolveStatus::feasible_with_bounds;
    sol.lower_bound = std::min<std::uint64_t>(r.forced.size() + lower, sol.upper_bound);
    if (sol.lower_bound == sol.upper_bound) sol.status = SolveStatus::optimal;
  }
  sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

// -------------------------------------------------------------- verification

VerifyResult verify_indices(const CoverInstance& instance, const std::vector<std::size_t>& chosen) {
  Bitset covered(instance.universe_size);
  for (std::size_t s : chosen) {
    if (s >= instance.sets.size()) throw ArgumentError("set index " + std::to_string(s) + " out of range");
    covered |= instance.sets[s];
  }
  VerifyResult r;
  r.covers = covered.all();
  if (!r.covers) {
    Bitset missing(instance.universe_size);
    missing.set_all();
    missing.and_not(covered);
    r.uncovered = missing.first();
  }
  return r;
}

VerifyResult verify_cover(const CoverInstance& instance, const std::vector<std::string>& labels) {
  std::vector<std::size_t> chosen;
  for (const auto& l : labels) chosen.push_back(instance.index_of(l));
  return verify_indices(instance, chosen);
}

std::vector<std::string> read_certificate(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string label = line.substr(b, e - b + 1);
    if (label.find_first_of(" \t") != std::string::npos) throw ParseError("bad certificate line: '" + line + "'");
    out.push_back(label);
  }
  return out;
}

}  // namespace covnum
