#include "covnum/ekr.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "covnum/catalog.hpp"
#include "covnum/classes.hpp"
#include "covnum/error.hpp"
#include "covnum/incidence.hpp"
#include "covnum/stabilizer_chain.hpp"
#include "parallel.hpp"

namespace covnum::ekr {

Triple Triple::make(int a, int b, int c) {
  Triple t{{a, b, c}};
  std::sort(t.k.begin(), t.k.end());
  if (t.k[0] == t.k[1] || t.k[1] == t.k[2]) throw ArgumentError("triple has a repeated point");
  if (t.k[0] < 0 || t.k[2] >= kPoints) throw ArgumentError("triple point outside 0..9");
  return t;
}

bool Triple::disjoint(const Triple& other) const {
  return !other.contains(k[0]) && !other.contains(k[1]) && !other.contains(k[2]);
}

Permutation Triple::cycle() const {
  const std::array<Point, 3> pts{to_point(k[0]), to_point(k[1]), to_point(k[2])};
  return Permutation::cycle(kPoints, pts);
}

std::string Triple::to_string() const {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

std::size_t Universe::index_of(const Triple& t) const {
  const auto it = std::lower_bound(U.begin(), U.end(), t);
  if (it == U.end() || *it != t) throw ArgumentError("triple " + t.to_string() + " not in U");
  return static_cast<std::size_t>(it - U.begin());
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int p = from; p < n; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Universe build_universe() {
  Universe u;
  for (const auto& s : k_subsets(kPoints, 3)) u.U.push_back(Triple::make(s[0], s[1], s[2]));
  for (std::size_t i = 0; i < u.U.size(); ++i) {
    for (std::size_t j = i + 1; j < u.U.size(); ++j) {
      if (u.U[i].disjoint(u.U[j])) u.V.push_back({i, j});
    }
  }
  return u;
}

namespace {

bool meets(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

std::optional<int> common_point(const std::vector<std::vector<int>>& subsets, const std::vector<std::size_t>& family) {
  if (family.empty()) return std::nullopt;
  for (int p : subsets[family.front()]) {
    bool all = true;
    for (std::size_t i : family) all = all && std::find(subsets[i].begin(), subsets[i].end(), p) != subsets[i].end();
    if (all) return p;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> as_lists(const std::vector<Triple>& U) {
  std::vector<std::vector<int>> out;
  for (const auto& t : U) out.push_back({t.k[0], t.k[1], t.k[2]});
  return out;
}

}  // namespace

IntersectingFamily max_intersecting_family(const std::vector<std::vector<int>>& subsets) {
  const std::size_t n = subsets.size();
  std::vector<Bitset> disjointness(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!meets(subsets[i], subsets[j])) {
        disjointness[i].set(j);
        disjointness[j].set(i);
      }
    }
  }
  const auto mis = maximum_independent_set(disjointness);
  IntersectingFamily f;
  f.members = mis.vertices;
  std::sort(f.members.begin(), f.members.end());
  f.proven = mis.proven;
  f.star_point = common_point(subsets, f.members);
  return f;
}

IntersectingFamily max_intersecting_family(const Universe& universe) {
  return max_intersecting_family(as_lists(universe.U));
}

CoverInstance triple_cover_instance(const Universe& universe) {
  std::vector<Bitset> sets(universe.U.size(), Bitset(universe.V.size()));
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < universe.V.size(); ++e) {
    sets[universe.V[e].first].set(e);
    sets[universe.V[e].second].set(e);
  }
  for (const auto& t : universe.U) labels.push_back("H" + t.to_string());
  return CoverInstance("EKR", universe.V.size(), std::move(sets), std::move(labels));
}

TripleCover min_cover_by_triples(const Universe& universe) {
  const auto family = max_intersecting_family(universe);
  TripleCover out;
  for (std::size_t i = 0; i < universe.U.size(); ++i) {
    if (!std::binary_search(family.members.begin(), family.members.end(), i)) out.chosen.push_back(i);
  }
  const auto inst = triple_cover_instance(universe);
  out.covers = verify_indices(inst, out.chosen).covers;
  out.complement_intersecting = true;
  for (std::size_t a : family.members) {
    for (std::size_t b : family.members) {
      if (universe.U[a].disjoint(universe.U[b])) out.complement_intersecting = false;
    }
  }
  out.complement_star = family.star_point;
  out.solver = solve_exact(inst);
  return out;
}

TClass t_class(const Triple& u, const Triple& v) {
  if (!u.disjoint(v)) throw ArgumentError("T(u,u') needs disjoint triples, got " + u.to_string() + " and " + v.to_string());
  std::vector<int> rest;
  for (int p = 0; p < kPoints; ++p) {
    if (!u.contains(p) && !v.contains(p)) rest.push_back(p);
  }
  const auto four = [&](int a, int b, int c, int d) {
    const std::array<Point, 4> pts{to_point(rest[a]), to_point(rest[b]), to_point(rest[c]), to_point(rest[d])};
    return Permutation::cycle(kPoints, pts);
  };
  const std::array<Permutation, 3> c4{four(0, 1, 2, 3), four(0, 2, 1, 3), four(0, 1, 3, 2)};
  const std::array<Permutation, 2> t{u.cycle() * v.cycle(), u.cycle().inverse() * v.cycle()};
  std::vector<Permutation> members;
  for (const auto& ti : t) {
    for (const auto& c : c4) {
      const Permutation g = ti * c;
      for (long long e = 1; e < 12; ++e) {
        Permutation x = g.pow(e);
        if (x.order() == 12) members.push_back(std::move(x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  TClass out;
  out.members = std::move(members);
  return out;
}

TClass t_class(const Universe& universe, const DisjointPair& pair) {
  TClass out = t_class(universe.U.at(pair.first), universe.U.at(pair.second));
  out.pair = pair;
  return out;
}

PartitionReport tclass_partition(const Universe& universe, unsigned threads) {
  const CycleType type = CycleType::parse("(3^2,4)", kPoints);
  std::vector<TClass> classes(universe.V.size());
  detail::parallel_for(universe.V.size(), threads,
                       [&](std::size_t i, unsigned) { classes[i] = t_class(universe, universe.V[i]); });
  PartitionReport r;
  r.classes = classes.size();
  r.type_class_size = class_size(kPoints, type);
  r.all_of_type = true;
  r.all_size_24 = true;
  std::unordered_set<Permutation> seen;
  for (const auto& c : classes) {
    r.all_size_24 = r.all_size_24 && c.members.size() == 24;
    for (const auto& g : c.members) {
      r.all_of_type = r.all_of_type && g.cycle_type() == type;
      seen.insert(g);
      ++r.total;
    }
  }
  r.distinct = seen.size();
  return r;
}

Ms3Report ms3_restriction_check(const Universe& universe, unsigned threads) {
  const CycleType type = CycleType::parse("(3^2,4)", kPoints);
  const auto ms3 = find_class(maximal_classes("S10"), "MS3");
  Ms3Report r;
  r.per_subgroup = count_in_representative(ms3, type);
  r.subgroups = ms3.expected_class_size;
  r.elements = class_size(kPoints, type);
  const auto cell = multiplicity(r.per_subgroup, r.subgroups, r.elements);
  r.k = cell.k;
  r.cell = cell.render();

  // The representative fixes one orbit of size 3; H(w) is its conjugate by
  // any permutation c carrying that orbit onto w, and g lies in H(w) exactly
  // when c g c^-1 lies in the representative.
  const auto chain = build_chain(ms3.representative);
  std::vector<Point> base;
  for (const auto& block : ms3.family.blocks) {
    if (block.size() == 3) base = block;
  }
  if (base.size() != 3) throw DataError("MS3 of S10 has no orbit of size 3");
  std::vector<Permutation> carry;
  for (const auto& w : universe.U) {
    std::vector<Point> images(kPoints, 0);
    std::vector<char> used(kPoints + 1, 0);
    for (int i = 0; i < 3; ++i) {
      images[base[i] - 1] = to_point(w.k[i]);
      used[to_point(w.k[i])] = 1;
    }
    Point next = 1;
    for (auto& img : images) {
      if (img != 0) continue;
      while (used[next]) ++next;
      img = next;
      used[next] = 1;
    }
    // images is c; conjugate_by(c^-1) gives c g c^-1
    carry.push_back(Permutation::from_images(images).inverse());
  }

  std::atomic<bool> ok{true};
  std::atomic<std::uint64_t> tests{0};
  detail::parallel_for(universe.V.size(), threads, [&](std::size_t i, unsigned) {
    const auto& pair = universe.V[i];
    const TClass tc = t_class(universe, pair);
    std::uint64_t local = 0;
    for (const auto& g : tc.members) {
      for (std::size_t w = 0; w < universe.U.size(); ++w) {
        const bool inside = contains(chain, g.conjugate_by(carry[w]));
        ++local;
        if (inside != (w == pair.first || w == pair.second)) ok = false;
      }
    }
    tests += local;
  });
  r.incidence_matches = ok;
  r.membership_tests = tests;
  return r;
}

}  // namespace covnum::ekr
