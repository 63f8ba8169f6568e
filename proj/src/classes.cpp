#include "covnum/classes.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "covnum/error.hpp"

namespace covnum {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

// Classes plus a way to find the class of any element.
struct ClassIndex {
  std::vector<ElementClass> classes;
  std::map<CycleType, std::size_t> by_type;                    // symmetric groups
  std::unordered_map<Permutation, std::size_t> by_element;      // everything else

  std::size_t class_of(const Permutation& p) const {
    if (!by_element.empty()) return by_element.at(p);
    return by_type.at(p.cycle_type());
  }
};

ClassIndex index_classes(std::string_view group, std::uint64_t budget) {
  const GroupInfo info = group_info(group);
  ClassIndex index;
  if (info.symmetric) {
    const int n = info.degree;
    for (const auto& t : all_cycle_types(n)) {
      ElementClass c;
      c.group = info.name;
      c.kind = ElementClass::Kind::cycle_type;
      c.type = t;
      c.size = class_size(n, t);
      c.element_order = t.element_order();
      c.representative = type_representative(n, t);
      c.name = t.to_string();
      index.classes.push_back(std::move(c));
    }
    std::stable_sort(index.classes.begin(), index.classes.end(),
                     [](const ElementClass& a, const ElementClass& b) {
                       return std::tie(a.element_order, a.type) < std::tie(b.element_order, b.type);
                     });
    for (std::size_t i = 0; i < index.classes.size(); ++i) index.by_type[index.classes[i].type] = i;
    return index;
  }

  const PermGroup G(info.generators);
  const auto elements = G.elements(budget);
  std::unordered_map<Permutation, std::size_t> orbit_of;
  orbit_of.reserve(elements.size() * 2);
  std::vector<std::vector<Permutation>> orbits;
  for (const auto& g : elements) {
    if (orbit_of.count(g)) continue;
    const std::size_t id = orbits.size();
    std::vector<Permutation> orbit{g};
    orbit_of.emplace(g, id);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& s : G.generators()) {
        Permutation next = orbit[head].conjugate_by(s);
        if (orbit_of.emplace(next, id).second) orbit.push_back(std::move(next));
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::vector<ElementClass> classes;
  for (const auto& orbit : orbits) {
    ElementClass c;
    c.group = info.name;
    c.kind = ElementClass::Kind::orbit;
    c.representative = *std::min_element(orbit.begin(), orbit.end());
    c.type = c.representative.cycle_type();
    c.size = orbit.size();
    c.element_order = c.type.element_order();
    classes.push_back(std::move(c));
  }
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = classes[a];
    const auto& y = classes[b];
    return std::tie(x.element_order, x.type, x.representative) <
           std::tie(y.element_order, y.type, y.representative);
  });
  std::vector<std::size_t> new_id(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = i;
    index.classes.push_back(classes[perm[i]]);
  }
  std::map<CycleType, int> per_type;
  for (const auto& c : index.classes) ++per_type[c.type];
  std::map<CycleType, int> seen;
  for (auto& c : index.classes) {
    c.name = c.type.to_string();
    if (per_type[c.type] > 1) c.name += static_cast<char>('a' + seen[c.type]++);
  }
  for (auto& [g, id] : orbit_of) index.by_element.emplace(g, new_id[id]);
  return index;
}

}  // namespace

std::uint64_t class_size(int n, const CycleType& t) {
  if (n > 20) throw ArgumentError("class_size: degree above 20");
  if (t.moved_points() > n) throw ArgumentError("class_size: cycle type does not fit");
  std::uint64_t denom = factorial(n - t.moved_points());
  for (const auto& part : t.parts()) {
    denom *= ipow(static_cast<std::uint64_t>(part.length), part.multiplicity) * factorial(part.multiplicity);
  }
  return factorial(n) / denom;
}

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions(n, n, current, parts);
  std::vector<CycleType> out;
  for (const auto& p : parts) out.emplace_back(n, p);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation type_representative(int n, const CycleType& t) {
  std::vector<Point> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  int next = 0;
  for (const auto& part : t.parts()) {
    for (int k = 0; k < part.multiplicity; ++k) {
      for (int i = 0; i < part.length; ++i) {
        images[next + i] = next + (i + 1) % part.length + 1;
      }
      next += part.length;
    }
  }
  return Permutation::from_images(images);
}

void for_each_of_type(int n, const CycleType& t, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t budget) {
  const std::uint64_t size = class_size(n, t);
  if (size > budget) throw BudgetExceeded("elements of type " + t.to_string(), size, budget);

  // remaining[i] = cycles of length lengths[i] still to place
  std::vector<int> lengths{1};
  std::vector<int> remaining{n - t.moved_points()};
  for (const auto& part : t.parts()) {
    lengths.push_back(part.length);
    remaining.push_back(part.multiplicity);
  }
  std::vector<Point> images(static_cast<std::size_t>(n), 0);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<Point> cycle;

  std::function<void(int)> place;     // next unplaced point search starts here
  std::function<void(int, int, int)> extend;

  place = [&](int from) {
    int p = from;
    while (p < n && placed[p]) ++p;
    if (p == n) {
      visit(Permutation::from_images(images));
      return;
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      placed[p] = 1;
      cycle.assign(1, p);
      extend(p, lengths[i], p + 1);
      placed[p] = 0;
      ++remaining[i];
    }
  };
  extend = [&](int start, int length, int resume) {
    if (static_cast<int>(cycle.size()) == length) {
      for (int i = 0; i < length; ++i) images[cycle[i]] = cycle[(i + 1) % length] + 1;
      const std::vector<Point> mine = cycle;  // deeper levels reuse `cycle`
      place(resume);
      cycle = mine;
      return;
    }
    for (int q = start + 1; q < n; ++q) {
      if (placed[q]) continue;
      placed[q] = 1;
      cycle.push_back(q);
      extend(start, length, resume);
      cycle.pop_back();
      placed[q] = 0;
    }
  };
  place(0);
}

std::vector<Permutation> elements_of_type(int n, const CycleType& t, std::uint64_t budget) {
  std::vector<Permutation> out;
  out.reserve(class_size(n, t) <= budget ? class_size(n, t) : 0);
  for_each_of_type(n, t, [&](const Permutation& g) { out.push_back(g); }, budget);
  return out;
}

std::vector<Permutation> elements_with_type(const GroupInfo& G, const CycleType& t, std::uint64_t budget) {
  if (G.symmetric) return elements_of_type(G.degree, t, budget);
  const PermGroup group(G.generators);
  std::vector<Permutation> out;
  if (G.degree <= 16) {
    const std::uint64_t code = t.code();
    group.for_each_element([&](const Permutation& g) {
      if (g.cycle_code() == code) out.push_back(g);
    }, budget);
  } else {
    group.for_each_element([&](const Permutation& g) {
      if (g.cycle_type() == t) out.push_back(g);
    }, budget);
  }
  return out;
}

std::vector<Permutation> conjugation_orbit(const PermGroup& G, const Permutation& g, std::uint64_t budget) {
  std::unordered_set<Permutation> seen{g};
  std::vector<Permutation> orbit{g};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : G.generators()) {
      Permutation next = orbit[head].conjugate_by(s);
      if (seen.insert(next).second) {
        if (orbit.size() >= budget) throw BudgetExceeded("conjugation orbit", orbit.size() + 1, budget);
        orbit.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

std::vector<ElementClass> element_classes(std::string_view group, std::uint64_t budget) {
  return index_classes(group, budget).classes;
}

CyclicClassification classify_cyclic(std::string_view group, std::uint64_t budget) {
  const ClassIndex index = index_classes(group, budget);
  const auto& classes = index.classes;
  std::vector<std::optional<PowerWitness>> witness(classes.size());
  for (const auto& c : classes) {
    const auto order = static_cast<long long>(c.element_order);
    for (long long k = 2; k <= order; ++k) {
      if (order % k != 0) continue;
      const Permutation h = c.representative.pow(k);
      const std::size_t target = index.class_of(h);
      if (!witness[target]) witness[target] = PowerWitness{classes[target].name, c.representative, k};
    }
  }
  CyclicClassification out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (witness[i]) {
      out.excluded.push_back(classes[i]);
      out.witnesses.push_back(*witness[i]);
    } else {
      out.maximal.push_back(classes[i]);
    }
  }
  return out;
}

std::vector<ElementClass> maximal_cyclic_classes(std::string_view group, std::uint64_t budget) {
  return classify_cyclic(group, budget).maximal;
}

Permutation canonical_generator(const Permutation& g) {
  const auto order = static_cast<long long>(g.order());
  Permutation best = g;
  Permutation power = g;
  for (long long k = 2; k < order; ++k) {
    power = power * g;
    if (std::gcd(k, order) == 1 && power < best) best = power;
  }
  return best;
}

std::vector<CyclicRep> cyclic_reduce(const std::vector<Permutation>& elements) {
  std::unordered_set<Permutation> seen;
  std::vector<CyclicRep> out;
  for (const auto& g : elements) {
    Permutation c = canonical_generator(g);
    if (seen.insert(c).second) out.push_back(CyclicRep{c, g.order()});
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicRep& a, const CyclicRep& b) { return a.generator < b.generator; });
  return out;
}

std::uint64_t count_in_young_subgroup(const std::vector<int>& block_sizes, const CycleType& t) {
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (t.moved_points() > n) return 0;
  std::vector<int> lengths{1};
  std::vector<int> left{n - t.moved_points()};
  for (const auto& part : t.parts()) {
    lengths.push_back(part.length);
    left.push_back(part.multiplicity);
  }
  // choose, block by block, how many cycles of each length it receives
  std::function<std::uint64_t(std::size_t)> by_block;
  std::vector<int> take(lengths.size(), 0);
  std::function<std::uint64_t(std::size_t, std::size_t, int)> choose = [&](std::size_t b, std::size_t li,
                                                                           int room) -> std::uint64_t {
    if (li == lengths.size()) {
      if (room != 0) return 0;
      std::vector<int> cycles;
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        for (int k = 0; k < take[i]; ++k) cycles.push_back(lengths[i]);
      }
      const std::uint64_t here = class_size(block_sizes[b], CycleType(block_sizes[b], cycles));
      for (std::size_t i = 0; i < lengths.size(); ++i) left[i] -= take[i];
      const std::uint64_t rest = by_block(b + 1);
      for (std::size_t i = 0; i < lengths.size(); ++i) left[i] += take[i];
      return here * rest;
    }
    std::uint64_t total = 0;
    for (int k = 0; k <= left[li] && k * lengths[li] <= room; ++k) {
      take[li] = k;
      total += choose(b, li + 1, room - k * lengths[li]);
    }
    take[li] = 0;
    return total;
  };
  by_block = [&](std::size_t b) -> std::uint64_t {
    if (b == block_sizes.size()) {
      return std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    const std::vector<int> saved = take;
    std::fill(take.begin(), take.end(), 0);
    const std::uint64_t r = choose(b, 0, block_sizes[b]);
    take = saved;
    return r;
  };
  return by_block(0);
}

}  // namespace covnum
