#include "covnum/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "covnum/error.hpp"

#ifndef COVNUM_DEFAULT_DATA_DIR
#define COVNUM_DEFAULT_DATA_DIR "data"
#endif

namespace covnum {

namespace {

std::vector<Point> range(Point first, Point last) {
  std::vector<Point> out;
  for (Point p = first; p <= last; ++p) out.push_back(p);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

MaximalClass young(std::string label, std::string type, int n, std::vector<std::vector<Point>> blocks,
                   std::uint64_t order, std::uint64_t size) {
  MaximalClass c;
  c.label = std::move(label);
  c.isomorphism_type = std::move(type);
  c.family.kind = FamilyKind::intransitive;
  c.family.blocks = std::move(blocks);
  c.representative = young_subgroup(n, c.family.blocks);
  c.expected_order = order;
  c.expected_class_size = size;
  return c;
}

MaximalClass wreath(std::string label, std::string type, int a, int b, std::uint64_t order,
                    std::uint64_t size) {
  MaximalClass c;
  c.label = std::move(label);
  c.isomorphism_type = std::move(type);
  c.family.kind = FamilyKind::imprimitive;
  c.family.block_size = a;
  c.family.block_count = b;
  c.representative = wreath_imprimitive(a, b, a * b);
  c.expected_order = order;
  c.expected_class_size = size;
  return c;
}

MaximalClass alternating(std::string label, int n, std::uint64_t order) {
  MaximalClass c;
  c.label = std::move(label);
  c.isomorphism_type = "A" + std::to_string(n);
  c.family.kind = FamilyKind::alternating;
  c.representative = alternating_group(n);
  c.expected_order = order;
  c.expected_class_size = 1;
  return c;
}

MaximalClass from_data(std::string label, std::string type, FamilyKind kind, std::string key,
                       std::uint64_t order, std::uint64_t size) {
  MaximalClass c;
  c.label = std::move(label);
  c.isomorphism_type = std::move(type);
  c.family.kind = kind;
  c.family.file_key = key;
  c.representative = load_generators(key, order);
  c.expected_order = order;
  c.expected_class_size = size;
  return c;
}

// Block partitions (intransitive orbits or imprimitive blocks) of the
// representative, before conjugation.
std::vector<std::vector<Point>> family_blocks(const MaximalClass& cls, int degree) {
  if (cls.family.kind == FamilyKind::intransitive) return cls.family.blocks;
  std::vector<std::vector<Point>> blocks;
  const int a = cls.family.block_size;
  for (int b = 0; b < cls.family.block_count; ++b) blocks.push_back(range(b * a + 1, b * a + a));
  (void)degree;
  return blocks;
}

// For each point, the smallest point of its block after mapping by c.
std::vector<std::uint64_t> partition_key(const std::vector<std::vector<Point>>& blocks,
                                         const Permutation& c) {
  std::vector<std::uint64_t> key(static_cast<std::size_t>(c.degree()), 0);
  for (const auto& block : blocks) {
    Point least = c.degree() + 1;
    for (Point x : block) least = std::min(least, c(x));
    for (Point x : block) key[c(x) - 1] = static_cast<std::uint64_t>(least);
  }
  return key;
}

std::vector<std::uint64_t> element_key(const std::vector<Permutation>& elements, const Permutation& c) {
  const Permutation cinv = c.inverse();
  Permutation tmp = Permutation::identity(c.degree());
  Permutation out = Permutation::identity(c.degree());
  std::vector<std::uint64_t> key;
  key.reserve(elements.size());
  for (const auto& e : elements) {
    Permutation::compose_into(cinv, e, tmp);
    Permutation::compose_into(tmp, c, out);
    key.push_back(out.hash());
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<Permutation> conjugate_all(const std::vector<Permutation>& gens, const Permutation& c) {
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.conjugate_by(c));
  return out;
}

// Breadth-first search over conjugates H^c, c a word in G's generators.
// `key_of` must identify H^c exactly; `same` (optional) confirms equality
// of two conjugates whose keys agree.
template <typename KeyFn>
std::vector<Subgroup> expand(const PermGroup& G, const std::string& label,
                             const std::vector<Permutation>& rep_gens, KeyFn key_of,
                             bool confirm) {
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  std::vector<Subgroup> found;
  std::unordered_map<std::size_t, StabilizerChain> chains;

  auto visit = [&](const Permutation& c) {
    auto key = key_of(c);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (confirm) {
        const std::size_t idx = it->second;
        auto ch = chains.find(idx);
        if (ch == chains.end()) {
          ch = chains.emplace(idx, build_chain(conjugate_all(rep_gens, found[idx].conjugator))).first;
        }
        for (const auto& g : conjugate_all(rep_gens, c)) {
          if (!ch->second.contains(g)) throw DataError("subgroup key collision in class " + label);
        }
      }
      return false;
    }
    seen.emplace(key, found.size());
    Subgroup s;
    s.class_label = label;
    s.conjugator = c;
    s.key = std::move(key);
    found.push_back(std::move(s));
    return true;
  };

  visit(Permutation::identity(G.degree()));
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Permutation c = found[head].conjugator;
    for (const auto& s : G.generators()) visit(c * s);
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& x, const Subgroup& y) { return x.key < y.key; });
  for (std::size_t i = 0; i < found.size(); ++i) found[i].index = i;
  return found;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::alternating: return "alternating";
    case FamilyKind::intransitive: return "intransitive";
    case FamilyKind::imprimitive: return "imprimitive";
    case FamilyKind::primitive_data: return "primitive-data";
    case FamilyKind::sporadic_data: return "sporadic-data";
  }
  return "unknown";
}

std::string SubgroupFamily::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == FamilyKind::intransitive) {
    out << " blocks";
    for (const auto& b : blocks) out << ' ' << b.size();
  } else if (kind == FamilyKind::imprimitive) {
    out << ' ' << block_count << " blocks of " << block_size;
  } else if (!file_key.empty()) {
    out << ' ' << file_key;
  }
  return out.str();
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("COVNUM_DATA_DIR"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::filesystem::path(COVNUM_DEFAULT_DATA_DIR);
}

std::vector<Permutation> symmetric_group(int n) {
  if (n < 1) throw ArgumentError("symmetric_group: n must be positive");
  if (n == 1) return {Permutation::identity(1)};
  const auto all = range(1, n);
  const std::vector<Point> swap{1, 2};
  return {Permutation::cycle(n, swap), Permutation::cycle(n, all)};
}

std::vector<Permutation> young_subgroup(int n, const std::vector<std::vector<Point>>& blocks) {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw ArgumentError("young_subgroup: empty block");
    for (Point p : block) {
      if (p < 1 || p > n) throw ArgumentError("young_subgroup: point out of range");
      ++hits[p - 1];
    }
  }
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    throw ArgumentError("young_subgroup: blocks do not partition the points");
  }
  std::vector<Permutation> gens;
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    const std::vector<Point> swap{block[0], block[1]};
    gens.push_back(Permutation::cycle(n, swap));
    if (block.size() > 2) gens.push_back(Permutation::cycle(n, block));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return gens;
}

std::vector<Permutation> wreath_imprimitive(int a, int b, int n) {
  if (a < 2 || b < 2 || a * b != n) {
    throw ArgumentError("wreath_imprimitive: need a, b >= 2 and a * b = n");
  }
  std::vector<Permutation> gens;
  const std::vector<Point> swap{1, 2};
  gens.push_back(Permutation::cycle(n, swap));
  if (a > 2) gens.push_back(Permutation::cycle(n, range(1, a)));
  // swap the first two blocks pointwise, and rotate all blocks
  std::vector<Point> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int i = 0; i < a; ++i) std::swap(images[i], images[a + i]);
  gens.push_back(Permutation::from_images(images));
  if (b > 2) {
    for (int i = 0; i < n; ++i) images[i] = (i + a) % n + 1;
    gens.push_back(Permutation::from_images(images));
  }
  return gens;
}

std::vector<Permutation> alternating_group(int n) {
  if (n < 3) throw ArgumentError("alternating_group: n must be at least 3");
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k) {
    const std::vector<Point> c{1, 2, k};
    gens.push_back(Permutation::cycle(n, c));
  }
  return gens;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open generator file " + path.string());
  GeneratorFile file;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      file.comments.push_back(trim(std::string_view(text).substr(1)));
      continue;
    }
    if (file.degree == 0) {
      std::istringstream header(text);
      std::string word;
      int degree = 0;
      if (!(header >> word >> degree) || word != "degree" || degree < 1) {
        throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 'degree <n>'");
      }
      file.degree = degree;
      continue;
    }
    try {
      file.generators.push_back(Permutation::parse(text, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (file.degree == 0) throw ParseError(path.string() + ": missing degree header");
  if (file.generators.empty()) throw ParseError(path.string() + ": no generators");
  return file;
}

std::vector<Permutation> load_generators(std::string_view key,
                                         std::optional<std::uint64_t> expected_order) {
  const auto path = data_dir() / (std::string(key) + ".gens");
  if (!std::filesystem::exists(path)) throw DataError("missing data file " + path.string());
  auto file = read_generator_file(path);
  if (expected_order) {
    const std::uint64_t order = build_chain(file.generators).order();
    if (order != *expected_order) {
      throw DataError(path.string() + ": generated order " + std::to_string(order) +
                      ", catalog expects " + std::to_string(*expected_order));
    }
  }
  return std::move(file.generators);
}

GroupInfo group_info(std::string_view name) {
  GroupInfo g;
  g.name = std::string(name);
  auto symmetric = [&](int n, std::uint64_t order) {
    g.degree = n;
    g.order = order;
    g.symmetric = true;
    g.generators = symmetric_group(n);
  };
  if (name == "S8") symmetric(8, 40320);
  else if (name == "S9") symmetric(9, 362880);
  else if (name == "S10") symmetric(10, 3628800);
  else if (name == "S12") symmetric(12, 479001600);
  else if (name == "M12") {
    g.degree = 12;
    g.order = 95040;
    g.generators = load_generators("m12", g.order);
  } else if (name == "J1") {
    g.degree = 266;
    g.order = 175560;
    g.generators = load_generators("j1", g.order);
  } else {
    throw ArgumentError("unknown group '" + std::string(name) + "'");
  }
  return g;
}

std::vector<MaximalClass> maximal_classes(std::string_view group) {
  constexpr auto prim = FamilyKind::primitive_data;
  constexpr auto spor = FamilyKind::sporadic_data;
  std::vector<MaximalClass> c;
  if (group == "S8") {
    c.push_back(alternating("MS1", 8, 20160));
    c.push_back(young("MS2", "S3 x S5", 8, {range(1, 3), range(4, 8)}, 720, 56));
    c.push_back(young("MS3", "S2 x S6", 8, {range(1, 2), range(3, 8)}, 1440, 28));
    c.push_back(young("MS4", "S7", 8, {range(1, 7), {8}}, 5040, 8));
    c.push_back(wreath("MS5", "S2 wr S4", 2, 4, 384, 105));
    c.push_back(wreath("MS6", "S4 wr S2", 4, 2, 1152, 35));
    c.push_back(from_data("MS7", "PGL(2,7)", prim, "s8_pgl2_7", 336, 120));
  } else if (group == "S9") {
    c.push_back(alternating("MS1", 9, 181440));
    c.push_back(young("MS2", "S4 x S5", 9, {range(1, 4), range(5, 9)}, 2880, 126));
    c.push_back(young("MS3", "S3 x S6", 9, {range(1, 3), range(4, 9)}, 4320, 84));
    c.push_back(young("MS4", "S2 x S7", 9, {range(1, 2), range(3, 9)}, 10080, 36));
    c.push_back(young("MS5", "S8", 9, {range(1, 8), {9}}, 40320, 9));
    c.push_back(wreath("MS6", "S3 wr S3", 3, 3, 1296, 280));
    c.push_back(from_data("MS7", "AGL(2,3)", prim, "s9_agl2_3", 432, 840));
  } else if (group == "S10") {
    c.push_back(alternating("MS1", 10, 1814400));
    c.push_back(young("MS2", "S4 x S6", 10, {range(1, 4), range(5, 10)}, 17280, 210));
    c.push_back(young("MS3", "S3 x S7", 10, {range(1, 3), range(4, 10)}, 30240, 120));
    c.push_back(young("MS4", "S2 x S8", 10, {range(1, 2), range(3, 10)}, 80640, 45));
    c.push_back(young("MS5", "S9", 10, {range(1, 9), {10}}, 362880, 10));
    c.push_back(wreath("MS6", "S2 wr S5", 2, 5, 3840, 945));
    c.push_back(wreath("MS7", "S5 wr S2", 5, 2, 28800, 126));
    c.push_back(from_data("MS8", "PGammaL(2,9)", prim, "s10_pgaml2_9", 1440, 2520));
  } else if (group == "S12") {
    c.push_back(alternating("MS1", 12, 239500800));
    c.push_back(young("MS2", "S11", 12, {range(1, 11), {12}}, 39916800, 12));
    c.push_back(young("MS3", "S10 x S2", 12, {range(1, 10), range(11, 12)}, 7257600, 66));
    c.push_back(young("MS4", "S9 x S3", 12, {range(1, 9), range(10, 12)}, 2177280, 220));
    c.push_back(wreath("MS5", "S6 wr S2", 6, 2, 1036800, 462));
    c.push_back(young("MS6", "S8 x S4", 12, {range(1, 8), range(9, 12)}, 967680, 495));
    c.push_back(young("MS7", "S7 x S5", 12, {range(1, 7), range(8, 12)}, 604800, 792));
    c.push_back(wreath("MS8", "S4 wr S3", 4, 3, 82944, 5775));
    c.push_back(wreath("MS9", "S2 wr S6", 2, 6, 46080, 10395));
    c.push_back(wreath("MS10", "S3 wr S4", 3, 4, 31104, 15400));
    c.push_back(from_data("MS11", "PGL(2,11)", prim, "s12_pgl2_11", 1320, 362880));
  } else if (group == "M12") {
    c.push_back(from_data("MS1", "M11", spor, "m12_ms1", 7920, 12));
    c.push_back(from_data("MS2", "M11", spor, "m12_ms2", 7920, 12));
    c.push_back(from_data("MS3", "PGammaL(2,9)", spor, "m12_ms3", 1440, 66));
    c.push_back(from_data("MS4", "PGammaL(2,9)", spor, "m12_ms4", 1440, 66));
    c.push_back(from_data("MS5", "PSL(2,11)", spor, "m12_ms5", 660, 144));
    c.push_back(from_data("MS6", "(C3 x C3):(C2 x S4)", spor, "m12_ms6", 432, 220));
    c.push_back(from_data("MS7", "(C3 x C3):(C2 x S4)", spor, "m12_ms7", 432, 220));
    c.push_back(from_data("MS8", "S5 x C2", spor, "m12_ms8", 240, 396));
    c.push_back(from_data("MS9", "2^(1+4):S3", spor, "m12_ms9", 192, 495));
    c.push_back(from_data("MS10", "(C4 x C4):D12", spor, "m12_ms10", 192, 495));
    c.push_back(from_data("MS11", "A4 x S3", spor, "m12_ms11", 72, 1320));
  } else if (group == "J1") {
    c.push_back(from_data("MS1", "PSL(2,11)", spor, "j1_psl2_11", 660, 266));
    c.push_back(from_data("MS2", "2^3:7:3", spor, "j1_2e3_7_3", 168, 1045));
    c.push_back(from_data("MS4", "19:6", spor, "j1_19_6", 114, 1540));
    c.push_back(from_data("MS6", "S3 x D10", spor, "j1_s3xd10", 60, 2926));
  } else {
    throw ArgumentError("unknown group '" + std::string(group) + "'");
  }
  return c;
}

const MaximalClass& find_class(const std::vector<MaximalClass>& classes, std::string_view label) {
  for (const auto& c : classes) {
    if (c.label == label) return c;
  }
  throw ArgumentError("unknown subgroup class '" + std::string(label) + "'");
}

PermGroup representative_group(const MaximalClass& cls) {
  PermGroup H(cls.representative);
  if (H.order() != cls.expected_order) {
    throw DataError(cls.label + ": representative has order " + std::to_string(H.order()) +
                    ", expected " + std::to_string(cls.expected_order));
  }
  return H;
}

std::vector<Permutation> Subgroup::generators(const MaximalClass& cls) const {
  return conjugate_all(cls.representative, conjugator);
}

std::vector<Subgroup> conjugacy_class_of_subgroup(const PermGroup& G, const MaximalClass& cls,
                                                  std::uint64_t budget) {
  if (G.order() > budget) throw BudgetExceeded("subgroup class expansion", G.order(), budget);
  switch (cls.family.kind) {
    case FamilyKind::alternating: {
      Subgroup s;
      s.class_label = cls.label;
      s.conjugator = Permutation::identity(G.degree());
      s.key = {0};
      return {s};
    }
    case FamilyKind::intransitive:
    case FamilyKind::imprimitive: {
      const auto blocks = family_blocks(cls, G.degree());
      return expand(G, cls.label, cls.representative,
                    [&](const Permutation& c) { return partition_key(blocks, c); }, false);
    }
    case FamilyKind::primitive_data:
    case FamilyKind::sporadic_data:
      break;
  }
  const PermGroup H = representative_group(cls);
  const auto elements = H.elements(budget);
  return expand(G, cls.label, cls.representative,
                [&](const Permutation& c) { return element_key(elements, c); }, true);
}

std::vector<Subgroup> conjugacy_class_of_subgroup(const PermGroup& G,
                                                  const std::vector<Permutation>& H,
                                                  std::uint64_t budget) {
  if (G.order() > budget) throw BudgetExceeded("subgroup class expansion", G.order(), budget);
  const auto elements = build_chain(H).elements(budget);
  return expand(G, "H", H, [&](const Permutation& c) { return element_key(elements, c); }, true);
}

}  // namespace covnum
