#include "covnum/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "covnum/error.hpp"
#include "parallel.hpp"

namespace covnum {

namespace {

CycleType decode(std::uint64_t code, int degree) {
  std::vector<int> lengths;
  for (int len = 2; len <= 16; ++len) {
    const int mult = static_cast<int>((code >> (4 * (len - 2))) & 15u);
    for (int i = 0; i < mult; ++i) lengths.push_back(len);
  }
  return CycleType(degree, lengths);
}

std::vector<int> block_sizes(const SubgroupFamily& family) {
  std::vector<int> sizes;
  for (const auto& b : family.blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

}  // namespace

std::string InventoryCell::render() const {
  if (s == 0) return "0";
  if (whole_class) return "P";
  if (partition) return std::to_string(s) + ",P";
  return std::to_string(s) + "_" + std::to_string(k);
}

InventoryCell multiplicity(std::uint64_t s, std::uint64_t subgroup_class_size,
                           std::uint64_t element_class_size) {
  InventoryCell cell;
  cell.s = s;
  if (s == 0) return cell;
  if (element_class_size == 0) throw IdentityViolation("empty element class with s > 0");
  const std::uint64_t total = s * subgroup_class_size;
  if (total % element_class_size != 0) {
    throw IdentityViolation(std::to_string(s) + " * " + std::to_string(subgroup_class_size) +
                            " is not divisible by " + std::to_string(element_class_size));
  }
  cell.k = total / element_class_size;
  cell.partition = cell.k == 1;
  return cell;
}

std::map<CycleType, std::uint64_t> count_by_cycle_type(const std::vector<Permutation>& generators,
                                                       std::uint64_t budget, unsigned threads) {
  const StabilizerChain chain = build_chain(generators);
  const int degree = chain.degree();
  threads = std::max(1u, threads);
  std::map<CycleType, std::uint64_t> out;
  if (degree <= 16) {
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> local(threads);
    chain.for_each_element_indexed([&](unsigned w, const Permutation& g) { ++local[w][g.cycle_code()]; },
                                   budget, threads);
    for (const auto& m : local) {
      for (const auto& [code, n] : m) out[decode(code, degree)] += n;
    }
    return out;
  }
  std::vector<std::map<CycleType, std::uint64_t>> local(threads);
  chain.for_each_element_indexed([&](unsigned w, const Permutation& g) { ++local[w][g.cycle_type()]; },
                                 budget, threads);
  for (const auto& m : local) {
    for (const auto& [t, n] : m) out[t] += n;
  }
  return out;
}

std::uint64_t count_in_representative(const MaximalClass& H, const CycleType& t, std::uint64_t budget,
                                      unsigned threads) {
  const int n = t.degree();
  switch (H.family.kind) {
    case FamilyKind::alternating:
      return t.is_even() ? class_size(n, t) : 0;
    case FamilyKind::intransitive:
      return count_in_young_subgroup(block_sizes(H.family), t);
    default:
      break;
  }
  const auto counts = count_by_cycle_type(H.representative, budget, threads);
  const auto it = counts.find(t);
  return it == counts.end() ? 0 : it->second;
}

std::map<CycleType, std::uint64_t> type_counts_of_representative(const MaximalClass& H, int degree,
                                                                 std::uint64_t budget, unsigned threads) {
  if (H.family.kind == FamilyKind::alternating || H.family.kind == FamilyKind::intransitive) {
    std::map<CycleType, std::uint64_t> out;
    for (const auto& t : all_cycle_types(degree)) {
      const auto c = count_in_representative(H, t, budget, threads);
      if (c) out[t] = c;
    }
    return out;
  }
  return count_by_cycle_type(H.representative, budget, threads);
}

// ------------------------------------------------------------------ tables

const InventoryRow* InventoryTable::find_row(std::string_view type_name) const {
  const int degree = rows.empty() ? 0 : rows.front().type.degree();
  const CycleType wanted = CycleType::parse(type_name, degree);
  for (const auto& r : rows) {
    if (r.type == wanted) return &r;
  }
  return nullptr;
}

std::size_t InventoryTable::column_index(std::string_view label) const {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].label == label) return j;
  }
  throw ArgumentError("no column " + std::string(label) + " in " + group);
}

const InventoryCell& InventoryTable::cell(std::string_view type_name, std::string_view label) const {
  const auto* row = find_row(type_name);
  if (!row) throw ArgumentError("no row " + std::string(type_name) + " in " + group);
  return row->cells[column_index(label)];
}

std::string InventoryTable::to_tsv() const {
  std::ostringstream out;
  if (symmetric) out << "Parity\t";
  out << "Order\tType\tSize";
  for (const auto& c : columns) out << '\t' << c.label;
  out << '\n';
  for (const auto& r : rows) {
    if (symmetric) out << (r.odd ? "ODD" : "EVEN") << '\t';
    out << r.element_order << '\t' << r.name << '\t' << r.size;
    for (const auto& c : r.cells) out << '\t' << c.render();
    out << '\n';
  }
  return out.str();
}

nlohmann::json InventoryTable::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["columns"] = nlohmann::json::array();
  for (const auto& c : columns) {
    j["columns"].push_back({{"label", c.label},
                            {"type", c.isomorphism_type},
                            {"order", c.expected_order},
                            {"class_size", c.expected_class_size}});
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"type", r.name}, {"order", r.element_order}, {"size", r.size}, {"orbits", r.orbits}};
    if (symmetric) row["parity"] = r.odd ? "odd" : "even";
    nlohmann::json cells = nlohmann::json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& c = r.cells[i];
      cells[columns[i].label] = {{"s", c.s}, {"k", c.k}, {"partition", c.partition}, {"text", c.render()}};
    }
    row["cells"] = std::move(cells);
    j["rows"].push_back(std::move(row));
  }
  return j;
}

std::string class_table_tsv(const std::vector<MaximalClass>& classes) {
  std::ostringstream out;
  out << "Class\tType\tOrder\tClassSize\n";
  for (const auto& c : classes) {
    out << c.label << '\t' << c.isomorphism_type << '\t' << c.expected_order << '\t' << c.expected_class_size
        << '\n';
  }
  return out.str();
}

InventoryTable build_inventory(std::string_view group, std::uint64_t budget, unsigned threads) {
  const GroupInfo info = group_info(group);
  if (info.name == "S12" || info.name == "J1") {
    throw ArgumentError("no inventory for " + info.name + ": class representatives exceed the budget");
  }
  InventoryTable table;
  table.group = info.name;
  table.symmetric = info.symmetric;
  table.columns = maximal_classes(info.name);

  // merge orbits of one cycle type into a row
  const auto classification = classify_cyclic(info.name, budget);
  const auto& maximal = classification.maximal;
  std::set<CycleType> maximal_types;
  for (const auto& c : maximal) maximal_types.insert(c.type);
  if (!info.symmetric) {
    for (const auto& c : classification.excluded) {
      if (maximal_types.count(c.type)) {
        throw DataError("cycle type " + c.type.to_string() + " mixes maximal and non-maximal classes in " +
                        info.name);
      }
    }
  }
  std::map<CycleType, InventoryRow> by_type;
  for (const auto& c : maximal) {
    auto [it, fresh] = by_type.try_emplace(c.type);
    InventoryRow& row = it->second;
    if (fresh) {
      row.type = c.type;
      row.name = c.type.to_string();
      row.element_order = c.element_order;
      row.odd = !c.is_even();
      row.orbits = 0;
    }
    row.size += c.size;
    ++row.orbits;
  }

  std::vector<std::map<CycleType, std::uint64_t>> counts;
  for (const auto& col : table.columns) {
    counts.push_back(type_counts_of_representative(col, info.degree, budget, threads));
  }
  for (auto& [type, row] : by_type) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      const auto it = counts[j].find(type);
      const std::uint64_t s = it == counts[j].end() ? 0 : it->second;
      InventoryCell cell = multiplicity(s, table.columns[j].expected_class_size, row.size);
      cell.whole_class = s == row.size && cell.partition;
      row.cells.push_back(cell);
    }
    table.rows.push_back(row);
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [&](const InventoryRow& a, const InventoryRow& b) {
    if (info.symmetric && a.odd != b.odd) return a.odd;
    return std::tie(a.element_order, a.type) < std::tie(b.element_order, b.type);
  });
  return table;
}

// --------------------------------------------------------------- incidence

std::uint64_t IncidenceMatrix::nonzeros() const {
  std::uint64_t total = 0;
  for (const auto& r : row_bits) total += r.count();
  return total;
}

std::size_t IncidenceMatrix::row_degree_in(std::size_t row, const ColumnBlock& block) const {
  std::size_t n = 0;
  const Bitset& bits = row_bits[row];
  for (std::size_t j = bits.next(block.begin); j < block.end; j = bits.next(j + 1)) ++n;
  return n;
}

std::vector<ExpandedClass> expand_classes(const PermGroup& G, const std::vector<MaximalClass>& classes,
                                          std::uint64_t budget) {
  std::vector<ExpandedClass> out;
  for (const auto& c : classes) out.push_back({c, conjugacy_class_of_subgroup(G, c, budget)});
  return out;
}

namespace {

std::set<CycleType> types_of(const std::vector<CyclicRep>& universe) {
  std::set<CycleType> types;
  for (const auto& r : universe) types.insert(r.generator.cycle_type());
  return types;
}

/// Elements of the class representative whose type is in `types`.
std::vector<Permutation> filtered_elements(const MaximalClass& cls, const std::set<CycleType>& types,
                                           std::uint64_t budget) {
  std::vector<Permutation> out;
  build_chain(cls.representative).for_each_element(
      [&](const Permutation& g) {
        if (types.count(g.cycle_type())) out.push_back(g);
      },
      budget);
  return out;
}

}  // namespace

IncidenceMatrix build_incidence(const std::vector<CyclicRep>& universe, const std::vector<ExpandedClass>& classes,
                                std::uint64_t budget, unsigned threads) {
  IncidenceMatrix m;
  m.rows = universe;
  std::unordered_map<Permutation, std::size_t> row_of;
  row_of.reserve(universe.size() * 2);
  for (std::size_t i = 0; i < universe.size(); ++i) row_of.emplace(universe[i].generator, i);
  const auto types = types_of(universe);

  struct Job {
    const std::vector<Permutation>* elements;
    const Subgroup* member;
  };
  std::vector<std::vector<Permutation>> rep_elements;
  rep_elements.reserve(classes.size());
  std::vector<Job> jobs;
  for (const auto& ec : classes) {
    rep_elements.push_back(filtered_elements(ec.cls, types, budget));
    IncidenceMatrix::ColumnBlock block{ec.cls.label, m.column_labels.size(), 0};
    for (const auto& s : ec.members) {
      m.column_labels.push_back(s.label());
      jobs.push_back({&rep_elements.back(), &s});
    }
    block.end = m.column_labels.size();
    m.blocks.push_back(block);
  }
  m.column_bits.assign(jobs.size(), Bitset(universe.size()));
  detail::parallel_for(jobs.size(), threads, [&](std::size_t j, unsigned) {
    const Permutation& c = jobs[j].member->conjugator;
    Bitset& bits = m.column_bits[j];
    for (const auto& e : *jobs[j].elements) {
      const auto it = row_of.find(e.conjugate_by(c));
      if (it != row_of.end()) bits.set(it->second);
    }
  });
  m.row_bits.assign(universe.size(), Bitset(jobs.size()));
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Bitset& col = m.column_bits[j];
    for (std::size_t i = col.first(); i < col.size(); i = col.next(i + 1)) m.row_bits[i].set(j);
  }
  return m;
}

IncidenceMatrix build_incidence(const std::vector<CyclicRep>& universe, const std::vector<MaximalClass>& classes,
                                const PermGroup& G, std::uint64_t budget, unsigned threads) {
  return build_incidence(universe, expand_classes(G, classes, budget), budget, threads);
}

std::vector<CyclicRep> universe_from_members(const std::vector<ExpandedClass>& classes, const CycleType& t,
                                             std::uint64_t budget) {
  const std::set<CycleType> types{t};
  std::set<Permutation> generators;
  std::unordered_map<Permutation, Permutation> canonical;
  for (const auto& ec : classes) {
    const auto elements = filtered_elements(ec.cls, types, budget);
    for (const auto& s : ec.members) {
      for (const auto& e : elements) {
        const Permutation g = e.conjugate_by(s.conjugator);
        if (canonical.count(g)) continue;
        const Permutation c = canonical_generator(g);
        // every generator of <g> of the same type maps to the same rep
        const auto order = static_cast<long long>(g.order());
        for (long long k = 1; k < order; ++k) {
          if (std::gcd(k, order) == 1) canonical.emplace(c.pow(k), c);
        }
        generators.insert(c);
      }
    }
  }
  std::vector<CyclicRep> out;
  for (const auto& g : generators) out.push_back({g, g.order()});
  return out;
}

}  // namespace covnum
