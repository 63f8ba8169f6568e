#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/bitset.hpp"
#include "covnum/catalog.hpp"
#include "covnum/classes.hpp"
#include "json.hpp"

namespace covnum {

/// One (element class, subgroup class) entry: s elements per subgroup, each
/// element in k subgroups of the class.
struct InventoryCell {
  std::uint64_t s = 0;
  std::uint64_t k = 0;
  bool partition = false;
  /// The subgroup holds the entire element class (normal subgroups only).
  bool whole_class = false;

  bool empty() const { return s == 0; }
  /// "0", "P", "240,P" or "100_5".
  std::string render() const;
};

/// k = s * subgroups / elements. Throws IdentityViolation when the product is
/// not divisible.
InventoryCell multiplicity(std::uint64_t s, std::uint64_t subgroup_class_size,
                           std::uint64_t element_class_size);

/// Counts of each cycle type among the elements of <generators>.
std::map<CycleType, std::uint64_t> count_by_cycle_type(const std::vector<Permutation>& generators,
                                                       std::uint64_t budget = kDefaultEnumerationBudget,
                                                       unsigned threads = 1);

/// Elements of type t in the class representative. Alternating groups are
/// answered by parity and intransitive ones combinatorially; everything else
/// is enumerated.
std::uint64_t count_in_representative(const MaximalClass& H, const CycleType& t,
                                      std::uint64_t budget = kDefaultEnumerationBudget,
                                      unsigned threads = 1);

/// All type counts of the representative at once, by the same rules.
std::map<CycleType, std::uint64_t> type_counts_of_representative(
    const MaximalClass& H, int degree, std::uint64_t budget = kDefaultEnumerationBudget,
    unsigned threads = 1);

/// A row of an inventory: every orbit of one cycle type among the classes
/// generating maximal cyclic subgroups.
struct InventoryRow {
  CycleType type;
  std::string name;
  std::uint64_t element_order = 0;
  std::uint64_t size = 0;
  int orbits = 1;
  bool odd = false;
  std::vector<InventoryCell> cells;  // one per column
};

struct InventoryTable {
  std::string group;
  bool symmetric = false;
  std::vector<MaximalClass> columns;
  std::vector<InventoryRow> rows;  // S_n: odd rows first, each block by element order

  const InventoryRow* find_row(std::string_view type_name) const;
  std::size_t column_index(std::string_view label) const;
  const InventoryCell& cell(std::string_view type_name, std::string_view label) const;

  std::string to_tsv() const;
  nlohmann::json to_json() const;
};

/// The maximal-subgroup classes as a table: label, type, order, class size.
std::string class_table_tsv(const std::vector<MaximalClass>& classes);

/// S8, S9, S10 or M12. Uses one representative per column plus arithmetic.
InventoryTable build_inventory(std::string_view group, std::uint64_t budget = kDefaultEnumerationBudget,
                               unsigned threads = 1);

/// Element/subgroup incidence: bit (i, j) is set when the generator of row i
/// lies in subgroup j. Columns are grouped by class in catalog order.
struct IncidenceMatrix {
  struct ColumnBlock {
    std::string class_label;
    std::size_t begin = 0;
    std::size_t end = 0;
  };

  std::vector<CyclicRep> rows;
  std::vector<std::string> column_labels;
  std::vector<ColumnBlock> blocks;
  std::vector<Bitset> row_bits;     // over columns
  std::vector<Bitset> column_bits;  // over rows

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return column_labels.size(); }
  std::uint64_t nonzeros() const;
  /// Number of ones of row i inside a column block.
  std::size_t row_degree_in(std::size_t row, const ColumnBlock& block) const;
};

/// Expanded classes, one entry per class; members as returned by
/// conjugacy_class_of_subgroup.
struct ExpandedClass {
  MaximalClass cls;
  std::vector<Subgroup> members;
};

std::vector<ExpandedClass> expand_classes(const PermGroup& G, const std::vector<MaximalClass>& classes,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Incidence of the universe against every member of the expanded classes.
/// Only elements of the universe's cycle types are conjugated.
IncidenceMatrix build_incidence(const std::vector<CyclicRep>& universe,
                                const std::vector<ExpandedClass>& classes,
                                std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 1);

IncidenceMatrix build_incidence(const std::vector<CyclicRep>& universe,
                                const std::vector<MaximalClass>& classes, const PermGroup& G,
                                std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 1);

/// Cyclic subgroups generated by elements of type t that lie in some member
/// of the expanded classes. Used where the ambient group is too large to
/// filter directly (J1).
std::vector<CyclicRep> universe_from_members(const std::vector<ExpandedClass>& classes, const CycleType& t,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace covnum
