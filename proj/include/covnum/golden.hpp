#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/catalog.hpp"
#include "covnum/incidence.hpp"

namespace covnum {

/// Reference tables, transcribed verbatim (including their misprints) so that
/// computed tables can be diffed against them. Never used as inputs.
struct GoldenClassRow {
  std::string label;
  std::string type;
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
};

struct GoldenRow {
  std::string parity;  // "ODD", "EVEN" or empty
  std::uint64_t order = 0;
  std::string type;
  std::uint64_t size = 0;
  std::vector<std::string> cells;
};

struct GoldenInventory {
  std::string group;
  std::vector<std::string> columns;
  std::vector<GoldenRow> rows;
};

/// S8, S9, S10, S12, M12.
const std::vector<GoldenClassRow>& golden_classes(std::string_view group);
/// S8, S9 (odd rows only), S10, M12.
const GoldenInventory& golden_inventory(std::string_view group);

/// A printed cell: "0", "P", "240,P", "100_5" or a bare "1980".
struct PrintedCell {
  std::uint64_t s = 0;
  std::optional<std::uint64_t> k;
  bool partition = false;
  bool whole_class = false;

  static PrintedCell parse(std::string_view text);
};

enum class DiffVerdict { agree, erratum, mismatch };

std::string to_string(DiffVerdict v);

/// One compared entry: computed value, printed value and the identity check
/// on the printed value.
struct DiffEntry {
  std::string where;  // "(2,6) x MS3", "MS1 order", ...
  std::string computed;
  std::string printed;
  std::string identity;
  DiffVerdict verdict = DiffVerdict::agree;
};

struct TableDiff {
  std::string group;
  std::size_t compared = 0;
  std::vector<DiffEntry> entries;  // everything that did not agree

  bool passed() const;  // no unexplained mismatch
  std::vector<std::string> flagged() const;
  bool is_flagged(std::string_view where) const;
  std::string render() const;
};

/// Compares class orders, class sizes and type names. `computed_sizes[i]`
/// belongs to classes[i]; `group_order` is |G|.
TableDiff diff_classes(std::string_view group, const std::vector<MaximalClass>& classes,
                       const std::vector<std::uint64_t>& computed_orders,
                       const std::vector<std::uint64_t>& computed_sizes, std::uint64_t group_order);

TableDiff diff_inventory(const InventoryTable& table, const GoldenInventory& golden);

}  // namespace covnum
