#include "covnum/golden.hpp"

#include <charconv>
#include <sstream>

#include "covnum/error.hpp"

namespace covnum {

namespace {

using Rows = std::vector<GoldenRow>;

const std::vector<GoldenClassRow> kS8Classes{
    {"MS1", "A8", 20160, 1},          {"MS2", "S3 x S5", 720, 56},  {"MS3", "S2 x S6", 1440, 28},
    {"MS4", "S7", 5040, 8},           {"MS5", "S2 wr S4", 384, 105}, {"MS6", "S4 wr S2", 1152, 35},
    {"MS7", "PGL(2,7)", 336, 120},
};

const std::vector<GoldenClassRow> kS9Classes{
    {"MS1", "A9", 18140, 1},          {"MS2", "S4 x S5", 2880, 126}, {"MS3", "S3 x S6", 4320, 84},
    {"MS4", "S2 x C7", 10080, 36},    {"MS5", "S8", 40320, 9},       {"MS6", "S3 wr S3", 1296, 280},
    {"MS7", "AGL(2,3)", 432, 840},
};

const std::vector<GoldenClassRow> kS10Classes{
    {"MS1", "A10", 1814400, 1},       {"MS2", "S4 x S6", 17280, 210}, {"MS3", "S3 x S7", 30240, 120},
    {"MS4", "S2 x S8", 80640, 45},    {"MS5", "S9", 362880, 10},      {"MS6", "S2 wr S5", 3840, 945},
    {"MS7", "S5 wr S2", 28800, 126},  {"MS8", "PGammaL(2,9)", 1440, 2520},
};

const std::vector<GoldenClassRow> kS12Classes{
    {"MS1", "A12", 239500800, 1},      {"MS2", "S11", 39916800, 12},       {"MS3", "S10 x S2", 7257600, 66},
    {"MS4", "S9 x S3", 2177280, 220},  {"MS5", "S6 wr S2", 1036800, 462},  {"MS6", "S8 x S4", 967680, 495},
    {"MS7", "S7 x S5", 604800, 792},   {"MS8", "S4 wr S3", 82944, 5775},   {"MS9", "S2 wr S6", 46080, 10395},
    {"MS10", "S3 wr S4", 31104, 15400}, {"MS11", "PGL(2,11)", 1320, 362880},
};

const std::vector<GoldenClassRow> kM12Classes{
    {"MS1", "M11", 7920, 12},
    {"MS2", "M11", 7920, 12},
    {"MS3", "PGammaL(2,9)", 1440, 66},
    {"MS4", "PGammaL(2,9)", 1440, 66},
    {"MS5", "PSL(2,11)", 660, 144},
    {"MS6", "(C3 x C3):(C2 x S4)", 432, 220},
    {"MS7", "(C3 x C3):(C2 x S4)", 432, 220},
    {"MS8", "S5 x C2", 240, 396},
    {"MS9", "2^(1+4):S3", 192, 495},
    {"MS10", "(C4 x C4):D12", 192, 495},
    {"MS11", "A4 x S3", 72, 1320},
};

const GoldenInventory kS8Inventory{
    "S8",
    {"MS1", "MS2", "MS3", "MS4", "MS5", "MS6", "MS7"},
    Rows{
        {"ODD", 4, "(2^2,4)", 1260, {"0", "0", "90_2", "0", "36_3", "180_5", "0"}},
        {"ODD", 6, "(2,3)", 1120, {"0", "100_5", "160_4", "420_3", "0", "96_3", "0"}},
        {"ODD", 6, "(2,3^2)", 1120, {"0", "40_2", "40,P", "0", "32_3", "0", "0"}},
        {"ODD", 6, "(6)", 13360, {"0", "0", "120,P", "840_2", "32,P", "0", "56_2"}},
        {"ODD", 8, "(8)", 5040, {"0", "0", "0", "0", "48,P", "144,P", "84_2"}},
        {"ODD", 10, "(2,5)", 4032, {"0", "72,P", "144,P", "504,P", "0", "0", "0"}},
        {"ODD", 12, "(3,4)", 3360, {"0", "60,P", "0", "420,P", "0", "96,P", "0"}},
        {"EVEN", 4, "(2,4)", 2520, {"P", "90,P", "180_2", "630_2", "24,P", "72,P", "0"}},
        {"EVEN", 6, "(2,6)", 3360, {"P", "0", "120,P", "0", "32,P", "192_2", "0"}},
        {"EVEN", 7, "(7)", 5760, {"P", "0", "0", "720,P", "0", "0", "48,P"}},
        {"EVEN", 15, "(3,5)", 2688, {"P", "48,P", "0", "0", "0", "0", "0"}},
    },
};

const GoldenInventory kS9Inventory{
    "S9",
    {"MS2", "MS3", "MS4", "MS5", "MS6", "MS7"},
    Rows{
        {"ODD", 4, "(2^2,4)", 11340, {"180_2", "270_2", "630_2", "1260,P", "162_4", "0"}},
        {"ODD", 6, "(2,3)", 2520, {"220_11", "270_9", "490_7", "1120_4", "36_4", "0"}},
        {"ODD", 6, "(2,3^2)", 10080, {"160_2", "360_3", "280,P", "1120,P", "36,P", "0"}},
        {"ODD", 6, "(6)", 10080, {"0", "120,P", "840_3", "3360_3", "36,P", "56_2"}},
        {"ODD", 6, "(2^3,3)", 2520, {"60_3", "30,P", "210_3", "0", "36_4", "0"}},
        {"ODD", 6, "(3,6)", 20160, {"0", "240,P", "0", "0", "288_4", "72_3"}},
        {"ODD", 8, "(8)", 45360, {"0", "0", "0", "5040,P", "0", "108_2"}},
        {"ODD", 10, "(2,5)", 18144, {"144,P", "432_2", "1008_2", "4032_2", "0", "0"}},
        {"ODD", 12, "(3,4)", 15120, {"360", "180,P", "420,P", "3360_2", "0", "0"}},
        {"ODD", 14, "(2,7)", 25920, {"0", "0", "720,P", "0", "0", "0"}},
        {"ODD", 20, "(4,5)", 18144, {"144,P", "0", "0", "0", "0", "0"}},
    },
};

const GoldenInventory kS10Inventory{
    "S10",
    {"MS1", "MS2", "MS3", "MS4", "MS5", "MS6", "MS7", "MS8"},
    Rows{
        {"ODD", 4, "(2^2,4)", 56700, {"0", "1080_4", "1890_4", "3780_3", "11340_2", "180_3", "900_2", "0"}},
        {"ODD", 4, "(2,4^2)", 56700, {"0", "540_2", "0", "1260,P", "0", "300_5", "1800_4", "90_4"}},
        {"ODD", 6, "(2^3,3)", 25200, {"0", "480_4", "840_4", "1680_3", "2520,P", "0", "600_3", "0"}},
        {"ODD", 6, "(2,3^2)", 50400, {"0", "1200_5", "1680_4", "2240_2", "10080_2", "160_3", "800_2", "0"}},
        {"ODD", 6, "(2^2,6)", 75600, {"0", "360,P", "0", "3360_2", "0", "240_3", "2400_4", "0"}},
        {"ODD", 6, "(3,6)", 201600, {"0", "960,P", "1680,P", "0", "20160,P", "0", "0", "240_3"}},
        {"ODD", 8, "(8)", 226800, {"0", "0", "0", "5040,P", "45360", "240,P", "0", "180_2"}},
        {"ODD", 10, "(10)", 362880, {"0", "0", "0", "0", "0", "384,P", "2880,P", "144,P"}},
        {"ODD", 12, "(3^2,4)", 50400, {"0", "240,P", "840_2", "0", "0", "160_3", "0", "0"}},
        {"ODD", 14, "(2,7)", 259200, {"0", "0", "2160,P", "5760,P", "25920,P", "0", "0", "0"}},
        {"ODD", 20, "(4,5)", 181440, {"0", "964,P", "0", "0", "18144,P", "0", "1440,P", "0"}},
        {"ODD", 30, "(2,3,5)", 120960, {"0", "0", "1008,P", "2688,P", "0", "0", "960,P", "0"}},
        {"EVEN", 6, "(2,6)", 151200, {"P", "720,P", "72520_2", "6720_2", "30240_2", "160,P", "0", "0"}},
        {"EVEN", 8, "(8,2)", 226800, {"P", "0", "0", "5040,P", "0", "240,P", "3600_2", "180_2"}},
        {"EVEN", 9, "(9)", 403200, {"P", "0", "0", "0", "40320,P", "0", "0", "0"}},
        {"EVEN", 12, "(4,6)", 151200, {"P", "720,P", "0", "0", "0", "160,P", "2400_2", "0"}},
        {"EVEN", 12, "(2,3,4)", 151200, {"P", "1440_2", "2520_2", "3360,P", "15120,P", "0", "1200,P", "0"}},
        {"EVEN", 21, "(3,7)", 172800, {"P", "0", "1440,P", "0", "0", "0", "0", "0"}},
    },
};

const GoldenInventory kM12Inventory{
    "M12",
    {"MS1", "MS2", "MS3", "MS4", "MS5", "MS6", "MS7", "MS8", "MS9", "MS10", "MS11"},
    Rows{
        {"", 6, "(2,3,6)", 15840, {"1320,P", "1320,P", "240,P", "240,P", "0", "144", "144", "0", "32,P", "0", "24"}},
        {"", 6, "(6,6)", 7920, {"0", "0", "0", "0", "110_2", "0", "0", "60", "0", "32", "6,P"}},
        {"", 8, "(8,2)", 11880, {"0", "1980", "0", "360", "0", "0", "108", "0", "24,P", "24,P", "0"}},
        {"", 8, "(4,8)", 11880, {"1980", "0", "360", "0", "0", "108", "0", "0", "24,P", "24,P", "0"}},
        {"", 10, "(2,10)", 9504, {"0", "0", "144,P", "144,P", "0", "0", "0", "24,P", "0", "0", "0"}},
        {"", 11, "(11)", 17280, {"1440,P", "1440,P", "0", "0", "120,P", "0", "0", "0", "0", "0", "0"}},
    },
};

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad number in table cell: '" + std::string(text) + "'");
  }
  return v;
}

/// The identity check on a printed cell, against the true element class
/// size. Empty when the printed cell is internally consistent.
std::string identity_failure(const PrintedCell& p, std::uint64_t subgroups, std::uint64_t elements) {
  if (p.whole_class || p.s == 0) return {};
  const std::uint64_t lhs = p.s * subgroups;
  std::ostringstream out;
  if (lhs % elements != 0) {
    out << p.s << "*" << subgroups << " is not a multiple of " << elements;
    return out.str();
  }
  const std::uint64_t k = lhs / elements;
  if (p.k && *p.k != k) {
    out << p.s << "*" << subgroups << " != " << *p.k << "*" << elements;
    return out.str();
  }
  if (p.partition && k != 1) {
    out << "P requires k = 1, identity gives k = " << k;
    return out.str();
  }
  return {};
}

bool agrees(const PrintedCell& p, const InventoryCell& c) {
  if (p.whole_class) return c.whole_class;
  if (p.s != c.s) return false;
  if (p.k && *p.k != c.k) return false;
  if (p.partition && !c.partition) return false;
  return true;
}

}  // namespace

const std::vector<GoldenClassRow>& golden_classes(std::string_view group) {
  if (group == "S8") return kS8Classes;
  if (group == "S9") return kS9Classes;
  if (group == "S10") return kS10Classes;
  if (group == "S12") return kS12Classes;
  if (group == "M12") return kM12Classes;
  throw ArgumentError("no reference class table for " + std::string(group));
}

const GoldenInventory& golden_inventory(std::string_view group) {
  if (group == "S8") return kS8Inventory;
  if (group == "S9") return kS9Inventory;
  if (group == "S10") return kS10Inventory;
  if (group == "M12") return kM12Inventory;
  throw ArgumentError("no reference inventory for " + std::string(group));
}

PrintedCell PrintedCell::parse(std::string_view text) {
  PrintedCell cell;
  if (text == "P") {
    cell.whole_class = true;
    cell.partition = true;
    cell.k = 1;
    return cell;
  }
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    if (text.substr(comma + 1) != "P") throw ParseError("bad table cell: '" + std::string(text) + "'");
    cell.s = parse_u64(text.substr(0, comma));
    cell.partition = true;
    cell.k = 1;
    return cell;
  }
  if (const auto bar = text.find('_'); bar != std::string_view::npos) {
    cell.s = parse_u64(text.substr(0, bar));
    cell.k = parse_u64(text.substr(bar + 1));
    return cell;
  }
  cell.s = parse_u64(text);
  return cell;
}

std::string to_string(DiffVerdict v) {
  switch (v) {
    case DiffVerdict::agree: return "agree";
    case DiffVerdict::erratum: return "erratum";
    case DiffVerdict::mismatch: return "MISMATCH";
  }
  return "?";
}

bool TableDiff::passed() const {
  for (const auto& e : entries) {
    if (e.verdict == DiffVerdict::mismatch) return false;
  }
  return true;
}

std::vector<std::string> TableDiff::flagged() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.verdict == DiffVerdict::erratum) out.push_back(e.where);
  }
  return out;
}

bool TableDiff::is_flagged(std::string_view where) const {
  for (const auto& e : entries) {
    if (e.verdict == DiffVerdict::erratum && e.where == where) return true;
  }
  return false;
}

std::string TableDiff::render() const {
  std::ostringstream out;
  out << group << ": " << compared << " entries compared, " << entries.size() << " differ\n";
  for (const auto& e : entries) {
    out << "  " << to_string(e.verdict) << "  " << e.where << "  computed " << e.computed << "  printed "
        << e.printed;
    if (!e.identity.empty()) out << "  identity: " << e.identity;
    out << '\n';
  }
  return out.str();
}

TableDiff diff_classes(std::string_view group, const std::vector<MaximalClass>& classes,
                       const std::vector<std::uint64_t>& computed_orders,
                       const std::vector<std::uint64_t>& computed_sizes, std::uint64_t group_order) {
  const auto& golden = golden_classes(group);
  TableDiff diff;
  diff.group = std::string(group);
  if (classes.size() != golden.size() || computed_sizes.size() != classes.size() ||
      computed_orders.size() != classes.size()) {
    throw ArgumentError("class table shape differs from the reference one for " + diff.group);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& g = golden[i];
    const auto& c = classes[i];
    // |G| / class size is the normalizer order, which the subgroup order divides
    const bool printed_consistent = g.class_size != 0 && group_order % g.class_size == 0 &&
                                    (group_order / g.class_size) % g.order == 0;
    const std::string identity =
        printed_consistent ? "" : "|G|/" + std::to_string(g.class_size) + " is not a multiple of " +
                                      std::to_string(g.order);
    const auto add = [&](std::string what, std::string computed, std::string printed, bool numeric_ok) {
      ++diff.compared;
      if (computed == printed) return;
      diff.entries.push_back({c.label + " " + what, std::move(computed), std::move(printed), identity,
                              numeric_ok ? DiffVerdict::erratum : DiffVerdict::mismatch});
    };
    add("order", std::to_string(computed_orders[i]), std::to_string(g.order), !printed_consistent);
    add("class size", std::to_string(computed_sizes[i]), std::to_string(g.class_size), !printed_consistent);
    // a type name that contradicts an order column we reproduce is a text slip
    const bool numbers_agree = computed_orders[i] == c.expected_order && computed_sizes[i] == g.class_size;
    if (c.isomorphism_type != g.type) {
      ++diff.compared;
      diff.entries.push_back({c.label + " type", c.isomorphism_type, g.type,
                              "name does not match the order column " + std::to_string(c.expected_order),
                              numbers_agree ? DiffVerdict::erratum : DiffVerdict::mismatch});
    } else {
      ++diff.compared;
    }
  }
  return diff;
}

TableDiff diff_inventory(const InventoryTable& table, const GoldenInventory& golden) {
  TableDiff diff;
  diff.group = table.group;
  const int degree = table.rows.empty() ? 0 : table.rows.front().type.degree();
  for (const auto& g : golden.rows) {
    const CycleType type = CycleType::parse(g.type, degree);
    const InventoryRow* row = nullptr;
    for (const auto& r : table.rows) {
      if (r.type == type) row = &r;
    }
    const std::string name = type.to_string();
    ++diff.compared;
    if (!row) {
      diff.entries.push_back({name, "(no row)", g.type, "", DiffVerdict::mismatch});
      continue;
    }
    if (row->size != g.size) {
      // the computed size is n!/prod(m^k k!) (or an orbit count), so a
      // differing printed size is a misprint of that formula
      diff.entries.push_back({name + " size", std::to_string(row->size), std::to_string(g.size),
                              "class size formula gives " + std::to_string(row->size), DiffVerdict::erratum});
    }
    ++diff.compared;
    if (row->element_order != g.order) {
      diff.entries.push_back({name + " order", std::to_string(row->element_order), std::to_string(g.order), "",
                              DiffVerdict::mismatch});
    }
    if (!g.parity.empty()) {
      ++diff.compared;
      const std::string parity = row->odd ? "ODD" : "EVEN";
      if (parity != g.parity) diff.entries.push_back({name + " parity", parity, g.parity, "", DiffVerdict::mismatch});
    }
    for (std::size_t j = 0; j < golden.columns.size(); ++j) {
      const std::size_t col = table.column_index(golden.columns[j]);
      const InventoryCell& cell = row->cells[col];
      const PrintedCell printed = PrintedCell::parse(g.cells[j]);
      ++diff.compared;
      if (agrees(printed, cell)) continue;
      const std::string failure = identity_failure(printed, table.columns[col].expected_class_size, row->size);
      diff.entries.push_back({name + " x " + golden.columns[j], cell.render(), g.cells[j], failure,
                              failure.empty() ? DiffVerdict::mismatch : DiffVerdict::erratum});
    }
  }
  return diff;
}

}  // namespace covnum
