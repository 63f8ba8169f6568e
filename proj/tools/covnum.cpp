#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covnum/catalog.hpp"
#include "covnum/classes.hpp"
#include "covnum/cover.hpp"
#include "covnum/ekr.hpp"
#include "covnum/error.hpp"
#include "covnum/golden.hpp"
#include "covnum/incidence.hpp"
#include "covnum/lp_format.hpp"
#include "covnum/theorems.hpp"
#include "json.hpp"

using namespace covnum;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 2;
constexpr int kInterval = 3;
constexpr int kInputError = 4;

struct Common {
  unsigned threads = 1;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::string format = "text";
  std::string out;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

/// "<group>:<cycle type>:<class list>" or "EKR".
struct InstanceRef {
  std::string group;
  std::string type;
  std::vector<std::string> classes;

  static InstanceRef parse(const std::string& text) {
    if (text == "EKR") return {"EKR", "", {}};
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ArgumentError("instance reference must be <group>:<type>:<classes> or EKR: " + text);
    return {parts[0], parts[1], split(parts[2], ',')};
  }
};

CoverInstance build(const InstanceRef& ref, const Common& c) {
  if (ref.group == "EKR") return ekr::triple_cover_instance(ekr::build_universe());
  const auto info = group_info(ref.group);
  const PermGroup G(info.generators);
  const auto all = maximal_classes(ref.group);
  if (ref.classes.empty()) throw ArgumentError("no subgroup classes given");
  std::vector<MaximalClass> cols;
  for (const auto& l : ref.classes) cols.push_back(find_class(all, l));
  const auto type = CycleType::parse(ref.type, info.degree);
  const auto universe = cyclic_reduce(elements_with_type(info, type, c.enumeration_budget));
  if (universe.empty()) throw ArgumentError("no elements of type " + type.to_string() + " in " + info.name);
  const auto m = build_incidence(universe, cols, G, c.enumeration_budget, c.threads);
  std::string name = info.name + ":" + type.to_string() + ":";
  for (std::size_t i = 0; i < ref.classes.size(); ++i) name += (i ? "," : "") + ref.classes[i];
  return CoverInstance::from_incidence(m, name);
}

std::ostream* output(const Common& c, std::ofstream& file) {
  if (c.out.empty()) return &std::cout;
  file.open(c.out);
  if (!file) throw Error("cannot write " + c.out);
  return &file;
}

// ------------------------------------------------------------------ inventory

int cmd_inventory(const std::string& group, const Common& c) {
  const auto info = group_info(group);
  const PermGroup G(info.generators);
  const auto classes = maximal_classes(group);
  std::vector<std::uint64_t> orders, sizes;
  for (const auto& cls : classes) {
    const auto order = build_chain(cls.representative).order();
    orders.push_back(order);
    if (G.order() <= c.enumeration_budget) {
      sizes.push_back(conjugacy_class_of_subgroup(G, cls, c.enumeration_budget).size());
    } else {
      // a maximal subgroup is normal or its own normalizer
      sizes.push_back(cls.family.kind == FamilyKind::alternating ? 1 : G.order() / order);
    }
  }

  std::optional<TableDiff> class_diff, inventory_diff;
  try {
    class_diff = diff_classes(info.name, classes, orders, sizes, G.order());
  } catch (const ArgumentError&) {
    // no reference class table
  }
  std::optional<InventoryTable> table;
  if (info.name != "S12" && info.name != "J1") {
    table = build_inventory(info.name, c.enumeration_budget, c.threads);
    try {
      inventory_diff = diff_inventory(*table, golden_inventory(info.name));
    } catch (const ArgumentError&) {
    }
  }

  std::ostringstream class_tsv;
  class_tsv << "Class\tType\tOrder\tClassSize\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    class_tsv << classes[i].label << '\t' << classes[i].isomorphism_type << '\t' << orders[i] << '\t' << sizes[i]
              << '\n';
  }

  if (!c.out.empty()) {
    const std::filesystem::path dir(c.out);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / (info.name + "-classes.tsv")) << class_tsv.str();
    if (table) {
      std::ofstream(dir / (info.name + "-inventory.tsv")) << table->to_tsv();
      std::ofstream(dir / (info.name + "-inventory.json")) << table->to_json().dump(2) << '\n';
    }
  }

  const bool passed = (!class_diff || class_diff->passed()) && (!inventory_diff || inventory_diff->passed());
  if (c.format == "json") {
    nlohmann::json j;
    j["group"] = info.name;
    j["classes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      j["classes"].push_back({{"label", classes[i].label},
                              {"type", classes[i].isomorphism_type},
                              {"order", orders[i]},
                              {"class_size", sizes[i]}});
    }
    if (table) j["inventory"] = table->to_json();
    const auto diff_json = [](const TableDiff& d) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& e : d.entries) {
        out.push_back({{"where", e.where},
                       {"computed", e.computed},
                       {"printed", e.printed},
                       {"identity", e.identity},
                       {"verdict", to_string(e.verdict)}});
      }
      return out;
    };
    if (class_diff) j["class_diff"] = diff_json(*class_diff);
    if (inventory_diff) j["inventory_diff"] = diff_json(*inventory_diff);
    j["passed"] = passed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << class_tsv.str() << '\n';
    if (table) std::cout << table->to_tsv() << '\n';
    if (class_diff) std::cout << "class table " << class_diff->render();
    if (inventory_diff) std::cout << "inventory " << inventory_diff->render();
    if (!table) std::cout << "no inventory table for " << info.name << '\n';
    std::cout << (passed ? "all checks pass" : "check mismatch") << '\n';
  }
  return passed ? kOk : kMismatch;
}

// ------------------------------------------------------------------------- lp

int cmd_lp(const InstanceRef& ref, std::size_t wrap, const Common& c) {
  const auto inst = build(ref, c);
  LpStats stats;
  if (c.out.empty()) {
    stats = write_lp(inst, std::cout, LpOptions{wrap});
    std::cerr << inst.name << "\trows " << stats.rows << "\tcolumns " << stats.columns << "\tnonzeros "
              << stats.nonzeros << '\n';
    return kOk;
  }
  std::ofstream file(c.out);
  if (!file) throw Error("cannot write " + c.out);
  stats = write_lp(inst, file, LpOptions{wrap});
  if (c.format == "json") {
    std::cout << nlohmann::json{{"instance", inst.name},
                                {"file", c.out},
                                {"rows", stats.rows},
                                {"columns", stats.columns},
                                {"nonzeros", stats.nonzeros}}
                     .dump()
              << '\n';
  } else {
    std::cout << inst.name << "\trows " << stats.rows << "\tcolumns " << stats.columns << "\tnonzeros "
              << stats.nonzeros << "\t" << c.out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------- solve

int cmd_solve(const InstanceRef& ref, const SolveBudget& budget, bool show, const Common& c) {
  const auto inst = build(ref, c);
  const auto sol = solve_exact(inst, budget);
  const bool optimal = sol.status == SolveStatus::optimal;
  std::vector<std::string> labels;
  for (auto j : sol.chosen) labels.push_back(inst.labels[j]);
  std::ofstream file;
  auto& out = *output(c, file);
  if (c.format == "json") {
    out << nlohmann::json{{"instance", inst.name},
                          {"status", to_string(sol.status)},
                          {"lower", sol.lower_bound},
                          {"upper", sol.upper_bound},
                          {"nodes", sol.nodes},
                          {"chosen", labels}}
               .dump()
        << '\n';
  } else {
    if (optimal) {
      out << "optimal " << sol.upper_bound << '\n';
    } else {
      out << "bounds [" << sol.lower_bound << ", " << sol.upper_bound << "]\n";
    }
    if (show) {
      for (const auto& l : labels) out << l << '\n';
    }
  }
  return optimal ? kOk : kInterval;
}

// --------------------------------------------------------------------- verify

int cmd_verify(const InstanceRef& ref, const std::string& certificate, const Common& c) {
  const auto inst = build(ref, c);
  std::ifstream in(certificate);
  if (!in) throw ArgumentError("cannot open certificate " + certificate);
  const auto chosen = read_cover_file(inst, in);
  const auto result = verify_indices(inst, chosen);
  if (c.format == "json") {
    nlohmann::json j{{"instance", inst.name}, {"sets", chosen.size()}, {"covers", result.covers}};
    if (result.uncovered) j["uncovered"] = *result.uncovered;
    std::cout << j.dump() << '\n';
  } else if (result.covers) {
    std::cout << "covers with " << chosen.size() << " sets\n";
  } else {
    std::cout << "does not cover: element " << *result.uncovered << " is uncovered\n";
  }
  return result.covers ? kOk : kMismatch;
}

// -------------------------------------------------------------------- theorem

int cmd_theorem(const std::string& group, TheoremOptions o, const Common& c) {
  o.threads = c.threads;
  o.enumeration_budget = c.enumeration_budget;
  if (!c.out.empty()) {
    o.output_dir = c.out;
    std::filesystem::create_directories(o.output_dir);
  }
  const auto r = check_theorem(group, o);
  if (c.format == "json") {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << r.to_text();
  }
  if (r.any_failed()) return kMismatch;
  return r.sigma ? kOk : kInterval;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covnum: covering numbers of small permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--enum-budget", common.enumeration_budget, "largest group the enumerators may walk")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_option("--out", common.out, "output file or directory");

  std::string group, instance, certificate, type, class_list;
  std::size_t wrap = 0;
  bool show = false;
  SolveBudget budget;
  TheoremOptions theorem;
  std::vector<std::string> certificates;
  std::int64_t node_budget = -1;

  auto* inventory = app.add_subcommand("inventory", "subgroup class table and inventory, diffed against the tables");
  inventory->add_option("group", group, "S8, S9, S10, S12, M12 or J1")->required();

  const auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance, "<group>:<type>:<classes>, EKR, or a group with --type/--classes")
        ->required();
    sub->add_option("--type", type, "cycle type of the elements, e.g. 3,6");
    sub->add_option("--classes", class_list, "comma-separated subgroup classes");
  };
  auto* lp = app.add_subcommand("lp", "write the cover instance in LP format");
  add_instance(lp);
  lp->add_option("--wrap", wrap, "break lines before this width (0: never)");

  auto* solve = app.add_subcommand("solve", "solve or bound a cover instance");
  add_instance(solve);
  solve->add_option("--nodes", budget.nodes, "branch and bound node budget");
  solve->add_option("--seconds", budget.seconds, "time budget")->check(CLI::NonNegativeNumber);
  solve->add_option("--heuristic-steps", budget.heuristic_steps, "local search steps for the incumbent");
  solve->add_flag("--show", show, "list the chosen sets");

  auto* verify = app.add_subcommand("verify", "check that a certificate covers an instance");
  add_instance(verify);
  verify->add_option("certificate", certificate, "one label or r<j> per line")->required();

  auto* thm = app.add_subcommand("theorem", "check every step of a covering number argument");
  thm->add_option("group", group, "S8, S9, S10, S12, M12 or J1")->required();
  thm->add_flag("--extended", theorem.extended, "run the exact solver on the large sub-instances");
  thm->add_option("--budget", node_budget, "node budget for the exact solver (0 skips it)");
  thm->add_option("--seconds", theorem.budget.seconds, "time budget for the exact solver");
  thm->add_option("--certificate", certificates, "GROUP=FILE cover for a sub-instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const auto ref = [&]() {
      if (instance.find(':') != std::string::npos || instance == "EKR") return InstanceRef::parse(instance);
      if (type.empty() || class_list.empty()) throw ArgumentError("give an instance reference or --type and --classes");
      return InstanceRef{instance, type, split(class_list, ',')};
    };
    if (*inventory) return cmd_inventory(group, common);
    if (*lp) return cmd_lp(ref(), wrap, common);
    if (*solve) return cmd_solve(ref(), budget, show, common);
    if (*verify) return cmd_verify(ref(), certificate, common);
    if (*thm) {
      for (const auto& entry : certificates) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw ArgumentError("certificate must be GROUP=FILE: " + entry);
        theorem.certificates[entry.substr(0, eq)] = entry.substr(eq + 1);
      }
      if (node_budget == 0) {
        theorem.extended = false;
      } else if (node_budget > 0) {
        theorem.extended = true;
        theorem.budget.nodes = static_cast<std::uint64_t>(node_budget);
      }
      return cmd_theorem(group, theorem, common);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kInterval;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
