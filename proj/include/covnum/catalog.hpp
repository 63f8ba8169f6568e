#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covnum/permutation.hpp"
#include "covnum/stabilizer_chain.hpp"

namespace covnum {

enum class FamilyKind { alternating, intransitive, imprimitive, primitive_data, sporadic_data };

std::string to_string(FamilyKind kind);

struct SubgroupFamily {
  FamilyKind kind = FamilyKind::alternating;
  std::vector<std::vector<Point>> blocks;  // intransitive: the orbit partition
  int block_size = 0;                      // imprimitive: a
  int block_count = 0;                     // imprimitive: b
  std::string file_key;                    // data families

  std::string describe() const;
};

/// One conjugacy class of maximal subgroups.
struct MaximalClass {
  std::string label;  // "MS1", "MS2", ...
  std::string isomorphism_type;
  SubgroupFamily family;
  std::vector<Permutation> representative;
  std::uint64_t expected_order = 0;
  std::uint64_t expected_class_size = 0;
};

/// An ambient group from the catalog.
struct GroupInfo {
  std::string name;
  int degree = 0;
  std::uint64_t order = 0;
  bool symmetric = false;  // S_n, where element classes are cycle types
  std::vector<Permutation> generators;
};

/// Directory holding the generator fixtures: $COVNUM_DATA_DIR when set,
/// else the directory configured at build time.
std::filesystem::path data_dir();

std::vector<Permutation> symmetric_group(int n);
/// Direct product of the symmetric groups on the blocks. Throws
/// ArgumentError unless the blocks partition {1..n}.
std::vector<Permutation> young_subgroup(int n, const std::vector<std::vector<Point>>& blocks);
/// Stabilizer of the block system {1..a}, {a+1..2a}, ... ; order (a!)^b b!.
std::vector<Permutation> wreath_imprimitive(int a, int b, int n);
/// Generated by the 3-cycles (1,2,k).
std::vector<Permutation> alternating_group(int n);

struct GeneratorFile {
  int degree = 0;
  std::vector<std::string> comments;
  std::vector<Permutation> generators;
};

/// Reads "degree <n>" then one permutation per line; '#' starts a comment line.
GeneratorFile read_generator_file(const std::filesystem::path& path);

/// Loads data_dir()/<key>.gens. When expected_order is given the generated
/// order is checked and a DataError raised on mismatch.
std::vector<Permutation> load_generators(std::string_view key,
                                         std::optional<std::uint64_t> expected_order = std::nullopt);

/// "S8", "S9", "S10", "S12", "M12", "J1". Throws ArgumentError otherwise.
GroupInfo group_info(std::string_view name);

/// The maximal-subgroup classes with labels, families and expected sizes.
/// For J1 only the classes shipped as data are listed (MS1 PSL(2,11),
/// MS2 2^3:7:3, MS4 19:6, MS6 S3 x D10).
std::vector<MaximalClass> maximal_classes(std::string_view group);

const MaximalClass& find_class(const std::vector<MaximalClass>& classes, std::string_view label);

/// Builds the representative's group and checks its order.
PermGroup representative_group(const MaximalClass& cls);

/// One member H^c of a class of conjugate subgroups.
struct Subgroup {
  std::string class_label;
  std::size_t index = 0;    // 0-based position in the sorted class
  Permutation conjugator;   // this subgroup is c^-1 H c for the class representative H
  std::vector<std::uint64_t> key;

  std::string label() const { return class_label + "#" + std::to_string(index + 1); }
  std::vector<Permutation> generators(const MaximalClass& cls) const;
};

/// The distinct conjugates of the class representative under G, sorted by
/// canonical key. Refused with BudgetExceeded when |G| exceeds the budget.
std::vector<Subgroup> conjugacy_class_of_subgroup(const PermGroup& G, const MaximalClass& cls,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Same, for an arbitrary subgroup keyed by its element hashes.
std::vector<Subgroup> conjugacy_class_of_subgroup(const PermGroup& G,
                                                  const std::vector<Permutation>& H,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace covnum
