#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hplus {

/// An element of one of the supported discrete groups.
///
/// Cyclic, integer and table elements are stored as a single integer (a residue,
/// a signed value, or a row index). Free-group elements are freely reduced words
/// over the generators, encoded as +i for x_i and -i for x_i^{-1} (i >= 1).
class GroupElement {
 public:
  using FreeWord = std::vector<int>;

  GroupElement() = default;
  explicit GroupElement(std::int64_t value) : rep_(value) {}
  explicit GroupElement(FreeWord word) : rep_(std::move(word)) {}

  bool is_scalar() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::int64_t scalar() const;
  const FreeWord& free_word() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::variant<std::int64_t, FreeWord> rep_{std::int64_t{0}};
};

/// Multiplication table of a finite group, validated on construction.
struct GroupTable {
  std::vector<std::string> names;
  std::size_t identity = 0;
  std::vector<std::uint32_t> mul;  // row-major, mul[a * n + b] = a·b
  std::vector<std::uint32_t> inverse;

  std::size_t order() const { return names.size(); }
  std::uint32_t product(std::size_t a, std::size_t b) const { return mul[a * order() + b]; }
};

/// A discrete group with decidable equality. Immutable once built; copies share
/// the table storage.
class Group {
 public:
  enum class Kind { cyclic, integers, table, free };

  static Group cyclic(std::int64_t order);
  static Group trivial() { return cyclic(1); }
  static Group integers();
  static Group free(int rank);
  /// Validates the group axioms; throws InvalidArgument naming the failing axiom.
  static Group from_table(GroupTable table);
  static Group from_table_json(const nlohmann::json& doc);
  static Group load_table(const std::filesystem::path& path);

  Kind kind() const { return kind_; }
  /// Group order, or nullopt for infinite groups.
  std::optional<std::uint64_t> order() const;
  bool is_finite() const { return order().has_value(); }
  std::int64_t modulus() const { return modulus_; }
  int rank() const { return rank_; }
  const GroupTable& table() const;

  /// Spec string that parse_group_spec maps back to this group.
  std::string spec() const { return spec_; }

  bool contains(const GroupElement& g) const;

  GroupElement identity() const;
  bool is_identity(const GroupElement& g) const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  GroupElement pow(const GroupElement& g, std::int64_t n) const;

  /// Smallest n >= 1 with g^n = e, or nullopt when g has infinite order.
  std::optional<std::uint64_t> element_order(const GroupElement& g) const;

  /// All elements, identity first. Throws InvalidArgument for infinite groups.
  std::vector<GroupElement> enumerate() const;

  /// Generators and their inverses (free), {±1, ±2} (integers), everything (finite).
  /// Always starts with the identity.
  std::vector<GroupElement> sample_alphabet() const;

  GroupElement parse_element(std::string_view token) const;
  std::string format_element(const GroupElement& g) const;

 private:
  Group() = default;
  void check(const GroupElement& g) const;

  Kind kind_ = Kind::cyclic;
  std::int64_t modulus_ = 1;
  int rank_ = 0;
  std::shared_ptr<const GroupTable> table_;
  std::string spec_;
};

bool operator==(const Group& a, const Group& b);

/// Parses `trivial`, `cyclic:<s>`, `integers`, `free:<n>` or `table:<path>`.
Group parse_group_spec(std::string_view spec);

}  // namespace hplus
