#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hplus/groups.hpp"

namespace hplus {

/// A partition of k upper points U1..Uk and l lower points L1..Ll that is
/// non-crossing in the rectangle picture.
///
/// Points are numbered 0..k-1 for U1..Uk and k..k+l-1 for L1..Ll. Blocks are
/// kept sorted internally and ordered by their smallest point, so structurally
/// equal partitions compare equal.
class NCPartition {
 public:
  using Block = std::vector<std::size_t>;

  NCPartition() = default;
  /// Validates coverage and the non-crossing condition.
  NCPartition(std::size_t k, std::size_t l, std::vector<Block> blocks);

  /// All points in one block, for every (k, l).
  static NCPartition one_block(std::size_t k, std::size_t l);
  /// k vertical strings U_i–L_i.
  static NCPartition identity(std::size_t k);
  /// Nested pairing of 2n lower points: L_i with L_{2n+1-i}.
  static NCPartition nested_pairing(std::size_t n);

  std::size_t upper() const { return k_; }
  std::size_t lower() const { return l_; }
  std::size_t points() const { return k_ + l_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  bool is_upper(std::size_t point) const { return point < k_; }
  /// "U3", "L1", ...
  std::string point_name(std::size_t point) const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
  friend auto operator<=>(const NCPartition&, const NCPartition&) = default;

 private:
  std::size_t k_ = 0;
  std::size_t l_ = 0;
  std::vector<Block> blocks_;
};

/// Position of a point in the circular order U1..Uk, Ll..L1.
std::size_t circular_position(std::size_t k, std::size_t l, std::size_t point);

/// True when no two blocks interleave in the circular order.
bool is_noncrossing(std::size_t k, std::size_t l, const std::vector<NCPartition::Block>& blocks);

inline constexpr std::size_t kDefaultPartitionLimit = 12;

/// Every non-crossing partition of NC(k, l), in a fixed order. There are
/// Catalan(k + l) of them; throws ResourceCap when k + l exceeds the limit.
std::vector<NCPartition> enumerate_nc(std::size_t k, std::size_t l, std::size_t limit = kDefaultPartitionLimit);

/// Horizontal concatenation, q to the right of p.
NCPartition tensor(const NCPartition& p, const NCPartition& q);
/// Upside-down turning.
NCPartition involute(const NCPartition& p);

struct Composition {
  NCPartition partition;
  std::size_t closed_blocks = 0;
};

/// Vertical concatenation pq for p ∈ NC(l, m), q ∈ NC(k, l): q on top, the
/// middle row removed. closed_blocks counts the components that touch neither
/// the new upper nor the new lower row.
Composition compose(const NCPartition& p, const NCPartition& q);

/// Number of blocks of the finest partition coarser than both p and q (same shape).
std::size_t join_block_count(const NCPartition& p, const NCPartition& q);

// Decorations ----------------------------------------------------------------

struct Decoration {
  std::vector<GroupElement> upper;
  std::vector<GroupElement> lower;
};

struct Flavor {
  enum class Kind {
    nc_gamma,        ///< per block: product of upper labels = product of lower labels
    nc_gamma_prime,  ///< nc_gamma, and each block has <= 1 upper and >= 1 lower point
    nc_s,            ///< per block: sums agree modulo s (s = 0 means in Z)
    nc_star,         ///< nc_gamma, and each block is decorated by some g and g^{-1} only
  };
  Kind kind = Kind::nc_gamma;
  std::int64_t s = 0;

  static Flavor gamma() { return {Kind::nc_gamma, 0}; }
  static Flavor gamma_prime() { return {Kind::nc_gamma_prime, 0}; }
  static Flavor star() { return {Kind::nc_star, 0}; }
  static Flavor sum_mod(std::int64_t s) { return {Kind::nc_s, s}; }
};

/// Parses "nc_gamma", "nc_gamma_prime", "nc_star" or "nc_s:<s>".
Flavor parse_flavor(const std::string& text);

/// Block products use left-to-right point order within each row; the empty
/// product is e.
bool is_admissible(const NCPartition& p, const Decoration& dec, const Flavor& flavor, const Group& group);

/// Number of partitions in NC(|upper|, |lower|) admissible for the decoration.
std::uint64_t count_admissible(const std::vector<GroupElement>& upper, const std::vector<GroupElement>& lower,
                               const Flavor& flavor, const Group& group,
                               std::size_t limit = kDefaultPartitionLimit);

/// The admissible partitions themselves.
std::vector<NCPartition> admissible_partitions(const std::vector<GroupElement>& upper,
                                               const std::vector<GroupElement>& lower, const Flavor& flavor,
                                               const Group& group, std::size_t limit = kDefaultPartitionLimit);

}  // namespace hplus
