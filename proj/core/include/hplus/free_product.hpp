#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hplus/bigint.hpp"
#include "hplus/groups.hpp"

namespace hplus {

/// A fusion ring used as one factor of a free product. Irreducibles are named
/// by string labels.
class ComponentRing {
 public:
  virtual ~ComponentRing() = default;

  virtual std::string name() const = 0;
  virtual std::string trivial() const = 0;
  virtual std::string conjugate(const std::string& label) const = 0;
  /// Irreducible decomposition of z ⊗ z' with multiplicities.
  virtual std::map<std::string, BigInt> fuse(const std::string& z, const std::string& zp) const = 0;
  virtual bool is_label(const std::string& label) const = 0;
};

/// Irreducibles v^(t), t ∈ N, labelled by the decimal string of t.
class SO3Ring final : public ComponentRing {
 public:
  std::string name() const override { return "so3"; }
  std::string trivial() const override { return "0"; }
  std::string conjugate(const std::string& label) const override { return label; }
  std::map<std::string, BigInt> fuse(const std::string& z, const std::string& zp) const override;
  bool is_label(const std::string& label) const override;
};

/// Dual of a discrete group: one-dimensional irreducibles labelled by elements,
/// g ⊗ h = gh.
class GroupDualRing final : public ComponentRing {
 public:
  explicit GroupDualRing(Group group) : group_(std::move(group)) {}

  std::string name() const override { return "dual(" + group_.spec() + ")"; }
  std::string trivial() const override { return group_.format_element(group_.identity()); }
  std::string conjugate(const std::string& label) const override;
  std::map<std::string, BigInt> fuse(const std::string& z, const std::string& zp) const override;
  bool is_label(const std::string& label) const override;

 private:
  Group group_;
};

struct FreeLetter {
  std::size_t component = 0;
  std::string label;

  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

using AlternatingWord = std::vector<FreeLetter>;

/// Irreducibles of a free product: alternating words of nontrivial letters.
class FreeProductRing {
 public:
  explicit FreeProductRing(std::vector<std::shared_ptr<const ComponentRing>> components);

  std::size_t component_count() const { return components_.size(); }
  const ComponentRing& component(std::size_t i) const;

  /// Adjacent letters from different components, no trivial letter.
  bool is_alternating(const AlternatingWord& w) const;

  /// x = v z, y = z' w. Concatenates when z and z' come from different
  /// components; otherwise Σ_{1 ≠ t ⊂ z⊗z'} v t w + δ_{z̄,z'} (v ⊗ w).
  std::map<AlternatingWord, BigInt> fuse(const AlternatingWord& x, const AlternatingWord& y) const;

 private:
  void fuse_into(const AlternatingWord& x, const AlternatingWord& y, const BigInt& scale,
                 std::map<AlternatingWord, BigInt>& out) const;

  std::vector<std::shared_ptr<const ComponentRing>> components_;
};

}  // namespace hplus
