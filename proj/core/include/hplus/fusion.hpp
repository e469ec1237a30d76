#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "hplus/bigint.hpp"
#include "hplus/groups.hpp"
#include "hplus/words.hpp"

namespace hplus {

/// An element of the fusion ring: a finite integer combination of basis
/// vectors b_x, one per word x. Zero coefficients are never stored and terms
/// iterate in word order, so equal elements serialize identically.
class FusionElement {
 public:
  using Terms = std::map<Word, BigInt>;

  FusionElement() = default;

  /// b_∅, the unit for the fusion product.
  static FusionElement unit();
  static FusionElement basis(Word w, const BigInt& coeff = 1);

  void add(const Word& w, const BigInt& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of b_x (zero when absent).
  BigInt coefficient(const Word& x) const;
  /// Coefficient of b_∅, i.e. the multiplicity of the trivial corepresentation.
  BigInt trivial_multiplicity() const { return coefficient(Word{}); }

  std::vector<Word> support() const;

  FusionElement& operator+=(const FusionElement& other);
  FusionElement& operator-=(const FusionElement& other);
  FusionElement& operator*=(const BigInt& scalar);

  friend FusionElement operator+(FusionElement a, const FusionElement& b) { return a += b; }
  friend FusionElement operator-(FusionElement a, const FusionElement& b) { return a -= b; }
  friend FusionElement operator*(FusionElement a, const BigInt& s) { return a *= s; }
  friend bool operator==(const FusionElement& a, const FusionElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// b_x ⊗ b_y. For every split x = (u, t), y = (involute(t), v) the result gets
/// b_{(u,v)}, plus b_{u·v} when u and v are both nonempty.
FusionElement fuse_basis(const Group& group, const Word& x, const Word& y);

/// Bilinear extension of fuse_basis.
FusionElement product(const Group& group, const FusionElement& a, const FusionElement& b);

/// b_x -> b_{involute(x)}, coefficients unchanged.
FusionElement conjugate(const Group& group, const FusionElement& a);

enum class GeneratorMode {
  omega,  ///< ω(g_1) ⊗ ... ⊗ ω(g_k)
  a_rep,  ///< a(g_1) ⊗ ... ⊗ a(g_k) with a(g) = ω(g) ⊕ δ_{g,e} 1
};

/// Tensor product of the one-letter corepresentations; the empty list gives 1.
FusionElement decompose_generator_product(const Group& group, const std::vector<GroupElement>& gs,
                                          GeneratorMode mode);

/// Fusion computed in the a/z calculus:
///   v a z_g ⊗ z_h a w = v a z_{gh} a w + δ_{gh,e} (v ⊗ w),
/// where a trailing (leading) a is read as a z_e (z_e a). Both inputs must lie in
/// the block submonoid; the result is translated back to words.
FusionElement fuse_mprime(const Group& group, const MPrimeWord& x, const MPrimeWord& y);

/// The same product kept in reduced a/z form.
std::map<MPrimeWord, BigInt> fuse_mprime_reduced(const Group& group, const MPrimeWord& x, const MPrimeWord& y);

/// SO(3)-type rule v^(s) ⊗ v^(t) = ⊕_{k=0}^{2 min(s,t)} v^(s+t-k). Returns the
/// labels in decreasing order, each with multiplicity one.
std::vector<std::uint64_t> snplus_fuse(std::uint64_t s, std::uint64_t t);

using ResidueWord = std::vector<std::int64_t>;

/// Fusion rule of the quantum reflection group over Z_s (s = 0 means Z):
///   ρ_x ⊗ ρ_y = Σ_{x=vz, y=z̄w} ρ_{vw} + Σ_{x=vz, y=z̄w, v,w≠∅} ρ_{v·w}.
/// Works on raw residues so it stays independent of fuse_basis.
std::map<ResidueWord, BigInt> hsn_fuse(const ResidueWord& x, const ResidueWord& y, std::int64_t s);

/// hsn_fuse with words over Group::cyclic(s) (or Group::integers() when s = 0).
FusionElement hsn_fuse(const Group& group, const Word& x, const Word& y);

// Support-set combinatorics -------------------------------------------------

using SupportSet = std::set<Word>;

/// A ∘ B: every word occurring in some b_α ⊗ b_β with α ∈ A, β ∈ B.
SupportSet support_product(const Group& group, const SupportSet& a, const SupportSet& b);

enum class Region {
  E2,         ///< all letters e (including the empty word)
  E3,         ///< starts with e, not all e
  G2,         ///< starts and ends with a non-identity letter
  G1_not_G2,  ///< starts with a non-identity letter, ends with e
};

Region classify_word(const Group& group, const Word& w);
std::string_view region_name(Region r);

/// Starts with a non-identity letter (G_1 = G_2 ⊔ G_1∖G_2).
bool in_G1(const Group& group, const Word& w);
/// Starts with e or is empty (E_1 = E_2 ⊔ E_3).
bool in_E1(const Group& group, const Word& w);

}  // namespace hplus
