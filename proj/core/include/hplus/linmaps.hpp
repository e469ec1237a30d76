#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hplus/bigint.hpp"
#include "hplus/groups.hpp"
#include "hplus/ncpart.hpp"

namespace hplus {

/// Sparse matrix over Q. Only nonzero entries are stored, ordered by (row, col).
class SparseExactMatrix {
 public:
  using Index = std::pair<std::uint64_t, std::uint64_t>;
  using Entries = std::map<Index, Rational>;

  SparseExactMatrix() = default;
  SparseExactMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

  static SparseExactMatrix identity(std::uint64_t n);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  const Entries& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  Rational get(std::uint64_t r, std::uint64_t c) const;
  /// Setting zero erases the entry.
  void set(std::uint64_t r, std::uint64_t c, const Rational& v);

  friend bool operator==(const SparseExactMatrix&, const SparseExactMatrix&) = default;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  Entries entries_;
};

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b);
/// Kronecker product; a's indices are the more significant digits.
SparseExactMatrix kron(const SparseExactMatrix& a, const SparseExactMatrix& b);
SparseExactMatrix transpose(const SparseExactMatrix& a);
SparseExactMatrix scale(SparseExactMatrix a, const Rational& s);

inline constexpr std::uint64_t kDefaultMatrixCap = 1'000'000;

/// N^e, or ResourceCap once the value passes `cap`.
std::uint64_t checked_power(std::uint64_t n, std::size_t e, std::uint64_t cap, const std::string& what);

/// T_p as an N^l × N^k 0/1 matrix: entry (j, i) is 1 when the multi-index (i, j)
/// is constant on every block of p. Basis tensors are numbered with the first
/// tensor factor as the most significant digit.
SparseExactMatrix partition_map(const NCPartition& p, std::uint64_t N, std::uint64_t cap = kDefaultMatrixCap);

struct LawCheck {
  bool ok = true;
  std::string law;
  std::string detail;  // first mismatching entry when !ok
};

LawCheck check_tensor_law(const NCPartition& p, const NCPartition& q, std::uint64_t N);
/// N^{b(p,q)} T_{pq} = T_p T_q for p ∈ NC(l, m), q ∈ NC(k, l).
LawCheck check_composition_law(const NCPartition& p, const NCPartition& q, std::uint64_t N);
LawCheck check_involution_law(const NCPartition& p, std::uint64_t N);

/// Tensor and involution laws always; the composition law too when q's lower
/// row matches p's upper row.
std::vector<LawCheck> check_functor_laws(const NCPartition& p, const NCPartition& q, std::uint64_t N);

/// Both snake identities for the nested pairing r ∈ NC(0, 2k):
///   (T_r^* ⊗ id)(id ⊗ T_r) = id = (id ⊗ T_r^*)(T_r ⊗ id).
bool conjugate_equations_check(std::size_t k, std::uint64_t N, std::uint64_t cap = kDefaultMatrixCap);

enum class GramBackend { direct, combinatorial };

GramBackend parse_gram_backend(const std::string& text);

struct GramMatrix {
  std::uint64_t N = 0;
  std::vector<std::vector<BigInt>> entries;

  std::size_t size() const { return entries.size(); }
};

/// ⟨T_p, T_q⟩ for all pairs. The combinatorial backend uses N^{#blocks(p ∨ q)}
/// (N^{b(p*, q)} for partitions with no upper points); the direct backend
/// builds every T_p and intersects supports, capped at N^{k+l} <= cap.
GramMatrix gram_matrix(const std::vector<NCPartition>& ps, std::uint64_t N, GramBackend backend,
                       unsigned jobs = 1, std::uint64_t cap = kDefaultMatrixCap);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> m);

struct HomDimension {
  std::uint64_t count = 0;  ///< admissible NC_Γ partitions
  std::size_t rank = 0;     ///< dimension of their span at this N
};

/// Dimension of Hom(a(g_1) ⊗ ... ⊗ a(g_k), a(h_1) ⊗ ... ⊗ a(h_l)) as the rank of
/// the Gram matrix of {T_p : p ∈ NC_Γ(upper; lower)}.
HomDimension hom_dimension(const std::vector<GroupElement>& upper, const std::vector<GroupElement>& lower,
                           const Group& group, std::uint64_t N, std::size_t partition_limit = kDefaultPartitionLimit);

}  // namespace hplus
