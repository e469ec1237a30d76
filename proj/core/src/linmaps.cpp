#include "hplus/linmaps.hpp"

#include <algorithm>
#include <sstream>

#include "hplus/error.hpp"
#include "hplus/parallel.hpp"

namespace hplus {

SparseExactMatrix SparseExactMatrix::identity(std::uint64_t n) {
  SparseExactMatrix m(n, n);
  for (std::uint64_t i = 0; i < n; ++i) m.entries_.emplace(Index{i, i}, Rational(1));
  return m;
}

Rational SparseExactMatrix::get(std::uint64_t r, std::uint64_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseExactMatrix::set(std::uint64_t r, std::uint64_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (v == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

SparseExactMatrix multiply(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::map<SparseExactMatrix::Index, Rational> acc;
  const auto& be = b.entries();
  for (const auto& [ij, v] : a.entries()) {
    for (auto it = be.lower_bound({ij.second, 0}); it != be.end() && it->first.first == ij.second; ++it) {
      acc[{ij.first, it->first.second}] += v * it->second;
    }
  }
  SparseExactMatrix out(a.rows(), b.cols());
  for (const auto& [ij, v] : acc) out.set(ij.first, ij.second, v);
  return out;
}

SparseExactMatrix kron(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  SparseExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [ia, va] : a.entries()) {
    for (const auto& [ib, vb] : b.entries()) {
      out.set(ia.first * b.rows() + ib.first, ia.second * b.cols() + ib.second, va * vb);
    }
  }
  return out;
}

SparseExactMatrix transpose(const SparseExactMatrix& a) {
  SparseExactMatrix out(a.cols(), a.rows());
  for (const auto& [ij, v] : a.entries()) out.set(ij.second, ij.first, v);
  return out;
}

SparseExactMatrix scale(SparseExactMatrix a, const Rational& s) {
  SparseExactMatrix out(a.rows(), a.cols());
  for (const auto& [ij, v] : a.entries()) out.set(ij.first, ij.second, v * s);
  return out;
}

std::uint64_t checked_power(std::uint64_t n, std::size_t e, std::uint64_t cap, const std::string& what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (n != 0 && v > cap / n) {
      throw ResourceCap(what + ": " + std::to_string(n) + "^" + std::to_string(e) + " exceeds the size cap " +
                        std::to_string(cap));
    }
    v *= n;
  }
  if (v > cap) {
    throw ResourceCap(what + ": " + std::to_string(n) + "^" + std::to_string(e) + " exceeds the size cap " +
                      std::to_string(cap));
  }
  return v;
}

namespace {

std::vector<std::size_t> block_index(const NCPartition& p) {
  std::vector<std::size_t> owner(p.points());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    for (auto x : p.blocks()[b]) owner[x] = b;
  }
  return owner;
}

// Calls fn(row, col) for every nonzero entry of T_p.
template <class Fn>
void for_each_support(const NCPartition& p, std::uint64_t N, Fn&& fn) {
  const std::size_t k = p.upper(), l = p.lower(), nb = p.block_count();
  const auto owner = block_index(p);
  std::vector<std::uint64_t> vals(nb, 0);
  while (true) {
    std::uint64_t col = 0, row = 0;
    for (std::size_t i = 0; i < k; ++i) col = col * N + vals[owner[i]];
    for (std::size_t j = 0; j < l; ++j) row = row * N + vals[owner[k + j]];
    fn(row, col);
    std::size_t d = 0;
    while (d < nb && ++vals[d] == N) vals[d++] = 0;
    if (d == nb) break;
  }
}

std::string describe_mismatch(const SparseExactMatrix& lhs, const SparseExactMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
           std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  std::map<SparseExactMatrix::Index, std::pair<Rational, Rational>> diff;
  for (const auto& [ij, v] : lhs.entries()) diff[ij].first = v;
  for (const auto& [ij, v] : rhs.entries()) diff[ij].second = v;
  for (const auto& [ij, vs] : diff) {
    if (vs.first != vs.second) {
      std::ostringstream os;
      os << "entry (" << ij.first << "," << ij.second << "): " << vs.first.get_str() << " vs " << vs.second.get_str();
      return os.str();
    }
  }
  return {};
}

LawCheck compare(std::string law, const SparseExactMatrix& lhs, const SparseExactMatrix& rhs) {
  LawCheck c;
  c.law = std::move(law);
  if (!(lhs == rhs)) {
    c.ok = false;
    c.detail = describe_mismatch(lhs, rhs);
  }
  return c;
}

}  // namespace

SparseExactMatrix partition_map(const NCPartition& p, std::uint64_t N, std::uint64_t cap) {
  if (N == 0) throw InvalidArgument("partition_map: N must be >= 1");
  const std::string what = "T_p for p in NC(" + std::to_string(p.upper()) + "," + std::to_string(p.lower()) + ")";
  const auto cols = checked_power(N, p.upper(), cap, what);
  const auto rows = checked_power(N, p.lower(), cap, what);
  checked_power(N, p.block_count(), cap, what);
  SparseExactMatrix m(rows, cols);
  for_each_support(p, N, [&](std::uint64_t r, std::uint64_t c) { m.set(r, c, 1); });
  return m;
}

LawCheck check_tensor_law(const NCPartition& p, const NCPartition& q, std::uint64_t N) {
  return compare("tensor", partition_map(tensor(p, q), N), kron(partition_map(p, N), partition_map(q, N)));
}

LawCheck check_composition_law(const NCPartition& p, const NCPartition& q, std::uint64_t N) {
  const auto c = compose(p, q);
  Rational factor = 1;
  for (std::size_t i = 0; i < c.closed_blocks; ++i) factor *= static_cast<unsigned long>(N);
  return compare("composition", scale(partition_map(c.partition, N), factor),
                 multiply(partition_map(p, N), partition_map(q, N)));
}

LawCheck check_involution_law(const NCPartition& p, std::uint64_t N) {
  return compare("involution", partition_map(involute(p), N), transpose(partition_map(p, N)));
}

std::vector<LawCheck> check_functor_laws(const NCPartition& p, const NCPartition& q, std::uint64_t N) {
  std::vector<LawCheck> out{check_tensor_law(p, q, N), check_involution_law(p, N), check_involution_law(q, N)};
  if (q.lower() == p.upper()) out.push_back(check_composition_law(p, q, N));
  return out;
}

bool conjugate_equations_check(std::size_t k, std::uint64_t N, std::uint64_t cap) {
  const auto r = partition_map(NCPartition::nested_pairing(k), N, cap);
  const auto rt = transpose(r);
  const auto id = SparseExactMatrix::identity(checked_power(N, k, cap, "conjugate equations"));
  checked_power(N, 3 * k, cap, "conjugate equations");
  const auto left = multiply(kron(rt, id), kron(id, r));
  const auto right = multiply(kron(id, rt), kron(r, id));
  return left == id && right == id;
}

GramBackend parse_gram_backend(const std::string& text) {
  if (text == "direct") return GramBackend::direct;
  if (text == "combinatorial") return GramBackend::combinatorial;
  throw InvalidArgument("unknown Gram backend '" + text + "': expected direct | combinatorial");
}

GramMatrix gram_matrix(const std::vector<NCPartition>& ps, std::uint64_t N, GramBackend backend, unsigned jobs,
                       std::uint64_t cap) {
  if (N == 0) throw InvalidArgument("gram_matrix: N must be >= 1");
  for (const auto& p : ps) {
    if (p.upper() != ps.front().upper() || p.lower() != ps.front().lower()) {
      throw InvalidArgument("gram_matrix: partitions must share one shape");
    }
  }
  const std::size_t n = ps.size();
  GramMatrix g{N, std::vector<std::vector<BigInt>>(n, std::vector<BigInt>(n))};
  if (n == 0) return g;

  if (backend == GramBackend::combinatorial) {
    const bool closed = ps.front().upper() == 0;
    parallel_for(n, jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t e = closed ? compose(involute(ps[i]), ps[j]).closed_blocks : join_block_count(ps[i], ps[j]);
        mpz_ui_pow_ui(g.entries[i][j].get_mpz_t(), N, e);
      }
    });
    return g;
  }

  checked_power(N, ps.front().points(), cap, "direct Gram backend");
  const std::uint64_t width = checked_power(N, ps.front().upper(), cap, "direct Gram backend");
  std::vector<std::vector<std::uint64_t>> support(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    for_each_support(ps[i], N, [&](std::uint64_t r, std::uint64_t c) { support[i].push_back(r * width + c); });
    std::sort(support[i].begin(), support[i].end());
  });
  parallel_for(n, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t common = 0;
      auto a = support[i].begin(), b = support[j].begin();
      while (a != support[i].end() && b != support[j].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++common, ++a, ++b;
        }
      }
      g.entries[i][j] = static_cast<unsigned long>(common);
    }
  });
  return g;
}

namespace {

constexpr std::uint64_t kRankPrime = (std::uint64_t{1} << 61) - 1;
__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % kRankPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

// Rank over F_p, a lower bound for the rank over Q.
std::size_t rank_mod_prime(const std::vector<std::vector<BigInt>>& src) {
  const std::size_t rows = src.size(), cols = src.front().size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = mpz_fdiv_ui(src[i][j].get_mpz_t(), kRankPrime);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const std::uint64_t inv = powmod(m[r][c], kRankPrime - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mulmod(f, m[r][j]);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kRankPrime - sub;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  if (cols == 0) return 0;
  // full rank mod p is already full rank over Q
  if (rank_mod_prime(m) == std::min(rows, cols)) return std::min(rows, cols);
  BigInt prev = 1, rem;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_tdiv_qr(m[i][j].get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw InternalError("exact_rank: Bareiss division left a remainder");
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

HomDimension hom_dimension(const std::vector<GroupElement>& upper, const std::vector<GroupElement>& lower,
                           const Group& group, std::uint64_t N, std::size_t partition_limit) {
  const auto ps = admissible_partitions(upper, lower, Flavor::gamma(), group, partition_limit);
  HomDimension h;
  h.count = ps.size();
  h.rank = exact_rank(gram_matrix(ps, N, GramBackend::combinatorial).entries);
  return h;
}

}  // namespace hplus
