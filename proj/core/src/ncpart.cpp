#include "hplus/ncpart.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hplus/error.hpp"

namespace hplus {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

void canonicalize(std::vector<NCPartition::Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

// Blocks of a union-find over `n` points, every point kept.
std::vector<NCPartition::Block> blocks_of(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, NCPartition::Block> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<NCPartition::Block> out;
  for (auto& [root, b] : by_root) out.push_back(std::move(b));
  canonicalize(out);
  return out;
}

using Positions = std::vector<std::vector<std::size_t>>;

// All non-crossing partitions of the positions lo..hi-1.
const std::vector<Positions>& nc_interval(std::size_t lo, std::size_t hi,
                                          std::map<std::pair<std::size_t, std::size_t>, std::vector<Positions>>& memo);

void grow_block(std::size_t lo_block_start, std::vector<std::size_t>& block, std::size_t hi, Positions& acc,
                std::vector<Positions>& out,
                std::map<std::pair<std::size_t, std::size_t>, std::vector<Positions>>& memo) {
  const std::size_t last = block.back();
  // Close the block: the tail last+1..hi-1 is independent.
  for (const auto& tail : nc_interval(last + 1, hi, memo)) {
    Positions full = acc;
    full.push_back(block);
    full.insert(full.end(), tail.begin(), tail.end());
    out.push_back(std::move(full));
  }
  // Or extend it with b; the gap last+1..b-1 is independent.
  for (std::size_t b = last + 1; b < hi; ++b) {
    for (const auto& gap : nc_interval(last + 1, b, memo)) {
      const auto saved = acc.size();
      acc.insert(acc.end(), gap.begin(), gap.end());
      block.push_back(b);
      grow_block(lo_block_start, block, hi, acc, out, memo);
      block.pop_back();
      acc.resize(saved);
    }
  }
}

const std::vector<Positions>& nc_interval(std::size_t lo, std::size_t hi,
                                          std::map<std::pair<std::size_t, std::size_t>, std::vector<Positions>>& memo) {
  const auto key = std::make_pair(lo, hi);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Positions> out;
  if (lo >= hi) {
    out.emplace_back();
  } else {
    std::vector<std::size_t> block{lo};
    Positions acc;
    grow_block(lo, block, hi, acc, out, memo);
  }
  return memo.emplace(key, std::move(out)).first->second;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t circular_position(std::size_t k, std::size_t l, std::size_t point) {
  if (point < k) return point;
  return k + (l - 1 - (point - k));
}

bool is_noncrossing(std::size_t k, std::size_t l, const std::vector<NCPartition::Block>& blocks) {
  const std::size_t n = k + l;
  std::vector<std::size_t> owner(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto p : blocks[b]) owner[circular_position(k, l, p)] = b;
  }
  // a < b < c < d in circular order with owner(a) = owner(c) != owner(b) = owner(d).
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (owner[b] == owner[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (owner[c] != owner[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (owner[d] == owner[b]) return false;
        }
      }
    }
  }
  return true;
}

NCPartition::NCPartition(std::size_t k, std::size_t l, std::vector<Block> blocks)
    : k_(k), l_(l), blocks_(std::move(blocks)) {
  std::vector<int> seen(k + l, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("partition: empty block");
    for (auto p : b) {
      if (p >= k + l) throw InvalidArgument("partition: point index out of range");
      if (seen[p]++) throw InvalidArgument("partition: point " + point_name(p) + " appears twice");
    }
  }
  for (std::size_t p = 0; p < k + l; ++p) {
    if (!seen[p]) throw InvalidArgument("partition: point " + point_name(p) + " is in no block");
  }
  canonicalize(blocks_);
  if (!is_noncrossing(k, l, blocks_)) throw InvalidArgument("partition: blocks cross");
}

NCPartition NCPartition::one_block(std::size_t k, std::size_t l) {
  if (k + l == 0) return NCPartition(0, 0, {});
  Block b(k + l);
  std::iota(b.begin(), b.end(), std::size_t{0});
  return NCPartition(k, l, {b});
}

NCPartition NCPartition::identity(std::size_t k) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < k; ++i) blocks.push_back({i, k + i});
  return NCPartition(k, k, std::move(blocks));
}

NCPartition NCPartition::nested_pairing(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i, 2 * n - 1 - i});
  return NCPartition(0, 2 * n, std::move(blocks));
}

std::string NCPartition::point_name(std::size_t point) const {
  return point < k_ ? "U" + std::to_string(point + 1) : "L" + std::to_string(point - k_ + 1);
}

std::vector<NCPartition> enumerate_nc(std::size_t k, std::size_t l, std::size_t limit) {
  const std::size_t n = k + l;
  if (n > limit) {
    throw ResourceCap("NC(" + std::to_string(k) + "," + std::to_string(l) + ") has Catalan(" + std::to_string(n) +
                      ") = " + std::to_string(catalan(n)) + " elements; partition limit is " + std::to_string(limit));
  }
  std::vector<std::size_t> point_at(n);
  for (std::size_t p = 0; p < n; ++p) point_at[circular_position(k, l, p)] = p;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Positions>> memo;
  const auto& raw = nc_interval(0, n, memo);
  std::vector<NCPartition> out;
  out.reserve(raw.size());
  for (const auto& positions : raw) {
    std::vector<NCPartition::Block> blocks;
    blocks.reserve(positions.size());
    for (const auto& pb : positions) {
      NCPartition::Block b;
      for (auto pos : pb) b.push_back(point_at[pos]);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(k, l, std::move(blocks));
  }
  return out;
}

NCPartition tensor(const NCPartition& p, const NCPartition& q) {
  const std::size_t k1 = p.upper(), l1 = p.lower(), k2 = q.upper(), l2 = q.lower();
  const std::size_t k = k1 + k2;
  const auto map_p = [&](std::size_t x) { return x < k1 ? x : k + (x - k1); };
  const auto map_q = [&](std::size_t x) { return x < k2 ? k1 + x : k + l1 + (x - k2); };
  std::vector<NCPartition::Block> blocks;
  for (const auto& b : p.blocks()) {
    NCPartition::Block nb;
    for (auto x : b) nb.push_back(map_p(x));
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : q.blocks()) {
    NCPartition::Block nb;
    for (auto x : b) nb.push_back(map_q(x));
    blocks.push_back(std::move(nb));
  }
  return NCPartition(k, l1 + l2, std::move(blocks));
}

NCPartition involute(const NCPartition& p) {
  const std::size_t k = p.upper(), l = p.lower();
  std::vector<NCPartition::Block> blocks;
  for (const auto& b : p.blocks()) {
    NCPartition::Block nb;
    for (auto x : b) nb.push_back(x < k ? l + x : x - k);
    blocks.push_back(std::move(nb));
  }
  return NCPartition(l, k, std::move(blocks));
}

Composition compose(const NCPartition& p, const NCPartition& q) {
  if (q.lower() != p.upper()) {
    throw InvalidArgument("compose: q has " + std::to_string(q.lower()) + " lower points but p has " +
                          std::to_string(p.upper()) + " upper points");
  }
  const std::size_t k = q.upper(), l = q.lower(), m = p.lower();
  // Nodes: new upper 0..k-1, middle k..k+l-1, new lower k+l..k+l+m-1.
  UnionFind uf(k + l + m);
  for (const auto& b : q.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  }
  for (const auto& b : p.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(k + b[0], k + b[i]);
  }
  std::map<std::size_t, NCPartition::Block> outer;
  for (std::size_t x = 0; x < k; ++x) outer[uf.find(x)].push_back(x);
  for (std::size_t x = 0; x < m; ++x) outer[uf.find(k + l + x)].push_back(k + x);
  std::vector<bool> counted(k + l + m, false);
  std::size_t closed = 0;
  for (std::size_t x = k; x < k + l; ++x) {
    const auto r = uf.find(x);
    if (!outer.count(r) && !counted[r]) {
      counted[r] = true;
      ++closed;
    }
  }
  std::vector<NCPartition::Block> blocks;
  for (auto& [r, b] : outer) blocks.push_back(std::move(b));
  return {NCPartition(k, m, std::move(blocks)), closed};
}

std::size_t join_block_count(const NCPartition& p, const NCPartition& q) {
  if (p.upper() != q.upper() || p.lower() != q.lower()) throw InvalidArgument("join: partitions differ in shape");
  UnionFind uf(p.points());
  for (const auto* part : {&p, &q}) {
    for (const auto& b : part->blocks()) {
      for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
    }
  }
  return blocks_of(uf, p.points()).size();
}

// Decorations ----------------------------------------------------------------

Flavor parse_flavor(const std::string& text) {
  if (text == "nc_gamma") return Flavor::gamma();
  if (text == "nc_gamma_prime") return Flavor::gamma_prime();
  if (text == "nc_star") return Flavor::star();
  if (text.rfind("nc_s:", 0) == 0) {
    try {
      std::size_t used = 0;
      const auto s = std::stoll(text.substr(5), &used);
      if (used == text.size() - 5 && s >= 0) return Flavor::sum_mod(s);
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("unknown flavor '" + text + "': expected nc_gamma | nc_gamma_prime | nc_star | nc_s:<s>");
}

bool is_admissible(const NCPartition& p, const Decoration& dec, const Flavor& flavor, const Group& group) {
  if (dec.upper.size() != p.upper() || dec.lower.size() != p.lower()) {
    throw InvalidArgument("decoration shape does not match partition");
  }
  const std::size_t k = p.upper();
  const auto label = [&](std::size_t x) -> const GroupElement& { return x < k ? dec.upper[x] : dec.lower[x - k]; };

  if (flavor.kind == Flavor::Kind::nc_s) {
    const std::int64_t s = flavor.s;
    for (const auto& b : p.blocks()) {
      std::int64_t diff = 0;
      for (auto x : b) {
        const std::int64_t v = label(x).scalar();
        diff += x < k ? v : -v;
        if (s > 0) diff %= s;
      }
      if (diff != 0) return false;
    }
    return true;
  }

  for (const auto& b : p.blocks()) {
    // Points inside a block are sorted, so upper then lower, each left to right.
    GroupElement up = group.identity();
    GroupElement down = group.identity();
    std::size_t uppers = 0;
    for (auto x : b) {
      if (x < k) {
        up = group.mul(up, label(x));
        ++uppers;
      } else {
        down = group.mul(down, label(x));
      }
    }
    if (up != down) return false;
    if (flavor.kind == Flavor::Kind::nc_gamma_prime && (uppers > 1 || uppers == b.size())) return false;
    if (flavor.kind == Flavor::Kind::nc_star) {
      const GroupElement& g = label(b.front());
      const GroupElement g_inv = group.inv(g);
      for (auto x : b) {
        if (label(x) != g && label(x) != g_inv) return false;
      }
    }
  }
  return true;
}

namespace {

std::shared_ptr<const std::vector<NCPartition>> cached_nc(std::size_t k, std::size_t l, std::size_t limit) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const std::vector<NCPartition>>> cache;
  if (k + l > limit) enumerate_nc(k, l, limit);  // throws the size error
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{k, l}];
  if (!slot) slot = std::make_shared<const std::vector<NCPartition>>(enumerate_nc(k, l, limit));
  return slot;
}

}  // namespace

std::vector<NCPartition> admissible_partitions(const std::vector<GroupElement>& upper,
                                               const std::vector<GroupElement>& lower, const Flavor& flavor,
                                               const Group& group, std::size_t limit) {
  const auto all = cached_nc(upper.size(), lower.size(), limit);
  const Decoration dec{upper, lower};
  std::vector<NCPartition> out;
  for (const auto& p : *all) {
    if (is_admissible(p, dec, flavor, group)) out.push_back(p);
  }
  return out;
}

std::uint64_t count_admissible(const std::vector<GroupElement>& upper, const std::vector<GroupElement>& lower,
                               const Flavor& flavor, const Group& group, std::size_t limit) {
  const auto all = cached_nc(upper.size(), lower.size(), limit);
  const Decoration dec{upper, lower};
  return static_cast<std::uint64_t>(
      std::count_if(all->begin(), all->end(), [&](const auto& p) { return is_admissible(p, dec, flavor, group); }));
}

}  // namespace hplus
