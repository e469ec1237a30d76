#include <gtest/gtest.h>

#include "hplus/error.hpp"
#include "hplus/free_product.hpp"

using namespace hplus;

namespace {

FreeProductRing so3_z2() {
  return FreeProductRing({std::make_shared<SO3Ring>(), std::make_shared<GroupDualRing>(Group::cyclic(2))});
}

BigInt dim(const AlternatingWord& w) {
  BigInt d = 1;
  for (const auto& l : w)
    if (l.component == 0) d *= 2 * std::stoi(l.label) + 1;
  return d;
}

// Alternating words with letters so3 1..2 and z2 "1", up to length n.
std::vector<AlternatingWord> small_words(std::size_t n) {
  std::vector<AlternatingWord> out{{}};
  std::vector<AlternatingWord> frontier{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<AlternatingWord> next;
    for (const auto& w : frontier) {
      std::vector<FreeLetter> options;
      if (w.empty() || w.back().component != 0) options.insert(options.end(), {{0, "1"}, {0, "2"}});
      if (w.empty() || w.back().component != 1) options.push_back({1, "1"});
      for (const auto& l : options) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
  }
  return out;
}

}  // namespace

TEST(FreeProduct, CancellationThroughDual) {
  auto ring = so3_z2();
  AlternatingWord x{{0, "1"}, {1, "1"}};
  AlternatingWord y{{1, "1"}, {0, "1"}};
  auto r = ring.fuse(x, y);
  std::map<AlternatingWord, BigInt> expect{{{}, 1}, {{{0, "1"}}, 1}, {{{0, "2"}}, 1}};
  EXPECT_EQ(r, expect);
}

TEST(FreeProduct, SO3Merge) {
  auto ring = so3_z2();
  AlternatingWord x{{1, "1"}, {0, "1"}};
  AlternatingWord y{{0, "1"}, {1, "1"}};
  auto r = ring.fuse(x, y);
  // v t w for t = 1, 2, then (z2:1) ⊗ (z2:1) = trivial
  std::map<AlternatingWord, BigInt> expect{
      {{{1, "1"}, {0, "1"}, {1, "1"}}, 1}, {{{1, "1"}, {0, "2"}, {1, "1"}}, 1}, {{}, 1}};
  EXPECT_EQ(r, expect);
}

TEST(FreeProduct, DimensionIsMultiplicative) {
  auto ring = so3_z2();
  auto ws = small_words(3);
  for (const auto& x : ws)
    for (const auto& y : ws) {
      BigInt total = 0;
      for (const auto& [w, c] : ring.fuse(x, y)) {
        EXPECT_TRUE(ring.is_alternating(w));
        total += c * dim(w);
      }
      EXPECT_EQ(total, dim(x) * dim(y));
    }
}

TEST(FreeProduct, DualsGiveOneDimensional) {
  FreeProductRing ring({std::make_shared<GroupDualRing>(Group::cyclic(2)),
                        std::make_shared<GroupDualRing>(Group::cyclic(3))});
  AlternatingWord x{{0, "1"}, {1, "2"}};
  AlternatingWord y{{1, "2"}, {0, "1"}};
  auto r = ring.fuse(x, y);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.begin()->first, (AlternatingWord{{0, "1"}, {1, "1"}, {0, "1"}}));
  AlternatingWord yinv{{1, "1"}, {0, "1"}};
  auto u = ring.fuse(x, yinv);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_TRUE(u.begin()->first.empty());
}

TEST(FreeProduct, RejectsNonAlternating) {
  auto ring = so3_z2();
  EXPECT_THROW(ring.fuse({{0, "1"}, {0, "2"}}, {}), InvalidArgument);
  EXPECT_THROW(ring.fuse({{0, "0"}}, {}), InvalidArgument);
  EXPECT_THROW(ring.fuse({{2, "1"}}, {}), InvalidArgument);
}
