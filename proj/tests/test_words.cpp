#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "hplus/error.hpp"
#include "hplus/words.hpp"

using namespace hplus;

namespace {

// Spells out a z_{g1} a a z_{g2} a ... letter by letter, then drops z_e and
// merges runs of a.
MPrimeWord naive_mprime(const Group& g, const Word& w) {
  std::vector<int> seq;  // -1 for a, otherwise index into letters
  std::vector<GroupElement> zs;
  for (const auto& x : w.letters) {
    seq.push_back(-1);
    if (!g.is_identity(x)) {
      seq.push_back(static_cast<int>(zs.size()));
      zs.push_back(x);
    }
    seq.push_back(-1);
  }
  MPrimeWord m;
  m.exponents = {0};
  for (int s : seq) {
    if (s < 0) {
      ++m.exponents.back();
    } else {
      m.letters.push_back(zs[s]);
      m.exponents.push_back(0);
    }
  }
  return m;
}

// All reduced forms with total a-degree exactly d over the alphabet of
// non-identity elements.
void reduced_forms(const Group& g, std::uint64_t d, std::vector<MPrimeWord>& out) {
  std::vector<GroupElement> nonid;
  for (const auto& x : g.enumerate())
    if (!g.is_identity(x)) nonid.push_back(x);
  // compositions of d into (first, interior >= 1 ..., last)
  std::function<void(MPrimeWord, std::uint64_t)> rec = [&](MPrimeWord m, std::uint64_t left) {
    // close here
    MPrimeWord closed = m;
    closed.exponents.push_back(left);
    if (m.letters.size() + 1 == closed.exponents.size()) out.push_back(closed);
    for (std::uint64_t e = 1; e <= left; ++e)
      for (const auto& z : nonid) {
        MPrimeWord next = m;
        next.exponents.push_back(e);
        next.letters.push_back(z);
        rec(next, left - e);
      }
  };
  for (std::uint64_t first = 0; first <= d; ++first) {
    if (first == d) {
      MPrimeWord only;
      only.exponents = {d};
      out.push_back(only);
    }
    for (const auto& z : nonid) {
      MPrimeWord m;
      m.exponents = {first};
      m.letters = {z};
      rec(m, d - first);
    }
  }
}

}  // namespace

TEST(Words, ParseFormat) {
  auto g = Group::cyclic(3);
  auto w = parse_word(g, "[1, 2, e]");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_TRUE(g.is_identity(w[2]));
  EXPECT_EQ(format_word(g, w), "[1,2,0]");
  EXPECT_TRUE(parse_word(g, "[]").empty());
  EXPECT_THROW(parse_word(g, "[1,r]"), InvalidArgument);
  EXPECT_THROW(parse_word(g, "1,2"), InvalidArgument);
  EXPECT_THROW(parse_word(g, "[1,,2]"), InvalidArgument);
}

TEST(Words, Involute) {
  auto g = Group::cyclic(5);
  EXPECT_EQ(involute(g, parse_word(g, "[1,2,0]")), parse_word(g, "[0,3,4]"));
  auto f = Group::free(2);
  EXPECT_EQ(involute(f, parse_word(f, "[ab,b]")), parse_word(f, "[B,BA]"));
}

TEST(Words, FuseWords) {
  auto g = Group::cyclic(4);
  EXPECT_EQ(fuse_words(g, parse_word(g, "[1,3]"), parse_word(g, "[1,2]")), parse_word(g, "[1,0,2]"));
  EXPECT_THROW(fuse_words(g, Word{}, parse_word(g, "[1]")), InvalidArgument);
}

TEST(Words, Counts) {
  auto g = Group::cyclic(3);
  EXPECT_EQ(words_of_length(g.enumerate(), 4).size(), 81u);
  EXPECT_EQ(words_up_to(g.enumerate(), 3).size(), 1u + 3u + 9u + 27u);
}

TEST(Words, MPrimeExample) {
  auto g = Group::cyclic(3);
  auto m = to_mprime(g, parse_word(g, "[1,e,2]"));
  EXPECT_EQ(m.exponents, (std::vector<std::uint64_t>{1, 4, 1}));
  EXPECT_EQ(m.letters.size(), 2u);
  EXPECT_EQ(to_mprime(g, parse_word(g, "[e,e]")).exponents, std::vector<std::uint64_t>{4});
  EXPECT_TRUE(to_mprime(g, Word{}).is_unit());
}

TEST(Words, MPrimeRoundTripExhaustive) {
  for (std::int64_t s : {2, 3}) {
    auto g = Group::cyclic(s);
    for (const auto& w : words_up_to(g.enumerate(), 6)) {
      auto m = to_mprime(g, w);
      EXPECT_EQ(m, naive_mprime(g, w));
      EXPECT_TRUE(is_reduced(g, m));
      EXPECT_TRUE(in_block_submonoid(g, m));
      EXPECT_EQ(from_mprime(g, m), w);
      EXPECT_EQ(L_length(g, w), 2 * w.size());
      EXPECT_EQ(m.a_degree(), 2 * w.size());
    }
  }
}

TEST(Words, SubmonoidMembershipMatchesImage) {
  for (std::int64_t s : {2, 3}) {
    auto g = Group::cyclic(s);
    for (std::uint64_t d = 0; d <= 8; ++d) {
      std::set<MPrimeWord> image;
      if (d % 2 == 0)
        for (const auto& w : words_of_length(g.enumerate(), d / 2)) image.insert(naive_mprime(g, w));
      std::vector<MPrimeWord> all;
      reduced_forms(g, d, all);
      std::size_t members = 0;
      for (const auto& m : all) {
        ASSERT_TRUE(is_reduced(g, m));
        bool in = in_block_submonoid(g, m);
        EXPECT_EQ(in, image.count(m) == 1);
        if (in) {
          ++members;
        } else {
          EXPECT_THROW(from_mprime(g, m), InvalidArgument);
        }
      }
      EXPECT_EQ(members, image.size());
    }
  }
}

TEST(Words, AllIdentity) {
  auto g = Group::cyclic(2);
  EXPECT_TRUE(all_identity(g, Word{}));
  EXPECT_TRUE(all_identity(g, parse_word(g, "[0,0]")));
  EXPECT_FALSE(all_identity(g, parse_word(g, "[0,1]")));
}
