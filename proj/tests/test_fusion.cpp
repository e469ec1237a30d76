#include <gtest/gtest.h>

#include <map>

#include "hplus/dims.hpp"
#include "hplus/error.hpp"
#include "hplus/fusion.hpp"

using namespace hplus;

namespace {

std::string data(const char* name) { return std::string(HPLUS_TEST_DATA) + "/" + name; }

// Straight from the split description: x = u t, y = t̄ v.
std::map<Word, long> oracle_fuse(const Group& g, const Word& x, const Word& y) {
  std::map<Word, long> out;
  for (std::size_t n = 0; n <= std::min(x.size(), y.size()); ++n) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = x[x.size() - n + i] == g.inv(y[n - 1 - i]);
    if (!match) continue;
    Word u(std::vector<GroupElement>(x.letters.begin(), x.letters.end() - n));
    Word v(std::vector<GroupElement>(y.letters.begin() + n, y.letters.end()));
    Word uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    out[uv] += 1;
    if (!u.empty() && !v.empty()) {
      Word glued = u;
      glued.letters.back() = g.mul(u.letters.back(), v.letters.front());
      glued.letters.insert(glued.letters.end(), v.letters.begin() + 1, v.letters.end());
      out[glued] += 1;
    }
  }
  return out;
}

std::map<Word, long> as_map(const FusionElement& f) {
  std::map<Word, long> out;
  for (const auto& [w, c] : f.terms()) out[w] = c.get_si();
  return out;
}

FusionElement b(const Group& g, const char* text) { return FusionElement::basis(parse_word(g, text)); }

}  // namespace

TEST(Fusion, Z2OneLetter) {
  auto g = Group::cyclic(2);
  auto r = fuse_basis(g, parse_word(g, "[1]"), parse_word(g, "[1]"));
  EXPECT_EQ(r, FusionElement::unit() + b(g, "[0]") + b(g, "[1,1]"));
}

TEST(Fusion, TrivialGroup) {
  auto g = Group::trivial();
  auto r = fuse_basis(g, parse_word(g, "[e]"), parse_word(g, "[e]"));
  EXPECT_EQ(r, FusionElement::unit() + b(g, "[e]") + b(g, "[e,e]"));
}

TEST(Fusion, FreeGroupNoCancellation) {
  auto g = Group::free(2);
  auto r = fuse_basis(g, parse_word(g, "[a]"), parse_word(g, "[b]"));
  EXPECT_EQ(r, b(g, "[a,b]") + b(g, "[ab]"));
  auto c = fuse_basis(g, parse_word(g, "[a]"), parse_word(g, "[A]"));
  EXPECT_EQ(c, FusionElement::unit() + b(g, "[a,A]") + b(g, "[e]"));
}

TEST(Fusion, Z2TwoLetterExpansion) {
  auto g = Group::cyclic(2);
  auto r = fuse_basis(g, parse_word(g, "[1,0]"), parse_word(g, "[0,1]"));
  // splits t = ∅, (0), (1,0)
  auto expect = b(g, "[1,0,0,1]") + b(g, "[1,0,1]") + b(g, "[1,1]") + b(g, "[0]") + FusionElement::unit();
  EXPECT_EQ(r, expect);
  BigInt total = 0;
  for (const auto& [w, c] : r.terms()) total += c * dimension(g, w, 5);
  EXPECT_EQ(total, 225);
  EXPECT_EQ(dimension(g, parse_word(g, "[1,0]"), 5), 15);
}

TEST(Fusion, MatchesOracle) {
  std::vector<Group> groups = {Group::cyclic(2), Group::cyclic(3), Group::load_table(data("s3.json")),
                               Group::free(2)};
  for (const auto& g : groups) {
    auto ws = words_up_to(g.sample_alphabet(), g.kind() == Group::Kind::free ? 2 : 3);
    if (g.order() == 6u) ws = words_up_to(g.sample_alphabet(), 2);
    for (const auto& x : ws)
      for (const auto& y : ws) EXPECT_EQ(as_map(fuse_basis(g, x, y)), oracle_fuse(g, x, y)) << g.spec();
  }
}

TEST(Fusion, DimensionIsMultiplicative) {
  for (std::int64_t s : {2, 3}) {
    auto g = Group::cyclic(s);
    auto ws = words_up_to(g.enumerate(), 3);
    for (std::uint64_t N : {4u, 5u, 9u})
      for (const auto& x : ws)
        for (const auto& y : ws) {
          BigInt total = 0;
          const auto xy = fuse_basis(g, x, y);
          for (const auto& [w, c] : xy.terms()) total += c * dimension(g, w, N);
          EXPECT_EQ(total, dimension(g, x, N) * dimension(g, y, N));
        }
  }
}

TEST(Fusion, AssociativeOnS3) {
  auto g = Group::load_table(data("s3.json"));
  auto ws = words_up_to(g.enumerate(), 2);
  for (std::size_t i = 0; i < ws.size(); i += 3)
    for (std::size_t j = 0; j < ws.size(); j += 2)
      for (std::size_t k = 0; k < ws.size(); k += 5) {
        auto x = FusionElement::basis(ws[i]), y = FusionElement::basis(ws[j]), z = FusionElement::basis(ws[k]);
        EXPECT_EQ(product(g, product(g, x, y), z), product(g, x, product(g, y, z)));
        EXPECT_EQ(conjugate(g, product(g, x, y)), product(g, conjugate(g, y), conjugate(g, x)));
      }
}

TEST(Fusion, HsnAgreesWithGeneralRule) {
  for (std::int64_t s : {2, 3, 4}) {
    auto g = Group::cyclic(s);
    auto ws = words_up_to(g.enumerate(), 3);
    for (const auto& x : ws)
      for (const auto& y : ws) EXPECT_EQ(hsn_fuse(g, x, y), fuse_basis(g, x, y));
  }
  auto z = Group::integers();
  auto ws = words_up_to(z.sample_alphabet(), 2);
  for (const auto& x : ws)
    for (const auto& y : ws) EXPECT_EQ(hsn_fuse(z, x, y), fuse_basis(z, x, y));
}

TEST(Fusion, HsnRawResidues) {
  auto r = hsn_fuse(ResidueWord{1}, ResidueWord{1}, 2);
  std::map<ResidueWord, BigInt> expect{{{}, 1}, {{0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(r, expect);
  auto zr = hsn_fuse(ResidueWord{2}, ResidueWord{-2}, 0);
  std::map<ResidueWord, BigInt> zexpect{{{}, 1}, {{0}, 1}, {{2, -2}, 1}};
  EXPECT_EQ(zr, zexpect);
}

TEST(Fusion, SnPlus) {
  EXPECT_EQ(snplus_fuse(1, 1), (std::vector<std::uint64_t>{2, 1, 0}));
  EXPECT_EQ(snplus_fuse(0, 3), (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(snplus_fuse(2, 1), (std::vector<std::uint64_t>{3, 2, 1}));
  EXPECT_EQ(snplus_fuse(2, 2).size(), 5u);
}

TEST(Fusion, MPrimeCalculusAgrees) {
  for (std::int64_t s : {2, 3}) {
    auto g = Group::cyclic(s);
    auto ws = words_up_to(g.enumerate(), 3);
    for (const auto& x : ws)
      for (const auto& y : ws)
        EXPECT_EQ(fuse_mprime(g, to_mprime(g, x), to_mprime(g, y)), fuse_basis(g, x, y));
  }
  auto g = Group::cyclic(2);
  MPrimeWord outside;
  outside.exponents = {1};
  EXPECT_THROW(fuse_mprime(g, outside, to_mprime(g, Word{})), InvalidArgument);
}

TEST(Fusion, GeneratorProducts) {
  auto g = Group::cyclic(3);
  auto one = g.parse_element("1");
  auto two = g.parse_element("2");
  auto e = g.identity();
  EXPECT_EQ(decompose_generator_product(g, {}, GeneratorMode::omega), FusionElement::unit());
  EXPECT_EQ(decompose_generator_product(g, {e}, GeneratorMode::a_rep), FusionElement::unit() + b(g, "[0]"));
  EXPECT_EQ(decompose_generator_product(g, {one, two}, GeneratorMode::omega),
            FusionElement::unit() + b(g, "[1,2]") + b(g, "[0]"));
  EXPECT_EQ(decompose_generator_product(g, {one, one}, GeneratorMode::omega).trivial_multiplicity(), 0);
}

TEST(Fusion, ElementArithmetic) {
  auto g = Group::cyclic(2);
  auto x = b(g, "[1]") + b(g, "[1]");
  EXPECT_EQ(x.coefficient(parse_word(g, "[1]")), 2);
  x -= b(g, "[1]") * 2;
  EXPECT_TRUE(x.is_zero());
}

TEST(Fusion, Regions) {
  auto g = Group::cyclic(2);
  EXPECT_EQ(classify_word(g, Word{}), Region::E2);
  EXPECT_EQ(classify_word(g, parse_word(g, "[0,0]")), Region::E2);
  EXPECT_EQ(classify_word(g, parse_word(g, "[0,1]")), Region::E3);
  EXPECT_EQ(classify_word(g, parse_word(g, "[1,0,1]")), Region::G2);
  EXPECT_EQ(classify_word(g, parse_word(g, "[1,0]")), Region::G1_not_G2);
  EXPECT_TRUE(in_G1(g, parse_word(g, "[1,0]")));
  EXPECT_TRUE(in_E1(g, Word{}));
}

TEST(Fusion, SupportProduct) {
  auto g = Group::cyclic(2);
  SupportSet a{parse_word(g, "[1]")};
  auto r = support_product(g, a, a);
  SupportSet expect{Word{}, parse_word(g, "[0]"), parse_word(g, "[1,1]")};
  EXPECT_EQ(r, expect);
}
