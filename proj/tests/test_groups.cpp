#include <gtest/gtest.h>

#include <numeric>

#include "hplus/error.hpp"
#include "hplus/groups.hpp"

using namespace hplus;

namespace {

std::string data(const char* name) { return std::string(HPLUS_TEST_DATA) + "/" + name; }

void expect_axioms(const Group& g) {
  auto els = g.enumerate();
  ASSERT_TRUE(g.is_identity(els.front()));
  for (const auto& a : els) {
    EXPECT_EQ(g.mul(a, g.identity()), a);
    EXPECT_EQ(g.mul(g.identity(), a), a);
    EXPECT_TRUE(g.is_identity(g.mul(a, g.inv(a))));
    EXPECT_TRUE(g.is_identity(g.mul(g.inv(a), a)));
    for (const auto& b : els)
      for (const auto& c : els) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

}  // namespace

TEST(Groups, CyclicAxiomsAndOrders) {
  for (std::int64_t s : {1, 2, 3, 4, 6}) {
    auto g = Group::cyclic(s);
    EXPECT_EQ(g.order(), static_cast<std::uint64_t>(s));
    expect_axioms(g);
    for (const auto& a : g.enumerate()) {
      // order of residue r in Z_s is s / gcd(r, s)
      auto r = a.scalar();
      EXPECT_EQ(*g.element_order(a), static_cast<std::uint64_t>(s / std::gcd(r, s)));
    }
  }
}

TEST(Groups, TrivialIsCyclicOne) {
  auto g = Group::trivial();
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.enumerate().size(), 1u);
  EXPECT_TRUE(g.is_identity(g.parse_element("e")));
}

TEST(Groups, TableS3) {
  auto g = Group::load_table(data("s3.json"));
  EXPECT_EQ(g.order(), 6u);
  expect_axioms(g);
  auto r = g.parse_element("r");
  auto s = g.parse_element("s");
  EXPECT_EQ(*g.element_order(r), 3u);
  EXPECT_EQ(*g.element_order(s), 2u);
  EXPECT_NE(g.mul(r, s), g.mul(s, r));
  // s r s^{-1} = r^{-1}
  EXPECT_EQ(g.mul(g.mul(s, r), g.inv(s)), g.inv(r));
  // element orders divide the group order
  for (const auto& a : g.enumerate()) EXPECT_EQ(6u % *g.element_order(a), 0u);
  EXPECT_EQ(g.format_element(g.parse_element("sr2")), "sr2");
}

TEST(Groups, BadTables) {
  EXPECT_THROW(Group::load_table(data("not_latin.json")), InvalidArgument);
  EXPECT_THROW(Group::load_table(data("not_associative.json")), InvalidArgument);
  EXPECT_THROW(Group::load_table(data("missing.json")), InvalidArgument);
}

TEST(Groups, Integers) {
  auto g = Group::integers();
  EXPECT_FALSE(g.order().has_value());
  auto a = g.parse_element("3");
  auto b = g.parse_element("-5");
  EXPECT_EQ(g.mul(a, b), g.parse_element("-2"));
  EXPECT_EQ(g.inv(a), g.parse_element("-3"));
  EXPECT_FALSE(g.element_order(a).has_value());
  EXPECT_EQ(*g.element_order(g.identity()), 1u);
  EXPECT_THROW(g.enumerate(), InvalidArgument);
}

TEST(Groups, FreeGroupReduction) {
  auto g = Group::free(2);
  auto a = g.parse_element("a");
  auto A = g.parse_element("A");
  auto b = g.parse_element("b");
  EXPECT_TRUE(g.is_identity(g.mul(a, A)));
  EXPECT_EQ(g.format_element(g.mul(g.mul(a, b), g.inv(b))), "a");
  EXPECT_EQ(g.format_element(g.parse_element("abBA")), "e");
  EXPECT_EQ(g.format_element(g.inv(g.parse_element("ab"))), "BA");
  EXPECT_NE(g.mul(a, b), g.mul(b, a));
  EXPECT_FALSE(g.element_order(a).has_value());
  EXPECT_THROW(g.parse_element("c"), InvalidArgument);
}

TEST(Groups, SpecParsing) {
  EXPECT_EQ(parse_group_spec("trivial").order(), 1u);
  EXPECT_EQ(parse_group_spec("cyclic:5").order(), 5u);
  EXPECT_EQ(parse_group_spec("integers").kind(), Group::Kind::integers);
  EXPECT_EQ(parse_group_spec("free:3").rank(), 3);
  EXPECT_EQ(parse_group_spec("table:" + data("s3.json")).order(), 6u);
  for (const char* bad : {"cyclic:0", "cyclic:-2", "cyclic:x", "free:0", "dihedral:3", ""})
    EXPECT_THROW(parse_group_spec(bad), InvalidArgument) << bad;
}

TEST(Groups, ElementFromWrongGroup) {
  auto z3 = Group::cyclic(3);
  EXPECT_TRUE(z3.is_identity(z3.parse_element("3")));
  EXPECT_EQ(z3.parse_element("-1"), z3.parse_element("2"));
  EXPECT_THROW(z3.parse_element("x"), InvalidArgument);
  EXPECT_THROW(z3.mul(GroupElement(std::int64_t{5}), z3.identity()), InvalidArgument);
}
