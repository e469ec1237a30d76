#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hplus/groups.hpp"

namespace hplus {

/// A word (g_1, ..., g_k) over the group. Each word labels one irreducible
/// corepresentation; identity letters are kept, so (g, e, h) and (g, h) differ.
struct Word {
  std::vector<GroupElement> letters;

  Word() = default;
  explicit Word(std::vector<GroupElement> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const GroupElement& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

/// (g_1, ..., g_k) -> (g_k^{-1}, ..., g_1^{-1}).
Word involute(const Group& group, const Word& w);

/// Juxtaposition.
Word concat(const Word& x, const Word& y);

/// (g_1, ..., g_k) . (h_1, ..., h_l) = (g_1, ..., g_k h_1, ..., h_l). Both words
/// must be nonempty; a product equal to e stays in the word as an e letter.
Word fuse_words(const Group& group, const Word& x, const Word& y);

/// The reduced form a^{l_1} z_{g_1} a^{l_2} ... z_{g_{k-1}} a^{l_k} in the free
/// product of the monoid N (generator a) and the group (letters z_g).
struct MPrimeWord {
  std::vector<std::uint64_t> exponents{0};
  std::vector<GroupElement> letters;

  friend bool operator==(const MPrimeWord&, const MPrimeWord&) = default;
  friend std::strong_ordering operator<=>(const MPrimeWord& a, const MPrimeWord& b);

  bool is_unit() const { return letters.empty() && exponents.front() == 0; }
  /// Sum of the exponents.
  std::uint64_t a_degree() const;
};

/// Reduced: exactly one more exponent than letters, interior exponents >= 1,
/// no identity letter.
bool is_reduced(const Group& group, const MPrimeWord& m);

/// Membership in the submonoid generated by the blocks a z_g a: either a pure
/// even power of a, or odd end exponents with even interior exponents >= 2.
bool in_block_submonoid(const Group& group, const MPrimeWord& m);

/// Maps each letter g to a z_g a and reduces (z_e is the unit).
MPrimeWord to_mprime(const Group& group, const Word& w);

/// Inverse of to_mprime. Throws InvalidArgument("not in submonoid S") when the
/// input is not a product of blocks a z_g a.
Word from_mprime(const Group& group, const MPrimeWord& m);

/// Sum of the a-exponents of the reduced form; equals 2 |w|.
std::uint64_t L_length(const Group& group, const Word& w);

bool all_identity(const Group& group, const Word& w);

/// Parses "[g, h, ...]" with the group's element tokens; "[]" is the empty word.
Word parse_word(const Group& group, std::string_view text);
std::string format_word(const Group& group, const Word& w);

/// Every word of length exactly n over the alphabet, in lexicographic order.
std::vector<Word> words_of_length(const std::vector<GroupElement>& alphabet, std::size_t n);
/// Every word of length <= n over the alphabet, shortest first.
std::vector<Word> words_up_to(const std::vector<GroupElement>& alphabet, std::size_t n);

}  // namespace hplus
