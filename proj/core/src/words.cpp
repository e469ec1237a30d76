#include "hplus/words.hpp"

#include <algorithm>

#include "hplus/error.hpp"

namespace hplus {

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                                b.letters.end());
}

std::strong_ordering operator<=>(const MPrimeWord& a, const MPrimeWord& b) {
  if (auto c = a.exponents <=> b.exponents; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                                b.letters.end());
}

std::uint64_t MPrimeWord::a_degree() const {
  std::uint64_t total = 0;
  for (auto l : exponents) total += l;
  return total;
}

Word involute(const Group& group, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(group.inv(*it));
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

Word fuse_words(const Group& group, const Word& x, const Word& y) {
  if (x.empty() || y.empty()) throw InvalidArgument("fusion requires nonempty words");
  Word out;
  out.letters.reserve(x.size() + y.size() - 1);
  out.letters.insert(out.letters.end(), x.letters.begin(), x.letters.end() - 1);
  out.letters.push_back(group.mul(x.letters.back(), y.letters.front()));
  out.letters.insert(out.letters.end(), y.letters.begin() + 1, y.letters.end());
  return out;
}

bool is_reduced(const Group& group, const MPrimeWord& m) {
  if (m.exponents.size() != m.letters.size() + 1) return false;
  for (std::size_t i = 1; i + 1 < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) return false;
  }
  return std::none_of(m.letters.begin(), m.letters.end(), [&](const auto& g) { return group.is_identity(g); });
}

bool in_block_submonoid(const Group& group, const MPrimeWord& m) {
  if (!is_reduced(group, m)) return false;
  if (m.letters.empty()) return m.exponents.front() % 2 == 0;
  if (m.exponents.front() % 2 == 0 || m.exponents.back() % 2 == 0) return false;
  for (std::size_t i = 1; i + 1 < m.exponents.size(); ++i) {
    if (m.exponents[i] % 2 != 0 || m.exponents[i] < 2) return false;
  }
  return true;
}

MPrimeWord to_mprime(const Group& group, const Word& w) {
  MPrimeWord m;
  for (const auto& g : w.letters) {
    if (group.is_identity(g)) {
      m.exponents.back() += 2;
    } else {
      m.exponents.back() += 1;
      m.letters.push_back(g);
      m.exponents.push_back(1);
    }
  }
  return m;
}

Word from_mprime(const Group& group, const MPrimeWord& m) {
  if (!in_block_submonoid(group, m)) throw InvalidArgument("not in submonoid S");
  Word w;
  const auto push_identities = [&](std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) w.letters.push_back(group.identity());
  };
  if (m.letters.empty()) {
    push_identities(m.exponents.front() / 2);
    return w;
  }
  push_identities((m.exponents.front() - 1) / 2);
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    w.letters.push_back(m.letters[i]);
    const auto l = m.exponents[i + 1];
    push_identities(i + 2 == m.exponents.size() ? (l - 1) / 2 : (l - 2) / 2);
  }
  return w;
}

std::uint64_t L_length(const Group& group, const Word& w) { return to_mprime(group, w).a_degree(); }

bool all_identity(const Group& group, const Word& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [&](const auto& g) { return group.is_identity(g); });
}

Word parse_word(const Group& group, std::string_view text) {
  const auto open = text.find_first_not_of(" \t");
  const auto close = text.find_last_not_of(" \t");
  if (open == std::string_view::npos || text[open] != '[' || text[close] != ']') {
    throw InvalidArgument("word must be a bracketed list like [g, h], got '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(open + 1, close - open - 1);
  Word w;
  if (body.find_first_not_of(" \t") == std::string_view::npos) return w;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const auto token = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      w.letters.push_back(group.parse_element(token));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("word '" + std::string(text) + "', letter " + std::to_string(w.size() + 1) + ": " +
                            e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string format_word(const Group& group, const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += group.format_element(w[i]);
  }
  return out + "]";
}

std::vector<Word> words_of_length(const std::vector<GroupElement>& alphabet, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out) {
      for (const auto& g : alphabet) {
        Word x = w;
        x.letters.push_back(g);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(const std::vector<GroupElement>& alphabet, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = words_of_length(alphabet, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace hplus
