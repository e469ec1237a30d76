#include "hplus/groups.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hplus/error.hpp"

namespace hplus {

namespace {

// Generator letters of free groups. 'e' is reserved for the identity.
constexpr std::string_view kFreeLetters = "abcdfghijklmnopqrstuvwxyz";

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InvalidArgument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

GroupElement::FreeWord reduce_free(const GroupElement::FreeWord& word) {
  GroupElement::FreeWord out;
  out.reserve(word.size());
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

}  // namespace

std::int64_t GroupElement::scalar() const {
  if (!is_scalar()) throw InvalidArgument("group element is a free-group word, not a scalar");
  return std::get<std::int64_t>(rep_);
}

const GroupElement::FreeWord& GroupElement::free_word() const {
  if (is_scalar()) throw InvalidArgument("group element is a scalar, not a free-group word");
  return std::get<FreeWord>(rep_);
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() <=> b.rep_.index();
  if (a.is_scalar()) return a.scalar() <=> b.scalar();
  const auto& x = a.free_word();
  const auto& y = b.free_word();
  if (x.size() != y.size()) return x.size() <=> y.size();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

// ---------------------------------------------------------------------------

Group Group::cyclic(std::int64_t order) {
  if (order < 1) throw InvalidArgument("cyclic group order must be positive, got " + std::to_string(order));
  Group g;
  g.kind_ = Kind::cyclic;
  g.modulus_ = order;
  g.spec_ = order == 1 ? "trivial" : "cyclic:" + std::to_string(order);
  return g;
}

Group Group::integers() {
  Group g;
  g.kind_ = Kind::integers;
  g.modulus_ = 0;
  g.spec_ = "integers";
  return g;
}

Group Group::free(int rank) {
  if (rank < 1 || rank > static_cast<int>(kFreeLetters.size())) {
    throw InvalidArgument("free group rank must be in [1, " + std::to_string(kFreeLetters.size()) +
                          "], got " + std::to_string(rank));
  }
  Group g;
  g.kind_ = Kind::free;
  g.rank_ = rank;
  g.spec_ = "free:" + std::to_string(rank);
  return g;
}

Group Group::from_table(GroupTable table) {
  const std::size_t n = table.names.size();
  if (n == 0) throw InvalidArgument("group table: order must be positive");
  if (table.mul.size() != n * n) throw InvalidArgument("group table: table must be order x order");
  if (table.inverse.size() != n) throw InvalidArgument("group table: inverse must have order entries");
  if (table.identity >= n) throw InvalidArgument("group table: identity index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (table.names[i].empty()) throw InvalidArgument("group table: empty element name at index " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (table.names[i] == table.names[j]) {
        throw InvalidArgument("group table: duplicate element name '" + table.names[i] + "'");
      }
    }
  }
  for (auto v : table.mul) {
    if (v >= n) throw InvalidArgument("group table: product index " + std::to_string(v) + " out of range");
  }
  for (auto v : table.inverse) {
    if (v >= n) throw InvalidArgument("group table: inverse index " + std::to_string(v) + " out of range");
  }
  const auto at = [&](std::size_t a, std::size_t b) { return table.mul[a * n + b]; };
  // Latin square.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[at(a, b)]) {
        throw InvalidArgument("group table: latin square violated, row " + table.names[a] +
                              " repeats " + table.names[at(a, b)]);
      }
      if (col[at(b, a)]) {
        throw InvalidArgument("group table: latin square violated, column " + table.names[a] +
                              " repeats " + table.names[at(b, a)]);
      }
      row[at(a, b)] = true;
      col[at(b, a)] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (at(table.identity, a) != a || at(a, table.identity) != a) {
      throw InvalidArgument("group table: identity axiom fails for element " + table.names[a]);
    }
    const auto ia = table.inverse[a];
    if (at(a, ia) != table.identity || at(ia, a) != table.identity) {
      throw InvalidArgument("group table: inverse axiom fails for element " + table.names[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw InvalidArgument("group table: associativity fails on (" + table.names[a] + ", " +
                                table.names[b] + ", " + table.names[c] + ")");
        }
      }
    }
  }
  Group g;
  g.kind_ = Kind::table;
  g.modulus_ = static_cast<std::int64_t>(n);
  g.table_ = std::make_shared<const GroupTable>(std::move(table));
  g.spec_ = "table";
  return g;
}

Group Group::from_table_json(const nlohmann::json& doc) {
  GroupTable table;
  try {
    const auto order = doc.at("order").get<std::size_t>();
    table.names = doc.at("elements").get<std::vector<std::string>>();
    table.identity = doc.at("identity").get<std::size_t>();
    const auto rows = doc.at("table").get<std::vector<std::vector<std::uint32_t>>>();
    table.inverse = doc.at("inverse").get<std::vector<std::uint32_t>>();
    if (table.names.size() != order) throw InvalidArgument("group table: 'elements' must list order names");
    if (rows.size() != order) throw InvalidArgument("group table: 'table' must have order rows");
    for (const auto& row : rows) {
      if (row.size() != order) throw InvalidArgument("group table: every row of 'table' needs order entries");
      table.mul.insert(table.mul.end(), row.begin(), row.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("group table: malformed JSON: ") + e.what());
  }
  return from_table(std::move(table));
}

Group Group::load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("group table: cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("group table: '" + path.string() + "' is not valid JSON: " + e.what());
  }
  Group g = from_table_json(doc);
  g.spec_ = "table:" + path.string();
  return g;
}

std::optional<std::uint64_t> Group::order() const {
  switch (kind_) {
    case Kind::cyclic:
    case Kind::table:
      return static_cast<std::uint64_t>(modulus_);
    case Kind::integers:
    case Kind::free:
      return std::nullopt;
  }
  return std::nullopt;
}

const GroupTable& Group::table() const {
  if (!table_) throw InvalidArgument("group '" + spec_ + "' has no multiplication table");
  return *table_;
}

bool Group::contains(const GroupElement& g) const {
  switch (kind_) {
    case Kind::cyclic:
    case Kind::table:
      return g.is_scalar() && g.scalar() >= 0 && g.scalar() < modulus_;
    case Kind::integers:
      return g.is_scalar();
    case Kind::free: {
      if (g.is_scalar()) return false;
      const auto& w = g.free_word();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || std::abs(w[i]) > rank_) return false;
        if (i > 0 && w[i] == -w[i - 1]) return false;
      }
      return true;
    }
  }
  return false;
}

void Group::check(const GroupElement& g) const {
  if (!contains(g)) throw InvalidArgument("element does not belong to group '" + spec_ + "'");
}

GroupElement Group::identity() const {
  switch (kind_) {
    case Kind::cyclic:
    case Kind::integers:
      return GroupElement(std::int64_t{0});
    case Kind::table:
      return GroupElement(static_cast<std::int64_t>(table_->identity));
    case Kind::free:
      return GroupElement(GroupElement::FreeWord{});
  }
  return GroupElement();
}

bool Group::is_identity(const GroupElement& g) const {
  check(g);
  return g == identity();
}

GroupElement Group::mul(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  switch (kind_) {
    case Kind::cyclic:
      return GroupElement((g.scalar() + h.scalar()) % modulus_);
    case Kind::integers: {
      std::int64_t out = 0;
      if (__builtin_add_overflow(g.scalar(), h.scalar(), &out)) {
        throw ResourceCap("integer group element overflows 64 bits");
      }
      return GroupElement(out);
    }
    case Kind::table:
      return GroupElement(static_cast<std::int64_t>(
          table_->product(static_cast<std::size_t>(g.scalar()), static_cast<std::size_t>(h.scalar()))));
    case Kind::free: {
      auto word = g.free_word();
      const auto& tail = h.free_word();
      word.insert(word.end(), tail.begin(), tail.end());
      return GroupElement(reduce_free(word));
    }
  }
  return GroupElement();
}

GroupElement Group::inv(const GroupElement& g) const {
  check(g);
  switch (kind_) {
    case Kind::cyclic:
      return GroupElement((modulus_ - g.scalar()) % modulus_);
    case Kind::integers:
      if (g.scalar() == INT64_MIN) throw ResourceCap("integer group element overflows 64 bits");
      return GroupElement(-g.scalar());
    case Kind::table:
      return GroupElement(static_cast<std::int64_t>(table_->inverse[static_cast<std::size_t>(g.scalar())]));
    case Kind::free: {
      GroupElement::FreeWord word(g.free_word().rbegin(), g.free_word().rend());
      for (auto& letter : word) letter = -letter;
      return GroupElement(std::move(word));
    }
  }
  return GroupElement();
}

GroupElement Group::pow(const GroupElement& g, std::int64_t n) const {
  GroupElement base = n < 0 ? inv(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  GroupElement out = identity();
  while (e > 0) {
    if (e & 1U) out = mul(out, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return out;
}

std::optional<std::uint64_t> Group::element_order(const GroupElement& g) const {
  check(g);
  switch (kind_) {
    case Kind::cyclic: {
      const auto d = std::gcd(g.scalar(), modulus_);
      return static_cast<std::uint64_t>(modulus_ / d);
    }
    case Kind::table: {
      GroupElement x = g;
      std::uint64_t n = 1;
      while (!is_identity(x)) {
        x = mul(x, g);
        ++n;
      }
      return n;
    }
    case Kind::integers:
      if (g.scalar() == 0) return 1;
      return std::nullopt;
    case Kind::free:
      if (g.free_word().empty()) return 1;
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<GroupElement> Group::enumerate() const {
  if (!is_finite()) throw InvalidArgument("group '" + spec_ + "' is infinite and not enumerable");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(modulus_));
  out.push_back(identity());
  for (std::int64_t i = 0; i < modulus_; ++i) {
    GroupElement g(i);
    if (g != out.front()) out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> Group::sample_alphabet() const {
  if (is_finite()) return enumerate();
  std::vector<GroupElement> out{identity()};
  if (kind_ == Kind::integers) {
    for (std::int64_t v : {1, -1, 2, -2}) out.emplace_back(v);
  } else {
    for (int i = 1; i <= rank_; ++i) {
      out.emplace_back(GroupElement::FreeWord{i});
      out.emplace_back(GroupElement::FreeWord{-i});
    }
  }
  return out;
}

GroupElement Group::parse_element(std::string_view raw) const {
  const std::string token = trim(raw);
  if (token.empty()) throw InvalidArgument("empty group element token");
  if (token == "e") return identity();
  switch (kind_) {
    case Kind::cyclic: {
      const auto v = parse_int(token, "element of " + spec_);
      return GroupElement(((v % modulus_) + modulus_) % modulus_);
    }
    case Kind::integers:
      return GroupElement(parse_int(token, "integer element"));
    case Kind::table: {
      const auto& names = table_->names;
      auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end()) throw InvalidArgument("unknown element '" + token + "' for group table");
      return GroupElement(static_cast<std::int64_t>(it - names.begin()));
    }
    case Kind::free: {
      GroupElement::FreeWord word;
      for (char c : token) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const auto pos = kFreeLetters.find(lower);
        if (pos == std::string_view::npos || static_cast<int>(pos) >= rank_) {
          throw InvalidArgument("invalid letter '" + std::string(1, c) + "' in free-group element '" + token +
                                "' (" + spec_ + ")");
        }
        const int gen = static_cast<int>(pos) + 1;
        word.push_back(std::isupper(static_cast<unsigned char>(c)) ? -gen : gen);
      }
      return GroupElement(reduce_free(word));
    }
  }
  return identity();
}

std::string Group::format_element(const GroupElement& g) const {
  check(g);
  switch (kind_) {
    case Kind::cyclic:
    case Kind::integers:
      return std::to_string(g.scalar());
    case Kind::table:
      return table_->names[static_cast<std::size_t>(g.scalar())];
    case Kind::free: {
      if (g.free_word().empty()) return "e";
      std::string out;
      for (int letter : g.free_word()) {
        const char c = kFreeLetters[static_cast<std::size_t>(std::abs(letter) - 1)];
        out.push_back(letter < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
      }
      return out;
    }
  }
  return {};
}

bool operator==(const Group& a, const Group& b) {
  if (a.kind() != b.kind() || a.modulus() != b.modulus() || a.rank() != b.rank()) return false;
  if (a.kind() != Group::Kind::table) return true;
  const auto& x = a.table();
  const auto& y = b.table();
  return &x == &y || (x.names == y.names && x.identity == y.identity && x.mul == y.mul && x.inverse == y.inverse);
}

Group parse_group_spec(std::string_view raw) {
  const std::string spec = trim(raw);
  if (spec == "trivial") return Group::trivial();
  if (spec == "integers") return Group::integers();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InvalidArgument("malformed group spec '" + spec +
                          "': expected trivial | integers | cyclic:<s> | free:<n> | table:<path>");
  }
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (head == "cyclic") return Group::cyclic(parse_int(arg, "cyclic order"));
  if (head == "free") return Group::free(static_cast<int>(parse_int(arg, "free rank")));
  if (head == "table") {
    if (arg.empty()) throw InvalidArgument("malformed group spec '" + spec + "': missing table path");
    return Group::load_table(arg);
  }
  throw InvalidArgument("malformed group spec '" + spec + "': unknown backend '" + head + "'");
}

}  // namespace hplus
