#include "hplus/fusion.hpp"

#include <algorithm>

#include "hplus/error.hpp"

namespace hplus {

FusionElement FusionElement::unit() { return basis(Word{}); }

FusionElement FusionElement::basis(Word w, const BigInt& coeff) {
  FusionElement out;
  out.add(w, coeff);
  return out;
}

void FusionElement::add(const Word& w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt FusionElement::coefficient(const Word& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<Word> FusionElement::support() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

FusionElement& FusionElement::operator+=(const FusionElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

FusionElement& FusionElement::operator-=(const FusionElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

FusionElement& FusionElement::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FusionElement fuse_basis(const Group& group, const Word& x, const Word& y) {
  FusionElement out;
  const std::size_t max_split = std::min(x.size(), y.size());
  for (std::size_t j = 0; j <= max_split; ++j) {
    // The length-j suffix of x must be the involute of the length-j prefix of y.
    if (j > 0 && !group.is_identity(group.mul(x[x.size() - j], y[j - 1]))) break;
    const Word u(std::vector<GroupElement>(x.letters.begin(), x.letters.end() - static_cast<std::ptrdiff_t>(j)));
    const Word v(std::vector<GroupElement>(y.letters.begin() + static_cast<std::ptrdiff_t>(j), y.letters.end()));
    out.add(concat(u, v), 1);
    if (!u.empty() && !v.empty()) out.add(fuse_words(group, u, v), 1);
  }
  return out;
}

FusionElement product(const Group& group, const FusionElement& a, const FusionElement& b) {
  FusionElement out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      const BigInt scale = cx * cy;
      const auto xy = fuse_basis(group, x, y);
      for (const auto& [w, c] : xy.terms()) out.add(w, c * scale);
    }
  }
  return out;
}

FusionElement conjugate(const Group& group, const FusionElement& a) {
  FusionElement out;
  for (const auto& [w, c] : a.terms()) out.add(involute(group, w), c);
  return out;
}

FusionElement decompose_generator_product(const Group& group, const std::vector<GroupElement>& gs,
                                          GeneratorMode mode) {
  FusionElement acc = FusionElement::unit();
  for (const auto& g : gs) {
    FusionElement factor = FusionElement::basis(Word({g}));
    if (mode == GeneratorMode::a_rep && group.is_identity(g)) factor += FusionElement::unit();
    acc = product(group, acc, factor);
  }
  return acc;
}

// a/z calculus --------------------------------------------------------------

namespace {

// x = v a z_g with g possibly e.
std::pair<MPrimeWord, GroupElement> split_right(const Group& group, const MPrimeWord& x) {
  MPrimeWord v = x;
  if (v.exponents.back() > 0) {
    --v.exponents.back();
    return {std::move(v), group.identity()};
  }
  if (v.letters.empty() || v.exponents[v.exponents.size() - 2] == 0) {
    throw InternalError("a/z fusion: left factor does not end in a or a z_g");
  }
  GroupElement g = v.letters.back();
  v.letters.pop_back();
  v.exponents.pop_back();
  --v.exponents.back();
  return {std::move(v), std::move(g)};
}

// y = z_h a w with h possibly e.
std::pair<GroupElement, MPrimeWord> split_left(const Group& group, const MPrimeWord& y) {
  MPrimeWord w = y;
  if (w.exponents.front() > 0) {
    --w.exponents.front();
    return {group.identity(), std::move(w)};
  }
  if (w.letters.empty() || w.exponents[1] == 0) {
    throw InternalError("a/z fusion: right factor does not start with a or z_h a");
  }
  GroupElement h = w.letters.front();
  w.letters.erase(w.letters.begin());
  w.exponents.erase(w.exponents.begin());
  --w.exponents.front();
  return {std::move(h), std::move(w)};
}

// Reduced form of v a z_g a w.
MPrimeWord join(const Group& group, const MPrimeWord& v, const GroupElement& g, const MPrimeWord& w) {
  MPrimeWord out = v;
  if (group.is_identity(g)) {
    out.exponents.back() += 2 + w.exponents.front();
  } else {
    out.exponents.back() += 1;
    out.letters.push_back(g);
    out.exponents.push_back(w.exponents.front() + 1);
  }
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.exponents.insert(out.exponents.end(), w.exponents.begin() + 1, w.exponents.end());
  return out;
}

void fuse_reduced_into(const Group& group, const MPrimeWord& x, const MPrimeWord& y,
                       std::map<MPrimeWord, BigInt>& out) {
  if (x.is_unit()) {
    out[y] += 1;
    return;
  }
  if (y.is_unit()) {
    out[x] += 1;
    return;
  }
  auto [v, g] = split_right(group, x);
  auto [h, w] = split_left(group, y);
  const GroupElement gh = group.mul(g, h);
  out[join(group, v, gh, w)] += 1;
  if (group.is_identity(gh)) fuse_reduced_into(group, v, w, out);
}

}  // namespace

std::map<MPrimeWord, BigInt> fuse_mprime_reduced(const Group& group, const MPrimeWord& x, const MPrimeWord& y) {
  if (!is_reduced(group, x) || !is_reduced(group, y)) throw InvalidArgument("a/z fusion needs reduced words");
  std::map<MPrimeWord, BigInt> out;
  fuse_reduced_into(group, x, y, out);
  return out;
}

FusionElement fuse_mprime(const Group& group, const MPrimeWord& x, const MPrimeWord& y) {
  if (!in_block_submonoid(group, x) || !in_block_submonoid(group, y)) {
    throw InvalidArgument("a/z fusion: inputs must lie in the submonoid generated by a z_g a");
  }
  FusionElement out;
  for (const auto& [m, c] : fuse_mprime_reduced(group, x, y)) {
    if (!in_block_submonoid(group, m)) throw InternalError("a/z fusion produced a word outside the submonoid");
    out.add(from_mprime(group, m), c);
  }
  return out;
}

// Built-in rings ------------------------------------------------------------

std::vector<std::uint64_t> snplus_fuse(std::uint64_t s, std::uint64_t t) {
  std::vector<std::uint64_t> out;
  const auto m = std::min(s, t);
  for (std::uint64_t k = 0; k <= 2 * m; ++k) out.push_back(s + t - k);
  return out;
}

std::map<ResidueWord, BigInt> hsn_fuse(const ResidueWord& x, const ResidueWord& y, std::int64_t s) {
  if (s < 0) throw InvalidArgument("hsn_fuse: s must be >= 0 (0 stands for Z)");
  const auto norm = [s](std::int64_t v) { return s == 0 ? v : ((v % s) + s) % s; };
  std::map<ResidueWord, BigInt> out;
  for (std::size_t j = 0; j <= std::min(x.size(), y.size()); ++j) {
    // z is the last j letters of x; z̄ reverses and negates them.
    bool matches = true;
    for (std::size_t i = 0; i < j && matches; ++i) {
      matches = norm(-x[x.size() - 1 - i]) == norm(y[i]);
    }
    if (!matches) break;
    ResidueWord v(x.begin(), x.end() - static_cast<std::ptrdiff_t>(j));
    ResidueWord w(y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
    ResidueWord vw = v;
    vw.insert(vw.end(), w.begin(), w.end());
    out[vw] += 1;
    if (!v.empty() && !w.empty()) {
      ResidueWord fused = v;
      fused.back() = norm(v.back() + w.front());
      fused.insert(fused.end(), w.begin() + 1, w.end());
      out[fused] += 1;
    }
  }
  return out;
}

FusionElement hsn_fuse(const Group& group, const Word& x, const Word& y) {
  if (group.kind() != Group::Kind::cyclic && group.kind() != Group::Kind::integers) {
    throw InvalidArgument("hsn_fuse needs a cyclic group or the integers");
  }
  const auto raw = [&](const Word& w) {
    ResidueWord r;
    for (const auto& g : w.letters) {
      if (!group.contains(g)) throw InvalidArgument("hsn_fuse: letter outside " + group.spec());
      r.push_back(g.scalar());
    }
    return r;
  };
  FusionElement out;
  for (const auto& [r, c] : hsn_fuse(raw(x), raw(y), group.modulus())) {
    Word w;
    for (auto v : r) w.letters.emplace_back(v);
    out.add(w, c);
  }
  return out;
}

// Supports ------------------------------------------------------------------

SupportSet support_product(const Group& group, const SupportSet& a, const SupportSet& b) {
  SupportSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const auto xy = fuse_basis(group, x, y);
      for (const auto& [w, c] : xy.terms()) out.insert(w);
    }
  }
  return out;
}

Region classify_word(const Group& group, const Word& w) {
  if (all_identity(group, w)) return Region::E2;
  if (group.is_identity(w.letters.front())) return Region::E3;
  return group.is_identity(w.letters.back()) ? Region::G1_not_G2 : Region::G2;
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::E2:
      return "E2";
    case Region::E3:
      return "E3";
    case Region::G2:
      return "G2";
    case Region::G1_not_G2:
      return "G1\\G2";
  }
  return "?";
}

bool in_G1(const Group& group, const Word& w) { return !w.empty() && !group.is_identity(w.letters.front()); }

bool in_E1(const Group& group, const Word& w) { return !in_G1(group, w); }

}  // namespace hplus
