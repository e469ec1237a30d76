#include "hplus/free_product.hpp"

#include <charconv>

#include "hplus/error.hpp"
#include "hplus/fusion.hpp"

namespace hplus {

namespace {

std::uint64_t so3_label(const std::string& label) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec != std::errc{} || ptr != label.data() + label.size() || label.empty()) {
    throw InvalidArgument("not an SO(3) label: '" + label + "'");
  }
  return value;
}

}  // namespace

std::map<std::string, BigInt> SO3Ring::fuse(const std::string& z, const std::string& zp) const {
  std::map<std::string, BigInt> out;
  for (auto t : snplus_fuse(so3_label(z), so3_label(zp))) out[std::to_string(t)] += 1;
  return out;
}

bool SO3Ring::is_label(const std::string& label) const {
  try {
    so3_label(label);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::string GroupDualRing::conjugate(const std::string& label) const {
  return group_.format_element(group_.inv(group_.parse_element(label)));
}

std::map<std::string, BigInt> GroupDualRing::fuse(const std::string& z, const std::string& zp) const {
  const auto g = group_.mul(group_.parse_element(z), group_.parse_element(zp));
  return {{group_.format_element(g), BigInt(1)}};
}

bool GroupDualRing::is_label(const std::string& label) const {
  try {
    group_.parse_element(label);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

// ---------------------------------------------------------------------------

FreeProductRing::FreeProductRing(std::vector<std::shared_ptr<const ComponentRing>> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!c) throw InvalidArgument("free product: null component ring");
  }
}

const ComponentRing& FreeProductRing::component(std::size_t i) const {
  if (i >= components_.size()) throw InvalidArgument("free product: unknown component " + std::to_string(i));
  return *components_[i];
}

bool FreeProductRing::is_alternating(const AlternatingWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].component >= components_.size()) return false;
    const auto& ring = *components_[w[i].component];
    if (!ring.is_label(w[i].label) || w[i].label == ring.trivial()) return false;
    if (i > 0 && w[i].component == w[i - 1].component) return false;
  }
  return true;
}

std::map<AlternatingWord, BigInt> FreeProductRing::fuse(const AlternatingWord& x, const AlternatingWord& y) const {
  for (const auto* w : {&x, &y}) {
    for (const auto& letter : *w) component(letter.component);
    if (!is_alternating(*w)) throw InvalidArgument("free product: input word is not alternating");
  }
  std::map<AlternatingWord, BigInt> out;
  fuse_into(x, y, BigInt(1), out);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

void FreeProductRing::fuse_into(const AlternatingWord& x, const AlternatingWord& y, const BigInt& scale,
                                std::map<AlternatingWord, BigInt>& out) const {
  if (x.empty() || y.empty() || x.back().component != y.front().component) {
    AlternatingWord xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    out[xy] += scale;
    return;
  }
  const FreeLetter& z = x.back();
  const FreeLetter& zp = y.front();
  const ComponentRing& ring = *components_[z.component];
  const AlternatingWord v(x.begin(), x.end() - 1);
  const AlternatingWord w(y.begin() + 1, y.end());
  for (const auto& [t, mult] : ring.fuse(z.label, zp.label)) {
    if (t == ring.trivial()) continue;
    AlternatingWord vtw = v;
    vtw.push_back(FreeLetter{z.component, t});
    vtw.insert(vtw.end(), w.begin(), w.end());
    out[vtw] += scale * mult;
  }
  if (ring.conjugate(z.label) == zp.label) fuse_into(v, w, scale, out);
}

}  // namespace hplus
