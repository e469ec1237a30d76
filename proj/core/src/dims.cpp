#include "hplus/dims.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hplus/error.hpp"

namespace hplus {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

IntPolynomial IntPolynomial::even_substitute() const {
  if (!is_even()) throw InternalError("even_substitute: polynomial has odd terms");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) out.push_back(coeffs_[i]);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial chebyshev_A(std::size_t k) {
  const IntPolynomial X = IntPolynomial::monomial(1, 1);
  IntPolynomial prev = IntPolynomial::constant(1);
  if (k == 0) return prev;
  IntPolynomial cur = X;
  for (std::size_t i = 1; i < k; ++i) {
    IntPolynomial next = X * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double chebyshev_A_value(std::size_t k, double t) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = t;
  for (std::size_t i = 1; i < k; ++i) {
    const double next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CharacterPoly character_polynomial(const Group& group, const MPrimeWord& alpha) {
  if (!in_block_submonoid(group, alpha)) throw InvalidArgument("character_polynomial: word not in submonoid S");
  IntPolynomial q = IntPolynomial::constant(1);
  for (auto l : alpha.exponents) q = q * chebyshev_A(l);
  if (!q.is_even()) throw InternalError("character polynomial " + q.to_string() + " is not even");
  CharacterPoly out{q, q.even_substitute()};
  return out;
}

BigInt dimension(const Group& group, const Word& w, std::uint64_t N) {
  if (N == 0) throw InvalidArgument("dimension: N must be >= 1");
  return character_polynomial(group, to_mprime(group, w)).P.evaluate(BigInt(static_cast<unsigned long>(N)));
}

void check_multiplier_range(double x, std::uint64_t N) {
  const double n = static_cast<double>(N);
  if (N >= 5) {
    if (!(x >= 4.0 && x <= n)) {
      throw InvalidArgument("multiplier: x must lie in I_N = [4, " + std::to_string(N) + "]");
    }
  } else if (N == 4) {
    if (!(x >= 0.0 && x <= 4.0)) throw InvalidArgument("multiplier: x must lie in I_4 = [0, 4]");
  } else {
    throw InvalidArgument("multiplier: N must be >= 4");
  }
}

double multiplier_eigenvalue(const Group& group, const Word& w, double x, std::uint64_t N) {
  check_multiplier_range(x, N);
  if (x == static_cast<double>(N)) return 1.0;
  const auto top = to_mprime(group, involute(group, w)).exponents;
  const auto bottom = to_mprime(group, w).exponents;
  const double sx = std::sqrt(x), sn = std::sqrt(static_cast<double>(N));
  double c = 1.0;
  for (auto l : top) c *= chebyshev_A_value(l, sx);
  for (auto l : bottom) c /= chebyshev_A_value(l, sn);
  return c;
}

std::vector<Word> ball(const Group& group, std::uint64_t R, std::uint64_t cap) {
  if (!group.is_finite()) throw InvalidArgument("ball: group " + group.spec() + " is infinite");
  const auto elements = group.enumerate();
  const std::size_t max_len = R / 2;
  BigInt total = 0, layer = 1;
  for (std::size_t n = 0; n <= max_len; ++n) {
    total += layer;
    layer *= static_cast<unsigned long>(elements.size());
  }
  if (total > static_cast<unsigned long>(cap)) {
    throw ResourceCap("ball: B_" + std::to_string(R) + " has " + total.get_str() + " words; cap is " +
                      std::to_string(cap));
  }
  return words_up_to(elements, max_len);
}

std::vector<DecayRow> decay_profile(const Group& group, double x, std::uint64_t N, std::uint64_t R_max) {
  if (!group.is_finite()) throw InvalidArgument("decay_profile: group " + group.spec() + " is infinite");
  check_multiplier_range(x, N);
  if (!(x < static_cast<double>(N))) throw InvalidArgument("decay_profile: x must be strictly below N");
  const std::uint64_t order = *group.order();
  const std::size_t n_max = R_max / 2;

  // f[l] = |A_l(√x) / A_l(√N)|
  const double sx = std::sqrt(x), sn = std::sqrt(static_cast<double>(N));
  std::vector<double> f(2 * n_max + 2);
  for (std::size_t l = 0; l < f.size(); ++l) f[l] = std::fabs(chebyshev_A_value(l, sx) / chebyshev_A_value(l, sn));

  // h[m]: best product over the m letters that follow a non-identity letter.
  std::vector<double> h(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    h[m] = f[2 * m + 1];
    for (std::size_t b = 0; b < m; ++b) h[m] = std::max(h[m], f[2 * b + 2] * h[m - b - 1]);
  }

  std::vector<DecayRow> rows;
  BigInt size = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    double best = f[2 * n];
    if (order >= 2) {
      for (std::size_t a = 0; a < n; ++a) best = std::max(best, f[2 * a + 1] * h[n - a - 1]);
    }
    rows.push_back({2 * n, size, n == 0 ? 1.0 : best});
    size *= static_cast<unsigned long>(order);
  }
  return rows;
}

}  // namespace hplus
