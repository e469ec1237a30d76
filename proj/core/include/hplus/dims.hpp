#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hplus/bigint.hpp"
#include "hplus/groups.hpp"
#include "hplus/words.hpp"

namespace hplus {

/// Dense integer polynomial, coefficient i of X^i. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  /// Only even powers of X occur.
  bool is_even() const;
  /// For an even Q, the polynomial P with P(X^2) = Q(X).
  IntPolynomial even_substitute() const;

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;

  /// "X^4 - 3X^2 + 1"
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// A_0 = 1, A_1 = X, X A_k = A_{k+1} + A_{k-1}.
IntPolynomial chebyshev_A(std::size_t k);

/// Value of A_k at a real point, by the recurrence.
double chebyshev_A_value(std::size_t k, double t);

struct CharacterPoly {
  IntPolynomial Q;  ///< ∏ A_{l_i}(X)
  IntPolynomial P;  ///< P(X^2) = Q(X)
};

/// Throws InternalError if Q is not even, which only happens for inputs outside
/// the block submonoid.
CharacterPoly character_polynomial(const Group& group, const MPrimeWord& alpha);

/// Dimension of the irreducible labelled by w at parameter N: P(N), exact.
BigInt dimension(const Group& group, const Word& w, std::uint64_t N);

/// Checks x ∈ I_N ([4, N] for N >= 5, [0, 4] for N = 4).
void check_multiplier_range(double x, std::uint64_t N);

/// c_x(w) = ∏ A_{l_i}(√x) / ∏ A_{l_i}(√N), the exponents read from the
/// conjugate word in the numerator. Floating point, ~1e-12 relative error
/// for moderate word lengths; x = N returns exactly 1.
double multiplier_eigenvalue(const Group& group, const Word& w, double x, std::uint64_t N);

inline constexpr std::uint64_t kDefaultBallCap = 1'000'000;

/// Every word with L(w) <= R. Since L(w) = 2|w| these are the words of length
/// <= R / 2. Needs a finite group.
std::vector<Word> ball(const Group& group, std::uint64_t R, std::uint64_t cap = kDefaultBallCap);

struct DecayRow {
  std::uint64_t R = 0;
  BigInt shell_size;
  double max_abs_c = 0.0;
};

/// Maximum of |c_x| over each nonempty shell L = R, R <= R_max. Shells with odd
/// R are empty and omitted. The maximum runs over the exponent patterns of the
/// shell rather than over its words, so R_max is not limited by |Γ|^{R/2}.
std::vector<DecayRow> decay_profile(const Group& group, double x, std::uint64_t N, std::uint64_t R_max);

}  // namespace hplus
