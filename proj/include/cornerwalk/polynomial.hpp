#ifndef CORNERWALK_POLYNOMIAL_HPP
#define CORNERWALK_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cornerwalk {

using BigInt = mpz_class;

/// C(n, k), zero outside 0 <= k <= n (and for n < 0).
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

/// Dense integer polynomial in x, ascending coefficients, no trailing zeros.
/// The zero polynomial has no coefficients.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly monomial(std::size_t degree, BigInt c = 1);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the stored range.
  BigInt coeff(std::size_t i) const;
  BigInt evaluate(const BigInt& point) const;
  std::string str() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Coefficients c_i of p(x) = sum c_i (x+1)^i, canonical like IntPoly.
class ShiftedCoeffs {
public:
  ShiftedCoeffs() = default;
  explicit ShiftedCoeffs(std::vector<BigInt> coeffs);
  ShiftedCoeffs(std::initializer_list<long> coeffs);

  std::span<const BigInt> coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }
  friend bool operator==(const ShiftedCoeffs& a, const ShiftedCoeffs& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<BigInt> coeffs_;
};

/// Taylor shift about x = -1 by repeated synthetic division by (x+1).
ShiftedCoeffs to_shifted_basis(const IntPoly& p);
IntPoly from_shifted_basis(const ShiftedCoeffs& c);

/// p lies in N0[x+1].
bool is_x_plus_1_positive(const IntPoly& p);

/// sum_{i>=0} C(n, i+k) x^i.
IntPoly bin_lower(int k, int n);
/// Closed form sum_i C(n-i-1, k-1) (x+1)^i; needs k, n >= 1.
ShiftedCoeffs bin_lower_shifted(int k, int n);

/// sum_{S subset [n]} x^{||S| - k|}; needs 0 <= k <= n.
IntPoly bin_upper(int k, int n);
/// Closed form sum_{i>0} (C(n-i-1, k-1) + C(n-i-1, n-k-1)) (x+1)^i; needs 1 <= k <= n.
ShiftedCoeffs bin_upper_shifted(int k, int n);

/// The (x+1)-expansion of the absolute signed peak-count polynomial for
/// loops with m East/West pairs and n North/South pairs.
ShiftedCoeffs thmpos_formula(int m, int n);

/// Degree-j member of the toggle basis: 1 for j = 0, bin^j(2j-1) otherwise.
/// Each member is monic of degree j.
IntPoly toggle_basis_element(int j);

/// Coefficients over the toggle basis, indexed by degree; unique.
using BasisCoeffs = std::vector<BigInt>;
BasisCoeffs toggle_basis_decompose(const IntPoly& p);
IntPoly toggle_basis_compose(const BasisCoeffs& coeffs);
/// All basis coefficients are non-negative.
bool is_toggle_buildable(const IntPoly& p);
/// Stricter reading: p is a non-negative combination of 1 and the full
/// toggle-class polynomials bin^j(2j), i.e. every coefficient of degree
/// j >= 1 is also even.
bool is_toggle_buildable_even(const IntPoly& p);

} // namespace cornerwalk

#endif
