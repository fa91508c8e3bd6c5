#include "cornerwalk/polynomial.hpp"

#include "cornerwalk/paths.hpp"

#include <algorithm>
#include <cstdlib>

namespace cornerwalk {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

void trim_zeros(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<BigInt> from_longs(std::initializer_list<long> coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return out;
}

} // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) : IntPoly(from_longs(coeffs)) {}

IntPoly IntPoly::monomial(std::size_t degree, BigInt c) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return IntPoly(std::move(coeffs));
}

void IntPoly::trim() { trim_zeros(coeffs_); }

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::evaluate(const BigInt& point) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

ShiftedCoeffs::ShiftedCoeffs(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim_zeros(coeffs_);
}

ShiftedCoeffs::ShiftedCoeffs(std::initializer_list<long> coeffs)
    : ShiftedCoeffs(from_longs(coeffs)) {}

BigInt ShiftedCoeffs::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

ShiftedCoeffs to_shifted_basis(const IntPoly& p) {
  std::vector<BigInt> work(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> out;
  out.reserve(work.size());
  // Each pass divides by (x+1) in place: work[0] becomes the remainder and
  // work[1..] the quotient.
  while (!work.empty()) {
    for (std::size_t i = work.size() - 1; i > 0; --i) work[i - 1] -= work[i];
    out.push_back(work.front());
    work.erase(work.begin());
  }
  return ShiftedCoeffs(std::move(out));
}

IntPoly from_shifted_basis(const ShiftedCoeffs& c) {
  // Horner in y = x + 1.
  IntPoly acc;
  const IntPoly y{1, 1};
  auto cs = c.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * y + IntPoly::monomial(0, *it);
  return acc;
}

bool is_x_plus_1_positive(const IntPoly& p) {
  auto s = to_shifted_basis(p);
  return std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const BigInt& c) { return c >= 0; });
}

IntPoly bin_lower(int k, int n) {
  if (k < 0 || n < 0) throw Error("bin_lower needs k, n >= 0");
  std::vector<BigInt> coeffs;
  for (int i = 0; i + k <= n; ++i) coeffs.push_back(binomial(n, i + k));
  return IntPoly(std::move(coeffs));
}

ShiftedCoeffs bin_lower_shifted(int k, int n) {
  if (k < 1 || n < 1) throw Error("bin_lower_shifted needs k, n >= 1");
  std::vector<BigInt> coeffs;
  for (int i = 0; i < n; ++i) coeffs.push_back(binomial(n - i - 1, k - 1));
  return ShiftedCoeffs(std::move(coeffs));
}

IntPoly bin_upper(int k, int n) {
  if (k < 0 || k > n) throw Error("bin_upper needs 0 <= k <= n");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max(k, n - k)) + 1);
  for (int j = 0; j <= n; ++j) coeffs[static_cast<std::size_t>(std::abs(j - k))] += binomial(n, j);
  return IntPoly(std::move(coeffs));
}

ShiftedCoeffs bin_upper_shifted(int k, int n) {
  if (k < 1 || k > n) throw Error("bin_upper_shifted needs 1 <= k <= n");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    BigInt c = binomial(n - i - 1, k - 1);
    // At k = n the second term is C(n-i-1, -1), read as 1 exactly when the
    // top is also -1; this recovers bin^n(n) = (x+1)^n.
    if (k == n) c += (i == n) ? 1 : 0;
    else c += binomial(n - i - 1, n - k - 1);
    coeffs[static_cast<std::size_t>(i)] = c;
  }
  return ShiftedCoeffs(std::move(coeffs));
}

ShiftedCoeffs thmpos_formula(int m, int n) {
  if (m < 0 || n < 0) throw Error("thmpos_formula needs m, n >= 0");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1);
  coeffs[0] = binomial(m + n, n);
  for (int i = 1; i <= 2 * n; ++i) {
    BigInt sum = 0;
    for (int k = 0; k < n; ++k)
      sum += binomial(m + n, k) * binomial(m + n - k, 2 * n - 2 * k) *
             binomial(2 * n - 2 * k - i - 1, n - k - 1);
    coeffs[static_cast<std::size_t>(i)] = 2 * sum;
  }
  return ShiftedCoeffs(std::move(coeffs));
}

IntPoly toggle_basis_element(int j) {
  if (j < 0) throw Error("toggle basis degree must be non-negative");
  if (j == 0) return IntPoly{1};
  return bin_upper(j, 2 * j - 1);
}

BasisCoeffs toggle_basis_decompose(const IntPoly& p) {
  BasisCoeffs out(p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1);
  IntPoly rest = p;
  while (!rest.is_zero()) {
    auto d = static_cast<std::size_t>(rest.degree());
    BigInt lead = rest.coeff(d);
    out[d] = lead;
    rest -= toggle_basis_element(static_cast<int>(d)) * lead;
  }
  return out;
}

IntPoly toggle_basis_compose(const BasisCoeffs& coeffs) {
  IntPoly acc;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) acc += toggle_basis_element(static_cast<int>(j)) * coeffs[j];
  return acc;
}

bool is_toggle_buildable(const IntPoly& p) {
  auto c = toggle_basis_decompose(p);
  return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v >= 0; });
}

bool is_toggle_buildable_even(const IntPoly& p) {
  auto c = toggle_basis_decompose(p);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0) return false;
    if (j >= 1 && mpz_even_p(c[j].get_mpz_t()) == 0) return false;
  }
  return true;
}

} // namespace cornerwalk
