#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace steinberg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Truncated power series in x = q^2 with exact rational coefficients.
/// Coefficient k multiplies x^k and is valid for k <= cutoff. Binary
/// operations truncate to the smaller cutoff of the operands.
class Series {
public:
  explicit Series(int cutoff);  // the zero series
  Series(int cutoff, std::vector<Rational> coeffs);
  static Series one(int cutoff);
  static Series monomial(int k, int cutoff, Rational c = 1);
  /// Expansion of 1 / (1 - x^k), k >= 1.
  static Series geometric(int k, int cutoff);
  static Series from_ints(std::initializer_list<long long> values);

  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Series truncated(int cutoff) const;
  /// Multiply by x^k (k >= 0), keeping the cutoff.
  Series shifted(int k) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }

  /// Substitute x -> x^k.
  Series dilated(int k) const;

  bool is_integral() const;
  bool operator==(const Series& o) const = default;

private:
  std::vector<Rational> coeffs_;
};

/// Product over k = 1..n of 1 / (1 - x^k); BGL(n) Poincare series.
Series bgl_series(int n, int cutoff);

}  // namespace steinberg
