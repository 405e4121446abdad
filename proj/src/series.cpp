#include "steinberg/series.hpp"

#include "steinberg/kclass.hpp"

#include <algorithm>

namespace steinberg {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Series::Series(int cutoff) {
  if (cutoff < 0) throw DomainError("series cutoff must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, Rational(0));
}

Series::Series(int cutoff, std::vector<Rational> coeffs) : Series(cutoff) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

Series Series::one(int cutoff) { return monomial(0, cutoff); }

Series Series::monomial(int k, int cutoff, Rational c) {
  Series s(cutoff);
  if (k >= 0 && k <= cutoff) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  return s;
}

Series Series::geometric(int k, int cutoff) {
  if (k < 1) throw DomainError("geometric series needs k >= 1");
  Series s(cutoff);
  for (int j = 0; j <= cutoff; j += k) s.coeffs_[static_cast<std::size_t>(j)] = 1;
  return s;
}

Series Series::from_ints(std::initializer_list<long long> values) {
  Series s(static_cast<int>(values.size()) - 1);
  std::size_t k = 0;
  for (long long v : values) s.coeffs_[k++] = v;
  return s;
}

Series Series::truncated(int cutoff) const {
  if (cutoff > this->cutoff()) throw DomainError("cannot extend a truncated series beyond its cutoff");
  return Series(cutoff, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + cutoff + 1));
}

Series Series::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  Series s(cutoff());
  for (int j = 0; j + k <= cutoff(); ++j) s.coeffs_[static_cast<std::size_t>(j + k)] = coeffs_[static_cast<std::size_t>(j)];
  return s;
}

Series& Series::operator+=(const Series& o) {
  const int c = std::min(cutoff(), o.cutoff());
  coeffs_.resize(static_cast<std::size_t>(c) + 1);
  for (int k = 0; k <= c; ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  const int c = std::min(cutoff(), o.cutoff());
  coeffs_.resize(static_cast<std::size_t>(c) + 1);
  for (int k = 0; k <= c; ++k) coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  const int c = std::min(cutoff(), o.cutoff());
  std::vector<Rational> out(static_cast<std::size_t>(c) + 1, Rational(0));
  for (int i = 0; i <= c; ++i) {
    const Rational& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= c; ++j) {
      const Rational& b = o.coeffs_[static_cast<std::size_t>(j)];
      if (b != 0) out[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Series Series::dilated(int k) const {
  if (k < 1) throw DomainError("dilation factor must be >= 1");
  Series s(cutoff());
  for (int j = 0; j * k <= cutoff(); ++j) s.coeffs_[static_cast<std::size_t>(j * k)] = coeffs_[static_cast<std::size_t>(j)];
  return s;
}

bool Series::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return denominator(q) == 1; });
}

Series bgl_series(int n, int cutoff) {
  Series s = Series::one(cutoff);
  for (int k = 1; k <= n && k <= cutoff; ++k) s *= Series::geometric(k, cutoff);
  return s;
}

}  // namespace steinberg
