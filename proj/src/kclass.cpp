#include "steinberg/kclass.hpp"

#include <ostream>
#include <sstream>

namespace steinberg {

std::ostream& operator<<(std::ostream& os, const KClass& a) { return os << '(' << a.r << ',' << a.d << ')'; }

std::string to_string(const KClass& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

Heart Heart::nu(int n) {
  if (n < 1) throw DomainError("quiver heart index must be >= 1, got " + std::to_string(n));
  return Heart(n);
}

std::string to_string(const Heart& h) { return h.is_half() ? std::string("half") : "nu:" + std::to_string(h.n()); }

Heart parse_heart(const std::string& text) {
  if (text == "half") return Heart::half();
  if (text.rfind("nu:", 0) == 0) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(text.substr(3), &used);
    } catch (const std::exception&) {
      throw DomainError("invalid heart '" + text + "'");
    }
    if (used != text.size() - 3) throw DomainError("invalid heart '" + text + "'");
    return Heart::nu(n);
  }
  throw DomainError("invalid heart '" + text + "', expected half or nu:N");
}

Window::Window(int m_) : m(m_) {
  if (m < 1) throw DomainError("window index must be >= 1, got " + std::to_string(m_));
}

Slope slope_of(const KClass& a) {
  if (a.is_zero()) throw DomainError("slope of the zero class is undefined");
  if (a.r == 0) return Slope::infinity();
  if (a.r < 0) return Slope{-a.d, -a.r};
  return Slope{a.d, a.r};
}

std::int64_t stack_dim(const KClass& a) {
  if (!heart_positive(a, Heart::half()))
    throw DomainError("stack_dim: class " + to_string(a) + " is not a class of coherent sheaves");
  return -a.r * a.r;
}

std::strong_ordering slope_cmp(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // Denominators are positive.
  return a.num * b.den <=> b.num * a.den;
}

std::strong_ordering slope_cmp(const KClass& a, const KClass& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("slope_cmp: zero class has no slope");
  if (!heart_positive(a, Heart::half()) || !heart_positive(b, Heart::half()))
    throw DomainError("slope_cmp: classes must be classes of coherent sheaves");
  return slope_cmp(slope_of(a), slope_of(b));
}

bool heart_positive(const KClass& a, const Heart& h) {
  if (a.is_zero()) return false;
  if (h.is_half()) return a.r > 0 || (a.r == 0 && a.d > 0);
  return d_vec(h.n(), a).is_natural();
}

bool heart_geq(const KClass& a, const KClass& b, const Heart& h) {
  const KClass diff = a - b;
  return diff.is_zero() || heart_positive(diff, h);
}

QuiverDim d_vec(int n, const KClass& a) {
  if (n < 1) throw DomainError("d_vec: heart index must be >= 1");
  return {n * a.r + a.d, (n - 1) * a.r + a.d};
}

KClass from_d_vec(int n, const QuiverDim& v) {
  if (n < 1) throw DomainError("from_d_vec: heart index must be >= 1");
  // B_n^{-1} = [[1, -1], [-(n-1), n]]
  return {v.v1 - v.v2, -(n - 1) * v.v1 + n * v.v2};
}

bool window_member(const Slope& hn_min_slope, const Window& w) {
  if (hn_min_slope.is_infinite()) return true;
  if (hn_min_slope.den <= 0) throw DomainError("window_member: slope denominator must be positive");
  // num / den >= 1 - m  <=>  num >= (1 - m) den
  return hn_min_slope.num >= static_cast<std::int64_t>(1 - w.m) * hn_min_slope.den;
}

}  // namespace steinberg
