#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace steinberg {

/// Raised when an operation receives input outside its mathematical domain.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Class (rank, degree) in K_0(P^1) = Z^2. Positivity is heart-relative and
/// is never enforced at construction.
struct KClass {
  std::int64_t r = 0;
  std::int64_t d = 0;

  constexpr KClass() = default;
  constexpr KClass(std::int64_t rank, std::int64_t degree) : r(rank), d(degree) {}

  constexpr bool is_zero() const { return r == 0 && d == 0; }
  constexpr bool is_torsion() const { return r == 0; }

  constexpr KClass operator+(const KClass& o) const { return {r + o.r, d + o.d}; }
  constexpr KClass operator-(const KClass& o) const { return {r - o.r, d - o.d}; }
  constexpr KClass operator-() const { return {-r, -d}; }
  constexpr KClass& operator+=(const KClass& o) {
    r += o.r;
    d += o.d;
    return *this;
  }
  constexpr KClass& operator-=(const KClass& o) {
    r -= o.r;
    d -= o.d;
    return *this;
  }
  friend constexpr KClass operator*(std::int64_t k, const KClass& a) { return {k * a.r, k * a.d}; }

  // Lexicographic on (r, d); used for deterministic output ordering only.
  friend constexpr auto operator<=>(const KClass&, const KClass&) = default;
};

std::ostream& operator<<(std::ostream& os, const KClass& a);
std::string to_string(const KClass& a);

/// Dimension vector of a Kronecker quiver representation.
struct QuiverDim {
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  friend constexpr auto operator<=>(const QuiverDim&, const QuiverDim&) = default;
  constexpr QuiverDim operator+(const QuiverDim& o) const { return {v1 + o.v1, v2 + o.v2}; }
  constexpr bool is_natural() const { return v1 >= 0 && v2 >= 0; }
  constexpr bool is_zero() const { return v1 == 0 && v2 == 0; }
};

/// Symbolic abelian heart: coherent sheaves (phase 1/2) or the n-th quiver heart.
class Heart {
public:
  static constexpr Heart half() { return Heart(0); }
  static Heart nu(int n);

  constexpr bool is_half() const { return n_ == 0; }
  /// Index of a quiver heart; only meaningful when !is_half().
  constexpr int n() const { return n_; }

  friend constexpr bool operator==(const Heart&, const Heart&) = default;

private:
  constexpr explicit Heart(int n) : n_(n) {}
  int n_;
};

std::string to_string(const Heart& h);
/// Parses "half" or "nu:N".
Heart parse_heart(const std::string& text);

/// Truncation window I_m = ]nu_m - 1, 1/2]; sheaves whose HN slopes are all >= 1 - m.
struct Window {
  int m = 1;
  explicit Window(int m_);
};

/// Exact slope d/r, or +infinity for torsion.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;  // 0 encodes +infinity
  static constexpr Slope infinity() { return Slope{1, 0}; }
  constexpr bool is_infinite() const { return den == 0; }
};

Slope slope_of(const KClass& a);

/// <a, b> = r_a r_b + r_a d_b - r_b d_a.
constexpr std::int64_t euler_form(const KClass& a, const KClass& b) {
  return a.r * b.r + a.r * b.d - b.r * a.d;
}

/// dim Coh_a = -r^2, for Half-positive a.
std::int64_t stack_dim(const KClass& a);

/// Exact comparison of slopes; torsion is +infinity. Zero class rejected.
std::strong_ordering slope_cmp(const KClass& a, const KClass& b);

/// Exact comparison of slopes given as Slope values.
std::strong_ordering slope_cmp(const Slope& a, const Slope& b);

bool heart_positive(const KClass& a, const Heart& h);

/// a - b lies in K_0(heart)^+ or is zero.
bool heart_geq(const KClass& a, const KClass& b, const Heart& h);

/// Tilting isomorphism on K-groups, (r, d) -> (r + d, d).
constexpr KClass tilt_class(const KClass& a) { return {a.r + a.d, a.d}; }
constexpr KClass untilt_class(const KClass& a) { return {a.r - a.d, a.d}; }

/// Dimension vector in the n-th quiver heart: (n r + d, (n - 1) r + d).
QuiverDim d_vec(int n, const KClass& a);
/// Inverse of d_vec(n, .); B_n has determinant 1.
KClass from_d_vec(int n, const QuiverDim& v);

/// Class of F (x) O(k).
constexpr KClass twist_class(const KClass& a, std::int64_t k) { return {a.r, a.d + k * a.r}; }

/// True iff the minimal HN slope is >= 1 - m. Torsion-only objects always pass.
bool window_member(const Slope& hn_min_slope, const Window& w);

}  // namespace steinberg
