#include "steinberg/hnstrata.hpp"

#include <algorithm>
#include <functional>

namespace steinberg {

namespace {

bool valid_part(const KClass& p) {
  if (p.r == 0) return p.d >= 1;
  return p.r >= 1 && p.d % p.r == 0;
}

void require_sheaf_class(const KClass& a, const char* op) {
  if (!heart_positive(a, Heart::half()))
    throw DomainError(std::string(op) + ": class " + to_string(a) + " is not a nonzero class of coherent sheaves");
}

// Bundle parts (r_i, s_i r_i) with strictly increasing integer slopes s_i >= lo,
// total rank R and total degree D.
void bundle_parts(std::int64_t R, std::int64_t D, std::int64_t lo, std::vector<KClass>& cur,
                  const std::function<void(const std::vector<KClass>&)>& emit) {
  if (R == 0) {
    if (D == 0) emit(cur);
    return;
  }
  for (std::int64_t s = lo; s * R <= D; ++s) {
    for (std::int64_t r1 = 1; r1 <= R; ++r1) {
      const std::int64_t R2 = R - r1, D2 = D - s * r1;
      if (R2 == 0 ? D2 != 0 : D2 < (s + 1) * R2) continue;
      cur.push_back({r1, s * r1});
      bundle_parts(R2, D2, s + 1, cur, emit);
      cur.pop_back();
    }
  }
}

}  // namespace

KClass HNType::total() const {
  KClass t;
  for (const auto& p : parts) t += p;
  return t;
}

void HNType::validate() const {
  if (parts.empty()) throw DomainError("HN type has no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!valid_part(parts[i])) throw DomainError("invalid HN part " + to_string(parts[i]));
    if (parts[i].r == 0 && i + 1 != parts.size()) throw DomainError("torsion HN part must be last");
    if (i > 0 && slope_cmp(parts[i - 1], parts[i]) != std::strong_ordering::less)
      throw DomainError("HN slopes must strictly increase");
  }
}

Slope HNType::min_slope() const {
  if (parts.empty()) throw DomainError("HN type has no parts");
  return slope_of(parts.front());
}

std::int64_t hn_codim(const HNType& t) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < t.parts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) s += euler_form(t.parts[i], t.parts[j]);
  return -s;
}

std::int64_t hn_dim(const HNType& t) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < t.parts.size(); ++i)
    for (std::size_t j = i; j < t.parts.size(); ++j) s += euler_form(t.parts[i], t.parts[j]);
  return -s;
}

std::vector<HNType> hn_enumerate(const KClass& a, const Window& w) {
  require_sheaf_class(a, "hn_enumerate");
  std::vector<HNType> out;
  if (a.r == 0) {
    out.push_back(HNType{{a}});
    return out;
  }
  const std::int64_t lo = 1 - w.m;
  std::vector<KClass> cur;
  for (std::int64_t t = 0; a.d - t >= lo * a.r; ++t) {
    bundle_parts(a.r, a.d - t, lo, cur, [&](const std::vector<KClass>& parts) {
      HNType h{parts};
      if (t > 0) h.parts.push_back({0, t});
      out.push_back(std::move(h));
    });
  }
  std::sort(out.begin(), out.end(), [](const HNType& x, const HNType& y) {
    const auto cx = hn_codim(x), cy = hn_codim(y);
    if (cx != cy) return cx < cy;
    return x.parts < y.parts;
  });
  return out;
}

Series coh_series(const KClass& a, int cutoff) {
  require_sheaf_class(a, "coh_series");
  if (a.r > 0) {
    Series s = bgl_series(cutoff, cutoff);
    return s * s;
  }
  // Coefficient of t^d in prod_b 1/(1 - t x^{w_b}); weight 0 once, every w >= 1 twice.
  const auto d = static_cast<std::size_t>(a.d);
  const auto c = static_cast<std::size_t>(cutoff);
  std::vector<std::vector<BigInt>> tab(d + 1, std::vector<BigInt>(c + 1, 0));
  tab[0][0] = 1;
  auto absorb = [&](std::size_t wt) {
    for (std::size_t j = 1; j <= d; ++j)
      for (std::size_t k = wt; k <= c; ++k) tab[j][k] += tab[j - 1][k - wt];
  };
  absorb(0);
  for (std::size_t wt = 1; wt <= c; ++wt) {
    absorb(wt);
    absorb(wt);
  }
  std::vector<Rational> coeffs(tab[d].begin(), tab[d].end());
  return Series(cutoff, std::move(coeffs));
}

Series coh_series_torsion_newton(std::int64_t d, int cutoff) {
  if (d < 1) throw DomainError("torsion degree must be >= 1");
  // Hilbert series of V: (1 + x) / (1 - x).
  Series hv = Series::geometric(1, cutoff) + Series::geometric(1, cutoff).shifted(1);
  std::vector<Series> h{Series::one(cutoff)};
  for (std::int64_t n = 1; n <= d; ++n) {
    Series acc(cutoff);
    for (std::int64_t j = 1; j <= n; ++j) acc += hv.dilated(static_cast<int>(j)) * h[static_cast<std::size_t>(n - j)];
    h.push_back(acc * Rational(1, n));
  }
  return h.back();
}

Series ss_series(const KClass& part, int cutoff) {
  if (!valid_part(part)) throw DomainError("ss_series: " + to_string(part) + " is not a semistable HN part");
  if (part.r == 0) return coh_series(part, cutoff);
  return bgl_series(static_cast<int>(part.r), cutoff);
}

Series trunc_series(const KClass& a, const Window& w, int cutoff) {
  Series out(cutoff);
  for (const auto& t : hn_enumerate(a, w)) {
    const auto codim = hn_codim(t);
    if (codim > cutoff) continue;
    Series term = Series::one(cutoff);
    for (const auto& p : t.parts) term *= ss_series(p, cutoff);
    out += term.shifted(static_cast<int>(codim));
  }
  return out;
}

std::vector<BundleType> bundle_types(const KClass& a, const Window& w) {
  require_sheaf_class(a, "bundle_types");
  const std::int64_t lo = 1 - w.m;
  std::vector<BundleType> out;
  std::vector<std::int64_t> cur;
  // Weakly decreasing degrees, each in [lo, hi], summing to D.
  std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> rec =
      [&](std::int64_t left, std::int64_t D, std::int64_t hi, std::int64_t t) {
        if (left == 0) {
          if (D == 0) out.push_back({cur, t});
          return;
        }
        for (std::int64_t x = std::min(hi, D - lo * (left - 1)); x >= lo; --x) {
          if (x * left < D) break;
          cur.push_back(x);
          rec(left - 1, D - x, x, t);
          cur.pop_back();
        }
      };
  for (std::int64_t t = 0; a.d - t >= lo * a.r; ++t) {
    if (a.r == 0 && t != a.d) continue;
    rec(a.r, a.d - t, a.d - t - lo * (a.r - 1), t);
  }
  return out;
}

std::vector<QuotTuple> quot_fixed_points(const std::vector<KClass>& gamma_seq,
                                         const std::vector<std::int64_t>& degrees) {
  KClass total;
  for (const auto& g : gamma_seq) {
    if (!g.is_zero() && !heart_positive(g, Heart::half()))
      throw DomainError("quot_fixed_points: " + to_string(g) + " is not a sheaf class");
    total += g;
  }
  std::int64_t deg = 0;
  for (auto d : degrees) deg += d;
  const KClass expected{static_cast<std::int64_t>(degrees.size()), deg};
  if (total != expected)
    throw DomainError("quot_fixed_points: subquotients sum to " + to_string(total) + ", expected " +
                      to_string(expected));

  const std::size_t rows = degrees.size(), cols = gamma_seq.size();
  std::vector<QuotTuple> out;
  std::vector<std::size_t> pos(rows);
  std::vector<std::int64_t> rank_left(cols);
  for (std::size_t j = 0; j < cols; ++j) rank_left[j] = gamma_seq[j].r;
  QuotTuple b(rows, std::vector<KClass>(cols));
  std::vector<std::int64_t> budget(rows, 0);

  // Column j: rows with pos < j take torsion out of their remaining budget,
  // rows with pos == j take the line-bundle entry.
  std::function<void(std::size_t)> column;
  std::function<void(std::size_t, std::size_t, std::int64_t)> torsion;
  std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t, std::int64_t)> line;

  line = [&](std::size_t j, std::vector<std::size_t>& rs, std::size_t k, std::int64_t S) {
    if (k == rs.size()) {
      if (S == 0) column(j + 1);
      return;
    }
    const std::size_t i = rs[k];
    if (k + 1 == rs.size()) {
      if (S > degrees[i]) return;
      b[i][j] = {1, S};
      budget[i] = degrees[i] - S;
      line(j, rs, k + 1, 0);
      return;
    }
    std::int64_t rest = 0;
    for (std::size_t q = k + 1; q < rs.size(); ++q) rest += degrees[rs[q]];
    for (std::int64_t e = S - rest; e <= degrees[i]; ++e) {
      b[i][j] = {1, e};
      budget[i] = degrees[i] - e;
      line(j, rs, k + 1, S - e);
    }
  };

  torsion = [&](std::size_t j, std::size_t i, std::int64_t used) {
    if (i == rows) {
      std::vector<std::size_t> rs;
      for (std::size_t q = 0; q < rows; ++q)
        if (pos[q] == j) rs.push_back(q);
      line(j, rs, 0, gamma_seq[j].d - used);
      return;
    }
    if (pos[i] >= j) {
      if (pos[i] > j) b[i][j] = {};
      torsion(j, i + 1, used);
      return;
    }
    const std::int64_t avail = budget[i];
    for (std::int64_t t = 0; t <= avail; ++t) {
      b[i][j] = {0, t};
      budget[i] = avail - t;
      torsion(j, i + 1, used + t);
    }
    budget[i] = avail;
  };

  column = [&](std::size_t j) {
    if (j == cols) {
      if (std::all_of(budget.begin(), budget.end(), [](std::int64_t x) { return x == 0; })) out.push_back(b);
      return;
    }
    torsion(j, 0, 0);
  };

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == rows) {
      column(0);
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (rank_left[j] == 0) continue;
      --rank_left[j];
      pos[i] = j;
      place(i + 1);
      ++rank_left[j];
    }
  };
  place(0);
  return out;
}

}  // namespace steinberg
