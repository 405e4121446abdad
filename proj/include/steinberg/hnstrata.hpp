#pragma once

#include "steinberg/kclass.hpp"
#include "steinberg/series.hpp"

#include <vector>

namespace steinberg {

/// Harder-Narasimhan type: semistable parts (r, m r) with r >= 1, optionally
/// followed by one torsion part (0, t); slopes strictly increase.
struct HNType {
  std::vector<KClass> parts;

  KClass total() const;
  /// Throws DomainError if the invariants above fail.
  void validate() const;
  Slope min_slope() const;
  bool operator==(const HNType&) const = default;
};

std::int64_t hn_codim(const HNType& t);
std::int64_t hn_dim(const HNType& t);

/// HN types of class a whose minimal slope is >= 1 - m, sorted by
/// (codim, parts lexicographically).
std::vector<HNType> hn_enumerate(const KClass& a, const Window& w);

/// Poincare series of the cohomology of Coh_a in x = q^2.
Series coh_series(const KClass& a, int cutoff);
/// Torsion case through the Newton identity for Sym^d. Independent of coh_series.
Series coh_series_torsion_newton(std::int64_t d, int cutoff);

/// Series of a single semistable stratum: BGL(r) for (r, m r), coh_series for torsion.
Series ss_series(const KClass& part, int cutoff);

/// Sum over the windowed HN strata of x^codim times the product of part series.
Series trunc_series(const KClass& a, const Window& w, int cutoff);

/// O(d_1) + ... + O(d_r) + torsion of length torsion_deg; d_1 >= ... >= d_r.
struct BundleType {
  std::vector<std::int64_t> degrees;
  std::int64_t torsion_deg = 0;
  bool operator==(const BundleType&) const = default;
};

/// Bundle-plus-torsion splittings with every d_i >= 1 - m.
/// Sorted by torsion degree, then degrees in decreasing lexicographic order.
std::vector<BundleType> bundle_types(const KClass& a, const Window& w);

/// Torus fixed points of the iterated Quot scheme of O(d_1) + ... + O(d_r).
/// Result b[i][j] is the j-th subquotient class of the flag induced on O(d_i);
/// gamma_seq lists subquotients from the smallest subsheaf outward. Along each
/// row the entries are zero, then a single line-bundle class, then torsion.
using QuotTuple = std::vector<std::vector<KClass>>;
std::vector<QuotTuple> quot_fixed_points(const std::vector<KClass>& gamma_seq,
                                         const std::vector<std::int64_t>& degrees);

}  // namespace steinberg
