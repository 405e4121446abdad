#pragma once

#include "steinberg/series.hpp"
#include "steinberg/wposet.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steinberg {

/// Borel-Moore graded dimensions: coeffs[k] sits in homological degree top - 2k.
struct TopSeries {
  std::int64_t top = 0;
  std::vector<BigInt> coeffs;

  int depth() const { return static_cast<int>(coeffs.size()); }
  /// Zero outside the recorded range; throws if the degree lies below the recorded depth.
  BigInt at_degree(std::int64_t degree) const;
  bool operator==(const TopSeries&) const = default;
};

/// Degreewise sum anchored at the larger top; a lower top enters at an offset.
TopSeries add(const TopSeries& a, const TopSeries& b);

/// top = 2 stratum_dim(w); coefficients are the product of the entry series.
TopSeries stratum_top_series(const CMatrix& w, int depth);

struct SchurBlock {
  Composition rows, cols;
  std::vector<CMatrix> ws;
};

struct SchurResult {
  std::vector<TopSeries> per_block;
  TopSeries aggregate;
};

/// Sum of stratum series, computed by multiplying series.
SchurResult schur_series(const std::vector<SchurBlock>& blocks, int depth);
/// Same numbers by listing tautological monomials on each stratum and
/// bucketing them by pbw_degree.
SchurResult schur_series_pbw(const std::vector<SchurBlock>& blocks, int depth);

/// Degreewise sum over seqs; each term is anchored at twice the dimension of its flag stack.
TopSeries polyrep_series(const KClass& a, const std::vector<Seq>& seqs, int depth);
/// Per sequence, before aggregation.
TopSeries polyrep_term(const Seq& seq, int depth);

// Generator-level ring maps.

enum class Family { ChOne, ChOmega, V1, V2 };
const char* to_string(Family f);

/// ch_index(family).
struct Gen {
  Family family;
  int index;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};
std::string to_string(const Gen& g);
/// 2i - 2 for ch_i(1), else 2i.
int gen_degree(const Gen& g);

struct Alphabet {
  enum class Kind { P1, Quiver };
  Kind kind = Kind::P1;
  int n = 0;  // quiver heart index
  static Alphabet p1() { return {Kind::P1, 0}; }
  static Alphabet quiver(int n) { return {Kind::Quiver, n}; }
  bool operator==(const Alphabet&) const = default;
};
std::string to_string(const Alphabet& a);

/// Contribution coeff * ch_{i + shift}(family) to the image of ch_i(source).
struct Term {
  Rational coeff;
  Family family;
  int shift = 0;
  bool operator==(const Term&) const = default;
};

struct GenRule {
  Family source;
  int min_index = 0;
  std::vector<Term> image;
  bool operator==(const GenRule&) const = default;
};

struct GenMap {
  Alphabet domain, codomain;
  std::vector<GenRule> rules;

  std::vector<std::pair<Rational, Gen>> apply(const Gen& g) const;
  /// Combine like terms, drop zeros, sort rules and terms.
  GenMap normalized() const;
  /// Every image term has the degree of its source.
  bool degree_preserving() const;
};

bool operator==(const GenMap& a, const GenMap& b);

GenMap genmap_identity(const Alphabet& a);
GenMap psi_alpha();
GenMap psi_alpha_n(int n);
GenMap phi_transition(int n);
/// f after g.
GenMap compose_genmaps(const GenMap& f, const GenMap& g);
/// Images of V1, V2 in degree-0 shift coordinates, rows indexed by source.
std::array<std::array<Rational, 2>, 2> per_degree_matrix(const GenMap& quiver_map);

/// Bounded ranks (d1, d2): prod_j prod_{k<=d_j} 1/(1 - x^k). Unbounded: prod_k 1/(1 - x^k)^2.
Series ring_hilbert(std::optional<std::pair<int, int>> ranks, int cutoff);

}  // namespace steinberg
