#pragma once

#include "steinberg/kclass.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steinberg {

using Composition = std::vector<KClass>;

KClass composition_total(const Composition& c);
/// "[a b c]" with classes printed as (r,d).
std::string to_string(const Composition& c);

/// Ordered decomposition of a class in a fixed heart.
struct Seq {
  Composition parts;
  Heart heart = Heart::half();

  KClass total() const { return composition_total(parts); }
  /// Nonempty, every part nonzero and positive for the heart.
  void validate() const;
  bool operator==(const Seq&) const = default;
};

/// Inclusive bound on the degree l of parts (1, l) in KLR compositions, or on
/// the slope of bundle parts for general coherent compositions.
struct DegreeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Sequences of length <= max_len summing to a. For a quiver heart these are
/// the compositions of d_vec(n, a). The coherent heart is infinite and needs
/// a window; with klr_only the parts are (1, l), lo <= l <= hi, and (0, 1).
std::vector<Seq> seq_enumerate(const KClass& a, const Heart& h, int max_len, bool klr_only,
                               std::optional<DegreeWindow> window = std::nullopt);

/// s x l matrix of classes, row-major.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<KClass> entries);
  static CMatrix from_rows(const std::vector<std::vector<KClass>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const KClass& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  KClass& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const std::vector<KClass>& entries() const { return entries_; }

  Composition row_sums() const;
  Composition col_sums() const;
  KClass total() const;
  CMatrix transposed() const;

  friend auto operator<=>(const CMatrix&, const CMatrix&) = default;
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<KClass> entries_;
};

std::string to_string(const CMatrix& w);

/// c(i, j) = w([1:i], [1:j]) for 0 <= i <= s, 0 <= j <= l.
class CornerTable {
public:
  explicit CornerTable(const CMatrix& w);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const KClass& operator()(std::size_t i, std::size_t j) const { return c_.at(i * (cols_ + 1) + j); }
  /// Inclusion-exclusion back to the entries.
  CMatrix entries() const;

private:
  std::size_t rows_, cols_;
  std::vector<KClass> c_;
};

/// All matrices with row sums ra, column sums ca and entries positive or zero
/// in the quiver heart h. The coherent heart is rejected as infinite.
std::vector<CMatrix> w_enumerate(const Composition& ra, const Composition& ca, const Heart& h);

/// Lower bound on nonzero vector-bundle entries (r, d), r > 0:
/// Slope means d >= -bound * r, Degree means d >= -bound. Torsion is unrestricted.
struct EntryBound {
  enum class Kind { Slope, Degree };
  Kind kind = Kind::Slope;
  std::int64_t bound = 0;
  bool admits(const KClass& e) const;
};

struct WindowedSet {
  Window window{1};
  EntryBound bound;
  std::vector<CMatrix> matrices;
};

/// Coherent-heart matrices with entries passing the bound.
WindowedSet w_enumerate_windowed(const Composition& ra, const Composition& ca, const Window& w,
                                 const EntryBound& bound);

/// corner(a) - corner(b) is zero or positive in h, for every corner.
bool order_leq(const CMatrix& a, const CMatrix& b, const Heart& h);

/// -sum over (i,j) <= (i',j') componentwise of <w_{i'j'}, w_{ij}>.
std::int64_t stratum_dim(const CMatrix& w);
/// Same sum over strictly comparable pairs.
std::int64_t stratum_rank(const CMatrix& w);

struct Hasse {
  std::vector<CMatrix> nodes;  // sorted by (stratum_dim, entries)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering relations, smaller -> larger
};

/// Throws DomainError if the relation fails antisymmetry on ws.
Hasse hasse(std::vector<CMatrix> ws, const Heart& h);
std::string hasse_dot(const Hasse& g);
/// FNV-1a over the entries; used as a stable node id.
std::string stable_hash(const CMatrix& w);

struct ApproxResult {
  int n0 = 0;
  std::vector<CMatrix> matrices;
};

/// Smallest n such that, for every k in [n, n + probe], the Nu(k) matrices with
/// entries that are coherent and pass the bound form exactly the windowed set.
/// Throws DomainError past n_max.
ApproxResult approx_n0(const Composition& ra, const Composition& ca, const Window& w, const EntryBound& bound,
                       int probe, int n_max = 64);

/// Block-diagonal matrix refining coarse[i] into pieces[i] (rows = coarse).
CMatrix split_matrix(const std::vector<Composition>& pieces);
/// Transpose shape: rows = the refined sequence, columns = coarse.
CMatrix merge_matrix(const std::vector<Composition>& pieces);

}  // namespace steinberg
