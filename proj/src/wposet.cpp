#include "steinberg/wposet.hpp"

#include "steinberg/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace steinberg {

namespace {

using Table = std::vector<std::int64_t>;

// All N-valued tables with the given margins, row-major.
std::vector<Table> nat_tables(const std::vector<std::int64_t>& rs, const std::vector<std::int64_t>& cs) {
  std::vector<Table> out;
  const std::size_t s = rs.size(), l = cs.size();
  std::int64_t tr = 0, tc = 0;
  for (auto x : rs) {
    if (x < 0) return out;
    tr += x;
  }
  for (auto x : cs) {
    if (x < 0) return out;
    tc += x;
  }
  if (tr != tc) return out;
  Table t(s * l, 0);
  std::vector<std::int64_t> rleft = rs, cleft = cs;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == s * l) {
      out.push_back(t);
      return;
    }
    const std::size_t i = k / l, j = k % l;
    if (j + 1 == l || i + 1 == s) {
      // Forced by the row (last column) or by the column (last row).
      const std::int64_t v = (j + 1 == l) ? rleft[i] : cleft[j];
      if (v < 0 || v > rleft[i] || v > cleft[j]) return;
      if (j + 1 == l && i + 1 == s && rleft[i] != cleft[j]) return;
      t[k] = v;
      rleft[i] -= v;
      cleft[j] -= v;
      rec(k + 1);
      rleft[i] += v;
      cleft[j] += v;
      return;
    }
    const std::int64_t hi = std::min(rleft[i], cleft[j]);
    for (std::int64_t v = 0; v <= hi; ++v) {
      t[k] = v;
      rleft[i] -= v;
      cleft[j] -= v;
      rec(k + 1);
      rleft[i] += v;
      cleft[j] += v;
    }
  };
  rec(0);
  return out;
}

bool half_or_zero(const KClass& e) { return e.is_zero() || heart_positive(e, Heart::half()); }

void check_totals(const Composition& ra, const Composition& ca) {
  if (ra.empty() || ca.empty()) throw DomainError("row and column sequences must be nonempty");
  const KClass a = composition_total(ra), b = composition_total(ca);
  if (a != b) throw DomainError("row total " + to_string(a) + " differs from column total " + to_string(b));
}

void check_same_frame(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shapes differ");
  if (a.row_sums() != b.row_sums() || a.col_sums() != b.col_sums())
    throw DomainError("matrices have different row or column sums");
}

}  // namespace

KClass composition_total(const Composition& c) {
  KClass t;
  for (const auto& p : c) t += p;
  return t;
}

void Seq::validate() const {
  if (parts.empty()) throw DomainError("empty sequence");
  for (const auto& p : parts)
    if (!heart_positive(p, heart)) throw DomainError("part " + to_string(p) + " is not positive in " + to_string(heart));
}

std::vector<Seq> seq_enumerate(const KClass& a, const Heart& h, int max_len, bool klr_only,
                               std::optional<DegreeWindow> window) {
  if (max_len < 1) throw DomainError("max_len must be >= 1");
  std::vector<Seq> out;
  Composition cur;
  if (!h.is_half()) {
    const QuiverDim D = d_vec(h.n(), a);
    if (!D.is_natural() || D.is_zero()) return out;
    std::function<void(QuiverDim)> rec = [&](QuiverDim rem) {
      if (rem.is_zero()) {
        out.push_back(Seq{cur, h});
        return;
      }
      if (static_cast<int>(cur.size()) == max_len) return;
      for (std::int64_t x = 0; x <= rem.v1; ++x)
        for (std::int64_t y = 0; y <= rem.v2; ++y) {
          if (x == 0 && y == 0) continue;
          cur.push_back(from_d_vec(h.n(), {x, y}));
          rec({rem.v1 - x, rem.v2 - y});
          cur.pop_back();
        }
    };
    rec(D);
  } else {
    if (!window) throw DomainError("coherent sequences are infinite in number; a degree window is required");
    if (!heart_positive(a, h)) return out;
    const std::int64_t lo = window->lo, hi = window->hi;
    std::function<void(KClass)> rec = [&](KClass rem) {
      if (rem.is_zero()) {
        out.push_back(Seq{cur, h});
        return;
      }
      if (static_cast<int>(cur.size()) == max_len) return;
      // Remaining bundle parts need degree >= lo per unit of rank.
      auto feasible = [&](const KClass& next) {
        if (next.r < 0) return false;
        if (next.r == 0) return next.d >= 0;
        return next.d >= lo * next.r;
      };
      std::vector<KClass> cand;
      for (std::int64_t t = 1; t <= rem.d - lo * rem.r; ++t)
        if (!klr_only || t == 1) cand.push_back({0, t});
      for (std::int64_t r = 1; r <= (klr_only ? std::min<std::int64_t>(1, rem.r) : rem.r); ++r)
        for (std::int64_t d = lo * r; d <= hi * r; ++d) cand.push_back({r, d});
      for (const auto& p : cand) {
        if (!feasible(rem - p)) continue;
        cur.push_back(p);
        rec(rem - p);
        cur.pop_back();
      }
    };
    rec(a);
  }
  std::sort(out.begin(), out.end(), [](const Seq& x, const Seq& y) {
    if (x.parts.size() != y.parts.size()) return x.parts.size() < y.parts.size();
    return x.parts < y.parts;
  });
  return out;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<KClass> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<KClass>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DomainError("matrix must have at least one row and column");
  CMatrix w(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < w.cols_; ++j) w.at(i, j) = rows[i][j];
  }
  return w;
}

Composition CMatrix::row_sums() const {
  Composition s(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[i] += at(i, j);
  return s;
}

Composition CMatrix::col_sums() const {
  Composition s(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
  return s;
}

KClass CMatrix::total() const { return composition_total(entries_); }

CMatrix CMatrix::transposed() const {
  CMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
  os << ']';
  return os.str();
}

std::string to_string(const CMatrix& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < w.cols(); ++j) os << (j ? " " : "") << w.at(i, j);
  }
  os << ']';
  return os.str();
}

CornerTable::CornerTable(const CMatrix& w) : rows_(w.rows()), cols_(w.cols()), c_((rows_ + 1) * (cols_ + 1)) {
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j)
      c_[i * (cols_ + 1) + j] = w.at(i - 1, j - 1) + (*this)(i - 1, j) + (*this)(i, j - 1) - (*this)(i - 1, j - 1);
}

CMatrix CornerTable::entries() const {
  CMatrix w(rows_, cols_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j)
      w.at(i - 1, j - 1) = (*this)(i, j) - (*this)(i - 1, j) - (*this)(i, j - 1) + (*this)(i - 1, j - 1);
  return w;
}

std::vector<CMatrix> w_enumerate(const Composition& ra, const Composition& ca, const Heart& h) {
  check_totals(ra, ca);
  if (h.is_half())
    throw DomainError("the coherent heart has infinitely many cell matrices; use the windowed enumeration");
  const int n = h.n();
  std::vector<std::int64_t> r1, r2, c1, c2;
  for (const auto& a : ra) {
    const auto v = d_vec(n, a);
    r1.push_back(v.v1);
    r2.push_back(v.v2);
  }
  for (const auto& a : ca) {
    const auto v = d_vec(n, a);
    c1.push_back(v.v1);
    c2.push_back(v.v2);
  }
  const auto t1 = nat_tables(r1, c1);
  const auto t2 = nat_tables(r2, c2);
  std::vector<CMatrix> out;
  out.reserve(t1.size() * t2.size());
  for (const auto& x : t1)
    for (const auto& y : t2) {
      CMatrix w(ra.size(), ca.size());
      for (std::size_t k = 0; k < x.size(); ++k) w.at(k / ca.size(), k % ca.size()) = from_d_vec(n, {x[k], y[k]});
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool EntryBound::admits(const KClass& e) const {
  if (e.r <= 0) return true;
  return kind == Kind::Slope ? e.d >= -bound * e.r : e.d >= -bound;
}

WindowedSet w_enumerate_windowed(const Composition& ra, const Composition& ca, const Window& w,
                                 const EntryBound& bound) {
  check_totals(ra, ca);
  WindowedSet out{w, bound, {}};
  const std::size_t s = ra.size(), l = ca.size();
  std::vector<std::int64_t> rr, cr;
  for (const auto& a : ra) rr.push_back(a.r);
  for (const auto& a : ca) cr.push_back(a.r);
  for (const auto& ranks : nat_tables(rr, cr)) {
    std::vector<std::int64_t> lower(s * l, 0);
    for (std::size_t k = 0; k < s * l; ++k)
      if (ranks[k] > 0) lower[k] = bound.kind == EntryBound::Kind::Slope ? -bound.bound * ranks[k] : -bound.bound;
    std::vector<std::int64_t> rd(s), cd(l);
    for (std::size_t i = 0; i < s; ++i) {
      rd[i] = ra[i].d;
      for (std::size_t j = 0; j < l; ++j) rd[i] -= lower[i * l + j];
    }
    for (std::size_t j = 0; j < l; ++j) {
      cd[j] = ca[j].d;
      for (std::size_t i = 0; i < s; ++i) cd[j] -= lower[i * l + j];
    }
    for (const auto& degs : nat_tables(rd, cd)) {
      CMatrix m(s, l);
      for (std::size_t k = 0; k < s * l; ++k) m.at(k / l, k % l) = {ranks[k], lower[k] + degs[k]};
      out.matrices.push_back(std::move(m));
    }
  }
  std::sort(out.matrices.begin(), out.matrices.end());
  return out;
}

bool order_leq(const CMatrix& a, const CMatrix& b, const Heart& h) {
  check_same_frame(a, b);
  const CornerTable ca(a), cb(b);
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j)
      if (!heart_geq(ca(i, j), cb(i, j), h)) return false;
  return true;
}

namespace {

std::int64_t pair_sum(const CMatrix& w, bool strict) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      for (std::size_t i2 = i; i2 < w.rows(); ++i2)
        for (std::size_t j2 = j; j2 < w.cols(); ++j2) {
          if (strict && i2 == i && j2 == j) continue;
          s += euler_form(w.at(i2, j2), w.at(i, j));
        }
  return -s;
}

}  // namespace

std::int64_t stratum_dim(const CMatrix& w) { return pair_sum(w, false); }
std::int64_t stratum_rank(const CMatrix& w) { return pair_sum(w, true); }

Hasse hasse(std::vector<CMatrix> ws, const Heart& h) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::stable_sort(ws.begin(), ws.end(),
                   [](const CMatrix& x, const CMatrix& y) { return stratum_dim(x) < stratum_dim(y); });
  const std::size_t n = ws.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = order_leq(ws[a], ws[b], h);
  });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a])
        throw DomainError("order is not antisymmetric on " + to_string(ws[a]) + " and " + to_string(ws[b]));
  Hasse g{ws, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) g.edges.emplace_back(a, b);
    }
  return g;
}

std::string stable_hash(const CMatrix& w) {
  std::uint64_t x = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    for (int k = 0; k < 8; ++k) {
      x ^= static_cast<std::uint64_t>(v >> (8 * k)) & 0xffu;
      x *= 1099511628211ull;
    }
  };
  mix(static_cast<std::int64_t>(w.rows()));
  mix(static_cast<std::int64_t>(w.cols()));
  for (const auto& e : w.entries()) {
    mix(e.r);
    mix(e.d);
  }
  std::ostringstream os;
  os << std::hex << (x & 0xffffffffull);
  return os.str();
}

std::string hasse_dot(const Hasse& g) {
  std::ostringstream os;
  os << "digraph W {\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    os << "  n" << k << " [label=\"dim " << stratum_dim(g.nodes[k]) << " #" << stable_hash(g.nodes[k]) << "\", tooltip=\""
       << to_string(g.nodes[k]) << "\"];\n";
  for (const auto& [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

ApproxResult approx_n0(const Composition& ra, const Composition& ca, const Window& w, const EntryBound& bound,
                       int probe, int n_max) {
  if (probe < 0) throw DomainError("probe must be >= 0");
  const auto target = w_enumerate_windowed(ra, ca, w, bound).matrices;
  std::map<int, bool> matches;
  auto agrees = [&](int n) {
    auto it = matches.find(n);
    if (it != matches.end()) return it->second;
    std::vector<CMatrix> got;
    for (auto& m : w_enumerate(ra, ca, Heart::nu(n))) {
      const auto& e = m.entries();
      if (std::all_of(e.begin(), e.end(), [&](const KClass& x) { return half_or_zero(x) && bound.admits(x); }))
        got.push_back(std::move(m));
    }
    const bool ok = got == target;
    matches[n] = ok;
    return ok;
  };
  for (int n = 1; n <= n_max; ++n) {
    bool stable = true;
    for (int k = n; k <= n + probe && stable; ++k) stable = agrees(k);
    if (stable) return {n, target};
  }
  throw DomainError("approx_n0: no stable heart index up to n_max = " + std::to_string(n_max));
}

CMatrix split_matrix(const std::vector<Composition>& pieces) {
  std::size_t cols = 0;
  for (const auto& p : pieces) cols += p.size();
  if (pieces.empty() || cols == 0) throw DomainError("split_matrix needs at least one piece");
  CMatrix w(pieces.size(), cols);
  std::size_t j = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (const auto& p : pieces[i]) w.at(i, j++) = p;
  return w;
}

CMatrix merge_matrix(const std::vector<Composition>& pieces) { return split_matrix(pieces).transposed(); }

}  // namespace steinberg
