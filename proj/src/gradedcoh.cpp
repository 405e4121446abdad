#include "steinberg/gradedcoh.hpp"

#include "steinberg/hnstrata.hpp"
#include "steinberg/pbwdiagram.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace steinberg {

BigInt TopSeries::at_degree(std::int64_t degree) const {
  if (degree > top || (top - degree) % 2 != 0) return 0;
  const std::int64_t k = (top - degree) / 2;
  if (k >= depth()) throw DomainError("degree " + std::to_string(degree) + " lies below the recorded depth");
  return coeffs[static_cast<std::size_t>(k)];
}

TopSeries add(const TopSeries& a, const TopSeries& b) {
  if (a.depth() != b.depth()) throw DomainError("cannot add top series of different depth");
  if ((a.top - b.top) % 2 != 0) throw DomainError("top degrees differ in parity");
  TopSeries out{std::max(a.top, b.top), std::vector<BigInt>(a.coeffs.size(), 0)};
  for (const TopSeries* x : {&a, &b}) {
    const std::int64_t off = (out.top - x->top) / 2;
    for (std::int64_t k = off; k < out.depth(); ++k)
      out.coeffs[static_cast<std::size_t>(k)] += x->coeffs[static_cast<std::size_t>(k - off)];
  }
  return out;
}

namespace {

void require_depth(int depth) {
  if (depth < 1) throw DomainError("depth must be >= 1");
}

TopSeries from_series(std::int64_t top, const Series& s) {
  TopSeries t{top, {}};
  for (const auto& c : s.coeffs()) {
    if (denominator(c) != 1 || c < 0) throw DomainError("graded dimension is not a non-negative integer");
    t.coeffs.push_back(numerator(c));
  }
  return t;
}

TopSeries zero_top(int depth) { return TopSeries{0, std::vector<BigInt>(static_cast<std::size_t>(depth), 0)}; }

// Half-degrees (<= D) of a monomial basis of H*(Coh_e).
std::vector<int> basis_degrees(const KClass& e, int D) {
  std::vector<int> out;
  if (e.is_zero()) return {0};
  if (!heart_positive(e, Heart::half())) throw DomainError("entry " + to_string(e) + " is not a sheaf class");
  // Generator weights, sorted; multisets are built with non-decreasing generator index.
  std::vector<int> weights;
  if (e.r > 0) {
    // ch_{w+1}(1) and ch_w(omega) both have weight w.
    for (int w = 1; w <= D; ++w) weights.insert(weights.end(), {w, w});
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int deg) {
      out.push_back(deg);
      for (std::size_t g = from; g < weights.size(); ++g)
        if (deg + weights[g] <= D) rec(g, deg + weights[g]);
    };
    rec(0, 0);
  } else {
    // Multisets of size d from u^k (weight k) and omega u^k (weight k + 1).
    weights.push_back(0);
    for (int w = 1; w <= D; ++w) weights.insert(weights.end(), {w, w});
    std::function<void(std::size_t, std::int64_t, int)> rec = [&](std::size_t from, std::int64_t left, int deg) {
      if (left == 0) {
        out.push_back(deg);
        return;
      }
      for (std::size_t g = from; g < weights.size(); ++g)
        if (deg + weights[g] <= D) rec(g, left - 1, deg + weights[g]);
    };
    rec(0, e.d, 0);
  }
  return out;
}

}  // namespace

TopSeries stratum_top_series(const CMatrix& w, int depth) {
  require_depth(depth);
  Series s = Series::one(depth - 1);
  for (const auto& e : w.entries())
    if (!e.is_zero()) s *= coh_series(e, depth - 1);
  return from_series(2 * stratum_dim(w), s);
}

SchurResult schur_series(const std::vector<SchurBlock>& blocks, int depth) {
  require_depth(depth);
  SchurResult res{{}, zero_top(depth)};
  bool any = false;
  for (const auto& b : blocks) {
    TopSeries acc = zero_top(depth);
    bool first = true;
    for (const auto& w : b.ws) {
      if (w.row_sums() != b.rows || w.col_sums() != b.cols) throw DomainError("matrix does not belong to its block");
      const TopSeries t = stratum_top_series(w, depth);
      acc = first ? t : add(acc, t);
      first = false;
    }
    res.per_block.push_back(acc);
    if (!b.ws.empty()) {
      res.aggregate = any ? add(res.aggregate, acc) : acc;
      any = true;
    }
  }
  return res;
}

SchurResult schur_series_pbw(const std::vector<SchurBlock>& blocks, int depth) {
  require_depth(depth);
  const int D = depth - 1;
  std::vector<const CMatrix*> all;
  for (const auto& b : blocks)
    for (const auto& w : b.ws) all.push_back(&w);

  auto bucket = [&](const std::vector<const CMatrix*>& ws) {
    TopSeries t = zero_top(depth);
    if (ws.empty()) return t;
    t.top = 2 * stratum_dim(*ws.front());
    for (const auto* w : ws) t.top = std::max(t.top, 2 * stratum_dim(*w));
    for (const auto* w : ws) {
      std::vector<std::vector<int>> lists;
      for (const auto& e : w->entries()) lists.push_back(basis_degrees(e, D));
      // Every tuple of entry monomials is one basis element of H*(Z(w)).
      std::function<void(std::size_t, int)> rec = [&](std::size_t k, int c) {
        if (k == lists.size()) {
          const std::int64_t deg = pbw_degree(*w, 2 * static_cast<std::int64_t>(c));
          const std::int64_t idx = (t.top - deg) / 2;
          if (idx < depth) t.coeffs[static_cast<std::size_t>(idx)] += 1;
          return;
        }
        for (int x : lists[k])
          if (c + x <= D) rec(k + 1, c + x);
      };
      rec(0, 0);
    }
    return t;
  };

  SchurResult res{{}, bucket(all)};
  for (const auto& b : blocks) {
    std::vector<const CMatrix*> ws;
    for (const auto& w : b.ws) ws.push_back(&w);
    res.per_block.push_back(bucket(ws));
  }
  return res;
}

TopSeries polyrep_term(const Seq& seq, int depth) {
  require_depth(depth);
  if (seq.heart != Heart::half()) throw DomainError("polynomial representation is computed for coherent sequences");
  seq.validate();
  CMatrix column(seq.parts.size(), 1, seq.parts);
  Series s = Series::one(depth - 1);
  for (const auto& p : seq.parts) s *= coh_series(p, depth - 1);
  return from_series(2 * stratum_dim(column), s);
}

TopSeries polyrep_series(const KClass& a, const std::vector<Seq>& seqs, int depth) {
  require_depth(depth);
  TopSeries acc = zero_top(depth);
  bool first = true;
  for (const auto& q : seqs) {
    if (q.total() != a) throw DomainError("sequence does not sum to " + to_string(a));
    const TopSeries t = polyrep_term(q, depth);
    acc = first ? t : add(acc, t);
    first = false;
  }
  return acc;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::ChOne: return "1";
    case Family::ChOmega: return "omega";
    case Family::V1: return "V1";
    case Family::V2: return "V2";
  }
  return "?";
}

std::string to_string(const Gen& g) { return "ch_" + std::to_string(g.index) + "(" + to_string(g.family) + ")"; }

int gen_degree(const Gen& g) { return g.family == Family::ChOne ? 2 * g.index - 2 : 2 * g.index; }

std::string to_string(const Alphabet& a) {
  return a.kind == Alphabet::Kind::P1 ? std::string("p1") : "quiver:" + std::to_string(a.n);
}

std::vector<std::pair<Rational, Gen>> GenMap::apply(const Gen& g) const {
  for (const auto& r : rules) {
    if (r.source != g.family) continue;
    if (g.index < r.min_index) throw DomainError("generator " + to_string(g) + " is outside the domain");
    std::vector<std::pair<Rational, Gen>> out;
    for (const auto& t : r.image) out.push_back({t.coeff, Gen{t.family, g.index + t.shift}});
    return out;
  }
  throw DomainError("generator " + to_string(g) + " is not in the alphabet " + to_string(domain));
}

GenMap GenMap::normalized() const {
  GenMap out{domain, codomain, {}};
  for (const auto& r : rules) {
    std::map<std::pair<Family, int>, Rational> acc;
    for (const auto& t : r.image) acc[{t.family, t.shift}] += t.coeff;
    GenRule nr{r.source, r.min_index, {}};
    for (const auto& [key, c] : acc)
      if (c != 0) nr.image.push_back({c, key.first, key.second});
    out.rules.push_back(std::move(nr));
  }
  std::sort(out.rules.begin(), out.rules.end(),
            [](const GenRule& a, const GenRule& b) { return a.source < b.source; });
  return out;
}

bool GenMap::degree_preserving() const {
  for (const auto& r : rules)
    for (const auto& t : r.image)
      if (gen_degree({r.source, r.min_index}) != gen_degree({t.family, r.min_index + t.shift})) return false;
  return true;
}

bool operator==(const GenMap& a, const GenMap& b) {
  if (!(a.domain == b.domain) || !(a.codomain == b.codomain)) return false;
  return a.normalized().rules == b.normalized().rules;
}

GenMap genmap_identity(const Alphabet& a) {
  GenMap m{a, a, {}};
  if (a.kind == Alphabet::Kind::P1) {
    m.rules.push_back({Family::ChOne, 1, {{1, Family::ChOne, 0}}});
    m.rules.push_back({Family::ChOmega, 0, {{1, Family::ChOmega, 0}}});
  } else {
    m.rules.push_back({Family::V1, 0, {{1, Family::V1, 0}}});
    m.rules.push_back({Family::V2, 0, {{1, Family::V2, 0}}});
  }
  return m;
}

GenMap psi_alpha() {
  GenMap m{Alphabet::p1(), Alphabet::quiver(1), {}};
  m.rules.push_back({Family::ChOne, 1, {{1, Family::V2, -1}}});
  m.rules.push_back({Family::ChOmega, 0, {{1, Family::V1, 0}, {-1, Family::V2, 0}}});
  return m;
}

GenMap psi_alpha_n(int n) {
  if (n < 1) throw DomainError("heart index must be >= 1");
  GenMap m{Alphabet::p1(), Alphabet::quiver(n), {}};
  m.rules.push_back({Family::ChOne, 1, {{1 - n, Family::V1, -1}, {n, Family::V2, -1}}});
  m.rules.push_back({Family::ChOmega, 0, {{1, Family::V1, 0}, {-1, Family::V2, 0}}});
  return m;
}

GenMap phi_transition(int n) {
  if (n < 2) throw DomainError("transition maps need n >= 2");
  GenMap m{Alphabet::quiver(n), Alphabet::quiver(n - 1), {}};
  m.rules.push_back({Family::V1, 0, {{2, Family::V1, 0}, {-1, Family::V2, 0}}});
  m.rules.push_back({Family::V2, 0, {{1, Family::V1, 0}}});
  return m;
}

GenMap compose_genmaps(const GenMap& f, const GenMap& g) {
  if (!(g.codomain == f.domain))
    throw DomainError("cannot compose: " + to_string(g.codomain) + " is not " + to_string(f.domain));
  GenMap out{g.domain, f.codomain, {}};
  for (const auto& r : g.rules) {
    GenRule nr{r.source, r.min_index, {}};
    for (const auto& t : r.image) {
      const auto it = std::find_if(f.rules.begin(), f.rules.end(), [&](const GenRule& fr) { return fr.source == t.family; });
      if (it == f.rules.end()) throw DomainError(std::string("no rule for family ") + to_string(t.family));
      if (r.min_index + t.shift < it->min_index) throw DomainError("composite leaves the domain of the outer map");
      for (const auto& u : it->image) nr.image.push_back({t.coeff * u.coeff, u.family, t.shift + u.shift});
    }
    out.rules.push_back(std::move(nr));
  }
  return out.normalized();
}

std::array<std::array<Rational, 2>, 2> per_degree_matrix(const GenMap& m) {
  if (m.domain.kind != Alphabet::Kind::Quiver || m.codomain.kind != Alphabet::Kind::Quiver)
    throw DomainError("per-degree matrices are defined between quiver alphabets");
  std::array<std::array<Rational, 2>, 2> a{};
  for (const auto& r : m.rules) {
    const std::size_t row = r.source == Family::V1 ? 0 : 1;
    for (const auto& t : r.image) {
      if (t.shift != 0) throw DomainError("map shifts the generator index");
      a[row][t.family == Family::V1 ? 0 : 1] += t.coeff;
    }
  }
  return a;
}

Series ring_hilbert(std::optional<std::pair<int, int>> ranks, int cutoff) {
  if (!ranks) {
    Series s = bgl_series(cutoff, cutoff);
    return s * s;
  }
  if (ranks->first < 0 || ranks->second < 0) throw DomainError("ranks must be non-negative");
  return bgl_series(ranks->first, cutoff) * bgl_series(ranks->second, cutoff);
}

}  // namespace steinberg
