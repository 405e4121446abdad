#include "steinberg/verify.hpp"

#include "steinberg/gradedcoh.hpp"
#include "steinberg/hnstrata.hpp"
#include "steinberg/pbwdiagram.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace steinberg {

CMatrix example_u(std::int64_t n) { return CMatrix::from_rows({{{2, -n}, {0, n}}, {{0, n}, {2, -n}}}); }
CMatrix example_w(std::int64_t m) { return CMatrix::from_rows({{{1, m}, {1, -m}}, {{1, -m}, {1, m}}}); }
CMatrix example_v(std::int64_t d) { return CMatrix::from_rows({{{0, d}, {2, -d}}, {{2, -d}, {0, d}}}); }

std::vector<CMatrix> example_chain(std::int64_t b) {
  std::vector<CMatrix> out;
  for (std::int64_t n = 0; n <= b; ++n) out.push_back(example_u(n));
  for (std::int64_t m = b; m >= -b; --m) out.push_back(example_w(m));
  for (std::int64_t d = b; d >= 0; --d) out.push_back(example_v(d));
  return out;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"paper-example", "heinloth", "diagram", "poset", "genmap"};
  return s;
}

namespace {

struct Report {
  std::string suite;
  std::vector<CheckResult>& out;
  void add(const std::string& check, const std::string& topic, bool pass, const std::string& detail = "") {
    out.push_back({suite, check, topic, pass, detail});
  }
};

void paper_example(Report& r) {
  const Composition rc{{2, 0}, {2, 0}};
  const auto set = w_enumerate_windowed(rc, rc, Window(3), {EntryBound::Kind::Degree, 2}).matrices;
  auto expected = example_chain(2);
  std::sort(expected.begin(), expected.end());
  r.add("windowed-set", "rank four degree zero cell set", set == expected,
        std::to_string(set.size()) + " matrices");

  bool dims = true;
  for (std::int64_t k = 0; k <= 5; ++k)
    dims = dims && stratum_dim(example_u(k)) == -12 && stratum_dim(example_v(k)) == -8 &&
           stratum_dim(example_w(k)) == -9 && stratum_dim(example_w(-k)) == -9;
  r.add("stratum-dims", "cell dimensions -12, -9, -8", dims);

  const auto chain = example_chain(2);
  bool total = true;
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = 0; b < chain.size(); ++b)
      total = total && order_leq(chain[a], chain[b], Heart::half()) == (a <= b);
  r.add("total-order", "published chain order", total);

  const auto g = hasse(set, Heart::half());
  std::vector<int> in(g.nodes.size(), 0), out(g.nodes.size(), 0);
  for (const auto& [a, b] : g.edges) {
    ++out[a];
    ++in[b];
  }
  bool is_chain = g.edges.size() + 1 == g.nodes.size();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) is_chain = is_chain && in[k] <= 1 && out[k] <= 1;
  r.add("hasse-chain", "Hasse diagram is a single chain", is_chain);
}

void heinloth(Report& r) {
  const int cutoff = 10;
  const Series full = ring_hilbert(std::nullopt, cutoff);
  for (const KClass a : {KClass{1, 0}, KClass{2, 0}, KClass{2, 1}, KClass{3, -1}}) {
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= cutoff + 2 && ok; ++m) {
      const Series t = trunc_series(a, Window(m), cutoff);
      for (int k = 0; k <= std::min(cutoff, m - 2); ++k)
        if (t[k] != full[k]) {
          ok = false;
          detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        }
    }
    r.add("stabilization " + to_string(a), "truncations converge to the tautological ring", ok, detail);
  }
  bool torsion = true;
  for (int d = 1; d <= 6; ++d) torsion = torsion && coh_series({0, d}, 12) == coh_series_torsion_newton(d, 12);
  r.add("torsion-newton", "torsion series by two methods", torsion);
  r.add("unbounded-ring", "ring Hilbert series equals the rank-positive moduli series",
        ring_hilbert(std::nullopt, 8) == coh_series({2, 3}, 8));
}

void diagram(Report& r) {
  bool len = true, cross = true, regions = true, rect = true, ideals = true;
  for (std::size_t s = 1; s <= 5; ++s)
    for (std::size_t l = 1; l <= 5; ++l) {
      CMatrix w(s, l);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < l; ++j) w.at(i, j) = {static_cast<std::int64_t>((i + j) % 2), static_cast<std::int64_t>(i * l + j + 1)};
      const std::int64_t K = crossing_count(static_cast<std::int64_t>(s), static_cast<std::int64_t>(l));
      len = len && pbw_sequence(w).t() == static_cast<std::size_t>(2 + 2 * K);
      const auto sh = shuffle_permutation(s, l);
      const auto arr = replay_word(s * l, sh.word);
      bool realizes = true;
      for (std::size_t q = 0; q < arr.size(); ++q) realizes = realizes && sh.target[arr[q]] == q;
      cross = cross && realizes && static_cast<std::int64_t>(sh.word.size()) == K && inversion_number(sh.target) == K;
      const auto d = region_map(w);
      regions = regions && static_cast<std::int64_t>(d.regions.size()) == static_cast<std::int64_t>(s * l) + 1 + K;
      const CornerTable c(w);
      for (const auto& reg : d.regions)
        ideals = ideals && std::is_sorted(reg.partition.rbegin(), reg.partition.rend());
      for (std::size_t i = 0; i <= s; ++i)
        for (std::size_t j = 0; j <= l; ++j) {
          std::vector<std::size_t> lambda(s, 0);
          for (std::size_t h = 0; h < i; ++h) lambda[h] = j;
          const auto k = d.find(lambda);
          rect = rect && k && d.regions[*k].cls == c(i, j);
        }
    }
  r.add("sequence-length", "split, cross and merge sequence length", len);
  r.add("reduced-word", "shuffle permutation and its reduced word", cross);
  r.add("region-count", "one region per gap plus one per crossing", regions);
  r.add("region-partitions", "regions are labelled by partitions", ideals);
  r.add("rectangles", "rectangular regions carry corner sums", rect);
}

void poset(Report& r, std::uint64_t seed) {
  bool axioms = true, minimal = true;
  for (int n = 1; n <= 2; ++n) {
    const Heart h = Heart::nu(n);
    for (std::int64_t x = 0; x <= 2; ++x)
      for (std::int64_t y = 0; y <= 2; ++y) {
        if (x == 0 && y == 0) continue;
        const KClass a = from_d_vec(n, {x, y});
        const auto seqs = seq_enumerate(a, h, 2, false);
        for (const auto& ra : seqs)
          for (const auto& ca : seqs) {
            const auto ws = w_enumerate(ra.parts, ca.parts, h);
            for (const auto& p : ws)
              for (const auto& q : ws) {
                if (order_leq(p, q, h) && order_leq(q, p, h) && !(p == q)) axioms = false;
                if (!order_leq(p, q, h)) continue;
                for (const auto& o : ws)
                  if (order_leq(q, o, h) && !order_leq(p, o, h)) axioms = false;
              }
          }
        for (const auto& ra : seqs) {
          std::vector<Composition> pieces;
          Composition fine;
          for (const auto& p : ra.parts) {
            pieces.push_back({p});
            fine.push_back(p);
          }
          const CMatrix sp = split_matrix(pieces);
          for (const auto& o : w_enumerate(ra.parts, fine, h))
            if (!(o == sp) && order_leq(o, sp, h)) minimal = false;
        }
      }
  }
  r.add("partial-order", "corner-sum order axioms", axioms);
  r.add("split-minimal", "split matrices are minimal", minimal);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shape(1, 4), val(-5, 5);
  bool dims = true;
  for (int k = 0; k < 2000; ++k) {
    CMatrix w(static_cast<std::size_t>(shape(rng)), static_cast<std::size_t>(shape(rng)));
    std::int64_t diag = 0;
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        w.at(i, j) = {val(rng), val(rng)};
        diag += euler_form(w.at(i, j), w.at(i, j));
      }
    dims = dims && stratum_dim(w) == stratum_rank(w) - diag;
  }
  r.add("dimension-rank", "cell dimension equals rank minus self pairings", dims);
}

void genmap(Report& r) {
  bool compat = true, det = true;
  for (int n = 2; n <= 50; ++n) {
    compat = compat && compose_genmaps(phi_transition(n), psi_alpha_n(n)) == psi_alpha_n(n - 1);
    const auto m = per_degree_matrix(phi_transition(n));
    det = det && m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1;
  }
  r.add("transition-compatibility", "transition maps commute with the comparison maps", compat);
  r.add("transition-determinant", "transition maps are unimodular", det);
  r.add("psi-base", "first comparison map", psi_alpha_n(1) == psi_alpha());
  bool deg = psi_alpha().degree_preserving();
  for (int n = 2; n <= 10; ++n) deg = deg && psi_alpha_n(n).degree_preserving() && phi_transition(n).degree_preserving();
  r.add("degrees", "maps preserve cohomological degree", deg);
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = verify_suites();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw DomainError("unknown verification suite '" + suite + "'");
  std::vector<CheckResult> out;
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    Report r{name, out};
    if (name == "paper-example") paper_example(r);
    else if (name == "heinloth") heinloth(r);
    else if (name == "diagram") diagram(r);
    else if (name == "poset") poset(r, seed);
    else genmap(r);
  }
  return out;
}

}  // namespace steinberg
