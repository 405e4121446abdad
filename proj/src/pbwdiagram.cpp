#include "steinberg/pbwdiagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace steinberg {

std::int64_t crossing_count(std::int64_t s, std::int64_t l) {
  if (s < 1 || l < 1) throw DomainError("matrix shape must be at least 1 x 1");
  return l * s * (l - 1) * (s - 1) / 4;
}

ShufflePermutation shuffle_permutation(std::size_t s, std::size_t l) {
  if (s < 1 || l < 1) throw DomainError("matrix shape must be at least 1 x 1");
  ShufflePermutation out;
  out.target.resize(s * l);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j) out.target[i * l + j] = j * s + i;

  std::vector<std::size_t> arr(s * l);
  std::iota(arr.begin(), arr.end(), 0);
  for (std::size_t i = 1; i < s; ++i)
    for (std::size_t k = 0; k < l; ++k) {
      std::size_t q = static_cast<std::size_t>(std::find(arr.begin(), arr.end(), i * l + k) - arr.begin());
      for (std::size_t moves = i * (l - 1 - k); moves > 0; --moves, --q) {
        std::swap(arr[q - 1], arr[q]);
        out.word.push_back(q);
      }
    }
  return out;
}

std::vector<std::size_t> replay_word(std::size_t n, const std::vector<std::size_t>& word) {
  std::vector<std::size_t> arr(n);
  std::iota(arr.begin(), arr.end(), 0);
  for (auto k : word) {
    if (k < 1 || k >= n) throw DomainError("transposition index out of range");
    std::swap(arr[k - 1], arr[k]);
  }
  return arr;
}

std::int64_t inversion_number(const std::vector<std::size_t>& perm) {
  std::int64_t inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

const char* to_string(StepKind k) { return k == StepKind::Split ? "split" : "merge"; }

PBWSequence pbw_sequence(const CMatrix& w) {
  const std::size_t s = w.rows(), l = w.cols();
  if (s == 0 || l == 0) throw DomainError("empty matrix");
  PBWSequence seq;

  std::vector<Composition> rows(s);
  Composition beta;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      rows[i].push_back(w.at(i, j));
      beta.push_back(w.at(i, j));
    }
  seq.steps.push_back({split_matrix(rows), StepKind::Split, w.row_sums(), beta});

  for (auto k : shuffle_permutation(s, l).word) {
    const std::size_t p = k - 1;
    std::vector<Composition> pieces;
    for (std::size_t q = 0; q < beta.size(); ++q) {
      if (q == p) {
        pieces.push_back({beta[p], beta[p + 1]});
        ++q;
      } else {
        pieces.push_back({beta[q]});
      }
    }
    Composition merged;
    for (const auto& pc : pieces) merged.push_back(composition_total(pc));
    seq.steps.push_back({merge_matrix(pieces), StepKind::Merge, beta, merged});

    std::swap(pieces[p][0], pieces[p][1]);
    Composition swapped = beta;
    std::swap(swapped[p], swapped[p + 1]);
    seq.steps.push_back({split_matrix(pieces), StepKind::Split, merged, swapped});
    beta = std::move(swapped);
  }

  std::vector<Composition> cols(l);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t i = 0; i < s; ++i) cols[j].push_back(w.at(i, j));
  seq.steps.push_back({merge_matrix(cols), StepKind::Merge, beta, w.col_sums()});
  return seq;
}

std::optional<std::size_t> CrossingDiagram::find(const std::vector<std::size_t>& partition) const {
  for (std::size_t k = 0; k < regions.size(); ++k)
    if (regions[k].partition == partition) return k;
  return std::nullopt;
}

CrossingDiagram region_map(const CMatrix& w) {
  const std::size_t s = w.rows(), l = w.cols(), n = s * l;
  if (n == 0) throw DomainError("empty matrix");
  const auto sh = shuffle_permutation(s, l);
  CrossingDiagram d;
  d.s = s;
  d.l = l;
  d.crossings = sh.word;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j) d.strands.push_back({w.at(i, j), i + 1, j + 1, i * l + j + 1, sh.target[i * l + j] + 1});

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> arr(n);
  std::iota(arr.begin(), arr.end(), 0);
  // Region left of gap q (0..n) is named by the partition of arr[0..q).
  auto region_at = [&](std::size_t q) {
    std::vector<std::size_t> lambda(s, 0);
    KClass cls;
    for (std::size_t x = 0; x < q; ++x) {
      ++lambda[arr[x] / l];
      cls += w.at(arr[x] / l, arr[x] % l);
    }
    auto [it, fresh] = index.emplace(lambda, d.regions.size());
    if (fresh) d.regions.push_back({lambda, cls});
    return it->second;
  };
  std::vector<std::size_t> gap(n + 1);
  for (std::size_t q = 0; q <= n; ++q) gap[q] = region_at(q);
  std::set<std::pair<std::size_t, std::size_t>> adj;
  auto link = [&](std::size_t a, std::size_t b) { adj.emplace(std::min(a, b), std::max(a, b)); };
  for (std::size_t q = 0; q < n; ++q) link(gap[q], gap[q + 1]);
  for (auto k : sh.word) {
    std::swap(arr[k - 1], arr[k]);
    gap[k] = region_at(k);
    link(gap[k - 1], gap[k]);
    link(gap[k], gap[k + 1]);
  }
  d.adjacency.assign(adj.begin(), adj.end());
  return d;
}

namespace {

std::string partition_label(const std::vector<std::size_t>& lambda) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : lambda) {
    if (x == 0) break;
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string wiring_text(const CrossingDiagram& d) {
  std::ostringstream os;
  os << "shape " << d.s << 'x' << d.l << '\n';
  for (const auto& st : d.strands)
    os << "strand w" << st.row << st.col << ' ' << st.weight << " top " << st.top_pos << " bottom " << st.bot_pos << '\n';
  for (std::size_t k = 0; k < d.crossings.size(); ++k) os << "cross " << k + 1 << " s" << d.crossings[k] << '\n';
  for (const auto& r : d.regions) os << "region " << partition_label(r.partition) << ' ' << r.cls << '\n';
  return os.str();
}

std::string region_dot(const CrossingDiagram& d) {
  std::ostringstream os;
  os << "graph regions {\n";
  for (std::size_t k = 0; k < d.regions.size(); ++k)
    os << "  r" << k << " [label=\"" << partition_label(d.regions[k].partition) << ' ' << d.regions[k].cls << "\"];\n";
  for (const auto& [a, b] : d.adjacency) os << "  r" << a << " -- r" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::int64_t pbw_degree(const CMatrix& w, std::int64_t c_degree) {
  if (c_degree < 0 || c_degree % 2 != 0)
    throw DomainError("cohomological degree must be even and non-negative, got " + std::to_string(c_degree));
  return 2 * stratum_dim(w) - c_degree;
}

}  // namespace steinberg
