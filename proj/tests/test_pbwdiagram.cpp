#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "steinberg/pbwdiagram.hpp"
#include "steinberg/verify.hpp"

#include <algorithm>
#include <random>

using namespace steinberg;

namespace {

CMatrix grid(std::size_t s, std::size_t l) {
  CMatrix w(s, l);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < l; ++j)
      w.at(i, j) = {static_cast<std::int64_t>(i + 2 * j) % 3, static_cast<std::int64_t>(7 * i + j) % 5 - 1};
  return w;
}

KClass box_sum(const CMatrix& w, const std::vector<std::size_t>& lambda) {
  KClass c;
  for (std::size_t h = 0; h < lambda.size(); ++h)
    for (std::size_t k = 0; k < lambda[h]; ++k) c += w.at(h, k);
  return c;
}

// Each step matrix is a split (or merge) of one coarse sequence into pieces.
bool block_shape(const CMatrix& m, bool split) {
  const CMatrix x = split ? m : m.transposed();
  // every column has exactly one possibly nonzero position, and positions move right/down monotonically
  std::size_t row = 0;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    std::size_t nz = x.rows();
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (!x.at(i, j).is_zero()) {
        if (nz != x.rows()) return false;
        nz = i;
      }
    if (nz != x.rows()) {
      if (nz < row) return false;
      row = nz;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("crossing counts") {
  CHECK(crossing_count(2, 3) == 3);
  for (int l = 1; l <= 6; ++l) CHECK(crossing_count(1, l) == 0);
  CHECK(crossing_count(4, 3) == 18);
  CHECK(oracle::inversions(shuffle_permutation(4, 3).target) == 18);
  CHECK_THROWS_AS((crossing_count(0, 2)), DomainError);
}

TEST_CASE("shuffle permutation") {
  const auto p = shuffle_permutation(2, 3);
  // w11 w12 w13 w21 w22 w23  ->  w11 w21 w12 w22 w13 w23
  CHECK(p.target == std::vector<std::size_t>{0, 2, 4, 1, 3, 5});
  CHECK(replay_word(6, p.word) == std::vector<std::size_t>{0, 3, 1, 4, 2, 5});
  const auto id = shuffle_permutation(1, 5);
  CHECK(id.word.empty());
  for (std::size_t q = 0; q < 5; ++q) CHECK(id.target[q] == q);
  const auto t = shuffle_permutation(3, 3);
  CHECK(t.word.size() == 9);
  const auto arr = replay_word(9, t.word);
  for (std::size_t q = 0; q < 9; ++q) CHECK(t.target[arr[q]] == q);
  CHECK_THROWS_AS((replay_word(3, {3})), DomainError);
}

TEST_CASE("reduced words on all small shapes") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t l = 1; l <= 6; ++l) {
      const auto p = shuffle_permutation(s, l);
      const auto k = crossing_count(static_cast<std::int64_t>(s), static_cast<std::int64_t>(l));
      CHECK(static_cast<std::int64_t>(p.word.size()) == k);
      CHECK(oracle::inversions(p.target) == k);
      CHECK(inversion_number(p.target) == k);
      const auto arr = replay_word(s * l, p.word);
      for (std::size_t q = 0; q < arr.size(); ++q) CHECK(p.target[arr[q]] == q);
    }
}

TEST_CASE("sequence for a 2 x 3 matrix") {
  const CMatrix w = grid(2, 3);
  const auto seq = pbw_sequence(w);
  REQUIRE(seq.t() == 8);
  CHECK(seq.steps.front().kind == StepKind::Split);
  CHECK(seq.steps.back().kind == StepKind::Merge);
  for (std::size_t k = 1; k + 1 < seq.t(); ++k) CHECK(seq.steps[k].kind == (k % 2 == 1 ? StepKind::Merge : StepKind::Split));
  CHECK(seq.steps.front().matrix.rows() == 2);
  CHECK(seq.steps.front().matrix.cols() == 6);
  CHECK(seq.steps.back().matrix.rows() == 6);
  CHECK(seq.steps.back().matrix.cols() == 3);
}

TEST_CASE("degenerate sequences") {
  const CMatrix one = CMatrix::from_rows({{{3, 2}}});
  const auto a = pbw_sequence(one);
  REQUIRE(a.t() == 2);
  CHECK(a.steps[0].matrix == one);
  CHECK(a.steps[1].matrix == one);

  const CMatrix col = CMatrix::from_rows({{{1, 0}}, {{0, 2}}, {{2, -1}}});
  const auto b = pbw_sequence(col);
  REQUIRE(b.t() == 2);
  CHECK(b.steps[0].matrix == CMatrix::from_rows({{{1, 0}, {0, 0}, {0, 0}}, {{0, 0}, {0, 2}, {0, 0}}, {{0, 0}, {0, 0}, {2, -1}}}));
  CHECK(b.steps[1].matrix == col);
}

TEST_CASE("sequence invariants on a battery") {
  std::mt19937_64 rng(5);
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t l = 1; l <= 4; ++l)
      for (int rep = 0; rep < 3; ++rep) {
        CMatrix w(s, l);
        std::uniform_int_distribution<int> v(-2, 2);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < l; ++j) w.at(i, j) = {v(rng), v(rng)};
        const auto seq = pbw_sequence(w);
        const auto K = crossing_count(static_cast<std::int64_t>(s), static_cast<std::int64_t>(l));
        REQUIRE(static_cast<std::int64_t>(seq.t()) == 2 + l * s * (l - 1) * (s - 1) / 2);
        std::int64_t pairs = 0;
        for (std::size_t k = 1; k + 1 < seq.t(); k += 2)
          pairs += seq.steps[k].kind == StepKind::Merge && seq.steps[k + 1].kind == StepKind::Split;
        CHECK(pairs == K);
        CHECK(seq.steps.front().beta_before == w.row_sums());
        CHECK(seq.steps.back().beta_after == w.col_sums());
        for (std::size_t k = 0; k < seq.t(); ++k) {
          const auto& st = seq.steps[k];
          CHECK(st.matrix.row_sums() == st.beta_before);
          CHECK(st.matrix.col_sums() == st.beta_after);
          CHECK(block_shape(st.matrix, st.kind == StepKind::Split));
          if (k + 1 < seq.t()) CHECK(st.beta_after == seq.steps[k + 1].beta_before);
          if (k > 0 && k + 1 < seq.t()) {
            // crossing steps touch exactly two adjacent strands
            const auto& fine = st.kind == StepKind::Merge ? st.beta_before : st.beta_after;
            const auto& coarse = st.kind == StepKind::Merge ? st.beta_after : st.beta_before;
            CHECK(fine.size() == coarse.size() + 1);
          }
        }
      }
}

TEST_CASE("step matrices are minimal in a quiver heart") {
  // entries positive in the second quiver heart
  const CMatrix w = CMatrix::from_rows({{{1, -1}, {0, 1}}, {{0, 1}, {1, 0}}});
  const Heart h = Heart::nu(2);
  for (const auto& st : pbw_sequence(w).steps) {
    const auto ws = w_enumerate(st.beta_before, st.beta_after, h);
    REQUIRE(std::find(ws.begin(), ws.end(), st.matrix) != ws.end());
    for (const auto& o : ws) CHECK(order_leq(st.matrix, o, h));
  }
}

TEST_CASE("regions") {
  const auto d1 = region_map(CMatrix::from_rows({{{2, 1}}}));
  REQUIRE(d1.regions.size() == 2);
  CHECK(d1.find({0}).has_value());
  CHECK(d1.regions[*d1.find({1})].cls == KClass{2, 1});

  const CMatrix w2 = grid(2, 2);
  const auto d2 = region_map(w2);
  REQUIRE(d2.regions.size() == 6);
  const auto& e = w2;
  std::vector<KClass> want{{0, 0}, e.at(0, 0), e.at(0, 0) + e.at(0, 1), e.at(0, 0) + e.at(1, 0),
                           e.at(0, 0) + e.at(0, 1) + e.at(1, 0), e.total()};
  std::vector<KClass> got;
  for (const auto& r : d2.regions) got.push_back(r.cls);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);

  const CMatrix w3 = grid(2, 3);
  const auto d3 = region_map(w3);
  CHECK(d3.regions.size() == 10);
  for (const auto& lam : std::vector<std::vector<std::size_t>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}, {3, 3}}) {
    const auto k = d3.find(lam);
    REQUIRE(k.has_value());
    CHECK(d3.regions[*k].cls == box_sum(w3, lam));
  }
}

TEST_CASE("region structure on all small shapes") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t l = 1; l <= 6; ++l) {
      const CMatrix w = grid(s, l);
      const auto d = region_map(w);
      const auto K = crossing_count(static_cast<std::int64_t>(s), static_cast<std::int64_t>(l));
      CHECK(static_cast<std::int64_t>(d.regions.size()) == static_cast<std::int64_t>(s * l) + 1 + K);
      if (std::min(s, l) <= 2)
        CHECK(static_cast<std::int64_t>(d.regions.size()) == oracle::binom(static_cast<std::int64_t>(s + l), static_cast<std::int64_t>(s)));
      CHECK(d.crossings.size() == static_cast<std::size_t>(K));
      const CornerTable c(w);
      for (const auto& r : d.regions) {
        CHECK(std::is_sorted(r.partition.rbegin(), r.partition.rend()));
        CHECK(r.cls == box_sum(w, r.partition));
      }
      for (std::size_t i = 0; i <= s; ++i)
        for (std::size_t j = 0; j <= l; ++j) {
          std::vector<std::size_t> lam(s, 0);
          for (std::size_t h = 0; h < i; ++h) lam[h] = j;
          const auto k = d.find(lam);
          REQUIRE(k.has_value());
          CHECK(d.regions[*k].cls == c(i, j));
        }
      // additivity over boxes
      for (const auto& a : d.regions)
        for (const auto& b : d.regions) {
          std::vector<std::size_t> un(s), in(s);
          for (std::size_t h = 0; h < s; ++h) {
            un[h] = std::max(a.partition[h], b.partition[h]);
            in[h] = std::min(a.partition[h], b.partition[h]);
          }
          const auto ku = d.find(un), ki = d.find(in);
          if (ku && ki) CHECK(d.regions[*ku].cls == a.cls + b.cls - d.regions[*ki].cls);
        }
      for (const auto& [x, y] : d.adjacency) {
        CHECK(x < y);
        CHECK(y < d.regions.size());
      }
    }
}

TEST_CASE("homological degree of PBW elements") {
  CHECK(pbw_degree(example_u(0), 0) == -24);
  CHECK(pbw_degree(CMatrix::from_rows({{{1, 0}}}), 0) == -2);
  CHECK(pbw_degree(example_v(0), 4) == -20);
  CHECK_THROWS_AS((pbw_degree(example_v(0), 3)), DomainError);
  CHECK_THROWS_AS((pbw_degree(example_v(0), -2)), DomainError);
}

TEST_CASE("text exports") {
  const auto d = region_map(grid(2, 3));
  const std::string t = wiring_text(d);
  CHECK(t.find("shape 2x3") == 0);
  CHECK(std::count(t.begin(), t.end(), '\n') == 1 + 6 + 3 + 10);
  const std::string g = region_dot(d);
  CHECK(g.rfind("graph regions {", 0) == 0);
}
