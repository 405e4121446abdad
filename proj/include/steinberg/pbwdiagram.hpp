#pragma once

#include "steinberg/wposet.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace steinberg {

/// l s (l - 1)(s - 1) / 4.
std::int64_t crossing_count(std::int64_t s, std::int64_t l);

struct ShufflePermutation {
  /// target[p] is the column-major position of the strand at row-major position p (0-based).
  std::vector<std::size_t> target;
  /// Adjacent transpositions, 1-based: k swaps positions k and k + 1.
  std::vector<std::size_t> word;
};

/// Row-major to column-major order of an s x l grid with the column-insertion
/// reduced word: rows 2..s are inserted in turn, each strand moving left past
/// the strands of earlier rows in later columns.
ShufflePermutation shuffle_permutation(std::size_t s, std::size_t l);

/// Applies the word to 0..n-1; result[q] is the label now at position q.
std::vector<std::size_t> replay_word(std::size_t n, const std::vector<std::size_t>& word);
std::int64_t inversion_number(const std::vector<std::size_t>& perm);

enum class StepKind { Split, Merge };
const char* to_string(StepKind k);

struct PBWStep {
  CMatrix matrix;
  StepKind kind;
  Composition beta_before;
  Composition beta_after;
};

struct PBWSequence {
  std::vector<PBWStep> steps;
  std::size_t t() const { return steps.size(); }
};

/// Split into all entries, cross them into column-major order, merge by columns.
/// Zero entries keep their strands so every w of shape s x l has the same length.
PBWSequence pbw_sequence(const CMatrix& w);

struct Strand {
  KClass weight;
  std::size_t row = 0, col = 0;  // 1-based cell
  std::size_t top_pos = 0, bot_pos = 0;  // 1-based
};

struct Region {
  /// lambda[h] = number of cells of row h + 1 in the region's partition.
  std::vector<std::size_t> partition;
  KClass cls;
};

struct CrossingDiagram {
  std::size_t s = 0, l = 0;
  std::vector<Strand> strands;
  std::vector<std::size_t> crossings;
  std::vector<Region> regions;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // regions sharing a strand segment
  /// Index of the region with this partition, if any.
  std::optional<std::size_t> find(const std::vector<std::size_t>& partition) const;
};

/// Regions of the wiring diagram, each labelled by the strands on its left.
CrossingDiagram region_map(const CMatrix& w);

std::string wiring_text(const CrossingDiagram& d);
std::string region_dot(const CrossingDiagram& d);

/// 2 stratum_dim(w) - c_degree; c_degree must be even and non-negative.
std::int64_t pbw_degree(const CMatrix& w, std::int64_t c_degree);

}  // namespace steinberg
