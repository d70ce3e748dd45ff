#ifndef ACS_BLOCK_MODEL_HPP
#define ACS_BLOCK_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "acs/types.hpp"

namespace acs {

// Measurement dictionary A0 in C^{n x n}, stacked from M row blocks B_k with
// sum_k d_k = n, together with the anisotropy inverse X = (A0^* A0)^{-1}.
// X does not depend on the sampling density: the pi_k factors cancel in
// E[B^* B] = A0^* A0.
struct BlockDictionary {
  Index n = 0;
  std::vector<Index> block_sizes;
  std::vector<Index> block_offsets;  // row offset per block, plus trailing n
  ComplexMatrix a0;
  ComplexMatrix x;  // Gram inverse, computed at assembly

  Index block_count() const { return static_cast<Index>(block_sizes.size()); }
  auto block(Index k) const {
    return a0.middleRows(block_offsets[static_cast<std::size_t>(k)],
                         block_sizes[static_cast<std::size_t>(k)]);
  }
};

// Probability vector over blocks: nonnegative, sums to 1 within 1e-12.
struct SamplingDistribution {
  RealVector pi;

  static SamplingDistribution uniform(Index block_count);
};

SamplingDistribution make_distribution(RealVector pi);

// Realized random sensing matrix: m i.i.d. block draws, row block l equal to
// B_{k_l} / sqrt(m * pi_{k_l}).
struct SensingDraw {
  Index m = 0;
  std::vector<Index> drawn_blocks;
  ComplexMatrix a;
  std::uint64_t seed = 0;
};

// Stacks blocks (common column count n, row counts summing to n), validates
// invertibility of A0^* A0 and computes X.
BlockDictionary assemble(const std::vector<ComplexMatrix>& blocks);

const ComplexMatrix& gram_inverse(const BlockDictionary& dict);

// Draws m block indices by inverse CDF over the cumulative pi using the
// counter RNG; deterministic given the seed.
SensingDraw draw_sensing(const BlockDictionary& dict,
                         const SamplingDistribution& pi, Index m,
                         std::uint64_t seed);

// Columns of m selected in increasing index order of S (right-multiplication
// by P_S^*).
ComplexMatrix restrict_columns(const ComplexMatrix& m, const SupportSet& s);

// JSON dictionary format:
//   {"n": int, "blocks": [{"rows": [[[re, im], ...], ...]}, ...]}
BlockDictionary load_dictionary(const std::string& path);
void save_dictionary(const BlockDictionary& dict, const std::string& path);
std::string dictionary_to_json(const BlockDictionary& dict);
BlockDictionary dictionary_from_json(const std::string& text);

}  // namespace acs

#endif  // ACS_BLOCK_MODEL_HPP
