#ifndef ACS_TRAJECTORIES_HPP
#define ACS_TRAJECTORIES_HPP

#include <array>

#include "acs/block_model.hpp"
#include "acs/types.hpp"

namespace acs {

// Regular spatial grid on the unit torus: points {0, 1/side, ...} per
// dimension, row-major order (first dimension major).
struct FrequencyGrid {
  int dim = 1;
  std::array<Index, 2> sides = {0, 0};
  Index n = 0;

  static FrequencyGrid one_d(Index n);
  static FrequencyGrid two_d(Index side1, Index side2);
};

// Row (1/sqrt(n)) exp(-2 pi i omega . t) over all grid points t.  Frequencies
// are in cycles per field of view; integer frequencies give exact DFT rows.
ComplexVector fourier_row(const std::array<Real, 2>& omega,
                          const FrequencyGrid& grid);

// n single-row blocks at integer frequencies; A0 unitary, X = I.
BlockDictionary cartesian_isolated_dict(const FrequencyGrid& grid);

// side1 blocks of full horizontal frequency lines (2-D grids only); unitary.
BlockDictionary cartesian_line_dict(const FrequencyGrid& grid);

enum class RadialOffsetPolicy {
  half_step,  // signed half-integer radii, center excluded
  integer     // signed integer radii; includes the k-space center on every
              // spoke, which duplicates rows (rejected at assembly)
};

struct RadialParams {
  Index spokes = 0;
  Index samples_per_spoke = 0;
  RadialOffsetPolicy offset_policy = RadialOffsetPolicy::half_step;
  Real r_max = 0.0;           // <= 0: default 3 * side (wraps around the torus)
  Real angular_offset = -1.0;  // < 0: default pi / (4 * spokes)
};

// Spokes at angles angular_offset + k*pi/spokes, each one block of
// samples_per_spoke rows at radii (2j + 1 - d) * r_max / d (half-step
// policy).  spokes * samples_per_spoke must equal n.
BlockDictionary radial_dict(const FrequencyGrid& grid,
                            const RadialParams& params);

struct SpiralParams {
  Index samples = 0;  // must equal n
  Real turns = 0.0;   // <= 0: default 0.75 * side
  Real r_max = 0.0;   // <= 0: default 1.25 * side
  Index arc_blocks = 1;
};

// Archimedean spiral omega(tau) = r_max tau (cos(2 pi turns tau),
// sin(2 pi turns tau)) sampled at tau = j/samples, j = 1..samples,
// partitioned into contiguous arcs of equal length.
BlockDictionary spiral_dict(const FrequencyGrid& grid,
                            const SpiralParams& params);

// Orthonormal Haar synthesis operator (transpose of the `levels`-scale
// analysis cascade); n must be a power of two, levels <= log2(n).
RealMatrix haar_synthesis_matrix(Index n, Index levels);

// Replaces A0 by A0 * Psi with Psi the (tensorized, in 2-D) Haar synthesis;
// block structure preserved, X recomputed.  levels = 0 leaves the dictionary
// unchanged.
BlockDictionary wavelet_compose(const BlockDictionary& dict,
                                const FrequencyGrid& grid, Index levels);

}  // namespace acs

#endif  // ACS_TRAJECTORIES_HPP
