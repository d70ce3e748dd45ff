#ifndef ACS_NORMS_HPP
#define ACS_NORMS_HPP

#include "acs/types.hpp"

namespace acs {

// Relative threshold below which a spectrum is treated as singular:
// sigma_min <= kSingularRelTol * sigma_max rejects the inversion.
inline constexpr Real kSingularRelTol = 1e-10;

// ||M||_{inf->inf} = max_i ||e_i^* M||_1 (largest row l1 sum of moduli).
Real norm_inf_inf(const ComplexMatrix& m);

// ||M||_{1->1} = ||M^*||_{inf->inf} (largest column l1 sum).
Real norm_one_one(const ComplexMatrix& m);

// ||M||_{2->2}: largest singular value.
Real norm_two_two(const ComplexMatrix& m);

// Smallest singular value.
Real min_singular(const ComplexMatrix& m);

// Inverse of a Hermitian matrix via eigendecomposition with Newton
// refinement; rejects matrices with sigma_min <= kSingularRelTol*sigma_max.
ComplexMatrix hermitian_inverse(const ComplexMatrix& m);

}  // namespace acs

#endif  // ACS_NORMS_HPP
