#ifndef ACS_RECOVERY_HPP
#define ACS_RECOVERY_HPP

#include <cstdint>
#include <string>

#include "acs/types.hpp"

namespace acs {

enum class SignModel { rademacher, steinhaus, explicit_signs };

enum class AmplitudeLaw { ones, uniform_half_to_three_halves };

// Sparse test signal: x vanishes off S and has unit-modulus signs on S times
// positive amplitudes.
struct SignalInstance {
  ComplexVector x;
  SupportSet support;
  SignModel sign_model;
};

// Uniformly random support of size s, signs per model, amplitudes per law;
// deterministic given the seed.
SignalInstance random_signal(Index n, Index s, SignModel model,
                             std::uint64_t seed,
                             AmplitudeLaw law = AmplitudeLaw::ones);

// Signal with an explicitly given support and sign/amplitude pattern.
SignalInstance explicit_signal(const ComplexVector& x, const SupportSet& s);

struct SolverOptions {
  Index max_iters = 200000;
  Real tol_feas = 1e-9;  // scaled by (1 + ||y||_2)
  Real tol_gap = 1e-9;   // relative duality-gap surrogate
};

struct RecoveryResult {
  ComplexVector x_hat;
  Real objective;            // l1 norm of x_hat
  Real constraint_residual;  // ||A x_hat - y||_2
  Index iterations;
  bool converged;
};

// Equality-constrained complex l1 minimization (basis pursuit)
//   min ||x||_1  s.t.  A x = y
// via a Chambolle-Pock primal-dual scheme with complex soft-thresholding,
// step sizes from ||A||_{2->2}, and a support-polish step accepted only when
// certified near-optimal by the running dual lower bound.  Hitting the
// iteration cap returns converged = false rather than throwing.
RecoveryResult solve_bp(const ComplexMatrix& a, const ComplexVector& y,
                        const SolverOptions& opts = {});

// Exact-recovery certificate:
//   (i)  P_S X A^* A P_S^* is injective,
//   (ii) |<(P_S X A^* A P_S^*)^{-1} P_S X A^* A e_l, sgn(x_S)>| < 1 on S^c,
// plus the explicit dual vector diagnostics.
struct CertificateReport {
  bool injective = false;
  Real min_singular_on_support = 0.0;
  Real max_dual_correlation = 0.0;
  Real dual_residual = 0.0;       // ||P_S A^* h - sgn(x_S)||_inf
  Real max_offsupport_dual = 0.0;  // max over S^c of |(A^* h)_l|
  bool pass = false;
  std::string fail_reason;
};

CertificateReport check_certificate(const ComplexMatrix& a,
                                    const ComplexMatrix& x,
                                    const SignalInstance& sig);

// h = A X P_S^* (P_S A^* A X P_S^*)^{-1} sgn(x_S); satisfies
// P_S A^* h = sgn(x_S) up to 1e-8 whenever the on-support system is
// invertible.
struct DualVector {
  ComplexVector h;
  Real dual_residual;
  Real max_offsupport_dual;
};

DualVector dual_vector(const ComplexMatrix& a, const ComplexMatrix& x,
                       const SupportSet& s, const ComplexVector& sgn_s);

// Success iff ||x_hat - x||_2 / max(||x||_2, 1) <= tol (inclusive).
bool adjudicate(const SignalInstance& sig, const RecoveryResult& result,
                Real tol = 1e-4);

}  // namespace acs

#endif  // ACS_RECOVERY_HPP
