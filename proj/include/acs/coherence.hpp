#ifndef ACS_COHERENCE_HPP
#define ACS_COHERENCE_HPP

#include <cstdint>

#include "acs/block_model.hpp"
#include "acs/types.hpp"

namespace acs {

// Per-block factors of the support coherence: for block k,
//   f1_k = ||B_k^* B_k X P_S^*||_{inf->inf},
//   f2_k = ||P_S X B_k^* B_k||_{inf->inf}.
// These are the block cost pair (C^1_{S,k}, C^2_{S,k}); sqrt(f1_k * f2_k) is
// the per-block coherence value.
struct BlockFactors {
  RealVector f1;
  RealVector f2;
};

BlockFactors block_theta_factors(const BlockDictionary& dict,
                                 const ComplexMatrix& x, const SupportSet& s);

// Theta_S: least almost-sure upper bound on
//   sqrt(||B^* B X P_S^*||_{inf->inf} * ||P_S X B^* B||_{inf->inf}),
// where B takes value B_k/sqrt(pi_k) with probability pi_k.  Equals
// max over {k : pi_k > 0} of per_block_k / pi_k.
struct ThetaResult {
  Real theta;
  RealVector per_block;  // sqrt(f1_k * f2_k), unnormalized
};

ThetaResult theta_for(const BlockDictionary& dict, const ComplexMatrix& x,
                      const SamplingDistribution& pi, const SupportSet& s);

// Lambda_S: least almost-sure upper bound on ||P_S X B^* B P_S^*||_{2->2};
// max over {k : pi_k > 0} of per_block_k / pi_k.
struct LambdaResult {
  Real lambda;
  RealVector per_block;
};

LambdaResult lambda_for(const BlockDictionary& dict, const ComplexMatrix& x,
                        const SamplingDistribution& pi, const SupportSet& s);

struct CoherenceProfile {
  Real theta;
  Real lambda;
  RealVector per_block_theta;
  RealVector per_block_lambda;
};

CoherenceProfile coherence_profile(const BlockDictionary& dict,
                                   const ComplexMatrix& x,
                                   const SamplingDistribution& pi,
                                   const SupportSet& s);

// Per-item sampling costs.
//   isolated (d_k = 1 rows a_k^*):
//     c1_k = ||a_k||_inf * ||a_k^* X P_S^*||_1
//     c2_k = ||P_S X a_k||_inf * ||a_k^*||_1
//   block:
//     C1_k = ||D_k^* D_k X P_S^*||_{inf->inf}
//     C2_k = ||P_S X D_k^* D_k||_{inf->inf}
struct CostTable {
  enum class Kind { isolated, block };
  Kind kind;
  RealVector c1;
  RealVector c2;
};

CostTable isolated_cost_table(const BlockDictionary& dict,
                              const ComplexMatrix& x, const SupportSet& s);

CostTable block_cost_table(const BlockDictionary& dict, const ComplexMatrix& x,
                           const SupportSet& s);

// Density minimizing Theta_S: pi_k proportional to sqrt(c1_k * c2_k), with
// minimized value Theta_S = sum_k sqrt(c1_k * c2_k).  Zero-cost blocks get
// pi_k = 0; all-zero cost tables are an error.
struct OptimalDensity {
  SamplingDistribution pi;
  Real theta;
};

OptimalDensity optimal_pi_isolated(const BlockDictionary& dict,
                                   const ComplexMatrix& x,
                                   const SupportSet& s);

OptimalDensity optimal_pi_block(const BlockDictionary& dict,
                                const ComplexMatrix& x, const SupportSet& s);

// Parameters of the measurement bound m > c * Theta (Theta + 2) ln^2(8n/eps).
struct BoundParams {
  Real epsilon;
  Real c_const = 128.0;
  Index n;
};

// ceil(max(c * Theta (Theta + 2) ln^2(8n/eps), Theta^2)) + 1: the smallest
// integer satisfying the strict bound together with the m >= Theta^2 floor.
std::int64_t measurement_bound(Real theta, const BoundParams& params);

// ceil(64 * Lambda (2 Lambda + 1) ln(8n/eps) ln(8s/eps)).
std::int64_t proof_side_bound(Real lambda, Index n, Index s, Real epsilon);

// Tail probabilities for the two deviation statistics:
//   p2 = 2 s exp(-m delta^2 / (4 Lambda (2 Lambda + delta/3)))
//   p3 = n exp(-(m t^2 / 2) / (4 Theta^2 + 4 Theta^2/sqrt(m) + 2 Theta t / 3))
struct LemmaTails {
  Real p2;
  Real p3;
};

LemmaTails lemma_tail_bounds(Real theta, Real lambda, Index m, Index s,
                             Index n, Real delta, Real t);

// ||P_S X A^* A P_S^* - I_s||_{2->2} for a realized draw.
Real local_isometry_deviation(const SensingDraw& draw, const ComplexMatrix& x,
                              const SupportSet& s);

// max over i in S^c of ||P_S X A^* A e_i||_2.
Real cross_column_coherence(const SensingDraw& draw, const ComplexMatrix& x,
                            const SupportSet& s);

}  // namespace acs

#endif  // ACS_COHERENCE_HPP
