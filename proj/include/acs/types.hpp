#ifndef ACS_TYPES_HPP
#define ACS_TYPES_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace acs {

using Real = double;
using Complex = std::complex<double>;
using Index = Eigen::Index;

// Dense double-precision complex matrices/vectors; all model quantities
// (A0, A, B_k, X, h, ...) live in these types.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Complex sign: z/|z| for z != 0, and sgn(0) = 0.
inline Complex sign_of(Complex z) {
  const Real m = std::abs(z);
  return m == 0.0 ? Complex(0.0, 0.0) : z / m;
}

bool all_finite(const ComplexMatrix& m);
bool all_finite(const ComplexVector& v);

// Sorted set of signal coordinates, 0-based, within an ambient dimension n.
class SupportSet {
 public:
  SupportSet(std::vector<Index> indices, Index ambient);

  const std::vector<Index>& indices() const { return indices_; }
  Index size() const { return static_cast<Index>(indices_.size()); }
  Index ambient() const { return ambient_; }
  bool is_full() const { return size() == ambient_; }
  bool contains(Index i) const;
  std::vector<Index> complement() const;

 private:
  std::vector<Index> indices_;
  Index ambient_;
};

}  // namespace acs

#endif  // ACS_TYPES_HPP
