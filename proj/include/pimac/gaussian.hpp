#ifndef PIMAC_GAUSSIAN_HPP
#define PIMAC_GAUSSIAN_HPP

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pimac/model.hpp"

namespace pimac {

template <typename Scalar>
using Covariance2 = Eigen::Matrix<Scalar, 2, 2>;

// Genie side information handed to the receivers:
//   S1 = h12 X1 + h22 X2 + eta1 W1,  E[W1 Z1] = rho1
//   S2 = h31 X3 + eta2 W2,           E[W2 Z2] = rho2
// Feasible when |rho_i| <= 1, eta1^2 <= 1 - rho2^2, eta2^2 <= 1 - rho1^2.
template <typename Scalar>
struct BasicGenie {
  Scalar rho1{0}, rho2{0}, eta1{1}, eta2{1};

  bool feasible(Scalar slack = Scalar(1e-12)) const {
    return std::abs(rho1) <= 1 && std::abs(rho2) <= 1 && eta1 * eta1 <= 1 - rho2 * rho2 + slack &&
           eta2 * eta2 <= 1 - rho1 * rho1 + slack;
  }
};

// Covariances of (Y, S) at one receiver, jointly and given that receiver's
// own inputs, with X_i ~ N(0, P_i).
template <typename Scalar>
struct GenieCovariances {
  Covariance2<Scalar> joint;
  Covariance2<Scalar> given_inputs;
};

template <typename Scalar>
GenieCovariances<Scalar> receiver1_covariances(const BasicChannelParams<Scalar>& p, const BasicGenie<Scalar>& g) {
  const Scalar interference = p.h31 * p.h31 * p.p3 + 1;
  const Scalar noise_cross = g.eta1 * g.rho1;
  const Scalar s_noise = g.eta1 * g.eta1;
  GenieCovariances<Scalar> c;
  c.joint << p.p1 + p.p2 + interference, p.h12 * p.p1 + p.h22 * p.p2 + noise_cross,
      p.h12 * p.p1 + p.h22 * p.p2 + noise_cross, p.h12 * p.h12 * p.p1 + p.h22 * p.h22 * p.p2 + s_noise;
  c.given_inputs << interference, noise_cross, noise_cross, s_noise;
  return c;
}

template <typename Scalar>
GenieCovariances<Scalar> receiver2_covariances(const BasicChannelParams<Scalar>& p, const BasicGenie<Scalar>& g) {
  const Scalar interference = p.h12 * p.h12 * p.p1 + p.h22 * p.h22 * p.p2 + 1;
  const Scalar noise_cross = g.eta2 * g.rho2;
  const Scalar s_noise = g.eta2 * g.eta2;
  GenieCovariances<Scalar> c;
  c.joint << p.p3 + interference, p.h31 * p.p3 + noise_cross, p.h31 * p.p3 + noise_cross,
      p.h31 * p.h31 * p.p3 + s_noise;
  c.given_inputs << interference, noise_cross, noise_cross, s_noise;
  return c;
}

// I(X; Y, S) = 1/2 log2(det Cov(Y,S) / det Cov(Y,S | X)) in bits.
//
// With eta = 0 the genie signal is noiseless: the information is unbounded
// unless S carries no input, in which case S is dropped. A singular
// conditional covariance with eta > 0 (|rho| = 1, no interference) pins the
// noise exactly and is handled the same way.
template <typename Scalar>
Scalar genie_information(const GenieCovariances<Scalar>& c, Scalar signal_in_s, Scalar eta, Scalar rho) {
  if (!(std::abs(rho) <= 1)) throw std::domain_error("genie correlation must satisfy |rho| <= 1");
  if (eta == 0 && std::abs(rho) == 1) throw std::domain_error("singular genie: eta = 0 with |rho| = 1");
  const Scalar inv_2ln2 = Scalar(1) / (2 * std::numbers::ln2_v<Scalar>);
  const Scalar det_given = c.given_inputs.determinant();
  if (eta == 0 || det_given <= 0) {
    if (signal_in_s > 0 || (eta != 0 && c.joint(0, 0) > c.given_inputs(0, 0)))
      return std::numeric_limits<Scalar>::infinity();
    if (eta != 0) return Scalar(0);
    return std::log(c.joint(0, 0) / c.given_inputs(0, 0)) * inv_2ln2;
  }
  return std::log(c.joint.determinant() / det_given) * inv_2ln2;
}

}  // namespace pimac

#endif  // PIMAC_GAUSSIAN_HPP
