#ifndef FIELDPOS_DIRAC_HPP
#define FIELDPOS_DIRAC_HPP

// Clifford algebra in the Weyl basis and the finite spinor-space
// representation matrices: boosts, rotations, Wigner-rotation SU(2)
// blocks, and the free-Hamiltonian-diagonalizing unitary.

#include "fieldpos/tensor.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace fieldpos {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2c = Eigen::Vector2cd;
using Vec4c = Eigen::Vector4cd;

/// Pauli matrix sigma^k, k in {1,2,3}.
Mat2 pauli(int k);

/// sigma . v over the Pauli basis.
Mat2 pauli_dot(const Vec3& v);

/// gamma^mu in the Weyl basis: gamma^0 off-diagonal identity blocks,
/// gamma^k off-diagonal (+sigma^k, -sigma^k).
Mat4 gamma(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(-I, +I).
Mat4 gamma5();

/// Dirac spin matrix Sigma^k = diag(sigma^k, sigma^k).
Mat4 sigma_dirac(int k);

/// Sigma . v.
Mat4 sigma_dirac_dot(const Vec3& v);

/// Spinor generator sigma^{mu nu} = (i/4) [gamma^mu, gamma^nu].
Mat4 spinor_generator(int mu, int nu);

/// The complete fixed basis produced in one call.
struct CliffordBasis {
    std::array<Mat4, 4> gamma;
    Mat4 gamma5;
    std::array<Mat4, 3> sigma;            // Sigma^1..Sigma^3
    std::array<std::array<Mat4, 4>, 4> generators;  // sigma^{mu nu}
};

CliffordBasis clifford_basis();

/// SU(2) element exp(-i sigma.axis angle / 2) in closed form.
Mat2 su2_rotation(const Vec3& axis, double angle);

/// 2x2 boost block exp(s sigma.xi / 2), s = +-1, in cosh/sinh closed form.
Mat2 su2_boost_half(const Vec3& xi, int sign);

/// Spinor boost for a rapidity vector: diag(exp(-sigma.xi/2), exp(+sigma.xi/2)).
Mat4 boost_spinor_from_rapidity(const Vec3& xi);

/// M(L_p) for the standard boost of p, block-exponential route.
Mat4 boost_spinor_rep(const Momentum& p);

/// M(L_p) by the rational closed form (E + m + gamma^5 Sigma.p) / sqrt(2m(E+m)).
/// Agrees with boost_spinor_rep to rounding; kept as an independent route.
Mat4 boost_spinor_rep_closed(const Momentum& p);

/// Analytic derivative of boost_spinor_rep_closed with respect to p^k, k in {1,2,3}.
Mat4 boost_spinor_rep_deriv(const Momentum& p, int k);

/// Spinor rotation diag(u, u) with u = su2_rotation(axis, angle).
Mat4 rotation_spinor_rep(const Vec3& axis, double angle);

/// Product of primitive spinor representations in word order; homomorphic
/// image of lorentz_from_word by construction.
Mat4 spinor_rep_from_word(const TransformWord& word);

/// SU(2) block of the Wigner rotation, extracted from the vector rotation
/// by axis-angle decomposition (principal branch, angle in [0, pi]).
/// Throws if R does not fix the timelike unit vector.
Mat2 wigner_d_block(const LorentzMatrix& rotation);

/// diag(u, u): the Dirac-space representation of an SU(2) block.
Mat4 dirac_rep(const Mat2& u);

/// Pick s in {+1,-1} so that s*u best matches the reference SU(2)
/// element (double-cover sheet alignment).
int su2_align_sign(const Mat2& u, const Mat2& reference);

/// U_P(p) = exp(-gamma^0 gamma^5 Sigma.xi / 2); unitary, equals the
/// adjoint of the transformation diagonalizing the free Hamiltonian.
Mat4 fw_unitary(const Momentum& p);

}  // namespace fieldpos

#endif
