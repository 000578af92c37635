#include "fieldpos/dirac.hpp"

#include <cmath>

namespace fieldpos {

namespace {

constexpr Complex kI{0.0, 1.0};

Mat2 pauli1() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli2() {
    Mat2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Mat2 pauli3() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat4 block_diag(const Mat2& a, const Mat2& b) {
    Mat4 m = Mat4::Zero();
    m.block<2, 2>(0, 0) = a;
    m.block<2, 2>(2, 2) = b;
    return m;
}

}  // namespace

Mat2 pauli(int k) {
    switch (k) {
        case 1: return pauli1();
        case 2: return pauli2();
        case 3: return pauli3();
        default: throw std::invalid_argument("pauli index must be 1..3");
    }
}

Mat2 pauli_dot(const Vec3& v) {
    Mat2 m;
    m << Complex(v.z(), 0), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), Complex(-v.z(), 0);
    return m;
}

Mat4 gamma(int mu) {
    Mat4 m = Mat4::Zero();
    switch (mu) {
        case 0:
            m.block<2, 2>(0, 2) = Mat2::Identity();
            m.block<2, 2>(2, 0) = Mat2::Identity();
            return m;
        case 1:
        case 2:
        case 3:
            m.block<2, 2>(0, 2) = pauli(mu);
            m.block<2, 2>(2, 0) = -pauli(mu);
            return m;
        default:
            throw std::invalid_argument("gamma index must be 0..3");
    }
}

Mat4 gamma5() {
    Mat4 m = Mat4::Zero();
    m.block<2, 2>(0, 0) = -Mat2::Identity();
    m.block<2, 2>(2, 2) = Mat2::Identity();
    return m;
}

Mat4 sigma_dirac(int k) { return block_diag(pauli(k), pauli(k)); }

Mat4 sigma_dirac_dot(const Vec3& v) { return block_diag(pauli_dot(v), pauli_dot(v)); }

Mat4 spinor_generator(int mu, int nu) {
    const Mat4 gm = gamma(mu);
    const Mat4 gn = gamma(nu);
    return (kI / 4.0) * (gm * gn - gn * gm);
}

CliffordBasis clifford_basis() {
    CliffordBasis basis;
    for (int mu = 0; mu < 4; ++mu) basis.gamma[mu] = gamma(mu);
    basis.gamma5 = gamma5();
    for (int k = 1; k <= 3; ++k) basis.sigma[k - 1] = sigma_dirac(k);
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            basis.generators[mu][nu] = spinor_generator(mu, nu);
        }
    }
    return basis;
}

Mat2 su2_rotation(const Vec3& axis, double angle) {
    if (std::abs(axis.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("axis must be a unit vector");
    }
    return std::cos(angle / 2.0) * Mat2::Identity() -
           kI * std::sin(angle / 2.0) * pauli_dot(axis);
}

Mat2 su2_boost_half(const Vec3& xi, int sign) {
    const double r = xi.norm();
    if (r == 0.0) return Mat2::Identity();
    const Vec3 axis = xi / r;
    return std::cosh(r / 2.0) * Mat2::Identity() +
           static_cast<double>(sign) * std::sinh(r / 2.0) * pauli_dot(axis);
}

Mat4 boost_spinor_from_rapidity(const Vec3& xi) {
    return block_diag(su2_boost_half(xi, -1), su2_boost_half(xi, +1));
}

Mat4 boost_spinor_rep(const Momentum& p) { return boost_spinor_from_rapidity(p.rapidity()); }

Mat4 boost_spinor_rep_closed(const Momentum& p) {
    const double e = p.energy();
    const double m = p.mass();
    const double norm = std::sqrt(2.0 * m * (e + m));
    return ((e + m) * Mat4::Identity() + gamma5() * sigma_dirac_dot(p.spatial())) / norm;
}

Mat4 boost_spinor_rep_deriv(const Momentum& p, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("derivative index must be 1..3");
    const double e = p.energy();
    const double m = p.mass();
    const double de = p.spatial()[k - 1] / e;  // dE/dp^k
    const double norm = std::sqrt(2.0 * m * (e + m));
    const Mat4 numerator_deriv = de * Mat4::Identity() + gamma5() * sigma_dirac(k);
    return numerator_deriv / norm -
           boost_spinor_rep_closed(p) * (m * de / (norm * norm));
}

Mat4 rotation_spinor_rep(const Vec3& axis, double angle) {
    const Mat2 u = su2_rotation(axis, angle);
    return block_diag(u, u);
}

Mat4 spinor_rep_from_word(const TransformWord& word) {
    Mat4 m = Mat4::Identity();
    for (const WordPrimitive& prim : word) {
        switch (prim.kind) {
            case WordPrimitive::Kind::Boost:
                m *= boost_spinor_from_rapidity(prim.axis * prim.value);
                break;
            case WordPrimitive::Kind::Rotation:
                m *= rotation_spinor_rep(prim.axis, prim.value);
                break;
        }
    }
    return m;
}

Mat2 wigner_d_block(const LorentzMatrix& rotation) {
    const Eigen::Vector4d e0(1, 0, 0, 0);
    if ((rotation * e0 - e0).cwiseAbs().maxCoeff() > 1e-8 || lorentz_defect(rotation) > 1e-8) {
        throw std::invalid_argument("matrix is not a spatial rotation");
    }
    const Eigen::Matrix3d o = rotation.block<3, 3>(1, 1);
    const double angle = rotation_angle(rotation);
    if (angle < 1e-12) return Mat2::Identity();

    const Vec3 antisym(o(2, 1) - o(1, 2), o(0, 2) - o(2, 0), o(1, 0) - o(0, 1));
    Vec3 axis;
    const double s = std::sin(angle);
    if (s > 1e-4) {
        axis = antisym / (2.0 * s);
    } else {
        // Angle near pi: the antisymmetric part degenerates; recover the
        // axis from (O + I)/2 = n n^T and orient it by the antisymmetric
        // remnant when one survives.
        const Eigen::Matrix3d sym = (o + Eigen::Matrix3d::Identity()) / 2.0;
        int lead = 0;
        sym.diagonal().maxCoeff(&lead);
        axis = sym.col(lead) / std::sqrt(std::max(sym(lead, lead), 1e-30));
        if (antisym.norm() > 1e-14 && antisym.dot(axis) < 0.0) axis = -axis;
    }
    axis.normalize();
    return su2_rotation(axis, angle);
}

Mat4 dirac_rep(const Mat2& u) { return block_diag(u, u); }

int su2_align_sign(const Mat2& u, const Mat2& reference) {
    const double plus = (reference - u).cwiseAbs().maxCoeff();
    const double minus = (reference + u).cwiseAbs().maxCoeff();
    return plus <= minus ? 1 : -1;
}

Mat4 fw_unitary(const Momentum& p) {
    const double pn = p.p_norm();
    if (pn < 1e-14 * p.mass()) return Mat4::Identity();
    // The generator gamma^0 gamma^5 Sigma.n squares to -I, so the
    // exponential is trigonometric. The half-angle atan(tanh(|xi|/2))
    // (equivalently tan(2 phi) = |p|/m) is the one that diagonalizes the
    // free Hamiltonian and matches the standard boost on the gamma^0-even
    // subspace.
    const double phi = 0.5 * std::atan2(pn, p.mass());
    const Mat4 generator = gamma(0) * gamma5() * sigma_dirac_dot(p.spatial() / pn);
    return std::cos(phi) * Mat4::Identity() - std::sin(phi) * generator;
}

}  // namespace fieldpos
