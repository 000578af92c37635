#include "fieldpos/operators.hpp"

#include <cmath>

namespace fieldpos {

namespace {

constexpr Complex kI{0.0, 1.0};

int eps3(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;  // indices 0..2, cyclic
}

double metric_diag(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// (Sigma x v)^k with k in {1,2,3}.
Mat4 sigma_cross(const Vec3& v, int k) {
    Mat4 out = Mat4::Zero();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const int e = eps3(k - 1, a, b);
            if (e != 0) out += static_cast<double>(e) * sigma_dirac(a + 1) * v[b];
        }
    }
    return out;
}

Mat4 gamma0_gamma_dot(const Vec3& v) {
    Mat4 out = Mat4::Zero();
    for (int k = 1; k <= 3; ++k) out += gamma(0) * gamma(k) * v[k - 1];
    return out;
}

std::array<Mat4, 3> pauli_lubanski_spatial_deriv(const Momentum& p, int j);

}  // namespace

std::array<Mat4, 4> pauli_lubanski(const Momentum& p, PauliLubanskiMode mode) {
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();

    if (mode == PauliLubanskiMode::Closed) {
        std::array<Mat4, 4> w;
        const Mat4 sigma_p = sigma_dirac_dot(sp);
        w[0] = 0.5 * sigma_p;
        for (int k = 1; k <= 3; ++k) {
            w[k] = 0.5 * m * sigma_dirac(k) + sp[k - 1] * sigma_p / (2.0 * (m + e));
        }
        return w;
    }

    // Contraction of the spinor generators with the on-shell momentum;
    // the orbital piece of J vanishes against the antisymmetry of the
    // epsilon symbol. The raw contraction lives in the fixed spinor
    // basis; conjugation by M(L_p) expresses it in the momentum-adapted
    // basis in which the closed forms are written.
    const Eigen::Vector4d p_lower(e, -sp.x(), -sp.y(), -sp.z());
    std::array<Mat4, 4> contraction;
    for (int mu = 0; mu < 4; ++mu) {
        Mat4 acc = Mat4::Zero();
        for (int nu = 0; nu < 4; ++nu) {
            for (int rho = 0; rho < 4; ++rho) {
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const int eps = levi_civita4(mu, nu, rho, sigma);
                    if (eps == 0) continue;
                    const Mat4 gen_lower =
                        metric_diag(nu) * metric_diag(rho) * spinor_generator(nu, rho);
                    acc += (0.5 * eps * p_lower[sigma]) * gen_lower;
                }
            }
        }
        contraction[mu] = acc;
    }
    const Mat4 boost = boost_spinor_rep(p);
    const Mat4 boost_inv = boost_spinor_from_rapidity(-p.rapidity());
    std::array<Mat4, 4> w;
    for (int mu = 0; mu < 4; ++mu) w[mu] = boost_inv * contraction[mu] * boost;
    return w;
}

std::array<Mat4, 3> field_spin(const Momentum& p) {
    const auto w = pauli_lubanski(p, PauliLubanskiMode::Closed);
    const double m2 = p.mass() * p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const Mat4 g5 = gamma5();

    std::array<Mat4, 3> s;
    for (int i = 0; i < 3; ++i) {
        Mat4 cross = Mat4::Zero();
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const int eps = eps3(i, a, b);
                if (eps != 0) cross += static_cast<double>(eps) * w[a + 1] * sp[b];
            }
        }
        s[i] = (e * w[i + 1] - sp[i] * w[0]) / m2 + kI * g5 * cross / m2;
    }
    return s;
}

std::array<Mat4, 3> wigner_spin(const Momentum& p) {
    const auto w = pauli_lubanski(p, PauliLubanskiMode::Closed);
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    std::array<Mat4, 3> s;
    for (int i = 0; i < 3; ++i) {
        s[i] = (w[i + 1] - w[0] * sp[i] / (m + e)) / m;
    }
    return s;
}

Mat4 position_matrix_part(const Momentum& p, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("component index must be 1..3");
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const Mat4 sigma_p = sigma_dirac_dot(sp);
    return sigma_cross(sp, k) / (2.0 * m * (m + e)) -
           kI * gamma5() *
               (sigma_dirac(k) / (2.0 * m) - sigma_p * sp[k - 1] / (2.0 * m * e * (m + e)));
}

Mat4 position_matrix_part_deriv(const Momentum& p, int k, int j) {
    if (k < 1 || k > 3 || j < 1 || j > 3) {
        throw std::invalid_argument("component indices must be 1..3");
    }
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const double de = sp[j - 1] / e;  // dE/dp^j
    const Mat4 g5 = gamma5();
    const Mat4 sigma_p = sigma_dirac_dot(sp);

    const double c1 = 1.0 / (2.0 * m * (m + e));
    Vec3 ej = Vec3::Zero();
    ej[j - 1] = 1.0;
    Mat4 out = sigma_cross(ej, k) * c1 - sigma_cross(sp, k) * (c1 * de / (m + e));

    const double c2 = 1.0 / (2.0 * m * e * (m + e));
    const double dc2 = -c2 * de * (1.0 / e + 1.0 / (m + e));
    out += kI * g5 *
           ((sigma_dirac(j) * sp[k - 1] + (k == j ? 1.0 : 0.0) * sigma_p) * c2 +
            sigma_p * sp[k - 1] * dc2);
    return out;
}

std::array<OperatorComponent, 3> field_position(Branch branch, double mass) {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    const double sign = branch_sign(branch);
    std::array<OperatorComponent, 3> x;
    for (int k = 1; k <= 3; ++k) {
        OperatorComponent op;
        op.deriv_coeff = sign * kI;
        op.index = k;
        op.branch = branch_sign(branch);
        op.mass = mass;
        op.matrix_field = [mass, sign, k](const Vec3& p) -> Mat4 {
            return sign * position_matrix_part(Momentum(p, mass), k);
        };
        op.matrix_deriv = [mass, sign, k](const Vec3& p, int j) -> Mat4 {
            return sign * position_matrix_part_deriv(Momentum(p, mass), k, j);
        };
        x[k - 1] = op;
    }
    return x;
}

OperatorComponent momentum_operator(double mass, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("component index must be 1..3");
    OperatorComponent op;
    op.index = j;
    op.mass = mass;
    op.matrix_field = [j](const Vec3& p) -> Mat4 { return p[j - 1] * Mat4::Identity(); };
    op.matrix_deriv = [j](const Vec3&, int i) -> Mat4 {
        return (i == j ? 1.0 : 0.0) * Mat4::Identity();
    };
    return op;
}

OperatorComponent hamiltonian_operator(Branch branch, double mass) {
    OperatorComponent op;
    op.branch = branch_sign(branch);
    op.mass = mass;
    op.matrix_field = [branch, mass](const Vec3& p) -> Mat4 {
        return hamiltonian(branch, Momentum(p, mass));
    };
    op.matrix_deriv = [](const Vec3&, int j) -> Mat4 { return gamma(0) * gamma(j); };
    return op;
}

namespace {

std::array<Mat4, 3> pauli_lubanski_spatial_deriv(const Momentum& p, int j) {
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const double de = sp[j - 1] / e;
    const Mat4 sigma_p = sigma_dirac_dot(sp);
    const double c = 1.0 / (2.0 * (m + e));
    const double dc = -de * c / (m + e);
    std::array<Mat4, 3> dw;
    for (int i = 0; i < 3; ++i) {
        dw[i] = ((i == j - 1 ? 1.0 : 0.0) * sigma_p + sp[i] * sigma_dirac(j)) * c +
                sp[i] * sigma_p * dc;
    }
    return dw;
}

Mat4 field_spin_deriv(const Momentum& p, int i, int j) {
    const auto w = pauli_lubanski(p, PauliLubanskiMode::Closed);
    const auto dw = pauli_lubanski_spatial_deriv(p, j);
    const Mat4 dw0 = 0.5 * sigma_dirac(j);
    const double m2 = p.mass() * p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const double de = sp[j - 1] / e;

    Mat4 out = (de * w[i + 1] + e * dw[i] - (i == j - 1 ? 1.0 : 0.0) * w[0] - sp[i] * dw0) / m2;
    Mat4 cross = Mat4::Zero();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const int eps = eps3(i, a, b);
            if (eps == 0) continue;
            cross += static_cast<double>(eps) *
                     (dw[a] * sp[b] + (b == j - 1 ? 1.0 : 0.0) * w[a + 1]);
        }
    }
    out += kI * gamma5() * cross / m2;
    return out;
}

}  // namespace

std::array<OperatorComponent, 3> field_spin_operator(double mass) {
    std::array<OperatorComponent, 3> s;
    for (int i = 1; i <= 3; ++i) {
        OperatorComponent op;
        op.mass = mass;
        op.matrix_field = [mass, i](const Vec3& p) -> Mat4 {
            return field_spin(Momentum(p, mass))[i - 1];
        };
        op.matrix_deriv = [mass, i](const Vec3& p, int j) -> Mat4 {
            return field_spin_deriv(Momentum(p, mass), i - 1, j);
        };
        s[i - 1] = op;
    }
    return s;
}

std::array<OperatorComponent, 3> nw_position(double mass, const FDScheme& fd) {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    std::array<OperatorComponent, 3> x;
    for (int k = 1; k <= 3; ++k) {
        OperatorComponent op;
        op.deriv_coeff = kI;
        op.index = k;
        op.branch = +1;
        op.mass = mass;
        op.matrix_field = [mass, fd, k](const Vec3& p) -> Mat4 {
            const Momentum mom(p, mass);
            const double e = mom.energy();
            auto u_adj = [mass](const Vec3& q) -> Mat4 {
                return fw_unitary(Momentum(q, mass)).adjoint();
            };
            const Mat4 du = fd_derivative(u_adj, p, k, fd.step(mass, p));
            return kI * fw_unitary(mom) * du -
                   kI * p[k - 1] / (2.0 * e * e) * Mat4::Identity();
        };
        x[k - 1] = op;
    }
    return x;
}

OperatorComponent time_slice(const OperatorComponent& op, double x0) {
    if (op.index < 1 || op.index > 3) {
        throw std::invalid_argument("time slice requires a spatial operator component");
    }
    if (op.branch == 0) {
        throw std::invalid_argument("time slice requires a branch-labelled operator");
    }
    const double mass = op.mass;
    const int k = op.index;
    OperatorComponent out = op;
    auto base_field = op.matrix_field;
    out.matrix_field = [base_field, mass, k, x0](const Vec3& p) -> Mat4 {
        const double e = Momentum(p, mass).energy();
        return base_field(p) + x0 * p[k - 1] / e * Mat4::Identity();
    };
    if (op.matrix_deriv) {
        auto base_deriv = op.matrix_deriv;
        out.matrix_deriv = [base_deriv, mass, k, x0](const Vec3& p, int j) -> Mat4 {
            const double e = Momentum(p, mass).energy();
            const double extra = (j == k ? 1.0 : 0.0) / e - p[k - 1] * p[j - 1] / (e * e * e);
            return base_deriv(p, j) + x0 * extra * Mat4::Identity();
        };
    }
    return out;
}

OperatorComponent add_momentum_gauge(const OperatorComponent& op, double beta) {
    if (op.index < 1 || op.index > 3) {
        throw std::invalid_argument("gauge term requires a spatial operator component");
    }
    const int k = op.index;
    OperatorComponent out = op;
    auto base_field = op.matrix_field;
    out.matrix_field = [base_field, beta, k](const Vec3& p) -> Mat4 {
        return base_field(p) + beta * p[k - 1] * Mat4::Identity();
    };
    if (op.matrix_deriv) {
        auto base_deriv = op.matrix_deriv;
        out.matrix_deriv = [base_deriv, beta, k](const Vec3& p, int j) -> Mat4 {
            return base_deriv(p, j) + (j == k ? beta : 0.0) * Mat4::Identity();
        };
    }
    return out;
}

namespace {

Mat4 matrix_field_derivative(const OperatorComponent& op, const Vec3& p, int k,
                             const FDScheme& fd, DerivRoute route) {
    if (route == DerivRoute::Analytic) {
        if (!op.matrix_deriv) {
            throw std::invalid_argument("operator has no analytic matrix derivative");
        }
        return op.matrix_deriv(p, k);
    }
    if (!op.matrix_field) return Mat4::Zero();
    const double mass = op.mass > 0.0 ? op.mass : 1.0;
    return fd_derivative(op.matrix_field, p, k, fd.step(mass, p));
}

}  // namespace

Mat4 commutator(const OperatorComponent& a, const OperatorComponent& b, const Vec3& p,
                const FDScheme& fd, DerivRoute route) {
    if (a.branch != 0 && b.branch != 0 && a.branch != b.branch) {
        throw std::invalid_argument("commutator operands act on different branches");
    }
    Mat4 out = Mat4::Zero();
    if (a.deriv_coeff != 0.0 && a.index != 0) {
        out += a.deriv_coeff * matrix_field_derivative(b, p, a.index, fd, route);
    }
    if (b.deriv_coeff != 0.0 && b.index != 0) {
        out -= b.deriv_coeff * matrix_field_derivative(a, p, b.index, fd, route);
    }
    const Mat4 am = a.matrix_at(p);
    const Mat4 bm = b.matrix_at(p);
    out += am * bm - bm * am;
    return out;
}

Vec4c apply_operator(const OperatorComponent& op, const std::function<Vec4c(const Vec3&)>& f,
                     const Vec3& p, const FDScheme& fd) {
    Vec4c out = op.matrix_at(p) * f(p);
    if (op.deriv_coeff != 0.0 && op.index != 0) {
        const double mass = op.mass > 0.0 ? op.mass : 1.0;
        out += op.deriv_coeff * fd_derivative(f, p, op.index, fd.step(mass, p));
    }
    return out;
}

std::array<Mat4, 3> velocity(Branch branch, const Momentum& p, const FDScheme& fd) {
    const auto x = field_position(branch, p.mass());
    const auto h = hamiltonian_operator(branch, p.mass());
    std::array<Mat4, 3> v;
    for (int k = 0; k < 3; ++k) {
        v[k] = -kI * commutator(x[k], h, p.spatial(), fd);
    }
    return v;
}

Mat4 velocity_closed_form(const Momentum& p, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("component index must be 1..3");
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const Mat4 g0gp = gamma0_gamma_dot(sp);
    return (e / m) * gamma(0) * gamma(k) + gamma(k) + kI * sigma_cross(sp, k) / m -
           g0gp * sp[k - 1] * (e * Mat4::Identity() - m * gamma(0)) / (m * e * (m + e));
}

Mat4 velocity_simplification_term(const Momentum& p, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("component index must be 1..3");
    const double m = p.mass();
    const double e = p.energy();
    const Vec3& sp = p.spatial();
    const Mat4 g0gp = gamma0_gamma_dot(sp);
    const Mat4 bracket = gamma(0) * gamma(k) / m - g0gp * sp[k - 1] / (m * e * (m + e));
    return bracket * (g0gp + m * gamma(0) - e * Mat4::Identity());
}

}  // namespace fieldpos
