#ifndef FIELDPOS_OPERATORS_HPP
#define FIELDPOS_OPERATORS_HPP

// Momentum-space operator constructions (Pauli-Lubanski, spins,
// positions, Hamiltonians, velocities) and a commutator engine for
// operators of the form scalar * d/dp^k + matrix field.

#include "fieldpos/dirac.hpp"
#include "fieldpos/fd.hpp"
#include "fieldpos/spinor.hpp"
#include "fieldpos/tensor.hpp"

#include <array>
#include <functional>

namespace fieldpos {

/// Which route evaluates matrix-field derivatives inside the commutator
/// engine: Richardson-extrapolated finite differences, or the closed-form
/// derivative attached to the operator.
enum class DerivRoute { FiniteDifference, Analytic };

/// One spatial component of a momentum-space operator:
/// deriv_coeff * d/dp^{index} + matrix_field(p). Scalar operators (no
/// derivative, no preferred axis) carry index 0 and deriv_coeff 0.
struct OperatorComponent {
    Complex deriv_coeff{0.0, 0.0};
    int index = 0;   // own spatial index k in {1,2,3}; 0 for scalar operators
    int branch = 0;  // +1 particle, -1 antiparticle, 0 branch-agnostic
    double mass = 0.0;
    std::function<Mat4(const Vec3&)> matrix_field;
    std::function<Mat4(const Vec3&, int)> matrix_deriv;  // optional analytic d/dp^j

    Mat4 matrix_at(const Vec3& p) const { return matrix_field ? matrix_field(p) : Mat4::Zero(); }
};

/// Pauli-Lubanski components W^0..W^3 evaluated at momentum p.
/// The two routes are independent: `definition` contracts the spinor
/// generators with the momentum (the orbital part drops in the
/// epsilon-contraction) and transports the result into the momentum-
/// adapted spinor basis with M(L_p); `closed` uses the explicit forms
/// W^0 = Sigma.p/2, W = m Sigma/2 + p (Sigma.p) / (2(m+E)).
enum class PauliLubanskiMode { Definition, Closed };
std::array<Mat4, 4> pauli_lubanski(const Momentum& p, PauliLubanskiMode mode);

/// Covariant field spin S = (P^0 W - P W^0)/m^2 + i gamma^5 (W x P)/m^2.
/// Branch-independent as a matrix function of p.
std::array<Mat4, 3> field_spin(const Momentum& p);

/// Wigner spin S_W = (W - W^0 P/(m + P^0)) / m; identically Sigma/2.
std::array<Mat4, 3> wigner_spin(const Momentum& p);

/// Matrix part A^k(p) of the particle position operator:
/// (Sigma x p)^k / (2m(m+E)) - i gamma^5 (Sigma^k/(2m) - (Sigma.p) p^k / (2mE(m+E))).
Mat4 position_matrix_part(const Momentum& p, int k);

/// Analytic d/dp^j of position_matrix_part.
Mat4 position_matrix_part_deriv(const Momentum& p, int k, int j);

/// Field position operator components X^1..X^3 for a branch:
/// X_P = +i d/dp + A(p), X_AP = -X_P. Carries the analytic derivative.
std::array<OperatorComponent, 3> field_position(Branch branch, double mass);

/// Momentum operator component P^j (pure multiplication).
OperatorComponent momentum_operator(double mass, int j);

/// Hamiltonian as a scalar operator component (matrix multiplication only).
OperatorComponent hamiltonian_operator(Branch branch, double mass);

/// Field spin as three scalar operator components with analytic derivatives.
std::array<OperatorComponent, 3> field_spin_operator(double mass);

/// Mean-position operator on the particle subspace:
/// U_P (i d/dp^k - i p^k/(2E^2)) U_P^dagger; matrix part built from the
/// derivative of the diagonalizing unitary (finite differences).
std::array<OperatorComponent, 3> nw_position(double mass, const FDScheme& fd = {});

/// Time-slice conjugation: X^k(x0) = X^k + x0 p^k / E for either branch.
OperatorComponent time_slice(const OperatorComponent& op, double x0);

/// Adds beta p^k (a constant-b gauge term) to the matrix part.
OperatorComponent add_momentum_gauge(const OperatorComponent& op, double beta);

/// [a, b](p) = c_a (d_{k_a} B)(p) - c_b (d_{k_b} A)(p) + [A(p), B(p)].
/// Derivatives by the chosen route. Throws on incompatible branches or,
/// for the analytic route, on operators without closed-form derivatives.
Mat4 commutator(const OperatorComponent& a, const OperatorComponent& b, const Vec3& p,
                const FDScheme& fd = {}, DerivRoute route = DerivRoute::FiniteDifference);

/// Apply an operator component to a smooth spinor-valued function of p.
Vec4c apply_operator(const OperatorComponent& op, const std::function<Vec4c(const Vec3&)>& f,
                     const Vec3& p, const FDScheme& fd = {});

/// Velocity component matrices V^k = -i [X^k, H] for the branch,
/// evaluated by the commutator engine.
std::array<Mat4, 3> velocity(Branch branch, const Momentum& p, const FDScheme& fd = {});

/// Closed-form particle velocity matrix (k-th component):
/// (E/m) g0 g^k + g^k + i (Sigma x p)^k / m
///   - (g0 gamma.p) p^k (E - m g0) / (m E (m+E)).
Mat4 velocity_closed_form(const Momentum& p, int k);

/// The term whose addition reduces the particle velocity to p^k/E:
/// [g0 g^k / m - (g0 gamma.p) p^k / (m E (m+E))] (g0 gamma.p + m g0 - E).
/// Annihilates particle spinors.
Mat4 velocity_simplification_term(const Momentum& p, int k);

}  // namespace fieldpos

#endif
