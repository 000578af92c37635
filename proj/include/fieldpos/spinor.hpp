#ifndef FIELDPOS_SPINOR_HPP
#define FIELDPOS_SPINOR_HPP

// Particle/antiparticle Dirac spinors, plane-wave phases, the invariant
// scalar product on momentum grids, spatial translations and energy
// projectors.

#include "fieldpos/dirac.hpp"
#include "fieldpos/grid.hpp"
#include "fieldpos/tensor.hpp"

#include <array>

namespace fieldpos {

enum class Branch : int { Particle = +1, Antiparticle = -1 };

inline int branch_sign(Branch b) { return static_cast<int>(b); }

enum class Spin : int { Up = +1, Down = -1 };

inline double spin_half(Spin s) { return 0.5 * static_cast<int>(s); }
inline int spin_index(Spin s) { return s == Spin::Up ? 0 : 1; }

constexpr std::array<Spin, 2> kSpins{Spin::Up, Spin::Down};

/// Rest-frame Pauli spinor chi_lambda: sigma^3 eigenvector.
Vec2c chi(Spin s);

/// 4-component Dirac spinor with its labels. Normalized so that
/// psi^dagger psi = E/m and psibar psi = branch sign.
struct DiracSpinor {
    Vec4c components;
    Branch branch;
    Spin spin;
    Momentum momentum;
};

/// psi_{+-eps}(p, lambda) = (1/sqrt(2)) M(L_p) (chi_lambda ; eps chi_lambda).
DiracSpinor dirac_spinor(const Momentum& p, Branch branch, Spin spin);

/// Particle/antiparticle Hamiltonian matrix: gamma^0 gamma.p +- m gamma^0.
Mat4 hamiltonian(Branch branch, const Momentum& p);

/// Energy projector Lambda_{+-}(p) = (E +- H_D(p)) / (2E) with
/// H_D = gamma^0 gamma.p + m gamma^0. sign is +1 or -1.
Mat4 energy_projector(const Momentum& p, int sign);

/// Plane-wave spinor state labelled by a location and a time slice.
/// The unimodular phase is exp(i eps (p^0 x^0 - p.x)).
struct PlaneWaveState {
    DiracSpinor spinor;
    Vec3 location;
    double time;
    Complex phase;
};

PlaneWaveState make_plane_wave(const Momentum& p, Branch branch, Spin spin,
                               const Vec3& location, double time);

/// Purely spatial translation by d: location shifts by d and the phase
/// picks up exp(+i p.d) for a particle, exp(-i p.d) for an antiparticle.
PlaneWaveState translate_phase(const PlaneWaveState& state, const Vec3& d);

/// Momentum-sampled spinor function on a 1-D grid: one 4-spinor per
/// (spin label, node). Immutable grid identity; values filled by callers.
struct SpinorField {
    MomentumGrid1D grid;
    std::array<std::vector<Vec4c>, 2> values;  // indexed by spin_index

    explicit SpinorField(const MomentumGrid1D& g)
        : grid(g), values{std::vector<Vec4c>(g.size(), Vec4c::Zero()),
                          std::vector<Vec4c>(g.size(), Vec4c::Zero())} {}
};

/// <f|g> = sum_lambda sum_n (dp / 2pi) (m / E_n) f^dagger g; conjugate
/// linear in the first argument; pairwise-summed. Throws on grid mismatch.
Complex scalar_product(const SpinorField& f, const SpinorField& g);

/// Localized state at displacement d along z: f(p_n) = phase(eps, p_n d) psi_{eps}(p_n).
SpinorField localized_state(const MomentumGrid1D& grid, Branch branch, double displacement,
                            Spin spin = Spin::Up);

}  // namespace fieldpos

#endif
