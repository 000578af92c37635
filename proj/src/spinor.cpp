#include "fieldpos/spinor.hpp"

#include <cmath>

namespace fieldpos {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Vec2c chi(Spin s) {
    Vec2c v = Vec2c::Zero();
    v[s == Spin::Up ? 0 : 1] = 1.0;
    return v;
}

DiracSpinor dirac_spinor(const Momentum& p, Branch branch, Spin spin) {
    const Vec2c c = chi(spin);
    Vec4c rest;
    rest << c, static_cast<double>(branch_sign(branch)) * c;
    DiracSpinor psi{boost_spinor_rep(p) * rest / std::sqrt(2.0), branch, spin, p};
    return psi;
}

Mat4 hamiltonian(Branch branch, const Momentum& p) {
    const Vec3& sp = p.spatial();
    Mat4 h = Mat4::Zero();
    for (int k = 1; k <= 3; ++k) h += gamma(0) * gamma(k) * sp[k - 1];
    h += static_cast<double>(branch_sign(branch)) * p.mass() * gamma(0);
    return h;
}

Mat4 energy_projector(const Momentum& p, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("projector sign must be +-1");
    const Mat4 h = hamiltonian(Branch::Particle, p);
    return (p.energy() * Mat4::Identity() + static_cast<double>(sign) * h) /
           (2.0 * p.energy());
}

PlaneWaveState make_plane_wave(const Momentum& p, Branch branch, Spin spin,
                               const Vec3& location, double time) {
    const double eps = branch_sign(branch);
    const double arg = eps * (p.energy() * time - p.spatial().dot(location));
    return PlaneWaveState{dirac_spinor(p, branch, spin), location, time, std::exp(kI * arg)};
}

PlaneWaveState translate_phase(const PlaneWaveState& state, const Vec3& d) {
    const double eps = branch_sign(state.spinor.branch);
    PlaneWaveState moved = state;
    moved.location += d;
    moved.phase *= std::exp(kI * (eps * state.spinor.momentum.spatial().dot(d)));
    return moved;
}

Complex scalar_product(const SpinorField& f, const SpinorField& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("scalar product requires matching grids");
    const int n = f.grid.size();
    const double weight = f.grid.delta_p() / (2.0 * M_PI);
    std::vector<Complex> terms;
    terms.reserve(2 * static_cast<std::size_t>(n));
    for (int s = 0; s < 2; ++s) {
        for (int i = 0; i < n; ++i) {
            const double measure = weight * f.grid.mass() / f.grid.energy(i);
            terms.push_back(measure * f.values[s][i].dot(g.values[s][i]));
        }
    }
    return pairwise_sum(std::span<const Complex>(terms));
}

SpinorField localized_state(const MomentumGrid1D& grid, Branch branch, double displacement,
                            Spin spin) {
    SpinorField field(grid);
    const double eps = branch_sign(branch);
    for (int i = 0; i < grid.size(); ++i) {
        const Momentum p(Vec3(0, 0, grid.node(i)), grid.mass());
        const Vec4c psi = dirac_spinor(p, branch, spin).components;
        field.values[spin_index(spin)][i] = std::exp(kI * (eps * grid.node(i) * displacement)) * psi;
    }
    return field;
}

}  // namespace fieldpos
