#ifndef FIELDPOS_FD_HPP
#define FIELDPOS_FD_HPP

// Central finite differences with one Richardson extrapolation, O(h^4).

#include "fieldpos/tensor.hpp"

#include <stdexcept>
#include <utility>

namespace fieldpos {

/// Step policy for numerical momentum derivatives. The default step at a
/// point p is h_scale * (m + |p|); central O(h^2) stencils are combined
/// by one Richardson step to O(h^4). Exact for cubic integrands.
struct FDScheme {
    double h_scale = 1e-4;
    double h_override = 0.0;  // used verbatim when positive

    double step(double mass, const Vec3& p) const {
        const double h = h_override > 0.0 ? h_override : h_scale * (mass + p.norm());
        if (!(h > 1e-300)) throw std::runtime_error("finite-difference step underflow");
        return h;
    }
};

/// d/dp^k of an arbitrary vector/matrix/scalar-valued field, k in {1,2,3}.
template <typename Field>
auto fd_derivative(const Field& f, const Vec3& p, int k, double h) {
    if (k < 1 || k > 3) throw std::invalid_argument("derivative index must be 1..3");
    Vec3 e = Vec3::Zero();
    e[k - 1] = 1.0;
    auto central = [&](double step) { return ((f(p + step * e) - f(p - step * e)) / (2.0 * step)).eval(); };
    const auto coarse = central(h);
    const auto fine = central(h / 2.0);
    return ((4.0 * fine - coarse) / 3.0).eval();
}

}  // namespace fieldpos

#endif
