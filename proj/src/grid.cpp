#include "fieldpos/grid.hpp"

#include <cmath>

namespace fieldpos {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

template <typename T>
T pairwise_sum_impl(std::span<const T> values) {
    const std::size_t n = values.size();
    if (n == 0) return T{};
    if (n == 1) return values[0];
    if (n == 2) return values[0] + values[1];
    const std::size_t half = n / 2;
    return pairwise_sum_impl(values.first(half)) + pairwise_sum_impl(values.subspan(half));
}

}  // namespace

MomentumGrid1D::MomentumGrid1D(int n_modes, double p_max, double mass)
    : n_modes_(n_modes), p_max_(p_max), mass_(mass) {
    if (!is_power_of_two(n_modes)) {
        throw std::invalid_argument("mode count must be a power of two");
    }
    if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
}

double MomentumGrid1D::energy(int i) const {
    const double p = node(i);
    return std::sqrt(p * p + mass_ * mass_);
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
    return pairwise_sum_impl(values);
}

double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }

}  // namespace fieldpos
