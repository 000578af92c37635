#ifndef FIELDPOS_GRID_HPP
#define FIELDPOS_GRID_HPP

// Uniform 1-D momentum grid (motion along z) shared by the scalar
// product, the grid-level operator application and the wavepacket
// simulator, plus order-independent pairwise summation.

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace fieldpos {

/// N equally spaced momentum nodes p_n = -p_max + n dp, n = 0..N-1,
/// dp = 2 p_max / N. The node set is centred at zero (node N/2 is 0)
/// and the conjugate position lattice has spacing dx = 2 pi / (2 p_max).
class MomentumGrid1D {
  public:
    MomentumGrid1D(int n_modes, double p_max, double mass);

    int size() const { return n_modes_; }
    double p_max() const { return p_max_; }
    double mass() const { return mass_; }
    double delta_p() const { return 2.0 * p_max_ / n_modes_; }
    double delta_x() const { return 2.0 * M_PI / (2.0 * p_max_); }

    double node(int i) const { return -p_max_ + i * delta_p(); }
    double energy(int i) const;

    /// Index of the node carrying -p_n (mod N; the edge node aliases to itself).
    int negated_index(int i) const { return (n_modes_ - i) % n_modes_; }

    /// Position lattice point x_j = (j - N/2) dx for j = 0..N-1.
    double position_node(int j) const { return (j - n_modes_ / 2) * delta_x(); }

    bool operator==(const MomentumGrid1D& other) const {
        return n_modes_ == other.n_modes_ && p_max_ == other.p_max_ && mass_ == other.mass_;
    }

  private:
    int n_modes_;
    double p_max_;
    double mass_;
};

/// Pairwise (cascade) summation: deterministic and order-robust.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

}  // namespace fieldpos

#endif
