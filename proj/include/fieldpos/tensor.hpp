#ifndef FIELDPOS_TENSOR_HPP
#define FIELDPOS_TENSOR_HPP

// Real Minkowski-space kinematics: 4-vectors with metric diag(+,-,-,-),
// on-shell momenta, restricted Lorentz matrices, standard boosts and
// Wigner rotations.

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace fieldpos {

using Vec3 = Eigen::Vector3d;
using LorentzMatrix = Eigen::Matrix4d;  // row/column order (t, x, y, z)

/// Contravariant 4-vector, index order x^0 = t.
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    FourVector(double t_, const Vec3& s) : t(t_), x(s.x()), y(s.y()), z(s.z()) {}

    Vec3 spatial() const { return Vec3(x, y, z); }

    Eigen::Vector4d as_eigen() const { return Eigen::Vector4d(t, x, y, z); }
    static FourVector from_eigen(const Eigen::Vector4d& v) {
        return FourVector(v[0], v[1], v[2], v[3]);
    }
};

/// Minkowski metric tensor g = diag(+1, -1, -1, -1).
LorentzMatrix minkowski_metric();

/// a^0 b^0 - a.b
double minkowski_dot(const FourVector& a, const FourVector& b);

/// Signed permutation epsilon^{mu nu rho sigma} with epsilon^{1230} = +1
/// (equivalently epsilon^{0123} = -1). Returns 0 on repeated indices.
int levi_civita4(int mu, int nu, int rho, int sigma);

/// On-shell energy-momentum of a massive particle. Immutable after
/// construction; E = sqrt(p.p + m^2) is cached.
class Momentum {
  public:
    Momentum(const Vec3& spatial, double mass);

    static Momentum rest(double mass) { return Momentum(Vec3::Zero(), mass); }

    const Vec3& spatial() const { return spatial_; }
    double mass() const { return mass_; }
    double energy() const { return energy_; }
    double p_norm() const { return spatial_.norm(); }

    /// Rapidity vector xi = (p/|p|) artanh(|p|/E); zero at rest
    /// (removable singularity, guarded at |p| < 1e-12 m).
    Vec3 rapidity() const;

    FourVector four() const { return FourVector(energy_, spatial_); }

  private:
    Vec3 spatial_;
    double mass_;
    double energy_;
};

/// Apply a restricted Lorentz matrix to an on-shell momentum. Throws if
/// the image is not on-shell with the same mass (invalid Lambda).
Momentum apply_lorentz(const LorentzMatrix& lambda, const Momentum& p);

FourVector apply_lorentz(const LorentzMatrix& lambda, const FourVector& v);

/// Lambda^{-1} = g Lambda^T g, exact for metric-preserving matrices.
LorentzMatrix lorentz_inverse(const LorentzMatrix& lambda);

/// Max entry of Lambda^T g Lambda - g; zero for exact Lorentz matrices.
double lorentz_defect(const LorentzMatrix& lambda);

/// Pure boost with rapidity xi along a unit axis.
LorentzMatrix boost_matrix(const Vec3& axis, double rapidity);

/// Spatial rotation by angle about a unit axis (Rodrigues form).
LorentzMatrix rotation_matrix(const Vec3& axis, double angle);

/// Standard boost L_p taking the rest momentum (m, 0) to (E, p).
/// Symmetric positive matrix; identity at p = 0.
LorentzMatrix standard_boost(const Momentum& p);

/// One primitive of a transformation word: a pure boost (value =
/// rapidity) or a pure rotation (value = angle) about a unit axis.
struct WordPrimitive {
    enum class Kind { Boost, Rotation };
    Kind kind;
    Vec3 axis;
    double value;

    static WordPrimitive boost(const Vec3& axis, double rapidity) {
        return WordPrimitive{Kind::Boost, axis, rapidity};
    }
    static WordPrimitive rotation(const Vec3& axis, double angle) {
        return WordPrimitive{Kind::Rotation, axis, angle};
    }
};

using TransformWord = std::vector<WordPrimitive>;

/// Product of primitive matrices in word order (word[0] applied last).
/// Throws on non-unit axes. Empty word -> identity.
LorentzMatrix lorentz_from_word(const TransformWord& word);

/// Parse the compact grammar "kind:axis:value[,kind:axis:value...]"
/// with kind in {boost, rot} and axis in {x, y, z}.
TransformWord parse_word(const std::string& text);

/// Wigner rotation R = L_{Lambda p}^{-1} Lambda L_p. Always a spatial
/// rotation (fixes the rest frame vector (1,0,0,0)).
LorentzMatrix wigner_rotation(const LorentzMatrix& lambda, const Momentum& p);

/// Rotation angle in [0, pi] extracted from the spatial block trace.
double rotation_angle(const LorentzMatrix& rotation);

}  // namespace fieldpos

#endif
