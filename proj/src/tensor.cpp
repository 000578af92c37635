#include "fieldpos/tensor.hpp"

#include <cmath>
#include <sstream>

namespace fieldpos {

namespace {

constexpr double kAxisTol = 1e-10;

void require_unit_axis(const Vec3& axis) {
    if (std::abs(axis.norm() - 1.0) > kAxisTol) {
        throw std::invalid_argument("axis must be a unit vector");
    }
}

}  // namespace

LorentzMatrix minkowski_metric() {
    LorentzMatrix g = LorentzMatrix::Zero();
    g.diagonal() << 1.0, -1.0, -1.0, -1.0;
    return g;
}

double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

int levi_civita4(int mu, int nu, int rho, int sigma) {
    const int idx[4] = {mu, nu, rho, sigma};
    for (int v : idx) {
        if (v < 0 || v > 3) throw std::invalid_argument("index out of range");
    }
    int sign = 1;
    int a[4] = {mu, nu, rho, sigma};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (a[i] == a[j]) return 0;
            if (a[i] > a[j]) {
                std::swap(a[i], a[j]);
                sign = -sign;
            }
        }
    }
    // sign is the parity relative to (0,1,2,3); the convention
    // epsilon^{1230} = +1 fixes epsilon^{0123} = -1.
    return -sign;
}

Momentum::Momentum(const Vec3& spatial, double mass) : spatial_(spatial), mass_(mass) {
    if (!(mass > 0.0)) {
        throw std::invalid_argument("mass must be positive");
    }
    energy_ = std::sqrt(spatial_.squaredNorm() + mass_ * mass_);
}

Vec3 Momentum::rapidity() const {
    const double pn = spatial_.norm();
    if (pn < 1e-12 * mass_) return Vec3::Zero();
    const double xi = std::atanh(pn / energy_);
    return (spatial_ / pn) * xi;
}

FourVector apply_lorentz(const LorentzMatrix& lambda, const FourVector& v) {
    return FourVector::from_eigen(lambda * v.as_eigen());
}

Momentum apply_lorentz(const LorentzMatrix& lambda, const Momentum& p) {
    const FourVector q = apply_lorentz(lambda, p.four());
    Momentum result(q.spatial(), p.mass());
    const double scale = std::abs(q.t) + p.mass();
    if (std::abs(q.t - result.energy()) > 1e-9 * scale) {
        throw std::invalid_argument("transformed momentum is off shell");
    }
    return result;
}

LorentzMatrix lorentz_inverse(const LorentzMatrix& lambda) {
    const LorentzMatrix g = minkowski_metric();
    return g * lambda.transpose() * g;
}

double lorentz_defect(const LorentzMatrix& lambda) {
    const LorentzMatrix g = minkowski_metric();
    return (lambda.transpose() * g * lambda - g).cwiseAbs().maxCoeff();
}

LorentzMatrix boost_matrix(const Vec3& axis, double rapidity) {
    require_unit_axis(axis);
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    LorentzMatrix m = LorentzMatrix::Identity();
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = sh * axis[i];
        m(i + 1, 0) = sh * axis[i];
        for (int j = 0; j < 3; ++j) {
            m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * axis[i] * axis[j];
        }
    }
    return m;
}

LorentzMatrix rotation_matrix(const Vec3& axis, double angle) {
    require_unit_axis(axis);
    LorentzMatrix m = LorentzMatrix::Identity();
    m.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
    return m;
}

LorentzMatrix standard_boost(const Momentum& p) {
    const double pn = p.p_norm();
    if (pn < 1e-14 * p.mass()) return LorentzMatrix::Identity();
    return boost_matrix(p.spatial() / pn, std::atanh(pn / p.energy()));
}

LorentzMatrix lorentz_from_word(const TransformWord& word) {
    LorentzMatrix m = LorentzMatrix::Identity();
    for (const WordPrimitive& prim : word) {
        switch (prim.kind) {
            case WordPrimitive::Kind::Boost:
                m *= boost_matrix(prim.axis, prim.value);
                break;
            case WordPrimitive::Kind::Rotation:
                m *= rotation_matrix(prim.axis, prim.value);
                break;
        }
    }
    return m;
}

TransformWord parse_word(const std::string& text) {
    TransformWord word;
    if (text.empty()) return word;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto c1 = item.find(':');
        const auto c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw std::invalid_argument("word item must be kind:axis:value, got '" + item + "'");
        }
        const std::string kind = item.substr(0, c1);
        const std::string axis_name = item.substr(c1 + 1, c2 - c1 - 1);
        const std::string value_text = item.substr(c2 + 1);

        Vec3 axis;
        if (axis_name == "x") {
            axis = Vec3::UnitX();
        } else if (axis_name == "y") {
            axis = Vec3::UnitY();
        } else if (axis_name == "z") {
            axis = Vec3::UnitZ();
        } else {
            throw std::invalid_argument("axis must be x, y or z, got '" + axis_name + "'");
        }

        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(value_text, &used);
            if (used != value_text.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric value '" + value_text + "'");
        }

        if (kind == "boost") {
            word.push_back(WordPrimitive::boost(axis, value));
        } else if (kind == "rot") {
            word.push_back(WordPrimitive::rotation(axis, value));
        } else {
            throw std::invalid_argument("kind must be boost or rot, got '" + kind + "'");
        }
    }
    return word;
}

LorentzMatrix wigner_rotation(const LorentzMatrix& lambda, const Momentum& p) {
    if (lorentz_defect(lambda) > 1e-9) {
        throw std::invalid_argument("matrix does not preserve the metric");
    }
    const Momentum q = apply_lorentz(lambda, p);
    return lorentz_inverse(standard_boost(q)) * lambda * standard_boost(p);
}

double rotation_angle(const LorentzMatrix& rotation) {
    const double tr = rotation.block<3, 3>(1, 1).trace();
    const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

}  // namespace fieldpos
