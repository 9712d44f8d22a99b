#include "inflap/problem.hpp"

#include <cmath>
#include <limits>

namespace inflap {

bool AbsorptionParams::valid() const {
    if (!(m >= 0.0 && m < 3.0)) return false;
    if (m > 0.0) return alpha > -4.0 * m / 3.0;
    return alpha >= 0.0;
}

void AbsorptionParams::validate() const {
    if (!(m >= 0.0 && m < 3.0))
        throw ConfigError("absorption exponent out of range: require 0 <= m < 3, got m = " +
                          std::to_string(m));
    if (!valid())
        throw ConfigError("weight exponent out of range: require alpha > -(4/3) m, got alpha = " +
                          std::to_string(alpha) + ", m = " + std::to_string(m));
}

double beta_exponent(const AbsorptionParams& p) { return (4.0 + p.alpha) / (3.0 - p.m); }

double tau_constant(const AbsorptionParams& p) {
    const double num = std::pow(3.0 - p.m, 4.0);
    const double den = std::pow(4.0 + p.alpha, 3.0) * (1.0 + p.alpha + p.m);
    return std::pow(num / den, 1.0 / (3.0 - p.m));
}

double gradient_exponent(const AbsorptionParams& p) {
    return (1.0 + p.alpha + p.m) / (3.0 - p.m);
}

double absorption_factor(double u, double m) {
    if (u <= 0.0) return 0.0;
    if (m == 0.0) return 1.0;
    return std::pow(u, m);
}

void RightHandSide::validate(int dimension) const {
    params.validate();
    if (scale < 0.0) throw ConfigError("rhs scale must be nonnegative");
    if (epsilon < 0.0) throw ConfigError("rhs epsilon must be nonnegative");
    if (kind == WeightKind::shifted_power && shift < 0.0)
        throw ConfigError("shifted_power shift must be nonnegative");
    if (kind == WeightKind::distance_power && obstacle.empty())
        throw ConfigError("distance_power requires a non-empty obstacle point set");
    (void)dimension;
}

namespace {
double dist(const Point& a, const Point& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
}
}  // namespace

double RightHandSide::weight_at(const Point& x) const {
    double base = 0.0;
    switch (kind) {
        case WeightKind::power: base = dist(x, anchor); break;
        case WeightKind::shifted_power: base = std::max(dist(x, anchor) - shift, 0.0); break;
        case WeightKind::distance_power: {
            double d = std::numeric_limits<double>::infinity();
            for (const Point& f : obstacle) d = std::min(d, dist(x, f));
            base = d;
            break;
        }
    }
    double w;
    if (params.alpha == 0.0) {
        w = 1.0;
    } else if (base > 0.0) {
        w = std::pow(base, params.alpha);
    } else if (params.alpha > 0.0) {
        w = 0.0;
    } else {
        // singular weight at its anchor set
        if (params.m > 0.0) {
            w = 0.0;
        } else {
            throw NumericalError("singular weight (alpha < 0, m = 0) evaluated at its anchor set");
        }
    }
    return scale * w;
}

double RightHandSide::eval(const Point& x, double u) const {
    const double a = absorption_factor(u, params.m);
    if (a == 0.0) return epsilon;  // absorption kills any weight singularity
    return weight_at(x) * a + epsilon;
}

}  // namespace inflap
