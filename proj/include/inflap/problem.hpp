#ifndef INFLAP_PROBLEM_HPP
#define INFLAP_PROBLEM_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace inflap {

using Point = std::array<double, 2>;  // 1-D points use {x, 0}

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
struct QueryError : std::runtime_error {
    explicit QueryError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Absorption parameters (alpha, m) of the right-hand side |x|^alpha u_+^m.
/// Admissible region: 0 <= m < 3 and alpha > -(4/3) m, with alpha = 0 allowed
/// for every admissible m (the borderline exponent beta = 4/3 at m = 0).
struct AbsorptionParams {
    double alpha = 0.0;
    double m = 0.0;

    bool valid() const;
    void validate() const;  // throws ConfigError naming the violated bound
};

/// Growth exponent beta = (4 + alpha) / (3 - m).
double beta_exponent(const AbsorptionParams& p);

/// Non-degeneracy constant tau(m, alpha) =
/// ((3-m)^4 / ((4+alpha)^3 (1+alpha+m)))^(1/(3-m)).
double tau_constant(const AbsorptionParams& p);

/// Gradient growth exponent (1 + alpha + m) / (3 - m) = beta - 1.
double gradient_exponent(const AbsorptionParams& p);

enum class WeightKind { power, shifted_power, distance_power };

/// Right-hand side f(x, u) = scale * weight(x) * (u_+)^m + epsilon.
///
/// weight(x) is |x - anchor|^alpha, ((|x - anchor| - shift)_+)^alpha, or
/// dist(x, F)^alpha depending on kind. For m = 0 the absorption factor is
/// the indicator of {u > 0}: it switches off wherever u <= 0, which is what
/// lets dead cores close. A constant right-hand side is expressed through
/// epsilon with scale = 0.
///
/// Singular weights (alpha < 0) at a zero base are defined as 0 when m > 0
/// (the absorption factor vanishes first at critical points) and are a hard
/// error when m = 0.
struct RightHandSide {
    WeightKind kind = WeightKind::power;
    AbsorptionParams params;
    Point anchor{0.0, 0.0};
    double shift = 0.0;               // shifted_power only, >= 0
    std::vector<Point> obstacle;      // distance_power only, non-empty
    double scale = 1.0;
    double epsilon = 0.0;

    void validate(int dimension) const;
    /// The u-independent part scale * weight(x); applies the alpha < 0 rules.
    double weight_at(const Point& x) const;
    double eval(const Point& x, double u) const;
};

/// Absorption factor (u_+)^m with the m = 0 indicator convention.
double absorption_factor(double u, double m);

}  // namespace inflap

#endif
