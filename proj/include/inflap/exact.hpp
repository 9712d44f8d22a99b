#ifndef INFLAP_EXACT_HPP
#define INFLAP_EXACT_HPP

#include <vector>

#include "inflap/problem.hpp"

namespace inflap {

enum class ProfileKind { radial, one_dim, dead_core, aronsson, distance_weight };

/// Closed-form reference solutions:
///   radial           tau |x-x0|^beta,     solving  D_inf u = |x-x0|^alpha u_+^m
///   one_dim          tau |x_i|^beta,      solving  D_inf u = |x_i|^alpha u_+^m
///   dead_core        tau ((|x-x0|-r)_+)^beta with r = R - (c/tau)^(1/beta),
///                    solving  D_inf u = ((|x-x0|-r)_+)^alpha u_+^m, u = c on |x-x0| = R
///   aronsson         sum_i a_i |x_i|^(4/3) with sum a_i^3 = 0, infinity-harmonic
///   distance_weight  (3^4/((4+alpha)^3 (1+alpha)))^(1/3) ((|x-x0|-r0)_+)^((4+alpha)/3),
///                    solving  D_inf u = dist(x, closed ball r0)^alpha
class ExactProfile {
  public:
    static ExactProfile radial(const AbsorptionParams& p, const Point& anchor = {0.0, 0.0});
    static ExactProfile one_dim(const AbsorptionParams& p, int axis = 0);
    static ExactProfile dead_core(const AbsorptionParams& p, const Point& anchor,
                                  double outer_radius, double boundary_value);
    static ExactProfile aronsson(const std::vector<double>& coeffs);
    static ExactProfile distance_weight(double alpha, const Point& anchor, double shift_radius);

    ProfileKind kind() const { return kind_; }
    const AbsorptionParams& params() const { return params_; }
    const Point& anchor() const { return anchor_; }

    double evaluate(const Point& x) const;

    /// Dead-core plateau radius R - (c/tau)^((3-m)/(4+alpha)).
    /// Throws ConfigError when the compatibility condition R > T fails.
    double plateau_radius() const;

    /// Infinity-Laplacian from the hand-differentiated closed form.
    double inf_laplacian(const Point& x) const;

    /// inf_laplacian(x) - rhs(x, evaluate(x)); zero (to rounding) away from
    /// the non-smooth set. Throws QueryError on the non-smooth set.
    double analytic_residual(const Point& x) const;

    /// Distance from x to the profile's non-smooth set (origin / axis /
    /// plateau circle / coordinate axes).
    double nonsmooth_distance(const Point& x) const;

    /// The right-hand side this profile solves (rhs = 0 for aronsson).
    RightHandSide equation_rhs() const;

  private:
    ProfileKind kind_ = ProfileKind::radial;
    AbsorptionParams params_;
    Point anchor_{0.0, 0.0};
    int axis_ = 0;
    double outer_radius_ = 0.0;
    double boundary_value_ = 0.0;
    std::vector<double> coeffs_;
    double shift_ = 0.0;  // dead_core plateau radius or distance_weight r0
};

}  // namespace inflap

#endif
