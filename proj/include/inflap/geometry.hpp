#ifndef INFLAP_GEOMETRY_HPP
#define INFLAP_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "inflap/problem.hpp"

namespace inflap {

using Index = std::int32_t;

/// Uniform grid specification: an interval (1-D) or a disk/annulus embedded
/// in a square lattice (2-D).
struct GridSpec {
    int dimension = 1;
    Point center{0.0, 0.0};
    double outer_radius = 1.0;
    double inner_radius = 0.0;  // 0 means full ball/interval
    double spacing = 0.1;

    void validate() const;
};

struct StencilEntry {
    Index neighbor;
    double distance;
};

/// Discretized domain with interior/boundary classification.
///
/// 1-D grids are the lattice points center + i*h inside the region plus the
/// exact segment endpoints (center +- outer, and +- inner for annuli), which
/// form the boundary. Interior stencils reach the nearest grid point on each
/// side, so arms next to an appended endpoint are shorter than h.
///
/// 2-D grids are the lattice points within the disk/annulus. Boundary is the
/// one-cell collar: distance to the outer circle < h (strictly), and for
/// annuli distance to the inner circle < h. Interior points always carry
/// their four axis neighbors; diagonal entries that leave the region are
/// omitted from the stencil.
class Grid {
  public:
    static Grid build(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }
    int dimension() const { return spec_.dimension; }
    Index size() const { return static_cast<Index>(coords_.size()); }
    Point point(Index i) const { return coords_[static_cast<size_t>(i)]; }
    bool is_boundary(Index i) const { return boundary_flag_[static_cast<size_t>(i)]; }
    std::span<const Index> interior() const { return interior_; }
    std::span<const Index> boundary() const { return boundary_; }
    std::span<const StencilEntry> stencil(Index i) const;

  private:
    GridSpec spec_;
    std::vector<Point> coords_;
    std::vector<bool> boundary_flag_;
    std::vector<Index> interior_;
    std::vector<Index> boundary_;
    std::vector<std::int32_t> stencil_begin_;  // size()+1 offsets, interior rows non-empty
    std::vector<StencilEntry> stencil_;
};

/// Grid-sampled scalar field.
struct Field {
    const Grid* grid = nullptr;
    std::vector<double> values;

    explicit Field(const Grid& g, double fill = 0.0)
        : grid(&g), values(static_cast<size_t>(g.size()), fill) {}
    double& operator[](Index i) { return values[static_cast<size_t>(i)]; }
    double operator[](Index i) const { return values[static_cast<size_t>(i)]; }
};

/// Max of the field over the discrete shell { | |x-center| - r | <= band }.
/// Throws QueryError when no grid point falls in the band.
double sup_on_shell(const Field& f, const Point& center, double r, double band);

/// Max of the field over the discrete ball { |x-center| <= r }.
double sup_on_ball(const Field& f, const Point& center, double r);

double distance(const Point& a, const Point& b);

}  // namespace inflap

#endif
