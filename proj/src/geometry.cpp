#include "inflap/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace inflap {

double distance(const Point& a, const Point& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
}

void GridSpec::validate() const {
    if (dimension != 1 && dimension != 2)
        throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(dimension));
    if (!(outer_radius > 0.0)) throw ConfigError("outer_radius must be positive");
    if (inner_radius < 0.0) throw ConfigError("inner_radius must be nonnegative");
    if (inner_radius >= outer_radius)
        throw ConfigError("inner_radius must be smaller than outer_radius");
    if (!(spacing > 0.0)) throw ConfigError("spacing must be positive");
    if (!(spacing < outer_radius - inner_radius))
        throw ConfigError("spacing must leave room for an interior layer: require h < outer - inner");
}

namespace {

constexpr double kRelTol = 1e-9;

Grid build_1d(const GridSpec& spec);
Grid build_2d(const GridSpec& spec);

}  // namespace

std::span<const StencilEntry> Grid::stencil(Index i) const {
    const auto b = static_cast<size_t>(stencil_begin_[static_cast<size_t>(i)]);
    const auto e = static_cast<size_t>(stencil_begin_[static_cast<size_t>(i) + 1]);
    return {stencil_.data() + b, e - b};
}

Grid Grid::build(const GridSpec& spec) {
    spec.validate();
    Grid g = spec.dimension == 1 ? build_1d(spec) : build_2d(spec);
    if (g.interior_.empty())
        throw ConfigError("degenerate grid spec: no interior points");
    return g;
}

namespace {

Grid build_1d(const GridSpec& spec) {
    Grid g;
    g.spec_ = spec;
    const double h = spec.spacing;
    const double R = spec.outer_radius;
    const double rin = spec.inner_radius;
    const double cx = spec.center[0];
    const double tol = kRelTol * std::max(1.0, R);

    std::vector<double> xs;
    const int imax = static_cast<int>(std::floor(R / h + kRelTol));
    for (int i = -imax; i <= imax; ++i) {
        const double off = i * h;
        if (std::abs(off) >= rin - tol) xs.push_back(cx + off);
    }
    // exact segment endpoints, deduplicated against lattice points
    std::vector<double> ends = {cx - R, cx + R};
    if (rin > 0.0) {
        ends.push_back(cx - rin);
        ends.push_back(cx + rin);
    }
    for (double e : ends) {
        bool dup = false;
        for (double x : xs) dup = dup || std::abs(x - e) < tol;
        if (!dup) xs.push_back(e);
    }
    std::sort(xs.begin(), xs.end());

    const Index n = static_cast<Index>(xs.size());
    g.coords_.resize(static_cast<size_t>(n));
    g.boundary_flag_.assign(static_cast<size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
        g.coords_[static_cast<size_t>(i)] = {xs[static_cast<size_t>(i)], 0.0};
        const double d = std::abs(xs[static_cast<size_t>(i)] - cx);
        const bool on_outer = std::abs(d - R) < tol;
        const bool on_inner = rin > 0.0 && std::abs(d - rin) < tol;
        g.boundary_flag_[static_cast<size_t>(i)] = on_outer || on_inner;
    }
    g.stencil_begin_.assign(static_cast<size_t>(n) + 1, 0);
    for (Index i = 0; i < n; ++i) {
        if (g.boundary_flag_[static_cast<size_t>(i)]) g.boundary_.push_back(i);
        else g.interior_.push_back(i);
    }
    // neighbors are the adjacent grid points in sorted order; segments do not
    // mix because each segment is delimited by boundary endpoints
    g.stencil_.clear();
    std::int32_t off = 0;
    for (Index i = 0; i < n; ++i) {
        g.stencil_begin_[static_cast<size_t>(i)] = off;
        if (!g.boundary_flag_[static_cast<size_t>(i)]) {
            const double x = xs[static_cast<size_t>(i)];
            g.stencil_.push_back({i - 1, x - xs[static_cast<size_t>(i) - 1]});
            g.stencil_.push_back({i + 1, xs[static_cast<size_t>(i) + 1] - x});
            off += 2;
        }
    }
    g.stencil_begin_[static_cast<size_t>(n)] = off;
    return g;
}

Grid build_2d(const GridSpec& spec) {
    Grid g;
    g.spec_ = spec;
    const double h = spec.spacing;
    const double R = spec.outer_radius;
    const double rin = spec.inner_radius;
    const double tol = kRelTol * std::max(1.0, R);

    const int imax = static_cast<int>(std::floor(R / h + kRelTol));
    const int width = 2 * imax + 1;
    std::vector<Index> lookup(static_cast<size_t>(width) * static_cast<size_t>(width), -1);
    auto cell = [&](int i, int j) -> Index& {
        return lookup[static_cast<size_t>(i + imax) * static_cast<size_t>(width) +
                      static_cast<size_t>(j + imax)];
    };

    std::vector<std::pair<int, int>> lattice;
    for (int i = -imax; i <= imax; ++i) {
        for (int j = -imax; j <= imax; ++j) {
            const double r = std::hypot(i * h, j * h);
            if (r <= R + tol && r >= rin - tol) {
                cell(i, j) = static_cast<Index>(lattice.size());
                lattice.emplace_back(i, j);
            }
        }
    }
    const Index n = static_cast<Index>(lattice.size());
    g.coords_.resize(static_cast<size_t>(n));
    g.boundary_flag_.assign(static_cast<size_t>(n), false);
    for (Index k = 0; k < n; ++k) {
        const auto [i, j] = lattice[static_cast<size_t>(k)];
        g.coords_[static_cast<size_t>(k)] = {spec.center[0] + i * h, spec.center[1] + j * h};
        const double r = std::hypot(i * h, j * h);
        bool bdry = r > R - h + tol;  // strict one-cell collar
        if (rin > 0.0) bdry = bdry || r < rin + h - tol;
        // safety: an interior point must keep all four axis neighbors
        if (!bdry) {
            for (const auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                if (std::abs(i + di) > imax || std::abs(j + dj) > imax || cell(i + di, j + dj) < 0)
                    bdry = true;
            }
        }
        g.boundary_flag_[static_cast<size_t>(k)] = bdry;
        if (bdry) g.boundary_.push_back(k);
        else g.interior_.push_back(k);
    }
    g.stencil_begin_.assign(static_cast<size_t>(n) + 1, 0);
    static constexpr std::pair<int, int> kOffsets[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                                        {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    std::int32_t off = 0;
    for (Index k = 0; k < n; ++k) {
        g.stencil_begin_[static_cast<size_t>(k)] = off;
        if (g.boundary_flag_[static_cast<size_t>(k)]) continue;
        const auto [i, j] = lattice[static_cast<size_t>(k)];
        for (const auto [di, dj] : kOffsets) {
            if (std::abs(i + di) > imax || std::abs(j + dj) > imax) continue;
            const Index nb = cell(i + di, j + dj);
            if (nb < 0) continue;
            g.stencil_.push_back({nb, std::hypot(di * h, dj * h)});
            ++off;
        }
    }
    g.stencil_begin_[static_cast<size_t>(n)] = off;
    return g;
}

}  // namespace

double sup_on_shell(const Field& f, const Point& center, double r, double band) {
    const Grid& g = *f.grid;
    double best = 0.0;
    bool found = false;
    for (Index i = 0; i < g.size(); ++i) {
        const double d = distance(g.point(i), center);
        if (std::abs(d - r) <= band + kRelTol) {
            best = found ? std::max(best, f[i]) : f[i];
            found = true;
        }
    }
    if (!found)
        throw QueryError("empty shell band: no grid point with | |x-center| - " +
                         std::to_string(r) + " | <= " + std::to_string(band));
    return best;
}

double sup_on_ball(const Field& f, const Point& center, double r) {
    const Grid& g = *f.grid;
    double best = 0.0;
    bool found = false;
    for (Index i = 0; i < g.size(); ++i) {
        if (distance(g.point(i), center) <= r + kRelTol) {
            best = found ? std::max(best, f[i]) : f[i];
            found = true;
        }
    }
    if (!found) throw QueryError("empty ball: no grid point within " + std::to_string(r));
    return best;
}

}  // namespace inflap
