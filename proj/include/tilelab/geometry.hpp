#pragma once

/**
 * @file geometry.hpp
 * @brief Point clouds of T and of its boundary pieces, numeric set-equation and
 *        open-set checks, and image output.
 *
 * Coordinates are in the lattice basis: v = (1, 0), Av = (0, 1). Cloud points
 * are A^{-k} L for exact lattice numerators L, converted to double last.
 */

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tilelab/gifs.hpp"

namespace tilelab {

struct Point2 {
    double x = 0;
    double y = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct PointCloud {
    std::vector<Point2> points;
    int depth = 0;

    bool empty() const noexcept { return points.empty(); }
    std::size_t size() const noexcept { return points.size(); }
};

/// Largest accepted cloud depth: TILELAB_DEPTH_MAX if set to a positive integer, else 14.
int depth_limit();

/// Hard cap on generated cloud sizes.
inline constexpr std::size_t max_cloud_points = std::size_t{1} << 25;

/// D_{A,k} = { sum_{i<k} a_i A^i v }, so that tile points are A^{-k} L.
/// Throws DepthTooLarge outside 1..depth_limit() or above max_cloud_points.
std::vector<LatticeVec> tile_lattice_points(const TilePoly& poly, int depth);

/// All sums sum_{i=1..depth} A^{-i} a_i v, a_i in 0..|q|-1.
PointCloud tile_cloud(const TilePoly& poly, int depth);

/// A^{-k} applied to lattice numerators, in floating point.
std::vector<Point2> to_points(const std::vector<LatticeVec>& numerators, const TilePoly& poly, int k);

/// Images of the seed 0 under all depth-fold compositions of GIFS maps
/// starting at vertex ell. Throws UnknownVertex, DepthTooLarge (depth > 20).
PointCloud boundary_cloud(const GifsSystem& gs, LatticeVec ell, int depth);

/// Union of boundary_cloud over all vertices: an approximation of the boundary of T.
PointCloud boundary_cloud(const GifsSystem& gs, int depth);

/// Symmetric Hausdorff distance with a bucket grid. Throws EmptyCloud.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

/// Distance from p to the nearest cloud point. Throws EmptyCloud.
double nearest_distance(const PointCloud& cloud, Point2 p);

/// Counter-clockwise convex hull without collinear points.
std::vector<Point2> convex_hull(std::vector<Point2> points);
double polygon_area(const std::vector<Point2>& polygon);
double diameter(const PointCloud& cloud);

struct SetEquationResidual {
    int depth = 0;
    /// max over vertices of d_H(A C_k(l), union_{l -> l', j} C_k(l') + j v)
    double residual = 0;
    std::vector<double> per_vertex;
    /// Diameter of the union boundary cloud at this depth.
    double diameter = 0;
};

SetEquationResidual set_equation_residual(const GifsSystem& gs, int depth);

struct OscItem {
    enum class Kind { Containment, Disjointness };
    Kind kind = Kind::Containment;
    LatticeVec vertex;
    bool pass = false;
    /// Failing fraction of samples (containment) or largest overlap fraction (disjointness).
    double worst = 0;
    std::string detail;
};

struct OscReport {
    int depth = 0;
    double cell = 0;
    std::size_t samples = 0;
    bool inconclusive = false;
    std::vector<OscItem> items;

    bool all_pass() const;
};

/// Open sets O_l = (T + l)°, sampled on an occupancy grid: every map
/// x -> A^{-1}(x + j v) of the GIFS must carry O_{l'} into O_l, and the images
/// belonging to one vertex must not overlap. Depth must be at most 12.
OscReport check_osc_numeric(const TilePoly& poly, const GifsSystem& gs, int depth);

std::string to_string(const OscItem& item);

enum class ImageFormat { Ppm, Svg };

/// Black pixels on white, axes fitted to the cloud with a 5% margin, width in
/// 64..4096 (InvalidArgument), IoError on write failure.
void render(const PointCloud& cloud, const std::string& path, ImageFormat format, int width);
void render(const PointCloud& cloud, std::ostream& os, ImageFormat format, int width);

/// "x y" per line.
void write_points(std::ostream& os, const PointCloud& cloud);

} // namespace tilelab
