#include "tilelab/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tilelab/error.hpp"

namespace tilelab {

namespace {

using Mat2 = std::array<long double, 4>; // row-major, acting on (gamma, delta)

Mat2 inverse_power(const TilePoly& poly, int k)
{
    const long double q = static_cast<long double>(poly.q);
    const long double p = static_cast<long double>(poly.p);
    // A^{-1}(a, b) = (b - p a / q, -a / q)
    const Mat2 inv{-p / q, 1.0L, -1.0L / q, 0.0L};
    Mat2 m{1.0L, 0.0L, 0.0L, 1.0L};
    for (int i = 0; i < k; ++i)
        m = {inv[0] * m[0] + inv[1] * m[2], inv[0] * m[1] + inv[1] * m[3], inv[2] * m[0] + inv[3] * m[2],
             inv[2] * m[1] + inv[3] * m[3]};
    return m;
}

Point2 apply(const Mat2& m, double x, double y)
{
    return {static_cast<double>(m[0] * x + m[1] * y), static_cast<double>(m[2] * x + m[3] * y)};
}

struct LatticeHash {
    std::size_t operator()(LatticeVec v) const noexcept
    {
        return std::hash<Int>{}(v.gamma) * 1000003u ^ std::hash<Int>{}(v.delta);
    }
};

void check_depth(int depth, int limit)
{
    if (depth < 1 || depth > limit)
        throw Error(ErrorKind::DepthTooLarge,
                    "depth " + std::to_string(depth) + " outside 1.." + std::to_string(limit));
}

struct Bounds {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
};

Bounds bounds_of(const std::vector<Point2>& pts)
{
    Bounds b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point2& p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

// Uniform bucket grid for nearest-neighbor queries.
class BucketGrid {
public:
    explicit BucketGrid(const std::vector<Point2>& pts) : pts_(pts)
    {
        b_ = bounds_of(pts);
        const double w = std::max(b_.xmax - b_.xmin, 1e-12);
        const double h = std::max(b_.ymax - b_.ymin, 1e-12);
        cell_ = std::max(std::sqrt(w * h / static_cast<double>(pts.size())) * 2.0, 1e-12);
        cell_ = std::max(cell_, std::max(w, h) / 4096.0);
        nx_ = static_cast<long>(w / cell_) + 1;
        ny_ = static_cast<long>(h / cell_) + 1;
        start_.assign(static_cast<std::size_t>(nx_ * ny_ + 1), 0);
        std::vector<std::size_t> cell_of(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            cell_of[i] = index(cx(pts[i].x), cy(pts[i].y));
            ++start_[cell_of[i] + 1];
        }
        for (std::size_t c = 1; c < start_.size(); ++c)
            start_[c] += start_[c - 1];
        order_.resize(pts.size());
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t i = 0; i < pts.size(); ++i)
            order_[fill[cell_of[i]]++] = i;
    }

    double nearest(Point2 p) const
    {
        const long px = raw(p.x - b_.xmin);
        const long py = raw(p.y - b_.ymin);
        const long dx = px < 0 ? -px : (px >= nx_ ? px - nx_ + 1 : 0);
        const long dy = py < 0 ? -py : (py >= ny_ ? py - ny_ + 1 : 0);
        const long rmax = std::max(nx_, ny_) + std::max(dx, dy) + 1;
        double best2 = std::numeric_limits<double>::infinity();
        for (long r = std::max(dx, dy); r <= rmax; ++r) {
            const long y0 = std::max(py - r, 0L);
            const long y1 = std::min(py + r, ny_ - 1);
            for (long ix = std::max(px - r, 0L); ix <= std::min(px + r, nx_ - 1); ++ix) {
                if (ix == px - r || ix == px + r) {
                    for (long iy = y0; iy <= y1; ++iy)
                        scan(index(ix, iy), p, best2);
                } else {
                    if (py - r >= 0 && py - r < ny_)
                        scan(index(ix, py - r), p, best2);
                    if (r > 0 && py + r >= 0 && py + r < ny_)
                        scan(index(ix, py + r), p, best2);
                }
            }
            const double reach = static_cast<double>(r) * cell_;
            if (best2 <= reach * reach)
                break;
        }
        return std::sqrt(best2);
    }

private:
    long raw(double offset) const { return static_cast<long>(std::floor(offset / cell_)); }
    long cx(double x) const { return std::clamp(raw(x - b_.xmin), 0L, nx_ - 1); }
    long cy(double y) const { return std::clamp(raw(y - b_.ymin), 0L, ny_ - 1); }
    std::size_t index(long ix, long iy) const { return static_cast<std::size_t>(iy * nx_ + ix); }

    void scan(std::size_t c, Point2 p, double& best2) const
    {
        for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
            const Point2& q = pts_[order_[k]];
            const double d2 = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
            best2 = std::min(best2, d2);
        }
    }

    const std::vector<Point2>& pts_;
    Bounds b_;
    double cell_ = 1;
    long nx_ = 1;
    long ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> order_;
};

double directed_hausdorff(const std::vector<Point2>& from, const BucketGrid& to)
{
    double worst = 0;
    for (const Point2& p : from)
        worst = std::max(worst, to.nearest(p));
    return worst;
}

// Boolean occupancy grid with a padded border, cell size h.
class Occupancy {
public:
    Occupancy(const std::vector<Point2>& pts, double h, int pad) : h_(h), pad_(pad)
    {
        b_ = bounds_of(pts);
        nx_ = static_cast<long>(std::ceil((b_.xmax - b_.xmin) / h)) + 1 + 2 * pad;
        ny_ = static_cast<long>(std::ceil((b_.ymax - b_.ymin) / h)) + 1 + 2 * pad;
        occ_.assign(static_cast<std::size_t>(nx_ * ny_), 0);
        for (const Point2& p : pts)
            occ_[index(cell_x(p.x), cell_y(p.y))] = 1;
    }

    long cell_x(double x) const { return static_cast<long>(std::floor((x - b_.xmin) / h_)) + pad_; }
    long cell_y(double y) const { return static_cast<long>(std::floor((y - b_.ymin) / h_)) + pad_; }
    bool valid(long ix, long iy) const { return ix >= 0 && iy >= 0 && ix < nx_ && iy < ny_; }
    std::size_t index(long ix, long iy) const { return static_cast<std::size_t>(iy * nx_ + ix); }

    // Cells whose whole (2r+1)^2 neighborhood is occupied (erode) or touches an occupied cell (dilate).
    std::vector<char> morph(int r, bool erode) const
    {
        std::vector<char> out(occ_.size(), 0);
        for (long iy = 0; iy < ny_; ++iy)
            for (long ix = 0; ix < nx_; ++ix) {
                bool all = true;
                bool any = false;
                for (long dy = -r; dy <= r; ++dy)
                    for (long dx = -r; dx <= r; ++dx) {
                        const bool o = valid(ix + dx, iy + dy) && occ_[index(ix + dx, iy + dy)];
                        all = all && o;
                        any = any || o;
                    }
                out[index(ix, iy)] = erode ? all : any;
            }
        return out;
    }

    bool lookup(const std::vector<char>& grid, Point2 p) const
    {
        const long ix = cell_x(p.x);
        const long iy = cell_y(p.y);
        return valid(ix, iy) && grid[index(ix, iy)];
    }

private:
    double h_;
    int pad_;
    Bounds b_;
    long nx_ = 0;
    long ny_ = 0;
    std::vector<char> occ_;
};

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<std::vector<std::uint8_t>> rasterize(const PointCloud& cloud, int width, int& height)
{
    if (width < 64 || width > 4096)
        throw Error(ErrorKind::InvalidArgument, "image width must lie in 64..4096");
    if (cloud.empty()) {
        height = width;
        return std::vector<std::vector<std::uint8_t>>(static_cast<std::size_t>(height),
                                                      std::vector<std::uint8_t>(static_cast<std::size_t>(width), 0));
    }
    Bounds b = bounds_of(cloud.points);
    double w = b.xmax - b.xmin;
    double h = b.ymax - b.ymin;
    const double extent = std::max({w, h, 1e-9});
    w = std::max(w, extent * 1e-3);
    h = std::max(h, extent * 1e-3);
    const double mx = 0.05 * w;
    const double my = 0.05 * h;
    b.xmin -= mx;
    b.xmax = b.xmin + w + 2 * mx;
    b.ymin -= my;
    b.ymax = b.ymin + h + 2 * my;
    const double scale = static_cast<double>(width) / (b.xmax - b.xmin);
    height = std::clamp(static_cast<int>(std::lround((b.ymax - b.ymin) * scale)), 1, 4096);
    const double yscale = static_cast<double>(height) / (b.ymax - b.ymin);

    std::vector<std::vector<std::uint8_t>> ink(static_cast<std::size_t>(height),
                                               std::vector<std::uint8_t>(static_cast<std::size_t>(width), 0));
    for (const Point2& p : cloud.points) {
        const int ix = std::clamp(static_cast<int>((p.x - b.xmin) * scale), 0, width - 1);
        const int iy = std::clamp(static_cast<int>((b.ymax - p.y) * yscale), 0, height - 1);
        ink[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] = 1;
    }
    return ink;
}

} // namespace

int depth_limit()
{
    if (const char* env = std::getenv("TILELAB_DEPTH_MAX")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 64)
            return static_cast<int>(v);
    }
    return 14;
}

std::vector<LatticeVec> tile_lattice_points(const TilePoly& poly, int depth)
{
    check_depth(depth, depth_limit());
    const Int q = poly.abs_q();
    double count = std::pow(static_cast<double>(q), depth);
    if (count > static_cast<double>(max_cloud_points))
        throw Error(ErrorKind::DepthTooLarge, "|q|^depth = " + std::to_string(count) + " points exceeds the cloud cap");

    std::vector<LatticeVec> level{LatticeVec{}};
    for (int k = 0; k < depth; ++k) {
        std::vector<LatticeVec> next;
        next.reserve(level.size() * static_cast<std::size_t>(q));
        for (LatticeVec l : level) {
            const LatticeVec base = apply_A(l, poly);
            for (Int a = 0; a < q; ++a)
                next.push_back(base + LatticeVec{a, 0});
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Point2> to_points(const std::vector<LatticeVec>& numerators, const TilePoly& poly, int k)
{
    const Mat2 m = inverse_power(poly, k);
    std::vector<Point2> out;
    out.reserve(numerators.size());
    for (LatticeVec l : numerators)
        out.push_back(apply(m, static_cast<double>(l.gamma), static_cast<double>(l.delta)));
    return out;
}

PointCloud tile_cloud(const TilePoly& poly, int depth)
{
    return {to_points(tile_lattice_points(poly, depth), poly, depth), depth};
}

PointCloud boundary_cloud(const GifsSystem& gs, LatticeVec ell, int depth)
{
    const auto start = gs.graph.index_of(ell);
    if (!start)
        throw Error(ErrorKind::UnknownVertex, to_string(ell) + " is not a vertex of the GIFS");
    if (depth < 0 || depth > 20)
        throw Error(ErrorKind::DepthTooLarge, "boundary depth must lie in 0..20");

    std::vector<std::vector<const GifsMap*>> out(gs.graph.vertices.size());
    for (const GifsMap& m : gs.maps)
        out[m.from].push_back(&m);

    // States (vertex, L) with L_k = A L_{k-1} + j v; the point is A^{-k} L_k.
    std::vector<std::unordered_set<LatticeVec, LatticeHash>> level(gs.graph.vertices.size());
    level[*start].insert(LatticeVec{});
    std::size_t total = 1;
    for (int k = 0; k < depth; ++k) {
        std::vector<std::unordered_set<LatticeVec, LatticeHash>> next(gs.graph.vertices.size());
        total = 0;
        for (std::size_t u = 0; u < level.size(); ++u)
            for (LatticeVec l : level[u]) {
                const LatticeVec base = apply_A(l, gs.poly);
                for (const GifsMap* m : out[u]) {
                    if (next[m->to].insert(base + LatticeVec{m->translation, 0}).second && ++total > max_cloud_points)
                        throw Error(ErrorKind::DepthTooLarge, "boundary cloud exceeds the point cap");
                }
            }
        level = std::move(next);
    }

    std::set<LatticeVec> numerators;
    for (const auto& s : level)
        numerators.insert(s.begin(), s.end());
    return {to_points({numerators.begin(), numerators.end()}, gs.poly, depth), depth};
}

PointCloud boundary_cloud(const GifsSystem& gs, int depth)
{
    PointCloud all;
    all.depth = depth;
    for (LatticeVec ell : gs.graph.vertices) {
        PointCloud c = boundary_cloud(gs, ell, depth);
        all.points.insert(all.points.end(), c.points.begin(), c.points.end());
    }
    return all;
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b)
{
    if (a.empty() || b.empty())
        throw Error(ErrorKind::EmptyCloud, "Hausdorff distance needs two nonempty clouds");
    const BucketGrid ga(a.points);
    const BucketGrid gb(b.points);
    return std::max(directed_hausdorff(a.points, gb), directed_hausdorff(b.points, ga));
}

double nearest_distance(const PointCloud& cloud, Point2 p)
{
    if (cloud.empty())
        throw Error(ErrorKind::EmptyCloud, "nearest distance to an empty cloud");
    return BucketGrid(cloud.points).nearest(p);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts)
{
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point2& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(const std::vector<Point2>& poly)
{
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return std::abs(s) / 2;
}

double diameter(const PointCloud& cloud)
{
    const auto hull = convex_hull(cloud.points);
    double best = 0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, std::hypot(hull[i].x - hull[j].x, hull[i].y - hull[j].y));
    return best;
}

SetEquationResidual set_equation_residual(const GifsSystem& gs, int depth)
{
    SetEquationResidual r;
    r.depth = depth;
    const std::size_t n = gs.graph.vertices.size();
    std::vector<PointCloud> clouds;
    for (LatticeVec ell : gs.graph.vertices)
        clouds.push_back(boundary_cloud(gs, ell, depth));

    for (std::size_t u = 0; u < n; ++u) {
        PointCloud lhs;
        for (const Point2& p : clouds[u].points) {
            const double g = p.x;
            const double d = p.y;
            lhs.points.push_back({-static_cast<double>(gs.poly.q) * d, g - static_cast<double>(gs.poly.p) * d});
        }
        PointCloud rhs;
        for (const GifsMap& m : gs.maps) {
            if (m.from != u)
                continue;
            for (const Point2& p : clouds[m.to].points)
                rhs.points.push_back({p.x + static_cast<double>(m.translation), p.y});
        }
        r.per_vertex.push_back(hausdorff_distance(lhs, rhs));
    }
    r.residual = *std::max_element(r.per_vertex.begin(), r.per_vertex.end());

    PointCloud all;
    for (const PointCloud& c : clouds)
        all.points.insert(all.points.end(), c.points.begin(), c.points.end());
    r.diameter = diameter(all);
    return r;
}

bool OscReport::all_pass() const
{
    return !inconclusive && std::all_of(items.begin(), items.end(), [](const OscItem& i) { return i.pass; });
}

std::string to_string(const OscItem& item)
{
    std::ostringstream os;
    os << (item.kind == OscItem::Kind::Containment ? "containment " : "disjointness ") << to_string(item.vertex) << ": "
       << (item.pass ? "pass" : "FAIL") << " (worst " << std::setprecision(4) << item.worst << ")";
    if (!item.detail.empty())
        os << ' ' << item.detail;
    return os.str();
}

OscReport check_osc_numeric(const TilePoly& poly, const GifsSystem& gs, int depth)
{
    constexpr int radius = 2;
    constexpr std::size_t max_samples = 20000;
    constexpr std::size_t min_samples = 32;
    constexpr double overlap_tolerance = 0.01;
    check_depth(depth, 12);

    OscReport report;
    report.depth = depth;
    const PointCloud tile = tile_cloud(poly, depth);
    report.cell = 2.5 / std::sqrt(static_cast<double>(tile.size()));
    const Occupancy grid(tile.points, report.cell, radius + 1);
    const std::vector<char> interior = grid.morph(radius, true);
    const std::vector<char> hull = grid.morph(radius, false);

    std::vector<Point2> interior_points;
    for (const Point2& p : tile.points)
        if (grid.lookup(interior, p))
            interior_points.push_back(p);
    std::vector<Point2> samples;
    const std::size_t stride = interior_points.size() / max_samples + 1;
    for (std::size_t i = 0; i < interior_points.size(); i += stride)
        samples.push_back(interior_points[i]);
    report.samples = samples.size();
    if (samples.size() < min_samples) {
        report.inconclusive = true;
        return report;
    }

    const double p = static_cast<double>(poly.p);
    const double q = static_cast<double>(poly.q);
    auto a_inverse = [&](double x, double y) { return Point2{y - p * x / q, -x / q}; };

    for (std::size_t u = 0; u < gs.graph.vertices.size(); ++u) {
        const LatticeVec ell = gs.graph.vertices[u];
        std::vector<std::pair<LatticeVec, std::string>> pieces; // translation l' + j v, label
        for (const GifsMap& m : gs.maps)
            if (m.from == u) {
                const LatticeVec t = gs.graph.vertices[m.to] + LatticeVec{m.translation, 0};
                pieces.emplace_back(t, "T_" + to_string(gs.graph.vertices[m.to]) + "+" + std::to_string(m.translation) + "v");
            }

        OscItem contain;
        contain.kind = OscItem::Kind::Containment;
        contain.vertex = ell;
        std::size_t failures = 0;
        for (const auto& piece : pieces) {
            const LatticeVec t = piece.first;
            for (const Point2& y : samples) {
                Point2 z = a_inverse(y.x + static_cast<double>(t.gamma), y.y + static_cast<double>(t.delta));
                z.x -= static_cast<double>(ell.gamma);
                z.y -= static_cast<double>(ell.delta);
                if (!grid.lookup(hull, z))
                    ++failures;
            }
        }
        const std::size_t tested = pieces.size() * samples.size();
        contain.worst = tested ? static_cast<double>(failures) / static_cast<double>(tested) : 0.0;
        contain.pass = failures == 0;
        report.items.push_back(contain);

        OscItem disjoint;
        disjoint.kind = OscItem::Kind::Disjointness;
        disjoint.vertex = ell;
        disjoint.pass = true;
        std::map<LatticeVec, double> overlap_by_shift;
        std::vector<std::string> clashes;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            for (std::size_t j = i + 1; j < pieces.size(); ++j) {
                const LatticeVec d = pieces[i].first - pieces[j].first;
                auto it = overlap_by_shift.find(d);
                if (it == overlap_by_shift.end()) {
                    std::size_t hits = 0;
                    for (const Point2& y : samples)
                        if (grid.lookup(interior, {y.x + static_cast<double>(d.gamma), y.y + static_cast<double>(d.delta)}))
                            ++hits;
                    it = overlap_by_shift.emplace(d, static_cast<double>(hits) / static_cast<double>(samples.size())).first;
                }
                disjoint.worst = std::max(disjoint.worst, it->second);
                if (it->second > overlap_tolerance) {
                    disjoint.pass = false;
                    clashes.push_back(pieces[i].second + " ~ " + pieces[j].second);
                }
            }
        for (std::size_t k = 0; k < clashes.size(); ++k)
            disjoint.detail += (k ? ", " : "overlapping: ") + clashes[k];
        report.items.push_back(disjoint);
    }
    return report;
}

void render(const PointCloud& cloud, std::ostream& os, ImageFormat format, int width)
{
    int height = 0;
    const auto ink = rasterize(cloud, width, height);
    if (format == ImageFormat::Ppm) {
        os << "P6\n" << width << ' ' << height << "\n255\n";
        std::string row(static_cast<std::size_t>(width) * 3, '\0');
        for (const auto& line : ink) {
            for (std::size_t x = 0; x < line.size(); ++x) {
                const char c = line[x] ? '\0' : static_cast<char>(255);
                row[3 * x] = row[3 * x + 1] = row[3 * x + 2] = c;
            }
            os.write(row.data(), static_cast<std::streamsize>(row.size()));
        }
    } else {
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
           << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
        os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
        for (std::size_t y = 0; y < ink.size(); ++y)
            for (std::size_t x = 0; x < ink[y].size(); ++x)
                if (ink[y][x])
                    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"1\" height=\"1\" fill=\"black\"/>\n";
        os << "</svg>\n";
    }
    if (!os)
        throw Error(ErrorKind::IoError, "failed to write image");
}

void render(const PointCloud& cloud, const std::string& path, ImageFormat format, int width)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    render(cloud, out, format, width);
    out.close();
    if (!out)
        throw Error(ErrorKind::IoError, "failed to write '" + path + "'");
}

void write_points(std::ostream& os, const PointCloud& cloud)
{
    os << std::setprecision(17);
    for (const Point2& p : cloud.points)
        os << p.x << ' ' << p.y << '\n';
}

} // namespace tilelab
