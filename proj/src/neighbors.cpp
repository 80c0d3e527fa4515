#include "tilelab/neighbors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "tilelab/error.hpp"

namespace tilelab {

namespace {

// Dense occupancy grid over the candidate box.
class Box {
public:
    Box(Int gamma_radius, Int delta_radius) : gr_(gamma_radius), dr_(delta_radius), width_(2 * gamma_radius + 1)
    {
        constexpr Int max_cells = Int{1} << 26;
        if (gamma_radius < 1 || delta_radius < 1)
            throw Error(ErrorKind::InvalidArgument, "candidate box radii must be positive");
        if (width_ > max_cells / (2 * delta_radius + 1))
            throw Error(ErrorKind::InvalidArgument, "candidate box too large (reduce |p|, |q|)");
        alive_.assign(static_cast<std::size_t>(width_ * (2 * dr_ + 1)), 1);
        alive_[index({0, 0})] = 0;
    }

    bool contains(LatticeVec ell) const
    {
        return ell.gamma >= -gr_ && ell.gamma <= gr_ && ell.delta >= -dr_ && ell.delta <= dr_;
    }

    bool on_rim(LatticeVec ell) const
    {
        return ell.gamma == -gr_ || ell.gamma == gr_ || ell.delta == -dr_ || ell.delta == dr_;
    }

    std::size_t index(LatticeVec ell) const
    {
        return static_cast<std::size_t>((ell.delta + dr_) * width_ + (ell.gamma + gr_));
    }

    LatticeVec at(std::size_t i) const
    {
        const Int k = static_cast<Int>(i);
        return {k % width_ - gr_, k / width_ - dr_};
    }

    std::size_t size() const { return alive_.size(); }
    Int gamma_radius() const { return gr_; }
    Int delta_radius() const { return dr_; }

    std::vector<char>& alive() { return alive_; }
    const std::vector<char>& alive() const { return alive_; }

private:
    Int gr_;
    Int dr_;
    Int width_;
    std::vector<char> alive_;
};

// Number of alive cells in row delta with gamma in [lo, hi], from row prefix sums.
struct RowSums {
    explicit RowSums(const Box& box)
        : box_(box), width_(2 * box.gamma_radius() + 1), prefix_(box.size() + 2 * box.delta_radius() + 1, 0)
    {
        const Int rows = 2 * box.delta_radius() + 1;
        for (Int r = 0; r < rows; ++r) {
            const std::size_t base = static_cast<std::size_t>(r * (width_ + 1));
            for (Int c = 0; c < width_; ++c)
                prefix_[base + c + 1] = prefix_[base + c] + box.alive()[static_cast<std::size_t>(r * width_ + c)];
        }
    }

    Int count(Int delta, Int lo, Int hi) const
    {
        const Int gr = box_.gamma_radius();
        if (delta < -box_.delta_radius() || delta > box_.delta_radius())
            return 0;
        lo = std::max(lo, -gr);
        hi = std::min(hi, gr);
        if (lo > hi)
            return 0;
        const std::size_t base = static_cast<std::size_t>((delta + box_.delta_radius()) * (width_ + 1));
        return prefix_[base + (hi + gr) + 1] - prefix_[base + (lo + gr)];
    }

    const Box& box_;
    Int width_;
    std::vector<Int> prefix_;
};

NeighborGraph graph_from_vertices(std::vector<LatticeVec> vertices, const TilePoly& poly)
{
    NeighborGraph g;
    g.vertices = std::move(vertices);
    std::map<LatticeVec, std::size_t> where;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        where[g.vertices[i]] = i;
    const Int m = poly.max_difference_digit();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (Int b = -m; b <= m; ++b) {
            auto it = where.find(neighbor_step(g.vertices[i], b, poly));
            if (it != where.end())
                g.edges.push_back({i, it->second, b});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<std::vector<Edge>> adjacency(const NeighborGraph& g, const std::function<bool(Int)>& keep)
{
    std::vector<std::vector<Edge>> adj(g.vertices.size());
    for (const Edge& e : g.edges)
        if (keep(e.label))
            adj[e.from].push_back(e);
    for (auto& row : adj)
        std::sort(row.begin(), row.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.to, a.label) < std::tie(b.to, b.label);
        });
    return adj;
}

// Vertices lying on some cycle of adj (nontrivial SCC or self-loop), via
// "u reaches itself" checks; graphs have at most a handful of vertices.
std::vector<char> on_cycle(const std::vector<std::vector<Edge>>& adj)
{
    const std::size_t n = adj.size();
    std::vector<char> result(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack;
        for (const Edge& e : adj[s])
            if (!seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
        while (!stack.empty() && !seen[s]) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const Edge& e : adj[u])
                if (!seen[e.to]) {
                    seen[e.to] = 1;
                    stack.push_back(e.to);
                }
        }
        result[s] = seen[s];
    }
    return result;
}

// Shortest edge sequence from `from` to the first vertex satisfying `goal`,
// exploring edges in (to, label) order. With allow_empty false the path has
// at least one edge, which is how shortest cycles are found.
std::optional<std::vector<Edge>> bfs_path(const std::vector<std::vector<Edge>>& adj, std::size_t from,
                                          const std::function<bool(std::size_t)>& goal, bool allow_empty)
{
    if (allow_empty && goal(from))
        return std::vector<Edge>{};
    const std::size_t n = adj.size();
    std::vector<std::optional<Edge>> parent(n);
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (const Edge& e : adj[u]) {
            if (goal(e.to)) {
                std::vector<Edge> path{e};
                std::size_t cur = u;
                while (cur != from) {
                    path.push_back(*parent[cur]);
                    cur = parent[cur]->from;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (!seen[e.to]) {
                seen[e.to] = 1;
                parent[e.to] = e;
                queue.push_back(e.to);
            }
        }
    }
    return std::nullopt;
}

RadixWord labels_of(const std::vector<Edge>& path)
{
    RadixWord w;
    for (const Edge& e : path)
        w.digits.push_back(e.label);
    return w;
}

bool sign_ok(Int label, Sign sign) { return sign == Sign::NonPositive ? label <= 0 : label >= 0; }

// Vertices reachable from `from` by reading `word`.
std::set<std::size_t> read_word(const NeighborGraph& g, std::set<std::size_t> from, const RadixWord& word)
{
    for (Int digit : word.digits) {
        std::set<std::size_t> next;
        for (const Edge& e : g.edges)
            if (e.label == digit && from.count(e.from))
                next.insert(e.to);
        from = std::move(next);
        if (from.empty())
            break;
    }
    return from;
}

std::size_t require_vertex(const NeighborGraph& g, LatticeVec ell)
{
    auto idx = g.index_of(ell);
    if (!idx)
        throw Error(ErrorKind::UnknownVertex, to_string(ell) + " is not a vertex of the neighbor graph");
    return *idx;
}

} // namespace

std::optional<std::size_t> NeighborGraph::index_of(LatticeVec ell) const
{
    auto it = std::find(vertices.begin(), vertices.end(), ell);
    if (it == vertices.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Edge> NeighborGraph::out_edges(std::size_t i) const
{
    std::vector<Edge> out;
    for (const Edge& e : edges)
        if (e.from == i)
            out.push_back(e);
    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.to, a.label) < std::tie(b.to, b.label); });
    return out;
}

NeighborGraph build_neighbor_graph_in_box(const TilePoly& poly, Int gamma_radius, Int delta_radius)
{
    Box box(gamma_radius, delta_radius);
    auto& alive = box.alive();
    const Int m = poly.max_difference_digit();

    // Successors of (g, d) are (-q d - b, g - p d) for |b| <= m: one row, one gamma interval.
    const RowSums sums(box);
    std::vector<Int> live_succ(box.size(), 0);
    std::deque<std::size_t> dead;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (!alive[i])
            continue;
        const LatticeVec ell = box.at(i);
        const Int centre = -poly.q * ell.delta;
        live_succ[i] = sums.count(ell.gamma - poly.p * ell.delta, centre - m, centre + m);
        if (live_succ[i] == 0)
            dead.push_back(i);
    }

    while (!dead.empty()) {
        const std::size_t i = dead.front();
        dead.pop_front();
        if (!alive[i])
            continue;
        alive[i] = 0;
        // Predecessors (g, d) of l' = (g', d'): g = d' + p d and b = -q d - g' in range.
        const LatticeVec target = box.at(i);
        for (Int d = -delta_radius; d <= delta_radius; ++d) {
            const Int b = -poly.q * d - target.gamma;
            if (b < -m || b > m)
                continue;
            const LatticeVec pred{target.delta + poly.p * d, d};
            if (!box.contains(pred))
                continue;
            const std::size_t j = box.index(pred);
            if (alive[j] && --live_succ[j] == 0)
                dead.push_back(j);
        }
    }

    std::vector<LatticeVec> vertices;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (!alive[i])
            continue;
        const LatticeVec ell = box.at(i);
        if (box.on_rim(ell))
            throw Error(ErrorKind::BoxExhausted, "surviving candidate " + to_string(ell) + " touches the search box");
        vertices.push_back(ell);
    }
    std::sort(vertices.begin(), vertices.end(),
              [](LatticeVec a, LatticeVec b) { return std::tie(a.delta, a.gamma) < std::tie(b.delta, b.gamma); });
    return graph_from_vertices(std::move(vertices), poly);
}

NeighborGraph build_neighbor_graph(const TilePoly& poly)
{
    const Int gr = poly.abs_p() + poly.abs_q() + 1;
    NeighborGraph raw;
    try {
        raw = build_neighbor_graph_in_box(poly, gr, 3);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoxExhausted)
            throw;
        raw = build_neighbor_graph_in_box(poly, 2 * gr, 6);
    }

    std::vector<LatticeVec> ordered;
    for (LatticeVec ell : canonical_vertex_order(poly))
        if (raw.index_of(ell))
            ordered.push_back(ell);
    for (LatticeVec ell : raw.vertices)
        if (std::find(ordered.begin(), ordered.end(), ell) == ordered.end())
            ordered.push_back(ell);
    return graph_from_vertices(std::move(ordered), poly);
}

bool same_labeled_graph(const NeighborGraph& a, const NeighborGraph& b)
{
    using Triple = std::tuple<LatticeVec, Int, LatticeVec>;
    auto triples = [](const NeighborGraph& g) {
        std::set<Triple> out;
        for (const Edge& e : g.edges)
            out.emplace(g.vertices[e.from], e.label, g.vertices[e.to]);
        return out;
    };
    const std::set<LatticeVec> va(a.vertices.begin(), a.vertices.end());
    const std::set<LatticeVec> vb(b.vertices.begin(), b.vertices.end());
    return va == vb && va.size() == a.vertices.size() && vb.size() == b.vertices.size() && triples(a) == triples(b) &&
           a.edges.size() == b.edges.size();
}

bool is_consistent(const NeighborGraph& g, const TilePoly& poly)
{
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].is_zero() || !g.index_of(-g.vertices[i]) || g.out_edges(i).empty())
            return false;
    }
    for (const Edge& e : g.edges) {
        if (e.from >= g.vertices.size() || e.to >= g.vertices.size())
            return false;
        if (e.label < -poly.max_difference_digit() || e.label > poly.max_difference_digit())
            return false;
        if (neighbor_step(g.vertices[e.from], e.label, poly) != g.vertices[e.to])
            return false;
    }
    return true;
}

std::optional<SignPath> find_sign_path(const NeighborGraph& g, Sign sign)
{
    const auto adj = adjacency(g, [sign](Int label) { return sign_ok(label, sign); });
    const auto cyclic = on_cycle(adj);
    auto is_cyclic = [&](std::size_t u) { return cyclic[u] != 0; };

    for (std::size_t s = 0; s < g.vertices.size(); ++s) {
        auto lead = bfs_path(adj, s, is_cyclic, true);
        if (!lead)
            continue;
        const std::size_t entry = lead->empty() ? s : lead->back().to;
        auto loop = bfs_path(adj, entry, [entry](std::size_t u) { return u == entry; }, false);
        SignPath sp;
        sp.start = g.vertices[s];
        sp.sign = sign;
        sp.labels.preperiod = labels_of(*lead);
        sp.labels.period = labels_of(*loop);
        return sp;
    }
    return std::nullopt;
}

bool origin_on_boundary(const NeighborGraph& g)
{
    return find_sign_path(g, Sign::NonPositive).has_value() || find_sign_path(g, Sign::NonNegative).has_value();
}

bool accepts(const NeighborGraph& g, LatticeVec start, const RadixWord& word)
{
    const std::size_t s = require_vertex(g, start);
    return !read_word(g, {s}, word).empty();
}

bool accepts_infinite(const NeighborGraph& g, LatticeVec start, const PeriodicWord& labels)
{
    const std::size_t s = require_vertex(g, start);
    if (labels.period.empty())
        throw Error(ErrorKind::InvalidArgument, "periodic label stream needs a nonempty period");
    const auto after_pre = read_word(g, {s}, labels.preperiod);

    // Greatest set of vertices from which the period can be read forever.
    std::vector<std::set<std::size_t>> step(g.vertices.size());
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
        step[u] = read_word(g, {u}, labels.period);
    std::vector<char> live(g.vertices.size(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t u = 0; u < g.vertices.size(); ++u) {
            if (!live[u])
                continue;
            const bool ok = std::any_of(step[u].begin(), step[u].end(), [&](std::size_t w) { return live[w] != 0; });
            if (!ok) {
                live[u] = 0;
                changed = true;
            }
        }
    }
    return std::any_of(after_pre.begin(), after_pre.end(), [&](std::size_t u) { return live[u] != 0; });
}

PeriodicWord canonical_digits(const PeriodicWord& labels)
{
    PeriodicWord out = labels;
    for (Int& d : out.preperiod.digits)
        d = std::max<Int>(d, 0);
    for (Int& d : out.period.digits)
        d = std::max<Int>(d, 0);
    return out;
}

PeriodicWord complementary_digits(const PeriodicWord& labels)
{
    PeriodicWord out = labels;
    for (Int& d : out.preperiod.digits)
        d = std::max<Int>(-d, 0);
    for (Int& d : out.period.digits)
        d = std::max<Int>(-d, 0);
    return out;
}

RationalVec boundary_point_from_path(const SignPath& path, const NeighborGraph& g, const TilePoly& poly)
{
    require_vertex(g, path.start);
    if (path.labels.period.empty())
        throw Error(ErrorKind::InvalidPath, "label stream has an empty period");
    auto respects = [&](const RadixWord& w) {
        return std::all_of(w.digits.begin(), w.digits.end(), [&](Int d) { return sign_ok(d, path.sign); });
    };
    if (!respects(path.labels.preperiod) || !respects(path.labels.period))
        throw Error(ErrorKind::InvalidPath, "label stream violates its sign constraint");
    if (!accepts_infinite(g, path.start, path.labels))
        throw Error(ErrorKind::InvalidPath,
                    to_string(path.labels) + " does not label an infinite path from " + to_string(path.start));
    return eval_radix_periodic(canonical_digits(path.labels), poly);
}

RationalVec boundary_point_from_path(const SignPath& path, const TilePoly& poly)
{
    return boundary_point_from_path(path, build_neighbor_graph(poly), poly);
}

void write_graph_text(std::ostream& os, const NeighborGraph& g, const TilePoly& poly)
{
    os << poly.p << ' ' << poly.q << ' ' << family_name(poly.family) << ' ' << g.vertices.size() << '\n';
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << i << ' ' << g.vertices[i].gamma << ' ' << g.vertices[i].delta << '\n';
    for (const Edge& e : g.edges)
        os << e.from << ' ' << e.to << ' ' << e.label << '\n';
}

void write_graph_dot(std::ostream& os, const NeighborGraph& g, const TilePoly& poly)
{
    os << "digraph neighbors {\n";
    os << "  label=\"" << family_name(poly.family) << " p=" << poly.p << " q=" << poly.q << "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  n" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
    for (const Edge& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
}

} // namespace tilelab
