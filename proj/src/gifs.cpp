#include "tilelab/gifs.hpp"

#include <algorithm>
#include <ostream>

#include "tilelab/error.hpp"

namespace tilelab {

IndexRange index_set(Int b1, Int q)
{
    const Int aq = q < 0 ? -q : q;
    if (aq < 2)
        throw Error(ErrorKind::DegenerateDeterminant, "|q| must be at least 2");
    if (b1 < -(aq - 1) || b1 > aq - 1)
        throw Error(ErrorKind::DigitOutOfRange, "difference digit " + std::to_string(b1) + " outside +-(|q|-1)");
    if (b1 >= 0)
        return {b1, aq - 1};
    return {0, aq - 1 + b1};
}

std::vector<Int> GifsSystem::translations(LatticeVec from, LatticeVec to) const
{
    std::vector<Int> out;
    const auto i = graph.index_of(from);
    const auto j = graph.index_of(to);
    if (!i || !j)
        return out;
    for (const GifsMap& m : maps)
        if (m.from == *i && m.to == *j)
            out.push_back(m.translation);
    std::sort(out.begin(), out.end());
    return out;
}

GifsSystem build_gifs(const NeighborGraph& g, const TilePoly& poly)
{
    GifsSystem gs;
    gs.poly = poly;
    gs.graph = g;
    for (const Edge& e : g.edges) {
        const IndexRange r = index_set(e.label, poly.q);
        for (Int j = r.first; j <= r.last; ++j)
            gs.maps.push_back({e.from, e.to, j, e.label});
    }
    std::sort(gs.maps.begin(), gs.maps.end());
    return gs;
}

std::vector<SetEquationTerm> set_equation_terms(const GifsSystem& gs)
{
    std::vector<SetEquationTerm> out;
    for (const Edge& e : gs.graph.edges)
        out.push_back({gs.graph.vertices[e.from], gs.graph.vertices[e.to], index_set(e.label, gs.poly.q)});
    std::sort(out.begin(), out.end());
    return out;
}

Int ContactMatrix::row_sum(std::size_t i) const
{
    Int s = 0;
    for (std::size_t j = 0; j < size(); ++j)
        s += at(i, j);
    return s;
}

ContactMatrix make_matrix(const std::vector<std::vector<Int>>& rows)
{
    ContactMatrix m;
    m.order.resize(rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size())
            throw Error(ErrorKind::InvalidArgument, "matrix is not square");
        m.entries.insert(m.entries.end(), row.begin(), row.end());
    }
    return m;
}

ContactMatrix contact_matrix(const NeighborGraph& g, const TilePoly& poly)
{
    ContactMatrix m;
    for (LatticeVec ell : canonical_vertex_order(poly))
        if (g.index_of(ell))
            m.order.push_back(ell);
    for (LatticeVec ell : g.vertices)
        if (std::find(m.order.begin(), m.order.end(), ell) == m.order.end())
            m.order.push_back(ell);

    const std::size_t n = m.order.size();
    std::vector<std::size_t> position(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        position[i] = static_cast<std::size_t>(std::find(m.order.begin(), m.order.end(), g.vertices[i]) - m.order.begin());
    m.entries.assign(n * n, 0);
    for (const Edge& e : g.edges)
        m.entries[position[e.from] * n + position[e.to]] += index_set(e.label, poly.q).size();
    return m;
}

bool is_irreducible(const ContactMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return false;
    auto reaches_all = [&](bool transpose) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                const Int entry = transpose ? m.at(w, u) : m.at(u, w);
                if (entry > 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    return reaches_all(false) && reaches_all(true);
}

void write_matrix_csv(std::ostream& os, const ContactMatrix& m)
{
    os << "vertex";
    for (LatticeVec ell : m.order)
        os << ',' << to_string(ell);
    os << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << to_string(m.order[i]);
        for (std::size_t j = 0; j < m.size(); ++j)
            os << ',' << m.at(i, j);
        os << '\n';
    }
}

void write_gifs_text(std::ostream& os, const GifsSystem& gs)
{
    os << "# from to j (A^-1(T_to + j v) in T_from)\n";
    for (const GifsMap& m : gs.maps)
        os << to_string(gs.graph.vertices[m.from]) << ' ' << to_string(gs.graph.vertices[m.to]) << ' ' << m.translation
           << '\n';
}

} // namespace tilelab
