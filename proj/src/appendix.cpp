// Fixture tables for the ten disk-like families: neighbor graphs, contact
// matrices and set equations, written out by hand with p, q replaced by |p|, |q|.

#include <algorithm>
#include <map>

#include "tilelab/error.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"

namespace tilelab {

namespace {

struct LabeledEdge {
    LatticeVec from;
    LatticeVec to;
    Int label;
};

struct Term {
    LatticeVec from;
    LatticeVec to;
    Int first;
    Int last;
};

struct FamilyTables {
    std::vector<LatticeVec> order;
    std::vector<LabeledEdge> edges;
    std::vector<std::vector<Int>> matrix;
    std::vector<Term> equations;
};

constexpr LatticeVec vec(Int gamma, Int delta) { return {gamma, delta}; }

FamilyTables plus_minus_q(const TilePoly& poly)
{
    const Int q = poly.abs_q();
    const LatticeVec v = vec(1, 0), av = vec(0, 1), avmv = vec(-1, 1), avpv = vec(1, 1);
    FamilyTables t;

    if (poly.family == Family::PlusQ) {
        t.order = {v, av, -v, -av, avmv, -avpv, -avmv, avpv};
        t.edges = {
            {v, avmv, 1},          {avmv, -avpv, -(q - 1)}, {-avpv, -avmv, q - 1}, {-avmv, avpv, q - 1},
            {avpv, avmv, -(q - 1)}, {v, av, 0},             {av, -v, -(q - 1)},    {-v, -avmv, -1},
            {-av, v, q - 1},        {-v, -av, 0},           {v, avpv, -1},         {-v, -avpv, 1},
        };
        t.matrix = {
            {0, q, 0, 0, q - 1, 0, 0, q - 1},
            {0, 0, 1, 0, 0, 0, 0, 0},
            {0, 0, 0, q, 0, q - 1, q - 1, 0},
            {1, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 0, 0, 1, 0},
            {0, 0, 0, 0, 0, 0, 0, 1},
            {0, 0, 0, 0, 1, 0, 0, 0},
        };
    } else {
        t.order = {v, av, -v, -av, avmv, -avmv, avpv, -avpv};
        t.edges = {
            {v, avmv, 1},         {v, av, 0},           {av, v, q - 1},        {v, avpv, -1},
            {avmv, -avmv, q - 1}, {-avmv, avmv, -(q - 1)}, {-v, -avmv, -1},    {-v, -av, 0},
            {-av, -v, -(q - 1)},  {-v, -avpv, 1},       {avpv, avpv, q - 1},   {-avpv, -avpv, -(q - 1)},
        };
        t.matrix = {
            {0, q, 0, 0, q - 1, 0, q - 1, 0},
            {1, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, q, 0, q - 1, 0, q - 1},
            {0, 0, 1, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 1, 0},
            {0, 0, 0, 0, 0, 0, 0, 1},
        };
    }

    // u1 = v, u2 = Av - v, u3 = Av, u4 = Av + v.
    const LatticeVec u1 = v, u2 = avmv, u3 = av, u4 = avpv;
    t.equations = {
        {u1, u2, 1, q - 1},  {u1, u3, 0, q - 1},  {u1, u4, 0, q - 2},
        {-u1, -u2, 0, q - 2}, {-u1, -u3, 0, q - 1}, {-u1, -u4, 1, q - 1},
    };
    if (poly.family == Family::PlusQ) {
        t.equations.insert(t.equations.end(), {
                                                  {u2, -u4, 0, 0},
                                                  {u3, -u1, 0, 0},
                                                  {u4, u2, 0, 0},
                                                  {-u2, u4, q - 1, q - 1},
                                                  {-u3, u1, q - 1, q - 1},
                                                  {-u4, -u2, q - 1, q - 1},
                                              });
    } else {
        t.equations.insert(t.equations.end(), {
                                                  {u2, -u2, q - 1, q - 1},
                                                  {u3, u1, q - 1, q - 1},
                                                  {u4, u4, q - 1, q - 1},
                                                  {-u2, u2, 0, 0},
                                                  {-u3, -u1, 0, 0},
                                                  {-u4, -u4, 0, 0},
                                              });
    }
    return t;
}

// Families with six neighbors, listed as v, u2, u3, -v, -u2, -u3.
FamilyTables six_neighbors(const TilePoly& poly)
{
    const Int p = poly.abs_p();
    const Int q = poly.abs_q();
    const LatticeVec u1 = vec(1, 0);
    LatticeVec u2, u3;
    FamilyTables t;

    switch (poly.family) {
    case Family::PlusXPlusQ:
        u2 = vec(0, 1);
        u3 = vec(1, 1);
        t.edges = {
            {u1, u2, 0}, {u2, -u3, -(q - 1)}, {u3, -u1, -(q - 1)}, {u1, u3, -1},
            {-u1, -u2, 0}, {-u2, u3, q - 1}, {-u3, u1, q - 1}, {-u1, -u3, 1},
        };
        t.matrix = {
            {0, q, q - 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, q, q - 1}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, 0, q - 1},  {u1, u3, 0, q - 2},  {u2, -u3, 0, 0},          {u3, -u1, 0, 0},
            {-u1, -u2, 0, q - 1}, {-u1, -u3, 1, q - 1}, {-u2, u3, q - 1, q - 1}, {-u3, u1, q - 1, q - 1},
        };
        break;
    case Family::MinusXPlusQ:
        u2 = vec(0, 1);
        u3 = vec(-1, 1);
        t.edges = {
            {u1, u2, 0}, {u2, u3, -(q - 1)}, {u3, -u1, -(q - 1)}, {u1, u3, 1},
            {-u1, -u2, 0}, {-u2, -u3, q - 1}, {-u3, u1, q - 1}, {-u1, -u3, -1},
        };
        t.matrix = {
            {0, q, q - 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, q, q - 1}, {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, 0, q - 1},  {u1, u3, 1, q - 1},  {u2, u3, 0, 0},            {u3, -u1, 0, 0},
            {-u1, -u2, 0, q - 1}, {-u1, -u3, 0, q - 2}, {-u2, -u3, q - 1, q - 1}, {-u3, u1, q - 1, q - 1},
        };
        break;
    case Family::PlusPXPlusQ:
        u2 = vec(p - 1, 1);
        u3 = vec(p, 1);
        t.edges = {
            {u1, u2, -(p - 1)}, {u2, -u3, -(q - p)}, {-u2, u3, q - p}, {u2, -u2, -(q - p + 1)},
            {-u2, u2, q - p + 1}, {u1, u3, -p}, {-u1, -u2, p - 1}, {-u1, -u3, p},
            {u3, -u1, -(q - 1)}, {-u3, u1, q - 1},
        };
        t.matrix = {
            {0, q - p + 1, q - p, 0, 0, 0}, {0, 0, 0, 0, p - 1, p}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, q - p + 1, q - p}, {0, p - 1, p, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, 0, q - p},      {u1, u3, 0, q - p - 1},  {u2, -u2, 0, p - 2},         {u2, -u3, 0, p - 1},
            {u3, -u1, 0, 0},         {-u1, -u2, p - 1, q - 1}, {-u1, -u3, p, q - 1},       {-u2, u2, q - p + 1, q - 1},
            {-u2, u3, q - p, q - 1}, {-u3, u1, q - 1, q - 1},
        };
        break;
    case Family::MinusPXPlusQ:
        u2 = vec(-(p - 1), 1);
        u3 = vec(-p, 1);
        t.edges = {
            {u1, u2, p - 1}, {u2, u2, -(q - p + 1)}, {u2, u3, -(q - p)}, {u1, u3, p},
            {-u1, -u2, -(p - 1)}, {-u2, -u2, q - p + 1}, {-u2, -u3, q - p}, {-u1, -u3, -p},
            {u3, -u1, -(q - 1)}, {-u3, u1, q - 1},
        };
        t.matrix = {
            {0, q - p + 1, q - p, 0, 0, 0}, {0, p - 1, p, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, q - p + 1, q - p}, {0, 0, 0, 0, p - 1, p}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, p - 1, q - 1},   {u1, u3, p, q - 1},       {u2, u2, 0, p - 2},          {u2, u3, 0, p - 1},
            {u3, -u1, 0, 0},          {-u1, -u2, 0, q - p},     {-u1, -u3, 0, q - p - 1},    {-u2, -u2, q - p + 1, q - 1},
            {-u2, -u3, q - p, q - 1}, {-u3, u1, q - 1, q - 1},
        };
        break;
    case Family::PlusPXMinusQ:
        u2 = vec(p, 1);
        u3 = vec(p + 1, 1);
        t.edges = {
            {u1, u2, -p}, {u2, u1, q - 1}, {-u3, -u2, -(q - p)}, {u3, u2, q - p},
            {u1, u3, -(p + 1)}, {-u1, -u2, p}, {-u2, -u1, -(q - 1)}, {u3, u3, q - p - 1},
            {-u3, -u3, -(q - p - 1)}, {-u1, -u3, p + 1},
        };
        t.matrix = {
            {0, q - p, q - p - 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, p, p + 1, 0, 0, 0},
            {0, 0, 0, 0, q - p, q - p - 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, p, p + 1},
        };
        t.equations = {
            {u1, u2, 0, q - p - 1},  {u1, u3, 0, q - p - 2},   {u2, u1, q - 1, q - 1}, {u3, u2, q - p, q - 1},
            {u3, u3, q - p - 1, q - 1}, {-u1, -u2, p, q - 1},  {-u1, -u3, p + 1, q - 1}, {-u2, -u1, 0, 0},
            {-u3, -u2, 0, p - 1},    {-u3, -u3, 0, p},
        };
        break;
    case Family::MinusPXMinusQ:
        u2 = vec(-p, 1);
        u3 = vec(-(p + 1), 1);
        t.edges = {
            {u1, u2, p}, {u2, u1, q - 1}, {-u3, u2, -(q - p)}, {u3, -u2, q - p},
            {u1, u3, p + 1}, {-u1, -u2, -p}, {-u2, -u1, -(q - 1)}, {u3, -u3, q - p - 1},
            {-u3, u3, -(q - p - 1)}, {-u1, -u3, -(p + 1)},
        };
        t.matrix = {
            {0, q - p, q - p - 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, p, p + 1},
            {0, 0, 0, 0, q - p, q - p - 1}, {0, 0, 0, 1, 0, 0}, {0, p, p + 1, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, p, q - 1},        {u1, u3, p + 1, q - 1},  {u2, u1, q - 1, q - 1}, {u3, -u2, q - p, q - 1},
            {u3, -u3, q - p - 1, q - 1}, {-u1, -u2, 0, q - p - 1}, {-u1, -u3, 0, q - p - 2}, {-u2, -u1, 0, 0},
            {-u3, u2, 0, p - 1},       {-u3, u3, 0, p},
        };
        break;
    case Family::PlusTwoXPlusTwo:
        u2 = vec(1, 1);
        u3 = vec(2, 1);
        t.edges = {
            {u1, u2, -1}, {u2, -u2, -1}, {u2, -u3, 0}, {-u1, -u2, 1},
            {-u2, u2, 1}, {-u2, u3, 0}, {-u3, u1, 1}, {u3, -u1, -1},
        };
        t.matrix = {
            {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 2}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0}, {0, 1, 2, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, 0, 0},  {u2, -u2, 0, 0}, {u2, -u3, 0, 1}, {u3, -u1, 0, 0},
            {-u1, -u2, 1, 1}, {-u2, u2, 1, 1}, {-u2, u3, 0, 1}, {-u3, u1, 1, 1},
        };
        break;
    case Family::MinusTwoXPlusTwo:
        u2 = vec(-1, 1);
        u3 = vec(-2, 1);
        t.edges = {
            {u1, u2, 1}, {u2, u2, -1}, {u2, u3, 0}, {u3, -u1, -1},
            {-u1, -u2, -1}, {-u2, -u3, 0}, {-u2, -u2, 1}, {-u3, u1, 1},
        };
        t.matrix = {
            {0, 1, 0, 0, 0, 0}, {0, 1, 2, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 2}, {1, 0, 0, 0, 0, 0},
        };
        t.equations = {
            {u1, u2, 1, 1},  {u2, u2, 0, 0},  {u2, u3, 0, 1},  {u3, -u1, 0, 0},
            {-u1, -u2, 0, 0}, {-u2, -u2, 1, 1}, {-u2, -u3, 0, 1}, {-u3, u1, 1, 1},
        };
        break;
    default:
        throw Error(ErrorKind::InvalidArgument, "family has eight neighbors");
    }
    t.order = {u1, u2, u3, -u1, -u2, -u3};
    return t;
}

FamilyTables tables_for(const TilePoly& poly)
{
    if (poly.family == Family::PlusQ || poly.family == Family::MinusQ)
        return plus_minus_q(poly);
    return six_neighbors(poly);
}

} // namespace

std::vector<LatticeVec> canonical_vertex_order(const TilePoly& poly) { return tables_for(poly).order; }

NeighborGraph appendix_neighbor_graph(const TilePoly& poly)
{
    const FamilyTables t = tables_for(poly);
    NeighborGraph g;
    g.vertices = t.order;
    std::map<LatticeVec, std::size_t> where;
    for (std::size_t i = 0; i < t.order.size(); ++i)
        where[t.order[i]] = i;
    for (const LabeledEdge& e : t.edges)
        g.edges.push_back({where.at(e.from), where.at(e.to), e.label});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

ContactMatrix appendix_contact_matrix(const TilePoly& poly)
{
    const FamilyTables t = tables_for(poly);
    ContactMatrix m = make_matrix(t.matrix);
    m.order = t.order;
    return m;
}

std::vector<SetEquationTerm> appendix_set_equations(const TilePoly& poly)
{
    std::vector<SetEquationTerm> out;
    for (const Term& t : tables_for(poly).equations)
        if (t.first <= t.last)
            out.push_back({t.from, t.to, {t.first, t.last}});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tilelab
