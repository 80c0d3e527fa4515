#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilelab/error.hpp"
#include "tilelab/geometry.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"
#include "tilelab/numbersys.hpp"
#include "tilelab/spectral.hpp"
#include "tilelab/verify.hpp"

namespace py = pybind11;
using namespace tilelab;

namespace {

py::tuple vec(LatticeVec ell) { return py::make_tuple(ell.gamma, ell.delta); }

LatticeVec to_vec(const std::pair<Int, Int>& t) { return {t.first, t.second}; }

std::vector<py::int_> coefficients(const IntPoly& f)
{
    std::vector<py::int_> out;
    for (const auto& c : f.coeffs)
        out.emplace_back(py::reinterpret_steal<py::int_>(PyLong_FromString(c.get_str().c_str(), nullptr, 10)));
    return out;
}

py::dict graph_dict(const NeighborGraph& g)
{
    py::list vertices, edges;
    for (auto v : g.vertices)
        vertices.append(vec(v));
    for (const Edge& e : g.edges)
        edges.append(py::make_tuple(e.from, e.to, e.label));
    py::dict d;
    d["vertices"] = vertices;
    d["edges"] = edges;
    return d;
}

py::dict matrix_dict(const ContactMatrix& m)
{
    py::list order, rows;
    for (auto v : m.order)
        order.append(vec(v));
    for (std::size_t i = 0; i < m.size(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.size(); ++j)
            row.append(m.at(i, j));
        rows.append(row);
    }
    py::dict d;
    d["order"] = order;
    d["rows"] = rows;
    return d;
}

ContactMatrix contact_of(Int p, Int q)
{
    const TilePoly poly = validate_poly(p, q);
    return contact_matrix(build_neighbor_graph(poly), poly);
}

} // namespace

PYBIND11_MODULE(_tilelab, m)
{
    m.doc() = "Boundaries of disk-like self-affine tiles with consecutive collinear digit sets";

    static py::exception<Error> error(m, "TilelabError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            py::setattr(exc, "kind", py::str(std::string(to_string(e.kind()))));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("classify", [](Int p, Int q) {
        const TilePoly poly = validate_poly(p, q);
        py::dict d;
        d["p"] = poly.p;
        d["q"] = poly.q;
        d["family"] = std::string(family_name(poly.family));
        d["family_number"] = family_number(poly.family);
        d["disk_like"] = poly.disk_like;
        d["expanding"] = poly.expanding;
        d["similarity"] = poly.similarity;
        d["number_system"] = is_number_system(poly);
        return d;
    }, py::arg("p"), py::arg("q"));

    m.def("is_disk_like", &is_disk_like, py::arg("p"), py::arg("q"));
    m.def("is_expanding", &is_expanding, py::arg("p"), py::arg("q"));

    m.def("neighbor_graph", [](Int p, Int q) { return graph_dict(build_neighbor_graph(validate_poly(p, q))); },
          py::arg("p"), py::arg("q"));
    m.def("appendix_neighbor_graph", [](Int p, Int q) { return graph_dict(appendix_neighbor_graph(validate_poly(p, q))); },
          py::arg("p"), py::arg("q"));

    m.def("graph_text", [](Int p, Int q, const std::string& format) {
        const TilePoly poly = validate_poly(p, q);
        std::ostringstream os;
        if (format == "dot")
            write_graph_dot(os, build_neighbor_graph(poly), poly);
        else if (format == "txt")
            write_graph_text(os, build_neighbor_graph(poly), poly);
        else
            throw Error(ErrorKind::InvalidArgument, "format must be txt or dot");
        return os.str();
    }, py::arg("p"), py::arg("q"), py::arg("format") = "txt");

    m.def("contact_matrix", [](Int p, Int q) { return matrix_dict(contact_of(p, q)); }, py::arg("p"), py::arg("q"));

    m.def("char_poly", [](Int p, Int q) { return coefficients(char_poly(contact_of(p, q))); }, py::arg("p"),
          py::arg("q"), "Coefficients of det(xI - M), lowest degree first.");

    m.def("spectral_radius", [](Int p, Int q) { return spectral_radius(contact_of(p, q)); }, py::arg("p"),
          py::arg("q"));

    m.def("dimension", [](Int p, Int q) {
        const DimensionReport r = dimension_report(validate_poly(p, q));
        py::dict d;
        d["vertices"] = r.vertex_count;
        d["char_poly"] = coefficients(r.char_poly);
        d["rho"] = r.rho;
        d["rho_power_iteration"] = r.rho_power;
        d["dim_generalized"] = r.dim_generalized;
        d["dim_similarity"] = r.dim_similarity ? py::object(py::float_(*r.dim_similarity)) : py::object(py::none());
        d["cubic_root"] = r.cubic_root;
        d["dim_cubic"] = r.dim_cubic;
        d["cubic_conjectural"] = r.cubic_conjectural;
        d["irreducible"] = r.irreducible;
        return d;
    }, py::arg("p"), py::arg("q"));

    m.def("represent", [](Int p, Int q, std::pair<Int, Int> ell) {
        return represent(to_vec(ell), validate_poly(p, q)).digits.digits;
    }, py::arg("p"), py::arg("q"), py::arg("ell"), "Digits of ell, coefficient of A^i v at index i.");

    m.def("eval_digits", [](Int p, Int q, const std::vector<Int>& digits) {
        return vec(eval_polynomial_word(RadixWord{digits}, validate_poly(p, q)));
    }, py::arg("p"), py::arg("q"), py::arg("digits"));

    m.def("origin_on_boundary", [](Int p, Int q) { return origin_on_boundary(build_neighbor_graph(validate_poly(p, q))); },
          py::arg("p"), py::arg("q"));

    m.def("sign_path", [](Int p, Int q, const std::string& sign) -> py::object {
        if (sign != "nonpositive" && sign != "nonnegative")
            throw Error(ErrorKind::InvalidArgument, "sign must be 'nonpositive' or 'nonnegative'");
        const auto path = find_sign_path(build_neighbor_graph(validate_poly(p, q)),
                                         sign == "nonpositive" ? Sign::NonPositive : Sign::NonNegative);
        if (!path)
            return py::none();
        return py::make_tuple(vec(path->start), path->labels.preperiod.digits, path->labels.period.digits);
    }, py::arg("p"), py::arg("q"), py::arg("sign"));

    m.def("tile_points", [](Int p, Int q, int depth) {
        std::vector<std::pair<double, double>> out;
        for (Point2 pt : tile_cloud(validate_poly(p, q), depth).points)
            out.emplace_back(pt.x, pt.y);
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("depth"));

    m.def("boundary_points", [](Int p, Int q, int depth) {
        const TilePoly poly = validate_poly(p, q);
        std::vector<std::pair<double, double>> out;
        for (Point2 pt : boundary_cloud(build_gifs(build_neighbor_graph(poly), poly), depth).points)
            out.emplace_back(pt.x, pt.y);
        return out;
    }, py::arg("p"), py::arg("q"), py::arg("depth"));

    m.def("verify", [](const std::string& scope) {
        const VerifyResult r = run_verify(scope);
        std::vector<std::tuple<std::string, std::string, bool, std::string>> cases;
        for (const auto& c : r.cases)
            cases.emplace_back(c.suite, c.name, c.pass, c.detail);
        return cases;
    }, py::arg("scope") = "all");
}
