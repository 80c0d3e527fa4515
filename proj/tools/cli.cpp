#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tilelab/error.hpp"
#include "tilelab/geometry.hpp"
#include "tilelab/gifs.hpp"
#include "tilelab/neighbors.hpp"
#include "tilelab/numbersys.hpp"
#include "tilelab/spectral.hpp"
#include "tilelab/verify.hpp"

namespace tilelab::cli {

namespace {

struct RunConfig {
    Int p = 0;
    Int q = 0;
    int depth = 10;
    int width = 512;
    std::string format;
    std::string target = "tile";
    std::string out;
    std::string scope = "all";
    bool json = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string poly_text(const TilePoly& poly)
{
    std::ostringstream os;
    os << "x^2";
    if (poly.p != 0)
        os << (poly.p < 0 ? " - " : " + ") << (poly.abs_p() == 1 ? "" : std::to_string(poly.abs_p())) << 'x';
    os << (poly.q < 0 ? " - " : " + ") << poly.abs_q();
    return os.str();
}

// Runs write into the --out file, or into out when no path was given.
template <class Write>
void emit(const RunConfig& cfg, std::ostream& out, Write write)
{
    if (cfg.out.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::IoError, "cannot open " + cfg.out);
    write(file);
    if (!file)
        throw Error(ErrorKind::IoError, "write failed: " + cfg.out);
}

void cmd_analyze(const RunConfig& cfg, std::ostream& out)
{
    const TilePoly poly = validate_poly(cfg.p, cfg.q);
    const DimensionReport r = dimension_report(poly);
    if (cfg.json) {
        write_report_json(out, r);
        return;
    }
    const NumberSystemWitnesses w = number_system_witnesses(poly);

    out << std::setprecision(12);
    out << "polynomial: " << poly_text(poly) << "  (p=" << poly.p << ", q=" << poly.q << ")\n";
    out << "family: " << family_number(poly.family) << " (" << family_name(poly.family) << ")\n";
    out << "disk-like: " << yes_no(poly.disk_like) << '\n';
    out << "similarity: " << yes_no(poly.similarity) << '\n';
    out << "number system: " << yes_no(w.arithmetic) << '\n';
    out << "  p >= -1 and q >= 2: " << yes_no(w.arithmetic) << '\n';
    out << "  origin interior to T: " << yes_no(w.origin_interior) << '\n';
    out << "  division algorithm terminates on |l|_inf <= 10: " << yes_no(w.division_terminates) << '\n';
    out << "  every neighbor expands with top digit 1: " << yes_no(w.neighbor_expansions) << '\n';
    out << "neighbors: " << r.vertex_count << '\n';
    out << "irreducible: " << yes_no(r.irreducible) << '\n';
    out << "char_poly: " << to_string(r.char_poly) << '\n';
    out << "rho: " << r.rho << '\n';
    out << "rho (power iteration): " << r.rho_power << '\n';
    out << "cubic: " << to_string(r.cubic) << ", largest root " << r.cubic_root
        << (r.cubic_conjectural ? " (conjectural here)" : "") << '\n';
    if (poly.p == 0)
        out << "square tile, dim = 1\n";
    out << "dim_generalized = 2 ln rho / ln |q| = " << r.dim_generalized << '\n';
    if (r.dim_similarity)
        out << "dim = " << *r.dim_similarity << '\n';
}

void cmd_graph(const RunConfig& cfg, std::ostream& out)
{
    const TilePoly poly = validate_poly(cfg.p, cfg.q);
    const NeighborGraph g = build_neighbor_graph(poly);
    const std::string fmt = cfg.format.empty() ? "txt" : cfg.format;
    if (fmt == "csv")
        throw Error(ErrorKind::InvalidArgument, "graph supports --format txt or dot");
    emit(cfg, out, [&](std::ostream& os) {
        if (fmt == "dot")
            write_graph_dot(os, g, poly);
        else
            write_graph_text(os, g, poly);
    });
}

void cmd_matrix(const RunConfig& cfg, std::ostream& out)
{
    const TilePoly poly = validate_poly(cfg.p, cfg.q);
    if (!cfg.format.empty() && cfg.format != "csv")
        throw Error(ErrorKind::InvalidArgument, "matrix supports --format csv");
    const ContactMatrix m = contact_matrix(build_neighbor_graph(poly), poly);
    emit(cfg, out, [&](std::ostream& os) { write_matrix_csv(os, m); });
}

void cmd_gifs(const RunConfig& cfg, std::ostream& out)
{
    const TilePoly poly = validate_poly(cfg.p, cfg.q);
    if (!cfg.format.empty() && cfg.format != "txt")
        throw Error(ErrorKind::InvalidArgument, "gifs supports --format txt");
    const GifsSystem gs = build_gifs(build_neighbor_graph(poly), poly);
    emit(cfg, out, [&](std::ostream& os) { write_gifs_text(os, gs); });
}

void cmd_render(const RunConfig& cfg, std::ostream& out)
{
    const TilePoly poly = validate_poly(cfg.p, cfg.q);
    if (cfg.width < 64 || cfg.width > 4096)
        throw Error(ErrorKind::InvalidArgument, "--width must be in 64..4096");
    PointCloud cloud;
    if (cfg.target == "tile") {
        cloud = tile_cloud(poly, cfg.depth);
    } else {
        const GifsSystem gs = build_gifs(build_neighbor_graph(poly), poly);
        cloud = boundary_cloud(gs, cfg.depth);
    }
    std::string path = cfg.out;
    if (path.empty())
        path = cfg.target + "_p" + std::to_string(poly.p) + "_q" + std::to_string(poly.q) + ".ppm";
    const bool svg = path.size() >= 4 && path.compare(path.size() - 4, 4, ".svg") == 0;
    render(cloud, path, svg ? ImageFormat::Svg : ImageFormat::Ppm, cfg.width);
    out << "wrote " << path << " (" << cloud.size() << " points, depth " << cfg.depth << ")\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const VerifyResult result = run_verify(cfg.scope);
    write_verify_report(out, result);
    return result.all_pass() ? 0 : 1;
}

void add_poly_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--p", cfg.p, "coefficient p of x^2 + px + q")->required();
    sub->add_option("--q", cfg.q, "coefficient q of x^2 + px + q")->required();
}

void add_out_option(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--out", cfg.out, "output path (default: standard output)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Boundaries of disk-like self-affine tiles with consecutive collinear digit sets", "tilelab"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "family, number-system witnesses and dimension report");
    add_poly_options(analyze, cfg);
    analyze->add_flag("--json", cfg.json, "print the dimension report as JSON");

    auto* graph = app.add_subcommand("graph", "neighbor graph as text or dot");
    add_poly_options(graph, cfg);
    graph->add_option("--format", cfg.format, "txt or dot")->check(CLI::IsMember({"csv", "dot", "txt"}));
    add_out_option(graph, cfg);

    auto* matrix = app.add_subcommand("matrix", "contact matrix as CSV");
    add_poly_options(matrix, cfg);
    matrix->add_option("--format", cfg.format, "csv")->check(CLI::IsMember({"csv", "dot", "txt"}));
    add_out_option(matrix, cfg);

    auto* gifs = app.add_subcommand("gifs", "graph-directed IFS maps");
    add_poly_options(gifs, cfg);
    gifs->add_option("--format", cfg.format, "txt")->check(CLI::IsMember({"csv", "dot", "txt"}));
    add_out_option(gifs, cfg);

    auto* render_cmd = app.add_subcommand("render", "render the tile or its boundary as PPM or SVG");
    add_poly_options(render_cmd, cfg);
    render_cmd->add_option("--target", cfg.target, "tile or boundary")->check(CLI::IsMember({"tile", "boundary"}));
    render_cmd->add_option("--depth", cfg.depth, "iteration depth")->capture_default_str();
    render_cmd->add_option("--width", cfg.width, "image width in pixels")->capture_default_str();
    render_cmd->add_option("--out", cfg.out, "output .ppm or .svg path");

    auto* verify = app.add_subcommand("verify", "run fixture and oracle suites");
    verify->add_option("scope", cfg.scope, "appendixA, appendixB, appendixC, theorem26, theorem39 or all")
        ->check(CLI::IsMember(verify_scopes()));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*analyze)
            cmd_analyze(cfg, out);
        else if (*graph)
            cmd_graph(cfg, out);
        else if (*matrix)
            cmd_matrix(cfg, out);
        else if (*gifs)
            cmd_gifs(cfg, out);
        else if (*render_cmd)
            cmd_render(cfg, out);
        else if (*verify)
            return cmd_verify(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace tilelab::cli
