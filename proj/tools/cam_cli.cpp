#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cam/critical.hpp"
#include "cam/eliasson.hpp"
#include "cam/errors.hpp"
#include "cam/geometry.hpp"
#include "cam/invariants.hpp"
#include "cam/io.hpp"
#include "cam/parallel.hpp"
#include "cam/polygon.hpp"
#include "cam/quantum.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    double r1 = 0.0;
    double r2 = 0.0;
    double t = 0.5;
    int k = 1;
    int samples = 64;
    int threads = 1;
    std::string out_path;
    std::vector<int> k_list;
    std::vector<double> r2_list;
};

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw cam::DomainError("cannot open output file: " + out_path);
    file << payload;
}

std::string kind_name(cam::CriticalKind kind) {
    switch (kind) {
        case cam::CriticalKind::FocusFocus: return "focus_focus";
        case cam::CriticalKind::EllipticElliptic: return "elliptic_elliptic";
        default: return "degenerate";
    }
}

std::string transition_string(const Options& opt, int sign) {
    // t∓ = r2 / (2 r2 + r1 ± 2 sqrt(r1 r2)) with the numbers substituted.
    return cam::format_g17(opt.r2) + "/(" + cam::format_g17(2.0 * opt.r2 + opt.r1) +
           (sign > 0 ? " + " : " - ") + "2*sqrt(" +
           cam::format_g17(opt.r1 * opt.r2) + "))";
}

int run_classify(const Options& opt) {
    const cam::SystemParams params(opt.r1, opt.r2, opt.t);
    const cam::TRange range = cam::critical_t_range(params);

    ordered_json doc;
    doc["r1"] = params.r1;
    doc["r2"] = params.r2;
    doc["t"] = params.t;
    doc["t_minus"] = {{"closed_form", transition_string(opt, +1)},
                      {"value", range.t_minus}};
    doc["t_plus"] = {{"closed_form", transition_string(opt, -1)},
                     {"value", range.t_plus}};

    int focus_count = 0;
    ordered_json points = ordered_json::array();
    for (const auto& fp : cam::fixed_points(params)) {
        const cam::WilliamsonVerdict verdict =
            cam::williamson_classify(params, fp.index);
        if (verdict.kind == cam::CriticalKind::FocusFocus) ++focus_count;
        ordered_json entry;
        entry["label"] = fp.label;
        entry["point"] = {fp.point.x1, fp.point.y1, fp.point.z1,
                          fp.point.x2, fp.point.y2, fp.point.z2};
        entry["value"] = {{"j", fp.value.j}, {"h", fp.value.h}};
        entry["kind"] = kind_name(verdict.kind);
        entry["witness_combo"] = verdict.witness_combo;
        ordered_json spectrum = ordered_json::array();
        for (const auto& ev : verdict.eigenvalues)
            spectrum.push_back({ev.real(), ev.imag()});
        entry["eigenvalues"] = spectrum;
        entry["analytic_path"] = verdict.analytic_path;
        points.push_back(entry);
    }
    doc["fixed_points"] = points;

    const cam::WilliamsonVerdict center = cam::williamson_classify(params, 0);
    doc["regime"] = center.kind == cam::CriticalKind::FocusFocus ? "semitoric"
                    : center.kind == cam::CriticalKind::Degenerate
                        ? "degenerate_transition"
                        : "toric_type";
    doc["focus_focus_count"] = focus_count;

    emit(doc.dump(2) + "\n", opt.out_path);
    return 0;
}

int run_boundary(const Options& opt) {
    const cam::SystemParams params(opt.r1, opt.r2, opt.t);
    const std::vector<cam::JH> curve = cam::boundary_curve(params, opt.samples);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(curve.size());
    for (const auto& p : curve)
        rows.push_back({cam::format_g17(p.j), cam::format_g17(p.h)});
    std::ostringstream os;
    cam::write_csv(os, {"J", "H"}, rows);
    emit(os.str(), opt.out_path);
    return 0;
}

int run_invariants(const Options& opt) {
    const cam::SystemParams params(opt.r1, opt.r2, opt.t);

    int focus_count = 0;
    for (int i = 0; i < 4; ++i)
        if (cam::williamson_classify(params, i).kind ==
            cam::CriticalKind::FocusFocus)
            ++focus_count;

    const cam::EliassonFrame frame = cam::eliasson_frame(params);

    ordered_json doc;
    doc["r1"] = params.r1;
    doc["r2"] = params.r2;
    doc["t"] = params.t;
    doc["focus_focus_count"] = focus_count;
    doc["height_closed"] = cam::height_closed_form(params);
    doc["height_quadrature"] = cam::height_quadrature(params);
    doc["a1"] = cam::taylor_a1(params, frame);
    doc["a2"] = cam::taylor_a2(params, frame);

    ordered_json polys = ordered_json::array();
    for (const auto& wp : cam::polygons(params)) {
        ordered_json entry;
        ordered_json vertices = ordered_json::array();
        for (const auto& v : wp.vertices)
            vertices.push_back({v.x.str(), v.y.str()});
        entry["vertices"] = vertices;
        entry["cut_abscissa"] = wp.cut_abscissa.str();
        entry["eps"] = wp.eps;
        entry["twist_offset"] = wp.twist_offset;
        polys.push_back(entry);
    }
    doc["polygons"] = polys;

    emit(doc.dump(2) + "\n", opt.out_path);
    return 0;
}

int run_spectrum(const Options& opt) {
    const cam::SystemParams params(opt.r1, opt.r2, opt.t);
    const cam::QuantumParams qp(params, opt.k);
    const auto lambdas = cam::j_eigenvalues(qp);

    std::vector<std::vector<double>> slots(lambdas.size());
    cam::parallel_for(lambdas.size(), opt.threads, [&](std::size_t j) {
        slots[j] =
            cam::eigenvalues(cam::assemble_block(qp, static_cast<int>(j)).matrix);
    });

    std::vector<std::vector<std::string>> rows;
    const std::string k_str = std::to_string(opt.k);
    for (std::size_t j = 0; j < slots.size(); ++j)
        for (double lh : slots[j])
            rows.push_back({k_str, std::to_string(j),
                            cam::format_g17(lambdas[j]), cam::format_g17(lh)});
    std::ostringstream os;
    cam::write_csv(os, {"k", "j", "lambda_J", "lambda_H"}, rows);
    emit(os.str(), opt.out_path);
    return 0;
}

int run_gap_sweep(const Options& opt) {
    const cam::SystemParams params(opt.r1, opt.r2, opt.t);
    if (opt.k_list.empty()) throw cam::DomainError("gap-sweep: empty k list");
    const cam::EliassonFrame frame = cam::eliasson_frame(params);
    const double a2 = cam::taylor_a2(params, frame);

    std::vector<std::array<double, 2>> slots(opt.k_list.size());
    cam::parallel_for(opt.k_list.size(), opt.threads, [&](std::size_t i) {
        const cam::QuantumParams qp(params, opt.k_list[i]);
        slots[i] = {cam::min_gap_kernel(qp),
                    cam::gap_law_prediction(qp, a2, frame)};
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < slots.size(); ++i)
        rows.push_back({std::to_string(opt.k_list[i]),
                        cam::format_g17(slots[i][0]),
                        cam::format_g17(slots[i][1])});
    std::ostringstream os;
    cam::write_csv(os, {"k", "min_gap_scaled", "prediction"}, rows);
    emit(os.str(), opt.out_path);
    return 0;
}

int run_weyl_sweep(const Options& opt) {
    if (opt.r2_list.empty()) throw cam::DomainError("weyl-sweep: empty r2 list");

    std::vector<std::array<double, 2>> slots(opt.r2_list.size());
    cam::parallel_for(opt.r2_list.size(), opt.threads, [&](std::size_t i) {
        const cam::SystemParams params(opt.r1, opt.r2_list[i], opt.t);
        const cam::QuantumParams qp(params, opt.k);
        slots[i] = {cam::weyl_height(qp), cam::height_closed_form(params)};
    });

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < slots.size(); ++i)
        rows.push_back({cam::format_g17(opt.r2_list[i]),
                        cam::format_g17(slots[i][0]),
                        cam::format_g17(slots[i][1])});
    std::ostringstream os;
    cam::write_csv(os, {"r2", "weyl_estimate", "h_closed"}, rows);
    emit(os.str(), opt.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled angular momenta on S2 x S2: classification, "
                 "invariants and joint spectra"};
    app.require_subcommand(1);

    Options opt;

    const auto add_system = [&](CLI::App* cmd, bool need_t = true) {
        cmd->add_option("--r1", opt.r1, "First radius (0 < r1 < r2)")->required();
        cmd->add_option("--r2", opt.r2, "Second radius")->required();
        if (need_t)
            cmd->add_option("--t", opt.t, "Coupling in [0,1]")->required();
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "Output file (default stdout)");
    };
    const auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", opt.threads, "Worker threads")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "Fixed point types, transition couplings and regime");
    add_system(classify);
    add_out(classify);

    CLI::App* boundary = app.add_subcommand(
        "boundary", "Closed boundary polyline of the momentum-map image");
    add_system(boundary);
    boundary->add_option("--samples", opt.samples, "Nodes per boundary arc")
        ->check(CLI::Range(2, 100000));
    add_out(boundary);

    CLI::App* invariants = app.add_subcommand(
        "invariants", "Semitoric invariants at t=1/2 (height, Taylor, polygons)");
    add_system(invariants);
    add_out(invariants);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Joint spectrum of the quantized pair");
    add_system(spectrum);
    spectrum->add_option("--k", opt.k, "Semiclassical parameter")->required();
    add_threads(spectrum);
    add_out(spectrum);

    CLI::App* gap_sweep = app.add_subcommand(
        "gap-sweep", "Scaled kernel gap vs the semiclassical prediction");
    add_system(gap_sweep);
    gap_sweep->add_option("--k-list,--k", opt.k_list, "Comma-separated k values")
        ->required()
        ->delimiter(',');
    add_threads(gap_sweep);
    add_out(gap_sweep);

    CLI::App* weyl_sweep = app.add_subcommand(
        "weyl-sweep", "Weyl estimate of the height invariant over r2 values");
    weyl_sweep->add_option("--r1", opt.r1, "First radius")->required();
    weyl_sweep->add_option("--t", opt.t, "Coupling in [0,1]")->required();
    weyl_sweep->add_option("--r2-list", opt.r2_list, "Comma-separated r2 values")
        ->required()
        ->delimiter(',');
    weyl_sweep->add_option("--k", opt.k, "Semiclassical parameter")->required();
    add_threads(weyl_sweep);
    add_out(weyl_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (boundary->parsed()) return run_boundary(opt);
        if (invariants->parsed()) return run_invariants(opt);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (gap_sweep->parsed()) return run_gap_sweep(opt);
        return run_weyl_sweep(opt);
    } catch (const cam::DomainError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 2;
    } catch (const cam::ConvergenceError& e) {
        std::cerr << "error: convergence: " << e.what() << "\n";
        return 3;
    } catch (const cam::UnsupportedError& e) {
        std::cerr << "error: unsupported: " << e.what() << "\n";
        return 4;
    }
}
