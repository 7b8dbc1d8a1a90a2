#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "inconic/conic.hpp"
#include "inconic/figures.hpp"
#include "inconic/scene.hpp"
#include "inconic/verify.hpp"

namespace {

using namespace inconic;

constexpr int kExitVerified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::string cartesian_str(const TriangleRef& t, const HPoint& p) {
    return t.to_cartesian(p).str();
}

int cmd_inconic(const TriangleRef& t, const HPoint& p) {
    Conic inc = inconic_from_perspector(p);
    auto contacts = inconic_contacts(inc);
    ConicClass cls = classify(inc);

    std::cout << "triangle: " << t.str() << "\n"
              << "squared sides: a2=" << to_string(t.a2()) << " b2=" << to_string(t.b2())
              << " c2=" << to_string(t.c2()) << "\n"
              << "perspector: " << p.str() << "\n"
              << "conic matrix: " << inc.str() << "\n"
              << "classification: " << to_string(cls) << "\n"
              << "contact on BC: " << contacts[0].str() << "\n"
              << "contact on CA: " << contacts[1].str() << "\n"
              << "contact on AB: " << contacts[2].str() << "\n";
    if (cls == ConicClass::Parabola) {
        std::cout << "center: at infinity, direction " << pole(inc, line_at_infinity()).str()
                  << "\n";
    } else {
        HPoint center = conic_center(inc);
        std::cout << "center (barycentric): " << center.str() << "\n"
                  << "center (cartesian): " << cartesian_str(t, center) << "\n";
    }
    bool thm3 = verify_thm3_center_formula(t, p);
    std::cout << "theorem-3 check (center = complement of isotomic of perspector): "
              << (thm3 ? "PASS" : "FAIL") << "\n";
    return thm3 ? kExitVerified : kExitFalsified;
}

int cmd_perspector(const TriangleRef& t, const HPoint& center) {
    HPoint p = perspector_from_center(center);
    Conic inc = inconic_from_perspector(p);
    HPoint round_trip = conic_center(inc);
    std::cout << "center (barycentric): " << center.str() << "\n"
              << "perspector: " << p.str() << "\n"
              << "perspector (cartesian): " << cartesian_str(t, p) << "\n"
              << "classification of the inconic: " << to_string(classify(inc)) << "\n"
              << "round trip, center of inconic(perspector): " << round_trip.str() << " — "
              << (round_trip == center ? "OK" : "MISMATCH") << "\n";
    return round_trip == center ? kExitVerified : kExitFalsified;
}

int cmd_verify(std::uint64_t seed, int trials, const std::string& shape, bool inject_failure) {
    SuiteOptions options;
    options.seed = seed;
    options.trials = trials;
    options.inject_failure = inject_failure;
    if (shape == "any")
        options.shape = ShapeFilter::Any;
    else if (shape == "acute")
        options.shape = ShapeFilter::Acute;
    else if (shape == "non-right")
        options.shape = ShapeFilter::NonRight;
    else {
        std::cerr << "error: unknown shape filter '" << shape << "'\n";
        return kExitUsage;
    }
    auto reports = run_suite(options);
    print_report_table(reports, std::cout);
    if (all_passed(reports)) {
        std::cout << "\nall properties verified\n";
        return kExitVerified;
    }
    std::cout << "\nproperty falsified\n";
    return kExitFalsified;
}

int cmd_figure(SceneSpec scene) {
    if (scene.out_path.empty()) {
        std::cerr << "error: output path is empty\n";
        return kExitUsage;
    }
    std::ofstream out(scene.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << scene.out_path << "\n";
        return kExitUsage;
    }
    render_figure(scene, out);
    if (!out.good()) {
        std::cerr << "error: failed writing " << scene.out_path << "\n";
        return kExitUsage;
    }
    std::cout << "wrote figure " << scene.figure_id << " to " << scene.out_path << "\n";
    return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact inscribed-conic engine: centers, perspectors, theorem checks, figures"};
    app.require_subcommand(1);

    std::string triangle_path, perspector_text = "1:2:3", center_text, shape = "any";
    std::string out_path;
    std::uint64_t seed = 1;
    int trials = 1000, figure_id = 1;
    bool inject_failure = false;

    auto* inconic_cmd =
        app.add_subcommand("inconic", "inscribed conic from a perspector: matrix, contacts, center");
    inconic_cmd->add_option("--triangle", triangle_path, "triangle JSON file");
    inconic_cmd->add_option("--perspector", perspector_text, "barycentric point p:q:r")->required();

    auto* perspector_cmd =
        app.add_subcommand("perspector", "perspector of the inscribed conic with a given center");
    perspector_cmd->add_option("--triangle", triangle_path, "triangle JSON file");
    perspector_cmd->add_option("--center", center_text, "barycentric point u:v:w")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized theorem suite");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--trials", trials, "trials per property");
    verify_cmd->add_option("--shape", shape, "triangle filter: any|acute|non-right");
    verify_cmd->add_flag("--inject-failure", inject_failure, "add a deliberately false property")
        ->group("");  // testing aid, hidden from help

    auto* figure_cmd = app.add_subcommand("figure", "emit an SVG reproduction of a figure");
    figure_cmd->add_option("--id", figure_id, "figure id (1..7)")->required();
    figure_cmd->add_option("--out", out_path, "output SVG path")->required();
    figure_cmd->add_option("--triangle", triangle_path, "triangle JSON file");
    figure_cmd->add_option("--perspector", perspector_text, "barycentric point p:q:r");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        TriangleRef triangle =
            triangle_path.empty() ? SceneSpec::default_triangle() : parse_triangle_file(triangle_path);
        if (inconic_cmd->parsed()) return cmd_inconic(triangle, parse_hpoint(perspector_text));
        if (perspector_cmd->parsed()) return cmd_perspector(triangle, parse_hpoint(center_text));
        if (verify_cmd->parsed()) {
            if (trials < 1) {
                std::cerr << "error: --trials must be at least 1\n";
                return kExitUsage;
            }
            return cmd_verify(seed, trials, shape, inject_failure);
        }
        SceneSpec scene;
        scene.triangle = triangle;
        scene.perspector = parse_hpoint(perspector_text);
        scene.figure_id = figure_id;
        scene.out_path = out_path;
        return cmd_figure(std::move(scene));
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
