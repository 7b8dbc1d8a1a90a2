#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

/// Runs the CLI with the given arguments, capturing stdout (stderr folded in).
RunResult run_cli(const std::string& args) {
    std::string out_file = std::string(INCONIC_CLI_PATH) + ".test_out.txt";
    std::string cmd = std::string(INCONIC_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

std::string write_triangle_json() {
    std::string path = std::string(INCONIC_CLI_PATH) + ".tri.json";
    std::ofstream out(path);
    out << R"({"A": ["0", "0"], "B": [4, 0], "C": ["1", "3"]})";
    return path;
}

}  // namespace

TEST_CASE("inconic subcommand reports the orthic conic center") {
    std::string tri = write_triangle_json();
    auto r = run_cli("inconic --triangle " + tri + " --perspector 3:1:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(9 : 5 : 8)") != std::string::npos);
    CHECK(r.out.find("Ellipse") != std::string::npos);
    CHECK(r.out.find("theorem-3 check") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("(14/11, 12/11)") != std::string::npos);  // cartesian center
    std::remove(tri.c_str());
}

TEST_CASE("inconic on the centroid gives the steiner inellipse") {
    auto r = run_cli("inconic --perspector 1:1:1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("center (barycentric): (1 : 1 : 1)") != std::string::npos);
    CHECK(r.out.find("Ellipse") != std::string::npos);
}

TEST_CASE("degenerate perspector exits 2") {
    auto r = run_cli("inconic --perspector 1:0:0");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("perspector") != std::string::npos);
}

TEST_CASE("perspector subcommand inverts the center map") {
    auto r = run_cli("perspector --center 1:1:1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("perspector: (1 : 1 : 1)") != std::string::npos);

    // Center K of the default triangle corresponds to the orthocenter.
    auto rk = run_cli("perspector --center 9:5:8");
    CHECK(rk.exit_code == 0);
    CHECK(rk.out.find("perspector: (3 : 1 : 2)") != std::string::npos);
    CHECK(rk.out.find("OK") != std::string::npos);

    // A side midpoint has no valid perspector (anticomplement is a vertex).
    auto rm = run_cli("perspector --center 0:1:1");
    CHECK(rm.exit_code == 2);
}

TEST_CASE("verify subcommand exit codes") {
    auto ok = run_cli("verify --seed 1 --trials 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all properties verified") != std::string::npos);

    auto zero = run_cli("verify --seed 1 --trials 0");
    CHECK(zero.exit_code == 2);

    auto injected = run_cli("verify --seed 1 --trials 3 --inject-failure");
    CHECK(injected.exit_code == 1);
    CHECK(injected.out.find("FAIL") != std::string::npos);
    CHECK(injected.out.find("counterexample") != std::string::npos);

    auto bad_shape = run_cli("verify --seed 1 --trials 3 --shape scalene");
    CHECK(bad_shape.exit_code == 2);
}

TEST_CASE("verify output is deterministic") {
    auto a = run_cli("verify --seed 12 --trials 5");
    auto b = run_cli("verify --seed 12 --trials 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("figure subcommand") {
    std::string svg = std::string(INCONIC_CLI_PATH) + ".fig.svg";
    auto r = run_cli("figure --id 5 --out " + svg);
    CHECK(r.exit_code == 0);
    std::ifstream in(svg);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    CHECK(content.rfind("<?xml", 0) == 0);
    CHECK(content.find("<svg") != std::string::npos);
    CHECK(content.find("lemoine-circle") != std::string::npos);
    CHECK(count_occurrences(content, "class=\"marker-acc\"") == 6);  // the six hexagon vertices
    CHECK(content.find("</svg>") != std::string::npos);

    // Figure 2 carries the three concurrent contact-chord midlines.
    auto r2 = run_cli("figure --id 2 --out " + svg);
    CHECK(r2.exit_code == 0);
    std::ifstream in2(svg);
    std::ostringstream buf2;
    buf2 << in2.rdbuf();
    CHECK(count_occurrences(buf2.str(), "class=\"midline\"") == 3);
    std::remove(svg.c_str());

    // Identical invocations produce identical bytes.
    std::string svg_b = svg + ".b";
    run_cli("figure --id 3 --out " + svg);
    run_cli("figure --id 3 --out " + svg_b);
    std::ifstream fa(svg), fb(svg_b);
    std::ostringstream ba, bb;
    ba << fa.rdbuf();
    bb << fb.rdbuf();
    CHECK(ba.str() == bb.str());
    CHECK(!ba.str().empty());
    std::remove(svg.c_str());
    std::remove(svg_b.c_str());

    auto bad_id = run_cli("figure --id 9 --out " + svg);
    CHECK(bad_id.exit_code == 2);
    auto empty_out = run_cli("figure --id 1 --out \"\"");
    CHECK(empty_out.exit_code == 2);
    auto missing = run_cli("figure --id 1");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("malformed inputs exit 2") {
    CHECK(run_cli("inconic --perspector 1:2").exit_code == 2);
    CHECK(run_cli("inconic --perspector a:b:c").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    std::string bad = std::string(INCONIC_CLI_PATH) + ".bad.json";
    {
        std::ofstream out(bad);
        out << "{\"A\": [0,0]}";
    }
    CHECK(run_cli("inconic --triangle " + bad + " --perspector 1:2:3").exit_code == 2);
    std::remove(bad.c_str());
}
