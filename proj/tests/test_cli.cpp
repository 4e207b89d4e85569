#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "segprop/cli.hpp"
#include "segprop/kernels.hpp"
#include "segprop/table.hpp"

using namespace segprop;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Data rows as split fields, skipping '#' comments and the header.
std::vector<std::vector<std::string>> csv_rows(const std::string& text, std::vector<std::string>* header = nullptr) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!seen_header) {
            seen_header = true;
            if (header) *header = fields;
            continue;
        }
        rows.push_back(fields);
    }
    return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
}

}  // namespace

TEST_CASE("grid parsing") {
    CHECK(parse_grid("0.3") == std::vector<double>{0.3});
    CHECK(parse_grid("0.1,0.5") == std::vector<double>{0.1, 0.5});
    const auto g = parse_grid("0.1:0.9:5");
    REQUIRE(g.size() == 5);
    CHECK(g[0] == 0.1);
    CHECK(g[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g[4] == 0.9);
    CHECK(parse_grid("0.2:0.8:1") == std::vector<double>{0.2});
    CHECK_THROWS(parse_grid("0.1:0.9:0"));
    CHECK_THROWS(parse_grid("0.1:0.9"));
    CHECK_THROWS(parse_grid("abc"));
    CHECK_THROWS(parse_grid(""));
    CHECK(parse_int_list("0,1,-2") == std::vector<long>{0, 1, -2});
    CHECK_THROWS(parse_int_list("1,,2"));
}

TEST_CASE("double formatting is round-trippable") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(2.0) == "2");
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("spectrum command") {
    SUBCASE("DD on [0, pi]") {
        const auto r = run({"spectrum", "--bc", "DD", "--L", "3.14159265358979", "--count", "2"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0][0] == "1");
        CHECK(std::stod(rows[0][1]) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::stod(rows[0][2]) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(rows[1][0] == "2");
        CHECK(std::stod(rows[1][1]) == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(std::stod(rows[1][2]) == doctest::Approx(2.0).epsilon(1e-13));
    }
    SUBCASE("NN includes the zero row") {
        const auto r = run({"spectrum", "--bc", "NN", "--count", "1"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0] == std::vector<std::string>{"0", "0", "0"});
    }
    SUBCASE("ND") {
        const auto r = run({"spectrum", "--bc", "ND", "--L", "1", "--count", "1"});
        const auto rows = csv_rows(r.out);
        REQUIRE(rows.size() == 1);
        CHECK(std::stod(rows[0][1]) == doctest::Approx(kPi / 2).epsilon(1e-15));
        CHECK(std::stod(rows[0][2]) == doctest::Approx(kPi * kPi / 8).epsilon(1e-15));
    }
    SUBCASE("header comment carries the version") {
        const auto r = run({"spectrum", "--count", "1"});
        CHECK(r.out.rfind("# segprop " + std::string(kVersion) + " spectrum\n", 0) == 0);
    }
}

TEST_CASE("propagate command") {
    SUBCASE("both methods agree") {
        const auto r = run({"propagate", "--bc", "DD", "--x", "0.3", "--y", "0.7", "--tau", "0.2", "--method", "both"});
        REQUIRE(r.code == 0);
        std::vector<std::string> header;
        const auto rows = csv_rows(r.out, &header);
        REQUIRE(rows.size() == 1);
        CHECK(std::stod(rows[0][column(header, "rel_diff")]) < 1e-8);
    }
    SUBCASE("tau = 0 is a usage error") {
        const auto r = run({"propagate", "--x", "0.3", "--y", "0.7", "--tau", "0"});
        CHECK(r.code != 0);
        CHECK(r.out.empty());
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    SUBCASE("short-time image value is the free kernel") {
        const auto r = run({"propagate", "--method", "image", "--tau", "1e-3", "--x", "0.5", "--y", "0.5"});
        REQUIRE(r.code == 0);
        std::vector<std::string> header;
        const auto rows = csv_rows(r.out, &header);
        const double v = std::stod(rows[0][column(header, "value_re")]);
        const double free0 = free_kernel(0.0, make_euclidean(1e-3), 1.0, 1.0).real();
        CHECK(std::abs(v - free0) < 1e-10);
    }
    SUBCASE("grid rows are row-major over x, y, tau") {
        const auto r = run({"propagate", "--bc", "NN", "--x", "0.1:0.9:3", "--y", "0.2,0.4", "--tau", "0.1,1",
                            "--method", "spectral"});
        REQUIRE(r.code == 0);
        std::vector<std::string> header;
        const auto rows = csv_rows(r.out, &header);
        REQUIRE(rows.size() == 12);
        CHECK(rows[0][column(header, "x")] == "0.10000000000000001");
        CHECK(rows[1][column(header, "dt_im")] == "-1");
        CHECK(rows[2][column(header, "y")] == "0.40000000000000002");
        CHECK(rows[4][column(header, "x")] == "0.5");
    }
    SUBCASE("complex damped time") {
        const auto r = run({"compare", "--bc", "ND", "--x", "0.2", "--y", "0.6", "--dt-re", "0.3", "--dt-im", "-0.1"});
        REQUIRE(r.code == 0);
        std::vector<std::string> header;
        const auto rows = csv_rows(r.out, &header);
        CHECK(std::stod(rows[0][column(header, "rel_diff")]) < 1e-6);
    }
    SUBCASE("undamped real time needs the opt-in and then has no certified series") {
        auto r = run({"propagate", "--x", "0.2", "--y", "0.6", "--dt-re", "0.3", "--dt-im", "0"});
        CHECK(r.code == 2);
        r = run({"propagate", "--x", "0.2", "--y", "0.6", "--dt-re", "0.3", "--dt-im", "0", "--allow-real-time"});
        CHECK(r.code == 3);
    }
    SUBCASE("positions outside the segment are rejected") {
        CHECK(run({"propagate", "--x", "1.5", "--y", "0.6", "--tau", "0.1"}).code == 2);
    }
    SUBCASE("tau and complex dt are exclusive") {
        CHECK(run({"propagate", "--x", "0.5", "--y", "0.6", "--tau", "0.1", "--dt-im", "-1"}).code == 2);
        CHECK(run({"propagate", "--x", "0.5", "--y", "0.6"}).code == 2);
    }
}

TEST_CASE("json lines carry the comparison record fields") {
    const auto r = run({"compare", "--bc", "DN", "--x", "0.3", "--y", "0.5,0.7", "--tau", "0.2", "--format", "json"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        for (const char* key : {"bc", "x", "y", "dt_re", "dt_im", "spectral_re", "spectral_im", "image_re", "image_im",
                                "abs_diff", "rel_diff", "terms_spectral", "terms_image"}) {
            CHECK(j.contains(key));
        }
        CHECK(j["bc"] == "DN");
        CHECK(j["rel_diff"].get<double>() < 1e-8);
        ++n;
    }
    CHECK(n == 2);
}

TEST_CASE("paths command") {
    const auto r = run({"paths", "--x", "0.2", "--y", "0.6", "--r", "0,1,-2"});
    REQUIRE(r.code == 0);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    CHECK(header == std::vector<std::string>{"r", "t", "x"});
    REQUIRE(rows.size() == 2 + 3 + 4);
    CHECK(rows[0] == std::vector<std::string>{"0", "0", "0.20000000000000001"});
    CHECK(rows[3][0] == "1");
    CHECK(std::stod(rows[3][1]) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rows[3][2] == "1");
    // r = -2 bounces left then right
    CHECK(rows[6][2] == "0");
    CHECK(rows[7][2] == "1");
}

TEST_CASE("trace command") {
    const auto r = run({"trace", "--bc", "NN", "--tau", "100"});
    REQUIRE(r.code == 0);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    CHECK(std::stod(rows[0][column(header, "trace_re")]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("barrier command") {
    auto r = run({"barrier", "--E", "1", "--h", "2"});
    REQUIRE(r.code == 0);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    CHECK(std::stod(rows[0][column(header, "theta")]) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(std::stod(rows[0][column(header, "R_im")]) == doctest::Approx(-1.0).epsilon(1e-15));

    r = run({"barrier", "--E", "3", "--h", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("well command") {
    const auto r = run({"well", "--L", "1", "--h", "50", "--method", "both"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# convention: k*L - theta(E) = n*pi") != std::string::npos);
    std::vector<std::string> header;
    const auto rows = csv_rows(r.out, &header);
    REQUIRE(rows.size() >= 3);
    for (const auto& row : rows) CHECK(std::stod(row[column(header, "abs_diff_E")]) < 1e-9);

    const auto q = run({"well", "--L", "1", "--h", "50"});
    const auto o = run({"well", "--L", "1", "--h", "50", "--method", "oracle"});
    CHECK(csv_rows(q.out).size() == csv_rows(o.out).size());
}

TEST_CASE("output file and determinism") {
    const auto path = std::filesystem::temp_directory_path() / "segprop_test_cli_output.csv";
    const std::vector<std::string> args = {"compare", "--bc", "ND", "--x", "0.1:0.9:3", "--y", "0.5", "--tau", "0.2",
                                           "--output", path.string()};
    REQUIRE(run(args).code == 0);
    std::ifstream f(path);
    const std::string first((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    REQUIRE(run(args).code == 0);
    std::ifstream g(path);
    const std::string second((std::istreambuf_iterator<char>(g)), std::istreambuf_iterator<char>());
    CHECK(!first.empty());
    CHECK(first == second);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"spectrum", "--bc", "XY"}).code != 0);
    CHECK(run({"spectrum", "--L", "-1"}).code == 2);
    CHECK(run({"frobnicate"}).code != 0);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("spectrum") != std::string::npos);
}
