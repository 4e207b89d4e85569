#include "segprop/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "segprop/barrier.hpp"
#include "segprop/images.hpp"
#include "segprop/kernels.hpp"
#include "segprop/spectral.hpp"
#include "segprop/table.hpp"

namespace segprop {

namespace {

/// Bad flag values detected after CLI11 parsing (exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
};

double parse_double(std::string_view s) {
    std::string tmp(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tmp, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + tmp + "'");
    }
    if (used != tmp.size()) throw UsageError("not a number: '" + tmp + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

struct Common {
    double length = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
    std::string bc = "DD";
    std::string format = "csv";
    std::string output;
    NumericPolicy policy;

    SegmentConfig config() const {
        SegmentConfig cfg{length, mass, hbar, BoundaryKind::Dirichlet, BoundaryKind::Dirichlet};
        set_bc(cfg, bc);
        require_valid(cfg);
        return cfg;
    }

    OutputFormat output_format() const { return format == "json" ? OutputFormat::Json : OutputFormat::Csv; }
};

void add_physics(CLI::App* cmd, Common& c, bool with_bc) {
    cmd->add_option("--L", c.length, "segment length")->capture_default_str();
    cmd->add_option("--m", c.mass, "particle mass")->capture_default_str();
    cmd->add_option("--hbar", c.hbar, "reduced Planck constant")->capture_default_str();
    if (with_bc) {
        cmd->add_option("--bc", c.bc, "endpoint conditions, left then right")
            ->check(CLI::IsMember({"DD", "NN", "ND", "DN"}, CLI::ignore_case))
            ->capture_default_str();
    }
}

void add_output(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--output,-o", c.output, "output file (default: standard output)");
}

void add_policy(CLI::App* cmd, Common& c) {
    cmd->add_option("--abs-tol", c.policy.abs_tol, "absolute truncation tolerance")->capture_default_str();
    cmd->add_option("--rel-tol", c.policy.rel_tol, "relative tolerance")->capture_default_str();
    cmd->add_option("--max-terms", c.policy.max_terms, "series term limit")->capture_default_str();
}

std::string header_line(std::string_view command) {
    return "segprop " + std::string(kVersion) + " " + std::string(command);
}

std::string physics_line(const SegmentConfig& cfg) {
    return "bc=" + bc_code(cfg) + " L=" + format_double(cfg.length) + " m=" + format_double(cfg.mass) +
           " hbar=" + format_double(cfg.hbar);
}

struct TimeFlags {
    std::string tau;
    std::optional<double> dt_re;
    std::optional<double> dt_im;
    bool allow_real_time = false;

    std::vector<EvolutionTime> times() const {
        const bool complex_given = dt_re.has_value() || dt_im.has_value();
        if (!tau.empty() && complex_given) throw UsageError("give either --tau or --dt-re/--dt-im, not both");
        if (complex_given) {
            const Complex d(dt_re.value_or(0.0), dt_im.value_or(0.0));
            return {EvolutionTime::make(d, allow_real_time ? RealTimeMode::Allow : RealTimeMode::Reject)};
        }
        if (tau.empty()) throw UsageError("one of --tau or --dt-re/--dt-im is required");
        std::vector<EvolutionTime> out;
        for (double t : parse_grid(tau)) out.push_back(make_euclidean(t));
        return out;
    }
};

void add_time(CLI::App* cmd, TimeFlags& t) {
    cmd->add_option("--tau", t.tau, "Euclidean time(s): value, list a,b or grid start:stop:count");
    cmd->add_option("--dt-re", t.dt_re, "real part of a complex time step");
    cmd->add_option("--dt-im", t.dt_im, "imaginary part of a complex time step (<= 0)");
    cmd->add_flag("--allow-real-time", t.allow_real_time, "accept im(dt) = 0 (series are not certified there)");
}

std::vector<double> positions(std::string_view spec, double length, const char* name) {
    auto pts = parse_grid(spec);
    for (double p : pts) {
        if (!(p >= 0.0 && p <= length)) throw UsageError(std::string(name) + " values must lie in [0, L]");
    }
    return pts;
}

Table spectrum_table(const Common& c, long count) {
    const SegmentConfig cfg = c.config();
    if (count < 1) throw UsageError("--count must be >= 1");
    const Spectrum spec = modes(cfg, static_cast<std::size_t>(count));
    Table t;
    t.comments = {header_line("spectrum"), physics_line(cfg)};
    t.columns = {"n", "k", "E"};
    for (const Mode& m : spec.modes()) t.add_row({m.n, m.k, m.energy});
    return t;
}

Table propagate_table(const Common& c, const std::string& xs, const std::string& ys, const TimeFlags& tf,
                      const std::string& method) {
    const SegmentConfig cfg = c.config();
    c.policy.validate();
    const auto x_pts = positions(xs, cfg.length, "--x");
    const auto y_pts = positions(ys, cfg.length, "--y");
    const auto times = tf.times();
    const std::string bc = bc_code(cfg);

    Table t;
    t.comments = {header_line(method == "both" ? "compare" : "propagate"), physics_line(cfg) + " method=" + method};
    if (method == "both") {
        t.columns = {"bc",          "x",        "y",        "dt_re",          "dt_im",      "spectral_re", "spectral_im",
                     "image_re",    "image_im", "abs_diff", "rel_diff",       "terms_spectral", "terms_image"};
    } else {
        t.columns = {"bc", "x", "y", "dt_re", "dt_im", "value_re", "value_im", "terms", "tail_bound"};
    }
    for (double x : x_pts) {
        for (double y : y_pts) {
            for (const auto& dt : times) {
                const Complex d = dt.delta();
                if (method == "both") {
                    const auto r = compare_kernels(cfg, x, y, dt, c.policy);
                    t.add_row({bc, x, y, d.real(), d.imag(), r.spectral.value.real(), r.spectral.value.imag(),
                               r.image.value.real(), r.image.value.imag(), r.abs_diff, r.rel_diff,
                               r.spectral.terms_used, r.image.terms_used});
                } else {
                    const auto r = method == "spectral" ? spectral_kernel(cfg, x, y, dt, c.policy)
                                                        : image_kernel(cfg, x, y, dt, c.policy);
                    t.add_row({bc, x, y, d.real(), d.imag(), r.value.real(), r.value.imag(), r.terms_used,
                               r.tail_bound});
                }
            }
        }
    }
    return t;
}

Table trace_table(const Common& c, const TimeFlags& tf) {
    const SegmentConfig cfg = c.config();
    c.policy.validate();
    Table t;
    t.comments = {header_line("trace"), physics_line(cfg)};
    t.columns = {"bc", "dt_re", "dt_im", "trace_re", "trace_im", "terms", "tail_bound"};
    for (const auto& dt : tf.times()) {
        const auto r = trace(cfg, dt, c.policy);
        t.add_row({bc_code(cfg), dt.delta().real(), dt.delta().imag(), r.value.real(), r.value.imag(), r.terms_used,
                   r.tail_bound});
    }
    return t;
}

Table paths_table(const Common& c, double x, double y, const std::string& r_list, double t0, double t1) {
    const SegmentConfig cfg = c.config();
    Table t;
    t.comments = {header_line("paths"), physics_line(cfg) + " x=" + format_double(x) + " y=" + format_double(y)};
    t.columns = {"r", "t", "x"};
    for (long r : parse_int_list(r_list)) {
        for (const auto& v : classical_path(r, x, y, t0, t1, cfg.length)) t.add_row({r, v.t, v.x});
    }
    return t;
}

Table barrier_table(const Common& c, double energy, double height) {
    const auto s = reflection(energy, height, c.mass, c.hbar);
    Table t;
    t.comments = {header_line("barrier"),
                  "m=" + format_double(c.mass) + " hbar=" + format_double(c.hbar) + " R=exp(-i*theta)"};
    t.columns = {"E", "h", "k", "q", "R_re", "R_im", "theta"};
    t.add_row({s.energy, s.height, s.k, s.q, s.reflection.real(), s.reflection.imag(), s.theta});
    return t;
}

Table well_table(const Common& c, double height, const std::string& method) {
    Table t;
    t.comments = {header_line("well"),
                  "L=" + format_double(c.length) + " h=" + format_double(height) + " m=" + format_double(c.mass) +
                      " hbar=" + format_double(c.hbar) + " method=" + method,
                  "convention: k*L - theta(E) = n*pi, theta = 2*atan2(q,k) in (0,pi), n >= 0"};
    if (method == "both") {
        const auto quant = well_levels_quantization(c.length, height, c.mass, c.hbar, c.policy);
        const auto oracle = well_levels_oracle(c.length, height, c.mass, c.hbar);
        if (quant.levels.size() != oracle.levels.size()) {
            throw Error("level counts differ: quantization " + std::to_string(quant.levels.size()) + ", oracle " +
                        std::to_string(oracle.levels.size()));
        }
        t.columns = {"n", "k", "E", "k_oracle", "E_oracle", "abs_diff_E"};
        for (std::size_t i = 0; i < quant.levels.size(); ++i) {
            const auto& a = quant.levels[i];
            const auto& b = oracle.levels[i];
            t.add_row({a.n, a.k, a.energy, b.k, b.energy, std::abs(a.energy - b.energy)});
        }
        return t;
    }
    const auto levels = method == "oracle" ? well_levels_oracle(c.length, height, c.mass, c.hbar)
                                           : well_levels_quantization(c.length, height, c.mass, c.hbar, c.policy);
    t.columns = {"n", "k", "E"};
    for (const auto& l : levels.levels) t.add_row({l.n, l.k, l.energy});
    return t;
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
    if (spec.empty()) throw UsageError("empty grid specification");
    if (spec.find(':') != std::string_view::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) throw UsageError("grid must be start:stop:count; got '" + std::string(spec) + "'");
        const double start = parse_double(parts[0]);
        const double stop = parse_double(parts[1]);
        long count = 0;
        const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
        if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1) {
            throw UsageError("grid count must be an integer >= 1; got '" + std::string(parts[2]) + "'");
        }
        if (count == 1) return {start};
        std::vector<double> pts(static_cast<std::size_t>(count));
        const double step = (stop - start) / static_cast<double>(count - 1);
        for (long i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = start + step * static_cast<double>(i);
        pts.back() = stop;
        return pts;
    }
    std::vector<double> pts;
    for (auto part : split(spec, ',')) pts.push_back(parse_double(part));
    return pts;
}

std::vector<long> parse_int_list(std::string_view spec) {
    std::vector<long> out;
    for (auto part : split(spec, ',')) {
        long v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw UsageError("not an integer: '" + std::string(part) + "'");
        }
        out.push_back(v);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Propagators on a segment: spectral sums, image sums and reflection phases", "segprop"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common c;
    long count = 10;
    std::string xs, ys, method = "both", r_list = "0";
    double path_x = 0.0, path_y = 0.0, t0 = 0.0, t1 = 1.0;
    double energy = 0.0, height = 0.0;
    std::string well_method = "quantization";
    TimeFlags tf;
    std::function<Table()> build;

    auto* spectrum = app.add_subcommand("spectrum", "eigenmodes (n, k, E)");
    add_physics(spectrum, c, true);
    add_output(spectrum, c);
    spectrum->add_option("--count", count, "number of modes")->capture_default_str();
    spectrum->callback([&] { build = [&] { return spectrum_table(c, count); }; });

    auto add_propagate = [&](const char* name, const char* help, bool with_method) {
        auto* cmd = app.add_subcommand(name, help);
        add_physics(cmd, c, true);
        add_output(cmd, c);
        add_policy(cmd, c);
        add_time(cmd, tf);
        cmd->add_option("--x", xs, "source position(s)")->required();
        cmd->add_option("--y", ys, "target position(s)")->required();
        if (with_method) {
            cmd->add_option("--method", method, "spectral, image or both")
                ->check(CLI::IsMember({"spectral", "image", "both"}))
                ->capture_default_str();
        }
        cmd->callback([&, with_method] {
            if (!with_method) method = "both";
            build = [&] { return propagate_table(c, xs, ys, tf, method); };
        });
    };
    add_propagate("propagate", "kernel values on an (x, y, time) grid", true);
    add_propagate("compare", "spectral vs image kernels (propagate --method both)", false);

    auto* paths = app.add_subcommand("paths", "classical path polylines (r, t, x)");
    add_physics(paths, c, true);
    add_output(paths, c);
    paths->add_option("--x", path_x, "start position")->required();
    paths->add_option("--y", path_y, "end position")->required();
    paths->add_option("--r", r_list, "image indices, comma separated")->capture_default_str();
    paths->add_option("--t0", t0, "start time")->capture_default_str();
    paths->add_option("--t1", t1, "end time")->capture_default_str();
    paths->callback([&] { build = [&] { return paths_table(c, path_x, path_y, r_list, t0, t1); }; });

    auto* tr = app.add_subcommand("trace", "sum_n exp(-i E_n dt / hbar)");
    add_physics(tr, c, true);
    add_output(tr, c);
    add_policy(tr, c);
    add_time(tr, tf);
    tr->callback([&] { build = [&] { return trace_table(c, tf); }; });

    auto* barrier = app.add_subcommand("barrier", "reflection amplitude and phase at a finite step");
    barrier->set_help_flag("--help", "print this help message and exit");  // -h would clash with --h
    barrier->add_option("--m", c.mass, "particle mass")->capture_default_str();
    barrier->add_option("--hbar", c.hbar, "reduced Planck constant")->capture_default_str();
    add_output(barrier, c);
    barrier->add_option("--E", energy, "energy, 0 < E < h")->required();
    barrier->add_option("--h", height, "step height")->required();
    barrier->callback([&] { build = [&] { return barrier_table(c, energy, height); }; });

    auto* well = app.add_subcommand("well", "bound states of the symmetric finite well");
    well->set_help_flag("--help", "print this help message and exit");
    add_physics(well, c, false);
    add_output(well, c);
    add_policy(well, c);
    well->add_option("--h", height, "wall height")->required();
    well->add_option("--method", well_method, "quantization, oracle or both")
        ->check(CLI::IsMember({"quantization", "oracle", "both"}))
        ->capture_default_str();
    well->callback([&] { build = [&] { return well_table(c, height, well_method); }; });

    std::vector<const char*> argv{"segprop"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
    }

    try {
        const Table table = build();
        if (c.output.empty()) {
            write_table(out, table, c.output_format());
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) throw Error("cannot open output file '" + c.output + "'");
            write_table(file, table, c.output_format());
            if (!file) throw Error("failed writing output file '" + c.output + "'");
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace segprop
