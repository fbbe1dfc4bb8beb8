// onep: generate, check, export and fuzz 1-plane drawings stored as .1pg files.
//
// Exit codes: 0 success, 1 a requested check failed, 2 bad parameters, unreadable
// or invalid input, I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "onep/analyze.hpp"
#include "onep/bounds.hpp"
#include "onep/dot.hpp"
#include "onep/error.hpp"
#include "onep/generators.hpp"
#include "onep/interchange.hpp"
#include "onep/maximality.hpp"
#include "onep/properties.hpp"

namespace {

using namespace onep;

constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

std::string stats_line(const OnePlaneGraph& g) {
    return "n=" + std::to_string(g.order()) + " cr=" + std::to_string(g.crossing_count()) +
           " |E|=" + std::to_string(g.size());
}

OnePlaneGraph load(const std::string& path) {
    const ValidationResult r = validate(read_1pg(path));
    if (!r.ok()) throw Error(ErrorCode::ValidationFailed, path + ":\n" + r.report());
    return *r.graph;
}

std::string describe(const OnePlaneGraph& g, const InsertionCandidate& c) {
    const auto name = [&](VertexId v) {
        const std::string& l = g.drawing().label(v);
        return l.empty() ? std::to_string(v) : l;
    };
    std::string s = name(c.u) + "-" + name(c.v);
    if (c.kind == RouteKind::OneFace) {
        s += " inside face " + std::to_string(c.face1);
    } else {
        s += " through faces " + std::to_string(c.face1) + "," + std::to_string(c.face2) +
             " crossing edge " + std::to_string(c.crossed_edge);
    }
    return s;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

struct GenerateArgs {
    std::string family;
    int k = 1;
    std::string path;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    const std::optional<Family> f = parse_family(a.family);
    if (!f) throw Error(ErrorCode::BadParameter, "unknown family '" + a.family + "'");
    OnePlaneGraph g = *f == Family::Fixture ? [&] {
        if (a.path.empty()) throw Error(ErrorCode::BadParameter, "fixture needs --path");
        return load_fixture(a.path);
    }() : generate(*f, a.k);
    std::string out = a.out;
    if (out.empty() && *f != Family::Fixture) out = std::string(to_string(*f)) + std::to_string(a.k) + ".1pg";
    if (!out.empty()) write_1pg(out, g);
    std::cout << stats_line(g) << '\n';
    return 0;
}

struct CheckArgs {
    std::string path;
    bool maximal = false;
    bool immovable = false;
    bool bounds = false;
    bool machine = false;
};

int cmd_check(const CheckArgs& a) {
    const OnePlaneGraph g = load(a.path);
    std::ostringstream human;
    std::ostringstream machine;
    bool failed = false;
    const auto report = [&](const std::string& id, bool pass, const std::string& detail) {
        failed = failed || !pass;
        human << id << ": " << (pass ? "PASS" : "FAIL");
        if (!detail.empty()) human << " (" << detail << ")";
        human << '\n';
        machine << id << ' ' << (pass ? 1 : 0) << " = 1 " << (pass ? "PASS" : "FAIL") << '\n';
    };

    const std::size_t kappa = vertex_connectivity(g.underlying());
    human << a.path << ": valid, " << stats_line(g) << " kappa=" << kappa
          << " triangulation=" << (is_triangulation(g.faces(), g.map()) ? "yes" : "no") << '\n';

    std::optional<bool> maximal;
    if (a.maximal || a.immovable || a.bounds) {
        const MaximalityResult m = is_maximal(g);
        maximal = m.maximal;
        if (a.maximal) report("maximal", m.maximal, m.witness ? "can add " + describe(g, *m.witness) : "");
    }
    std::optional<bool> immovable;
    if (a.immovable) {
        if (!*maximal) {
            report("immovable", false, "not maximal");
        } else {
            const ImmovabilityResult r = is_immovable_unchecked(g);
            immovable = r.immovable;
            report("immovable", r.immovable,
                   r.immovable ? "" : "edge " + std::to_string(r.witness) + " can be redrawn uncrossed");
        }
    }
    if (a.bounds) {
        if (!*maximal) {
            report("bounds", false, "not maximal");
        } else {
            BoundOptions opts;
            opts.maximal = true;
            opts.connectivity = kappa;
            opts.immovable = immovable;
            const BoundReport r = verify_bounds(g, opts);
            human << "bound            lhs      cmp  rhs      status\n";
            for (const BoundEntry& e : r.entries) {
                char row[160];
                std::snprintf(row, sizeof row, "%-16s %-8s %-4s %-8s %s", e.id.c_str(),
                              format_rational(e.lhs).c_str(), std::string(to_string(e.cmp)).c_str(),
                              format_rational(e.rhs).c_str(), std::string(to_string(e.status)).c_str());
                human << row;
                if (e.status == CheckStatus::Pass && e.tight()) human << " tight";
                if (!e.note.empty()) human << " (" << e.note << ")";
                human << '\n';
            }
            machine << r.machine_readable();
            failed = failed || !r.all_pass();
        }
    }
    std::cout << (a.machine ? machine.str() : human.str());
    return failed ? kCheckFailed : 0;
}

int cmd_stats(const std::string& path) {
    const OnePlaneGraph g = load(path);
    const DegreeProfile p = degree_profile(g.underlying());
    std::cout << stats_line(g) << '\n';
    std::cout << "kappa=" << vertex_connectivity(g.underlying()) << '\n';
    std::cout << "faces=" << g.faces().size() << " true=" << g.faces().count(FaceKind::True)
              << " fake=" << g.faces().count(FaceKind::Fake) << '\n';
    std::cout << "triangulation=" << (is_triangulation(g.faces(), g.map()) ? "yes" : "no")
              << " near_optimal=" << (is_near_optimal(g).near_optimal ? "yes" : "no") << '\n';
    std::cout << "degrees:";
    for (std::size_t d = 0; d < p.histogram.size(); ++d) {
        if (p.histogram[d] != 0) std::cout << ' ' << d << 'x' << p.histogram[d];
    }
    std::cout << '\n';
    return 0;
}

int cmd_export_dot(const std::string& path, const std::string& out) {
    write_text(out, to_dot(load(path)));
    return 0;
}

struct FuzzArgs {
    std::size_t count = 50;
    std::string range = "6..14";
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

int cmd_fuzz(const FuzzArgs& a) {
    const std::size_t dots = a.range.find("..");
    std::size_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) throw std::invalid_argument("range");
        lo = std::stoul(a.range.substr(0, dots));
        hi = std::stoul(a.range.substr(dots + 2));
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadParameter, "--n expects a..b, got '" + a.range + "'");
    }
    if (a.count == 0 || lo < 4 || hi < lo) throw Error(ErrorCode::BadParameter, "need count >= 1 and 4 <= a <= b");
    const unsigned threads = a.threads != 0 ? a.threads : std::max(1u, std::thread::hardware_concurrency());
    const FuzzSummary s = fuzz(a.count, lo, hi, a.seed, threads);
    for (const InstanceReport& r : s.instances) {
        for (const PropertyViolation& v : r.violations) {
            std::cout << "VIOLATION seed=" << r.seed << " n=" << r.n << ' ' << v.property << ": " << v.detail << '\n';
        }
    }
    std::cout << "instances=" << s.instances.size() << " violations=" << s.violation_count() << '\n';
    return s.violation_count() == 0 ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal 1-plane drawings: generators, checks and bound reports"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Build a family member and write it as .1pg");
    generate_cmd->add_option("family", gen.family, "h, hh, xh, yh, m, xm, pxm or fixture")->required();
    generate_cmd->add_option("--k", gen.k, "Family parameter");
    generate_cmd->add_option("--path", gen.path, "Fixture file (family fixture)");
    generate_cmd->add_option("-o,--out", gen.out, "Output file (default <family><k>.1pg)");

    CheckArgs chk;
    auto* check_cmd = app.add_subcommand("check", "Validate a drawing and run the requested checks");
    check_cmd->add_option("path", chk.path)->required();
    check_cmd->add_flag("--maximal", chk.maximal, "No edge can be added");
    check_cmd->add_flag("--immovable", chk.immovable, "No crossed edge can be redrawn uncrossed");
    check_cmd->add_flag("--bounds", chk.bounds, "Evaluate every applicable bound");
    check_cmd->add_flag("--machine", chk.machine, "Print only 'id lhs cmp rhs status' lines");

    std::string dot_in, dot_out;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write the planarization as Graphviz DOT");
    dot_cmd->add_option("path", dot_in)->required();
    dot_cmd->add_option("-o,--out", dot_out, "Output file (default stdout)");

    FuzzArgs fz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Saturate random drawings and run the property suite");
    fuzz_cmd->add_option("--count", fz.count);
    fuzz_cmd->add_option("--n", fz.range, "Order range a..b");
    fuzz_cmd->add_option("--seed", fz.seed);
    fuzz_cmd->add_option("--threads", fz.threads, "Worker threads (default: all cores)");

    std::string stats_in;
    auto* stats_cmd = app.add_subcommand("stats", "Print order, size, crossings, connectivity and degrees");
    stats_cmd->add_option("path", stats_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*generate_cmd) return cmd_generate(gen);
        if (*check_cmd) return cmd_check(chk);
        if (*dot_cmd) return cmd_export_dot(dot_in, dot_out);
        if (*fuzz_cmd) return cmd_fuzz(fz);
        if (*stats_cmd) return cmd_stats(stats_in);
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
