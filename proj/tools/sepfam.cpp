#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepfam/builders.hpp"
#include "sepfam/constructions.hpp"
#include "sepfam/errors.hpp"
#include "sepfam/io.hpp"
#include "sepfam/oracle.hpp"
#include "sepfam/separators.hpp"
#include "sepfam/svg.hpp"

namespace {

using namespace sepfam;

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

SeparatorClass class_from(const std::string& name) {
    if (name == "halfplane") return SeparatorClass::Halfplane;
    if (name == "disc") return SeparatorClass::Disc;
    return SeparatorClass::Convex;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw parse_error("write failure on '" + path + "'");
}

int cmd_generate(const std::string& shape, std::size_t n, int k, std::uint64_t seed,
                 const std::string& out) {
    PointSet pts;
    if (shape == "collinear") {
        pts = collinear_points(n);
    } else if (shape == "circle") {
        pts = circle_points(n);
    } else if (shape == "es") {
        pts = erdos_szekeres_set(k);
    } else if (shape == "parent") {
        pts = capped_convex_parent(n);
    } else if (shape == "twins") {
        if (n < 2 || n % 2 != 0)
            throw precondition_error("shape twins needs an even n, two points per parent");
        pts = twin_set(capped_convex_parent(n / 2)).points;
    } else {
        pts = random_general_position(n, seed);
    }
    save_points(out, pts);
    std::cout << "n = " << pts.size() << "\n";
    std::cout << "general position: " << (is_general_position(pts) ? "yes" : "no") << "\n";
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_build(const std::string& method, const std::string& in, const std::string& out) {
    const PointSet pts = load_points(in);
    SeparatingFamily fam;
    if (method == "prefix")
        fam = prefix_halfplanes(pts);
    else if (method == "halfplane")
        fam = halfplane_separate(pts);
    else if (method == "disc")
        fam = disc_separate(pts);
    else
        fam = convex_separate(pts);
    if (auto bad = unseparated_pair(fam, pts)) {
        std::cerr << "refusing to write: pair (" << bad->first << ", " << bad->second
                  << ") is not separated\n";
        return 1;
    }
    save_family(out, fam);
    std::cout << "family size = " << fam.size() << "\n";
    std::cout << "verified separating: yes\n";
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& points_path, const std::string& family_path) {
    const PointSet pts = load_points(points_path);
    const SeparatingFamily fam = load_family(family_path);
    if (auto bad = unseparated_pair(fam, pts)) {
        std::cout << "NOT SEPARATING: pair (" << bad->first << ", " << bad->second
                  << ") has identical membership in every set\n";
        for (std::size_t i : {bad->first, bad->second})
            std::cout << "  point " << i << " = (" << to_fraction_string(pts[i].x) << ", "
                      << to_fraction_string(pts[i].y) << ")\n";
        return 1;
    }
    std::cout << "SEPARATING (" << fam.size() << " sets, " << pts.size() << " points)\n";
    return 0;
}

int cmd_oracle(const std::string& class_name, const std::string& points_path,
               const std::string& out, bool prune) {
    const PointSet pts = load_points(points_path);
    const SeparatorClass cls = class_from(class_name);
    const OracleResult res = s_value(pts, cls);
    if (!res.feasible) {
        std::cout << "INFEASIBLE: no trace splits pair (" << res.blocked->first << ", "
                  << res.blocked->second << ")\n";
        return 1;
    }
    std::cout << "s = " << res.size << "  (class " << to_string(cls) << ", n = " << pts.size()
              << ")\n";
    std::cout << "explored " << res.explored << " search nodes\n";
    SeparatingFamily fam = res.family;
    if (prune) {
        fam = prune_to_minimal(fam, pts);
        std::cout << "pruned family size = " << fam.size() << "\n";
    }
    std::cout << "witness family:\n" << serialize_family(fam);
    if (!out.empty()) {
        save_family(out, fam);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_plot(const std::string& points_path, const std::string& family_path,
             const std::string& out) {
    const PointSet pts = load_points(points_path);
    SeparatingFamily fam;
    const bool have_family = !family_path.empty();
    if (have_family) fam = load_family(family_path);
    write_text(out, render_svg(pts, have_family ? &fam : nullptr));
    std::cout << "wrote " << out << "\n";
    return 0;
}

// ----- bench suites -----

struct BenchTable {
    bool ok = true;

    void row(const std::string& name, const std::string& expected, const std::string& actual,
             bool pass) {
        std::cout << (pass ? "   ok  " : " FAIL  ") << name << ": expected " << expected
                  << ", actual " << actual << "\n";
        ok = ok && pass;
    }
    void eq(const std::string& name, std::size_t expected, std::size_t actual) {
        row(name, std::to_string(expected), std::to_string(actual), expected == actual);
    }
    void holds(const std::string& name, const std::string& expected, bool pass) {
        row(name, expected, pass ? "holds" : "violated", pass);
    }
};

std::size_t oracle_size(const PointSet& x, SeparatorClass cls) { return s_value(x, cls).size; }

void bench_halfplane_disc(BenchTable& t) {
    for (std::size_t n = 2; n <= 16; ++n)
        t.eq("s(collinear " + std::to_string(n) + ", halfplane)", n - 1,
             oracle_size(collinear_points(n), SeparatorClass::Halfplane));
    for (std::size_t n = 2; n <= 16; ++n)
        t.eq("s(circle " + std::to_string(n) + ", halfplane)", ceil_half(n),
             oracle_size(circle_points(n), SeparatorClass::Halfplane));
    for (std::size_t n = 2; n <= 14; ++n)
        t.eq("s(collinear " + std::to_string(n) + ", disc)", ceil_half(n),
             oracle_size(collinear_points(n), SeparatorClass::Disc));
    for (std::size_t n = 2; n <= 14; ++n)
        t.eq("s(circle " + std::to_string(n) + ", disc)", ceil_half(n),
             oracle_size(circle_points(n), SeparatorClass::Disc));
}

void bench_convex(BenchTable& t) {
    for (std::size_t n = 2; n <= 12; ++n)
        t.eq("s(collinear " + std::to_string(n) + ", convex)", ceil_half(n),
             oracle_size(collinear_points(n), SeparatorClass::Convex));
    for (std::size_t m : {3, 4, 5}) {
        const TwinSet tw = twin_set(capped_convex_parent(m));
        const std::size_t n = tw.points.size();
        const double bound = static_cast<double>(n) / (2.0 * std::log2(static_cast<double>(n)));
        const std::size_t s = oracle_size(tw.points, SeparatorClass::Convex);
        t.row("s(twins m=" + std::to_string(m) + ", convex)", ">= " + std::to_string(bound),
              std::to_string(s), static_cast<double>(s) >= bound);
    }
    for (std::size_t n : {20, 50, 100}) {
        const PointSet x = random_general_position(n, n);
        const SeparatingFamily fam = convex_separate(x);
        const double nn = static_cast<double>(n);
        const double bound = 20.0 * nn * std::log2(std::log2(nn)) / std::log2(nn);
        const bool pass = is_separating(fam, x) && static_cast<double>(fam.size()) <= bound;
        t.row("convex_separate(random " + std::to_string(n) + ")",
              "separating, size <= " + std::to_string(bound), std::to_string(fam.size()), pass);
    }
}

void bench_constructions(BenchTable& t) {
    for (int k : {4, 5, 6}) {
        const PointSet es = erdos_szekeres_set(k);
        t.eq("|es(" + std::to_string(k) + ")|", std::size_t{1} << (k - 2), es.size());
        t.eq("largest convex subset of es(" + std::to_string(k) + ")",
             static_cast<std::size_t>(k - 1), largest_convex_subset(es).size());
        t.holds("es(" + std::to_string(k) + ") general position", "general position",
                is_general_position(es));
    }
    for (std::size_t n : {5, 12}) {
        const PointSet c = circle_points(n);
        bool on_circle = true;
        for (const Point& p : c) on_circle = on_circle && p.x * p.x + p.y * p.y == 1;
        t.holds("circle " + std::to_string(n) + " on unit circle", "x^2 + y^2 = 1", on_circle);
        t.eq("circle " + std::to_string(n) + " hull vertices", n, convex_hull(c).size());
    }
    const TwinSet tw = twin_set(capped_convex_parent(4));
    bool mid_ok = true;
    for (std::size_t i = 0; i < tw.pairs.size(); ++i) {
        const Point& a = tw.points[tw.pairs[i].first];
        const Point& b = tw.points[tw.pairs[i].second];
        mid_ok = mid_ok && (a.x + b.x) / 2 == tw.parents[i].x && (a.y + b.y) / 2 == tw.parents[i].y;
    }
    t.holds("twin midpoints are the parents", "midpoint = parent", mid_ok);
    t.holds("twin set general position", "general position", is_general_position(tw.points));
}

void bench_oracle_cross(BenchTable& t) {
    std::vector<std::pair<std::string, PointSet>> instances;
    for (std::size_t n : {4, 5, 6}) instances.emplace_back("collinear " + std::to_string(n), collinear_points(n));
    for (std::size_t n : {5, 6, 7}) instances.emplace_back("circle " + std::to_string(n), circle_points(n));
    instances.emplace_back("random 6", random_general_position(6, 11));
    instances.emplace_back("random 7", random_general_position(7, 12));

    for (const auto& [name, x] : instances) {
        for (SeparatorClass cls :
             {SeparatorClass::Halfplane, SeparatorClass::Disc, SeparatorClass::Convex}) {
            TraceSet tr;
            switch (cls) {
                case SeparatorClass::Halfplane: tr = halfplane_traces(x); break;
                case SeparatorClass::Disc: tr = disc_traces(x); break;
                case SeparatorClass::Convex: tr = convex_traces(x); break;
            }
            const OracleResult fast = min_separating_size(tr, x);
            const OracleResult slow = min_separating_size_exhaustive(tr, x);
            t.eq("branch-and-bound vs exhaustive, " + name + ", " + to_string(cls), slow.size,
                 fast.size);
        }
    }
}

int cmd_bench(const std::string& suite) {
    BenchTable t;
    if (suite == "halfplane-disc")
        bench_halfplane_disc(t);
    else if (suite == "convex")
        bench_convex(t);
    else if (suite == "constructions")
        bench_constructions(t);
    else
        bench_oracle_cross(t);
    std::cout << (t.ok ? "all rows ok" : "MISMATCHES FOUND") << "\n";
    return t.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separating families of halfplanes, discs and convex sets"};
    app.require_subcommand(1);

    std::string shape, method, class_name, suite;
    std::string in_path, family_path, out_path;
    std::size_t n = 0;
    int k = 0;
    std::uint64_t seed = 1;
    bool prune = false;

    CLI::App* gen = app.add_subcommand("generate", "generate a named point configuration");
    gen->add_option("--shape", shape, "configuration kind")
        ->required()
        ->check(CLI::IsMember({"collinear", "circle", "es", "parent", "twins", "random"}));
    gen->add_option("--n", n, "number of points (collinear, circle, parent, twins, random)");
    gen->add_option("--k", k, "cup-cap parameter (shape es)");
    gen->add_option("--seed", seed, "random seed (shape random)");
    gen->add_option("out", out_path, "output point file")->required();

    CLI::App* build = app.add_subcommand("build", "run a family builder on a point file");
    build->add_option("--method", method, "builder")
        ->required()
        ->check(CLI::IsMember({"prefix", "halfplane", "disc", "convex"}));
    build->add_option("in", in_path, "input point file")->required();
    build->add_option("out", out_path, "output family file")->required();

    CLI::App* verify = app.add_subcommand("verify", "check that a family separates a point set");
    verify->add_option("points", in_path, "point file")->required();
    verify->add_option("family", family_path, "family file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact minimum family size on a small set");
    oracle->add_option("--class", class_name, "separator class")
        ->required()
        ->check(CLI::IsMember({"halfplane", "disc", "convex"}));
    oracle->add_option("points", in_path, "point file")->required();
    oracle->add_option("--out", out_path, "write the witness family here");
    oracle->add_flag("--prune", prune, "prune the witness family to a minimal one");

    CLI::App* plot = app.add_subcommand("plot", "render points (and a family) as SVG");
    plot->add_option("points", in_path, "point file")->required();
    plot->add_option("out", out_path, "output SVG file")->required();
    plot->add_option("--family", family_path, "family file to draw");

    CLI::App* bench = app.add_subcommand("bench", "run a named expected-vs-actual suite");
    bench->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"halfplane-disc", "convex", "constructions", "oracle-cross"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) return cmd_generate(shape, n, k, seed, out_path);
        if (build->parsed()) return cmd_build(method, in_path, out_path);
        if (verify->parsed()) return cmd_verify(in_path, family_path);
        if (oracle->parsed()) return cmd_oracle(class_name, in_path, out_path, prune);
        if (plot->parsed()) return cmd_plot(in_path, family_path, out_path);
        if (bench->parsed()) return cmd_bench(suite);
    } catch (const sepfam::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sepfam::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const sepfam::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
