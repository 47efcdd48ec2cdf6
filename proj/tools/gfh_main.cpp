// gfh: evaluate rational blends of local polynomials and run the study
// harness (Lebesgue constants, convergence tables, timing) from the command
// line.  All output is CSV with 17-significant-digit reals.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 numeric contract
// violation (a blend denominator that theory says is positive failed to be).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfh/gfh.hpp"

namespace {

struct node_options {
    std::vector<double> interval{-1.0, 1.0};
    int equidistant = -1;
    std::vector<std::string> perturbed;  // n beta seed
    std::string nodes_file;
};

void add_node_options(CLI::App* cmd, node_options& no) {
    cmd->add_option("--interval", no.interval, "Interval endpoints a b")
        ->expected(2);
    auto* eq = cmd->add_option("--equidistant", no.equidistant,
                               "Equidistant nodes with n intervals");
    auto* pe = cmd->add_option("--perturbed", no.perturbed,
                               "Perturbed equidistant nodes: n beta seed")
                   ->expected(3);
    auto* nf = cmd->add_option("--nodes-file", no.nodes_file,
                               "Node file, one value per line");
    eq->excludes(pe)->excludes(nf);
    pe->excludes(nf);
}

gfh::node_set<double> build_nodes(const node_options& no) {
    const double a = no.interval[0], b = no.interval[1];
    const int sources = (no.equidistant >= 0) + (!no.perturbed.empty()) +
                        (!no.nodes_file.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one of --equidistant, --perturbed, --nodes-file is required");
    if (no.equidistant >= 0) return gfh::make_equidistant(a, b, no.equidistant);
    if (!no.perturbed.empty()) {
        const int n = std::stoi(no.perturbed[0]);
        const double beta = std::stod(no.perturbed[1]);
        const std::uint64_t seed = std::stoull(no.perturbed[2]);
        return gfh::make_perturbed(a, b, n, beta, seed);
    }
    std::ifstream in(no.nodes_file);
    if (!in) throw std::invalid_argument("cannot open node file " + no.nodes_file);
    return gfh::read_node_set<double>(in);
}

struct out_sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
};

out_sink open_out(const std::string& path) {
    out_sink s;
    if (!path.empty()) {
        s.file.open(path);
        if (!s.file) throw std::invalid_argument("cannot open output file " + path);
        s.os = &s.file;
    }
    return s;
}

gfh::engine parse_engine(const std::string& name) {
    if (name == "naive") return gfh::engine::naive;
    if (name == "barycentric") return gfh::engine::barycentric;
    if (name == "classical") return gfh::engine::classical;
    throw std::invalid_argument("unknown engine '" + name +
                                "' (naive, barycentric, classical)");
}

void warn_d0(int d, int gamma) {
    if (d == 0 && gamma > 1)
        std::cerr << "note: d=0 with gamma>1 is outside proven theory; "
                     "results are best-effort\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

// ---------------------------------------------------------------- commands

struct eval_options {
    node_options nodes;
    std::string function;
    std::string samples_file;
    int d = 3;
    int gamma = 1;
    int points = 101;
    std::vector<double> at;
    std::string engine_name = "barycentric";
    std::string out;
};

int run_eval(const eval_options& o) {
    gfh::node_set<double> ns = build_nodes(o.nodes);
    if (o.function.empty() == o.samples_file.empty())
        throw std::invalid_argument(
            "exactly one of --function, --samples-file is required");

    const gfh::test_function* tf = nullptr;
    std::vector<double> samples;
    if (!o.function.empty()) {
        tf = &gfh::find_test_function(o.function);
        samples.resize(ns.xs.size());
        for (std::size_t k = 0; k < samples.size(); ++k)
            samples[k] = tf->f(ns.xs[k]);
    } else {
        std::ifstream in(o.samples_file);
        if (!in)
            throw std::invalid_argument("cannot open samples file " + o.samples_file);
        samples = gfh::read_values<double>(in, "samples file");
        if (samples.size() != ns.xs.size())
            throw std::invalid_argument("samples file: expected " +
                                        std::to_string(ns.xs.size()) + " values, got " +
                                        std::to_string(samples.size()));
    }

    warn_d0(o.d, o.gamma);
    const gfh::engine eng = parse_engine(o.engine_name);
    const double a = ns.a, b = ns.b;
    std::vector<double> pts;
    if (!o.at.empty()) {
        pts = o.at;
    } else {
        if (o.points < 2) throw std::invalid_argument("--points must be >= 2");
        pts.resize(o.points);
        for (int j = 0; j < o.points; ++j)
            pts[j] = a + double(j) * (b - a) / double(o.points - 1);
    }

    gfh::interpolant<double> itp(
        gfh::frame<double>(std::move(ns), gfh::params{o.d, o.gamma}),
        std::move(samples));

    out_sink sink = open_out(o.out);
    std::ostream& os = *sink.os;
    os << (tf ? "x,value,abs_error\n" : "x,value\n");
    for (double x : pts) {
        const double v = itp.eval(x, eng);
        os << gfh::fmt_real(x) << ',' << gfh::fmt_real(v);
        if (tf) os << ',' << gfh::fmt_real(std::abs(v - tf->f(x)));
        os << '\n';
    }
    return 0;
}

struct lebesgue_options {
    std::string d_list = "3";
    std::string n_list = "16";
    std::vector<int> gammas{1};
    int per_interval = 20;
    std::string out;
};

int run_lebesgue(const lebesgue_options& o) {
    const std::vector<int> ds = parse_int_list(o.d_list, "--d-list");
    const std::vector<int> ns = parse_int_list(o.n_list, "--n-list");
    gfh::grid_spec gs;
    gs.per_interval = o.per_interval;
    out_sink sink = open_out(o.out);
    std::ostream& os = *sink.os;
    os << "d,n,gamma,constant,argmax\n";
    for (int gamma : o.gammas) {
        for (int d : ds) warn_d0(d, gamma);
        for (const auto& row : gfh::lebesgue_study<double>(ds, ns, gamma, gs))
            os << row.d << ',' << row.n << ',' << row.gamma << ','
               << gfh::fmt_real(row.constant) << ',' << gfh::fmt_real(row.argmax)
               << '\n';
    }
    return 0;
}

struct converge_options {
    std::string function = "runge";
    int d = 2;
    std::vector<int> gammas{1};
    int k_min = 1;
    int k_max = 8;
    int per_interval = 20;
    std::string out;
};

int run_converge(const converge_options& o) {
    const gfh::test_function& tf = gfh::find_test_function(o.function);
    gfh::grid_spec gs;
    gs.per_interval = o.per_interval;
    out_sink sink = open_out(o.out);
    std::ostream& os = *sink.os;
    os << "gamma,k,n,E,rate\n";
    for (int gamma : o.gammas) {
        warn_d0(o.d, gamma);
        for (const auto& row : gfh::convergence_study<double>(tf.f, o.d, gamma,
                                                              o.k_min, o.k_max, gs)) {
            os << gamma << ',' << row.k << ',' << row.n << ','
               << gfh::fmt_real(row.error) << ',';
            if (!std::isnan(row.rate)) os << gfh::fmt_real(row.rate);
            os << '\n';
        }
    }
    return 0;
}

struct bench_options {
    int n = 1024;
    int d = 5;
    int gamma = 3;
    long long points = 100000;
    int repeats = 50;
    std::string out;
};

int run_bench(const bench_options& o) {
    warn_d0(o.d, o.gamma);
    out_sink sink = open_out(o.out);
    std::ostream& os = *sink.os;
    os << "phase,n,d,gamma,m,repeats,median_seconds,model_units,"
          "seconds_per_model_unit\n";
    for (const auto& row : gfh::timing_bench<double>(o.n, o.d, o.gamma, o.points,
                                                     o.repeats))
        os << row.phase << ',' << row.n << ',' << row.d << ',' << row.gamma << ','
           << row.m << ',' << row.repeats << ',' << gfh::fmt_real(row.median_seconds)
           << ',' << gfh::fmt_real(row.model_units) << ','
           << gfh::fmt_real(row.seconds_per_unit) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Rational blends of local interpolating polynomials: evaluation and "
        "study harness"};
    app.require_subcommand(1);

    eval_options eo;
    auto* eval = app.add_subcommand("eval", "Evaluate an interpolant on points");
    add_node_options(eval, eo.nodes);
    eval->add_option("--function", eo.function,
                     "Sample a named test function at the nodes");
    eval->add_option("--samples-file", eo.samples_file,
                     "Node samples, one value per line");
    eval->add_option("--d", eo.d, "Local polynomial degree");
    eval->add_option("--gamma", eo.gamma, "Blending exponent (>= 1)");
    eval->add_option("--points", eo.points,
                     "Evaluate at this many equidistant points on [a,b]");
    eval->add_option("--at", eo.at, "Explicit evaluation points (repeatable)")
        ->take_all();
    eval->add_option("--engine", eo.engine_name,
                     "naive | barycentric | classical");
    eval->add_option("--out", eo.out, "Output CSV path (default stdout)");

    lebesgue_options lo;
    auto* leb = app.add_subcommand("lebesgue", "Lebesgue-constant study table");
    leb->add_option("--d-list", lo.d_list, "Comma-separated degrees");
    leb->add_option("--n-list", lo.n_list, "Comma-separated interval counts");
    leb->add_option("--gamma", lo.gammas, "Blending exponent (repeatable)")
        ->take_all();
    leb->add_option("--grid-per-interval", lo.per_interval,
                    "Interior grid points per node gap");
    leb->add_option("--out", lo.out, "Output CSV path (default stdout)");

    converge_options co;
    auto* conv = app.add_subcommand("converge", "Doubling convergence table");
    conv->add_option("--function", co.function, "Named test function");
    conv->add_option("--d", co.d, "Local polynomial degree");
    conv->add_option("--gamma", co.gammas, "Blending exponent (repeatable)")
        ->take_all();
    conv->add_option("--k-min", co.k_min, "Smallest k (n = 2^k points)");
    conv->add_option("--k-max", co.k_max, "Largest k (n = 2^k points)");
    conv->add_option("--grid-per-interval", co.per_interval,
                     "Interior grid points per node gap");
    conv->add_option("--out", co.out, "Output CSV path (default stdout)");

    bench_options bo;
    auto* bench = app.add_subcommand("bench", "Timing against the cost model");
    bench->add_option("--n", bo.n, "Interval count");
    bench->add_option("--d", bo.d, "Local polynomial degree");
    bench->add_option("--gamma", bo.gamma, "Blending exponent for the general engine");
    bench->add_option("--points", bo.points, "Evaluation point count m");
    bench->add_option("--repeats", bo.repeats, "Timed repetitions (median reported)");
    bench->add_option("--out", bo.out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(eo);
        if (leb->parsed()) return run_lebesgue(lo);
        if (conv->parsed()) return run_converge(co);
        if (bench->parsed()) return run_bench(bo);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const gfh::numeric_contract_error& e) {
        std::cerr << "numeric contract violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
