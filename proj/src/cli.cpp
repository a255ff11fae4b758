#include "braiddyn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "braiddyn/automaton.hpp"
#include "braiddyn/braidword.hpp"
#include "braiddyn/classify.hpp"

namespace braiddyn {

int output_precision()
{
    const char* env = std::getenv("BRAIDDYN_PRECISION");
    if (env == nullptr || *env == '\0')
        return 9;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 17)
        return 9;
    return static_cast<int>(v);
}

std::string format_real(double x, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    std::string s = buf;
    // no "-0.000"
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-')
        s.erase(0, 1);
    return s;
}

namespace {

std::string matrix_text(const std::array<std::array<double, 2>, 2>& m, int prec)
{
    return "[[" + format_real(m[0][0], prec) + ", " + format_real(m[0][1], prec) + "], [" +
           format_real(m[1][0], prec) + ", " + format_real(m[1][1], prec) + "]]";
}

std::string path_text(const MassAutomaton& a, const PathWitness& p)
{
    std::string s = vertex_name(p.start);
    for (int idx : p.arrows) {
        const auto& ar = a.arrows().at(static_cast<std::size_t>(idx));
        s += " -" + label_name(a.n(), ar.label) + "-> " + vertex_name(ar.to);
    }
    return s;
}

std::string summary_line(const ClassificationResult& r, int prec)
{
    switch (r.type) {
    case BraidType::Periodic:
        return "periodic; " + r.growth.describe();
    case BraidType::Reducible:
        return "reducible; conjugate to " + r.witness_text() + "; h0 = 0";
    case BraidType::PseudoAnosov:
        return "pseudo_anosov; h0 = " + format_real(r.growth.h0(), prec);
    }
    return "";
}

std::string human_report(const ClassificationResult& r, int prec)
{
    std::ostringstream os;
    os << summary_line(r, prec) << '\n';
    os << "normal form: " << r.initial_form.to_string() << '\n';
    os << "final form: " << r.normal_form.to_string() << '\n';
    os << "out: " << format_word(r.out_beta) << '\n';
    os << "conjugator: " << format_word(r.conjugator) << '\n';
    if (r.path)
        os << "path: " << path_text(automaton_for(r.input.n), *r.path) << '\n';
    if (r.matrix) {
        os << "pattern: " << pattern_name(*r.pattern) << '\n';
        os << "matrix at t=0: " << matrix_text(eval_matrix(*r.matrix, 0.0), prec) << '\n';
    }
    os << "h_t: " << r.growth.describe() << '\n';
    if (r.anomaly)
        os << "warning: diagonal closed-path matrix, treated as periodic\n";
    return os.str();
}

struct LineResult {
    int code = kOk;
    std::string out;
    std::string err;
};

LineResult classify_one(const CliConfig& cfg, const std::string& text, int prec, bool compact)
{
    LineResult lr;
    try {
        const BraidWord w = parse_word(text, cfg.n);
        ClassifyOptions opt;
        opt.max_iter = cfg.max_iter;
        const auto r = classify(cfg.n, w, opt);
        if (cfg.json)
            lr.out = result_json(r, prec).dump(compact ? -1 : 2) + "\n";
        else
            lr.out = compact ? summary_line(r, prec) + "\n" : human_report(r, prec);
    } catch (const ParseError& e) {
        lr.code = kParseError;
        lr.err = std::string("parse error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        lr.code = kFailure;
        lr.err = std::string("error: ") + e.what() + "\n";
    }
    return lr;
}

bool check_rank(const CliConfig& cfg, std::ostream& err)
{
    if (cfg.n >= 3)
        return true;
    err << "error: n must be at least 3 (got " << cfg.n << ")\n";
    return false;
}

}  // namespace

int run_classify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    if (!check_rank(cfg, err))
        return kBadRank;
    const int prec = output_precision();
    if (cfg.word != "-") {
        const auto lr = classify_one(cfg, cfg.word, prec, false);
        out << lr.out;
        err << lr.err;
        return lr.code;
    }

    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    automaton_for(cfg.n);  // build once before the workers start
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<LineResult> results(lines.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < lines.size(); i += workers)
                results[i] = classify_one(cfg, lines[i], prec, true);
        }));
    for (auto& j : jobs)
        j.get();

    int code = kOk;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].code != kOk) {
            err << "line " << i + 1 << ": " << results[i].err;
            out << (cfg.json ? "null\n" : "error\n");
            if (code == kOk || results[i].code == kParseError)
                code = results[i].code;
            continue;
        }
        out << results[i].out;
    }
    return code;
}

int run_burau(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!check_rank(cfg, err))
        return kBadRank;
    const int prec = output_precision();
    BraidWord w;
    try {
        w = parse_word(cfg.word, cfg.n);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    }
    const BurauMatrix b = burau(w);
    const double q = -1.0;
    const std::array<std::array<double, 2>, 2> at{{{b.e[0].eval(q), b.e[1].eval(q)}, {b.e[2].eval(q), b.e[3].eval(q)}}};
    if (cfg.json) {
        nlohmann::json j;
        j["n"] = cfg.n;
        j["word"] = format_word(w);
        j["matrix"] = {{b.e[0].to_json(), b.e[1].to_json()}, {b.e[2].to_json(), b.e[3].to_json()}};
        auto r = [prec](double x) { return std::stod(format_real(x, prec)); };
        j["at_q_minus_1"] = {{r(at[0][0]), r(at[0][1])}, {r(at[1][0]), r(at[1][1])}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "word: " << format_word(w) << '\n';
    out << "[[" << b.e[0].to_string() << ", " << b.e[1].to_string() << "],\n [" << b.e[2].to_string() << ", "
        << b.e[3].to_string() << "]]\n";
    out << "at q=-1: " << matrix_text(at, prec) << '\n';
    return kOk;
}

int run_dump(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!check_rank(cfg, err))
        return kBadRank;
    const auto& a = automaton_for(cfg.n);
    if (cfg.json) {
        out << dump_json(a).dump(2) << '\n';
        return kOk;
    }
    const int prec = output_precision();
    out << "n = " << cfg.n << ": " << a.vertices().size() << " vertices, " << a.arrows().size() << " arrows\n";
    for (const auto& v : a.vertices())
        out << vertex_name(v.id) << ": " << unit_name(v.basis[0]) << ", " << unit_name(v.basis[1]) << '\n';
    for (const auto& ar : a.arrows())
        out << vertex_name(ar.from) << " -> " << vertex_name(ar.to) << "  " << label_name(cfg.n, ar.label) << "  "
            << matrix_text(eval_matrix(ar.matrix, cfg.t), prec) << '\n';
    return kOk;
}

int run_estimate(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!check_rank(cfg, err))
        return kBadRank;
    const int prec = output_precision();
    try {
        const BraidWord w = parse_word(cfg.word, cfg.n);
        const double est = estimate_growth(cfg.n, w, cfg.steps, cfg.t);
        if (cfg.json) {
            nlohmann::json j;
            j["n"] = cfg.n;
            j["word"] = format_word(w);
            j["t"] = cfg.t;
            j["steps"] = cfg.steps;
            j["estimate"] = std::stod(format_real(est, prec));
            out << j.dump(2) << '\n';
        } else {
            out << "h_t estimate at t = " << format_real(cfg.t, prec) << " after " << cfg.steps
                << " steps: " << format_real(est, prec) << '\n';
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"braiddyn: braids on two strands of type I2(n)"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto common = [&cfg](CLI::App* sub, bool word_required) {
        sub->add_option("--n", cfg.n, "Coxeter parameter n >= 3")->required();
        auto* w = sub->add_option("--word", cfg.word, "braid word, e.g. \"s1^2 s2^-1\"; - reads lines from stdin");
        if (word_required)
            w->required();
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };
    auto* cls = app.add_subcommand("classify", "Nielsen-Thurston type, normal form and mass growth");
    common(cls, true);
    cls->add_option("--max-iter", cfg.max_iter, "bound on conjugation rounds (default: length + 1)");
    auto* bur = app.add_subcommand("burau", "Burau matrix of a word");
    common(bur, true);
    auto* aut = app.add_subcommand("automaton", "dump the mass automaton");
    common(aut, false);
    aut->add_option("--t", cfg.t, "evaluate arrow matrices at t");
    auto* est = app.add_subcommand("estimate", "numerical mass growth by iteration");
    common(est, true);
    est->add_option("--t", cfg.t, "t");
    est->add_option("--steps", cfg.steps, "number of repetitions N");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (cls->parsed())
        return run_classify(cfg, in, out, err);
    if (bur->parsed())
        return run_burau(cfg, out, err);
    if (aut->parsed())
        return run_dump(cfg, out, err);
    return run_estimate(cfg, out, err);
}

}  // namespace braiddyn
