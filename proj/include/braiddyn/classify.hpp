#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "braiddyn/automaton.hpp"
#include "braiddyn/braidword.hpp"
#include "braiddyn/twistcalc.hpp"

namespace braiddyn {

enum class BraidType { Periodic, Reducible, PseudoAnosov };
std::string type_name(BraidType t);

struct MassGrowth {
    enum class Kind { Linear, Piecewise, LogPF };
    Kind kind = Kind::Linear;
    Rational slope{0};      // Linear
    Rational slope_neg{0};  // Piecewise, t < 0
    Rational slope_pos{0};  // Piecewise, t >= 0
    MassMatrix matrix;      // LogPF

    static MassGrowth linear(Rational s);
    static MassGrowth piecewise(Rational neg, Rational pos);
    static MassGrowth log_pf(MassMatrix m);

    double evaluate(double t) const;
    double h0() const { return evaluate(0.0); }
    std::string describe() const;
    nlohmann::json to_json() const;
};

// beta^k = gamma^{l n}
MassGrowth growth_periodic(int n, long long k, long long l);
// beta conjugate to sigma_i^k chi^l
MassGrowth growth_reducible(int n, int i, long long k, long long l);

struct ReducibleWitness {
    int i = 1;
    long long k = 1;
    long long l = 0;
    BraidWord conjugator;  // conjugator * nf * conjugator^-1 = sigma_i^k chi^l
};

ReducibleWitness reducible_witness(int n, const NormalForm& nf, ZeroPattern pattern);

struct ClassificationResult {
    BraidType type = BraidType::Periodic;
    BraidWord input;
    BraidWord out_beta;
    BraidWord conjugator;  // out_beta = conjugator * input * conjugator^-1
    NormalForm initial_form;
    NormalForm normal_form;  // final, recognised form
    std::optional<PathWitness> path;
    std::optional<MassMatrix> matrix;
    std::optional<ZeroPattern> pattern;
    MassGrowth growth;
    // Periodic: beta^k = gamma^{l n}. Reducible: sigma_i^k chi^l.
    int i = 0;
    long long k = 0;
    long long l = 0;
    int rounds = 0;
    bool anomaly = false;
    std::string witness_text() const;
};

struct ClassifyOptions {
    // Upper bound on conjugation rounds; negative means length + 1.
    int max_iter = -1;
    // Re-check out_beta against the input with exact Burau matrices.
    bool verify = true;
};

ClassificationResult classify(const MassAutomaton& a, const BraidWord& w, ClassifyOptions opt = {});
ClassificationResult classify(int n, const BraidWord& w, ClassifyOptions opt = {});

bool burau_conjugate(const BraidWord& out, const BraidWord& conj, const BraidWord& in);

// Pushes the basis units of a start vertex through w repeated N times using
// letter supports only; returns log(m_N / m_{N-1}).
double estimate_growth(int n, const BraidWord& w, int N, double t);
double estimate_growth(int n, const NormalForm& nf, int N, double t);

nlohmann::json result_json(const ClassificationResult& r, int precision);

}  // namespace braiddyn
