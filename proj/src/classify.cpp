#include "braiddyn/classify.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braiddyn {

std::string type_name(BraidType t)
{
    switch (t) {
    case BraidType::Periodic:
        return "periodic";
    case BraidType::Reducible:
        return "reducible";
    case BraidType::PseudoAnosov:
        return "pseudo_anosov";
    }
    return "?";
}

MassGrowth MassGrowth::linear(Rational s)
{
    MassGrowth g;
    g.kind = Kind::Linear;
    g.slope = s;
    return g;
}

MassGrowth MassGrowth::piecewise(Rational neg, Rational pos)
{
    MassGrowth g;
    g.kind = Kind::Piecewise;
    g.slope_neg = neg;
    g.slope_pos = pos;
    return g;
}

MassGrowth MassGrowth::log_pf(MassMatrix m)
{
    MassGrowth g;
    g.kind = Kind::LogPF;
    g.matrix = std::move(m);
    return g;
}

double MassGrowth::evaluate(double t) const
{
    switch (kind) {
    case Kind::Linear:
        return boost::rational_cast<double>(slope) * t;
    case Kind::Piecewise:
        return boost::rational_cast<double>(t < 0 ? slope_neg : slope_pos) * t;
    case Kind::LogPF:
        return std::log(pf_eigenvalue(matrix, t));
    }
    return 0;
}

namespace {

std::string rat(Rational r)
{
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << '/' << r.denominator();
    return os.str();
}

std::string lin(Rational r)
{
    return r == Rational(0) ? "0" : rat(r) + " t";
}

}  // namespace

std::string MassGrowth::describe() const
{
    switch (kind) {
    case Kind::Linear:
        return "h_t = " + lin(slope);
    case Kind::Piecewise:
        return "h_t = " + lin(slope_neg) + " for t < 0, " + lin(slope_pos) + " for t >= 0";
    case Kind::LogPF:
        return "h_t = log PF(M(t))";
    }
    return "";
}

nlohmann::json MassGrowth::to_json() const
{
    switch (kind) {
    case Kind::Linear:
        return {{"kind", "linear"}, {"slope", rat(slope)}};
    case Kind::Piecewise:
        return {{"kind", "piecewise"}, {"slope_neg", rat(slope_neg)}, {"slope_pos", rat(slope_pos)}};
    case Kind::LogPF:
        return {{"kind", "log_pf"}, {"matrix", matrix_json(matrix)}};
    }
    return nullptr;
}

MassGrowth growth_periodic(int n, long long k, long long l)
{
    require_rank(n);
    if (k == 0)
        throw std::invalid_argument("growth_periodic: k must be nonzero");
    return MassGrowth::linear(Rational(-2 * l, k));
}

MassGrowth growth_reducible(int n, int i, long long k, long long l)
{
    require_rank(n);
    if (i != 1 && i != 2)
        throw std::invalid_argument("growth_reducible: i must be 1 or 2");
    if (k == 0)
        throw std::invalid_argument("growth_reducible: k must be nonzero");
    const long long c = n % 2 == 1 ? 2 * l : l;
    if (k > 0)
        return MassGrowth::piecewise(Rational(-k - c), Rational(-c));
    return MassGrowth::piecewise(Rational(-c), Rational(-k - c));
}

ReducibleWitness reducible_witness(int n, const NormalForm& nf, ZeroPattern pattern)
{
    const int p = period(n);
    const long long s = nf.gamma_exp;
    if (pattern == ZeroPattern::UpperTriangular) {
        if (nf.blocks.size() != 1 || s % p != 0)
            throw std::logic_error("reducible_witness: upper triangular path is not a single loop letter");
        const auto t = canonical(n, nf.blocks[0].letter);
        return {t.which, nf.blocks[0].mult, s / p, gamma_word(n, -t.j)};
    }
    if (pattern != ZeroPattern::LowerTriangular)
        throw std::invalid_argument("reducible_witness: pattern must be triangular");

    std::vector<TwistLetter> flat;
    for (const auto& b : nf.blocks) {
        if (b.mult != 1)
            throw std::logic_error("reducible_witness: lower triangular chain with a repeated letter");
        flat.push_back(canonical(n, b.letter));
    }
    const long long len = static_cast<long long>(flat.size());
    for (std::size_t i = 0; i + 1 < flat.size(); ++i)
        if (flat[i].which != flat[0].which || flat[i].j != mod_period(n, flat[i + 1].j + 1))
            throw std::logic_error("reducible_witness: letters do not form a gamma chain");
    if (flat.empty() || flat.back().which != flat[0].which || (s + len) % p != 0)
        throw std::logic_error("reducible_witness: chain does not close up");
    // nf = g^J (sigma g^-1)^len g^-J chi^l
    const int J = flat[0].j;
    const long long l = (s + len) / p;
    if (flat[0].which == 1)
        return {2, -len, l, gamma_word(n, -J)};
    return {1, -len, l, concat(generator_power(n, 2, -1), gamma_word(n, -J))};
}

std::string ClassificationResult::witness_text() const
{
    const int n = input.n;
    auto gam = [](long long e) { return "gamma^" + std::to_string(e); };
    switch (type) {
    case BraidType::Reducible: {
        std::string s = "s" + std::to_string(i);
        if (k != 1)
            s += "^" + std::to_string(k);
        if (l != 0)
            s += " * " + gam(l * period(n));
        return s;
    }
    case BraidType::Periodic:
    case BraidType::PseudoAnosov:
        return normal_form.to_string();
    }
    return "";
}

bool burau_conjugate(const BraidWord& out, const BraidWord& conj, const BraidWord& in)
{
    const BurauMatrix c = burau(conj);
    return burau(out) * c == c * burau(in);
}

namespace {

void set_periodic_from_gamma(ClassificationResult& r, int n, long long s)
{
    const long long g = std::gcd(std::llabs(s), static_cast<long long>(n));
    r.type = BraidType::Periodic;
    r.k = g == 0 ? 1 : n / g;
    r.l = g == 0 ? 0 : s / g;
    r.growth = growth_periodic(n, r.k, r.l);
}

}  // namespace

ClassificationResult classify(const MassAutomaton& a, const BraidWord& w, ClassifyOptions opt)
{
    const int n = a.n();
    if (w.n != n)
        throw std::invalid_argument("classify: word and automaton disagree on n");

    ClassificationResult r;
    r.input = w;
    NormalForm nf = to_normal_form(w);
    r.initial_form = nf;
    BraidWord conj{n, {}};
    const int bound = opt.max_iter >= 0 ? opt.max_iter : static_cast<int>(w.letters.size()) + 1;

    std::optional<PathWitness> path;
    for (;;) {
        const long long m = nf.total_mult();
        if (m == 0) {
            set_periodic_from_gamma(r, n, nf.gamma_exp);
            r.out_beta = to_word(nf);
            break;
        }
        if (m == 1) {
            const auto b = nf.blocks[0].letter;
            const long long s = nf.gamma_exp;
            const NormalForm square = push_gamma(
                n, {ExtLetter::twist(b), ExtLetter::gamma(s), ExtLetter::twist(b), ExtLetter::gamma(s)});
            if (!recognize(a, square, false)) {
                if (n % 2 == 0)
                    throw std::logic_error("classify: square of a one-letter word unrecognised for even n");
                // beta^2 = gamma^{2s+1}, so beta^{2n} = gamma^{(2s+1) n}
                const long long k0 = 2LL * n, l0 = 2 * s + 1;
                const long long g = std::gcd(k0, std::llabs(l0));
                r.type = BraidType::Periodic;
                r.k = k0 / g;
                r.l = l0 / g;
                r.growth = growth_periodic(n, r.k, r.l);
                r.out_beta = to_word(nf);
                break;
            }
            path = recognize(a, nf, true);
            if (!path)
                throw std::logic_error("classify: one-letter word has no closed path");
            break;
        }
        // conjugate by the last-acting letter b_k
        const auto bk = nf.blocks.front().letter;
        auto written = written_letters(nf);
        written.erase(written.begin());
        written.push_back(ExtLetter::twist(bk));
        if (recognize(a, push_gamma(n, written), false)) {
            path = recognize(a, nf, true);
            if (!path)
                throw std::logic_error("classify: recognised conjugate but no closed path");
            break;
        }
        if (++r.rounds > bound)
            throw std::runtime_error("classify: exceeded " + std::to_string(bound) + " conjugation rounds");
        conj = concat(inverse(twist_word(n, bk)), conj);
        NormalForm next = normalise(n, written);
        if (next.total_mult() != m - 2)
            throw std::logic_error("classify: rewrite did not shorten the normal form by two");
        nf = std::move(next);
    }

    r.normal_form = nf;
    if (path) {
        r.path = path;
        r.matrix = path_matrix(a, *path);
        r.pattern = zero_pattern(*r.matrix);
        switch (*r.pattern) {
        case ZeroPattern::Diagonal:
            r.anomaly = true;
            set_periodic_from_gamma(r, n, nf.gamma_exp);
            r.out_beta = to_word(nf);
            break;
        case ZeroPattern::Full:
            r.type = BraidType::PseudoAnosov;
            r.growth = MassGrowth::log_pf(*r.matrix);
            r.out_beta = to_word(nf);
            break;
        case ZeroPattern::LowerTriangular:
        case ZeroPattern::UpperTriangular: {
            const auto wit = reducible_witness(n, nf, *r.pattern);
            r.type = BraidType::Reducible;
            r.i = wit.i;
            r.k = wit.k;
            r.l = wit.l;
            r.growth = growth_reducible(n, wit.i, wit.k, wit.l);
            conj = concat(wit.conjugator, conj);
            r.out_beta = concat(generator_power(n, wit.i, wit.k), chi_word(n, wit.l));
            break;
        }
        }
    }
    r.conjugator = conj;
    if (opt.verify && !burau_conjugate(r.out_beta, r.conjugator, r.input))
        throw std::logic_error("classify: witness fails the Burau conjugacy check");
    return r;
}

ClassificationResult classify(int n, const BraidWord& w, ClassifyOptions opt)
{
    require_rank(n);
    return classify(automaton_for(n), w, opt);
}

double estimate_growth(int n, const NormalForm& nf, int N, double t)
{
    require_rank(n);
    if (N < 2)
        throw std::invalid_argument("estimate_growth: N must be at least 2");
    const auto letters = nf.application_letters();
    const int p = period(n);

    auto walk = [&](VertexId v) -> std::optional<VertexId> {
        for (const auto& l : letters) {
            if (l.is_gamma) {
                v.j = mod_period(n, v.j + l.gamma_exp);
                continue;
            }
            if (!arrow_exists(n, l.tw, v))
                return std::nullopt;
            v = target_vertex(n, l.tw);
        }
        return v;
    };
    std::optional<VertexId> start;
    for (int fam = 0; fam < (n % 2 == 0 ? 2 : 1) && !start; ++fam)
        for (int j = 0; j < p && !start; ++j) {
            std::optional<VertexId> v = VertexId{fam == 1, j};
            for (int r = 0; r < N && v; ++r)
                v = walk(*v);
            if (v)
                start = VertexId{fam == 1, j};
        }
    if (!start)
        throw std::invalid_argument("estimate_growth: word is not recognised along repeated application");

    VertexId cur = *start;
    std::array<double, 2> w{1.0, 1.0};
    auto mass = [&]() {
        const auto basis = vertex_basis(n, cur);
        return w[0] * unit_mass(n, basis[0], t) + w[1] * unit_mass(n, basis[1], t);
    };
    double prev = mass();
    double ratio = 1.0;
    for (int r = 0; r < N; ++r) {
        for (const auto& l : letters) {
            if (l.is_gamma) {
                const int dir = l.gamma_exp > 0 ? 1 : -1;
                for (long long q = 0; q < std::llabs(l.gamma_exp); ++q) {
                    const auto basis = vertex_basis(n, cur);
                    for (int c = 0; c < 2; ++c) {
                        const auto moved = gamma_on_unit(n, basis[c], dir);
                        w[c] *= pf_dim(n, moved.label) * std::exp(moved.level * t);
                    }
                    cur.j = mod_period(n, cur.j + dir);
                }
                continue;
            }
            const auto basis = vertex_basis(n, cur);
            const VertexId target = target_vertex(n, l.tw);
            const auto tbasis = vertex_basis(n, target);
            std::array<double, 2> nw{0.0, 0.0};
            for (int c = 0; c < 2; ++c) {
                if (w[c] == 0.0)
                    continue;
                const Support s = letter_support(n, l.tw, cur, basis[c]);
                for (const auto& term : s.terms)
                    nw[term.unit == tbasis[0] ? 0 : 1] += w[c] * eval_mass(term.weight, t);
            }
            w = nw;
            cur = target;
        }
        const double m = mass();
        ratio = m / prev;
        w[0] /= m;
        w[1] /= m;
        prev = 1.0;
    }
    return std::log(ratio);
}

double estimate_growth(int n, const BraidWord& w, int N, double t)
{
    const NormalForm nf = to_normal_form(w);
    try {
        return estimate_growth(n, nf, N, t);
    } catch (const std::invalid_argument&) {
    }
    // growth is a conjugacy invariant, so run on the recognised conjugate
    const auto r = classify(n, w);
    if (r.path)
        return estimate_growth(n, r.normal_form, N, t);
    // one-letter periodic case: beta^2 = gamma^{2s+1}
    NormalForm sq{n, {}, 2 * r.normal_form.gamma_exp + 1};
    return estimate_growth(n, sq, N, t) / 2;
}

namespace {

double rounded(double x, int precision)
{
    const double scale = std::pow(10.0, precision);
    const double r = std::round(x * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

}  // namespace

nlohmann::json result_json(const ClassificationResult& r, int precision)
{
    const int n = r.input.n;
    nlohmann::json j;
    j["n"] = n;
    j["input"] = format_word(r.input);
    j["type"] = type_name(r.type);
    j["initial_normal_form"] = r.initial_form.to_json();
    j["normal_form"] = r.normal_form.to_json();
    j["out_beta"] = format_word(r.out_beta);
    j["witness"] = r.witness_text();
    j["conjugator"] = format_word(r.conjugator);
    j["path"] = r.path ? path_json(automaton_for(n), *r.path) : nlohmann::json(nullptr);
    j["pattern"] = r.pattern ? nlohmann::json(pattern_name(*r.pattern)) : nlohmann::json(nullptr);
    j["matrix"] = r.matrix ? matrix_json(*r.matrix) : nlohmann::json(nullptr);
    if (r.matrix) {
        const auto e = eval_matrix(*r.matrix, 0.0);
        j["matrix_t0"] = {{rounded(e[0][0], precision), rounded(e[0][1], precision)},
                          {rounded(e[1][0], precision), rounded(e[1][1], precision)}};
    } else {
        j["matrix_t0"] = nullptr;
    }
    j["h0"] = rounded(r.growth.h0(), precision);
    j["growth"] = r.growth.to_json();
    j["h_t"] = r.growth.describe();
    j["params"] = {{"i", r.i}, {"k", r.k}, {"l", r.l}};
    j["rounds"] = r.rounds;
    j["anomaly"] = r.anomaly;
    return j;
}

}  // namespace braiddyn
