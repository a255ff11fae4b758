#include <doctest.h>

#include <cmath>
#include <random>

#include "braiddyn/classify.hpp"
#include "oracles.hpp"

using namespace braiddyn;

namespace {

ClassificationResult run(int n, const char* w)
{
    return classify(n, parse_word(w, n));
}

MassPoly D(int n, int a, int e)
{
    return MassPoly::simple(n, a, e);
}

std::array<long long, 2> abelianisation(const BraidWord& w)
{
    std::array<long long, 2> a{0, 0};
    for (const auto& l : w.letters)
        a[static_cast<std::size_t>(l.gen - 1)] += l.sign;
    return a;
}

}  // namespace

TEST_CASE("n = 5 pseudo-Anosov fixture")
{
    const int n = 5;
    const auto r = run(n, "s1 s1 s2 s2");
    CHECK(r.type == BraidType::PseudoAnosov);
    REQUIRE(r.matrix);
    const MassPoly d = D(n, 1, 0);
    const MassMatrix want{{{d * (D(n, 0, -1) + D(n, 1, -2)), d * (D(n, 1, -1) + D(n, 1, 0))},
                           {d * (D(n, 0, -1) + D(n, 0, -2)), d * (D(n, 0, -1) + D(n, 1, 0))}}};
    const auto& m = *r.matrix;
    // trace and determinant; the determinant is compared as ad + b'c' = a'd' + bc
    CHECK(oracle::same_pf(m[0][0] + m[1][1], want[0][0] + want[1][1]));
    CHECK(oracle::same_pf(m[0][0] * m[1][1] + want[0][1] * want[1][0], want[0][0] * want[1][1] + m[0][1] * m[1][0]));
    CHECK(oracle::same_pf(m, want));
    const double x = std::sqrt(5.0) + 2;
    CHECK(std::abs(r.growth.h0() - std::log(2 * std::sqrt(x) + x)) < 1e-9);
    CHECK(r.normal_form.to_string() == "sigma_{P1} sigma_{g^3P1} gamma^1");
    CHECK(r.rounds == 1);
}

TEST_CASE("n = 5 reducible fixture")
{
    const int n = 5;
    const auto r = run(n, "s2 s1 s2 s1^-1 s2 s1 s2^-1 s1 s2^3 s1");
    CHECK(r.type == BraidType::Reducible);
    CHECK(r.growth.h0() == 0.0);
    CHECK(r.normal_form.to_string() == "sigma_{gP1} sigma_{P1} gamma^3");
    REQUIRE(r.matrix);
    CHECK(*r.pattern == ZeroPattern::LowerTriangular);
    const auto e = eval_matrix(*r.matrix, 0.0);
    CHECK(e[0][0] == doctest::Approx(1.0));
    CHECK(e[0][1] == 0.0);
    CHECK(e[1][0] == doctest::Approx(2 * delta(n)));
    CHECK(e[1][1] == doctest::Approx(1.0));
    CHECK(r.i == 2);
    CHECK(r.k == -2);
    CHECK(r.l == 1);
    CHECK(r.witness_text() == "s2^-2 * gamma^5");
    CHECK(r.growth.describe() == "h_t = -2 t for t < 0, 0 for t >= 0");
    CHECK(burau_conjugate(r.out_beta, r.conjugator, r.input));
}

TEST_CASE("n = 4 fixtures")
{
    const auto pa = run(4, "s2^2 s1^3");
    CHECK(pa.type == BraidType::PseudoAnosov);
    CHECK(std::abs(pa.growth.h0() - std::log(5 + 2 * std::sqrt(6.0))) < 1e-9);

    const auto per = run(4, "s2 s1 s2 s1^-1 s2^-1 s1");
    CHECK(per.type == BraidType::Periodic);
    CHECK(per.growth.h0() == 0.0);
    CHECK(per.out_beta == gamma_word(4, 1));
    CHECK(burau_conjugate(per.out_beta, per.conjugator, per.input));
}

TEST_CASE("n = 4 braid s2^-2 s1 s2 is not of reducible shape")
{
    const int n = 4;
    const auto w = parse_word("s2^-2 s1 s2", n);
    // it is conjugate to s1^2 gamma^-1
    CHECK(oracle::find_conjugator(parse_word("s1^2 s1^-1 s2^-1", n), w, 4));
    // For even n the abelianisation is Z^2 (s1 and s2 are not conjugate) and
    // chi = gamma^2 maps to (2, 2). sigma_i^k chi^l lands on (k + 2l, 2l) or
    // (2l, k + 2l); w lands on (1, -1), which has odd entries in both slots.
    const auto ab = abelianisation(w);
    CHECK(ab == std::array<long long, 2>{1, -1});
    CHECK(abelianisation(chi_word(n, 1)) == std::array<long long, 2>{2, 2});
    const auto r = classify(n, w);
    CHECK(r.type == BraidType::PseudoAnosov);
    CHECK(r.growth.h0() == doctest::Approx(std::log(2 + std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("periodic growth of central powers")
{
    for (int n : {3, 4, 5, 6, 8})
        for (int l = -2; l <= 2; ++l) {
            const auto r = classify(n, gamma_word(n, static_cast<long long>(l) * n));
            CHECK(r.type == BraidType::Periodic);
            CHECK(r.growth.kind == MassGrowth::Kind::Linear);
            CHECK(r.growth.slope == Rational(-2 * l));
        }
}

TEST_CASE("generator growth")
{
    for (int n = 3; n <= 8; ++n)
        for (int g = 1; g <= 2; ++g)
            for (int s : {1, -1}) {
                const auto r = classify(n, generator_power(n, g, s));
                CHECK(r.type == BraidType::Reducible);
                REQUIRE(r.growth.kind == MassGrowth::Kind::Piecewise);
                for (double t : {-1.5, -0.5, 0.0, 0.5, 2.0})
                    CHECK(r.growth.evaluate(t) == doctest::Approx(s > 0 ? std::max(0.0, -t) : std::max(0.0, t)));
            }
}

TEST_CASE("growth formulas")
{
    CHECK(growth_periodic(5, 5, 1).slope == Rational(-2, 5));
    const auto odd = growth_reducible(5, 1, 3, 1);
    CHECK(odd.slope_neg == Rational(-5));
    CHECK(odd.slope_pos == Rational(-2));
    const auto even = growth_reducible(6, 2, -2, 1);
    CHECK(even.slope_neg == Rational(-1));
    CHECK(even.slope_pos == Rational(1));
    CHECK_THROWS_AS(growth_periodic(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(growth_reducible(5, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("one-letter periodic case")
{
    // n = 3: s1 s2 s1 squares to gamma^3
    const auto r = run(3, "s1 s2 s1");
    CHECK(r.type == BraidType::Periodic);
    CHECK(!r.path);
    CHECK(r.k == 2);
    CHECK(r.l == 1);
    CHECK(r.growth.slope == Rational(-1));
    CHECK(estimate_growth(3, r.input, 24, 0.5) == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("estimator agrees with the closed form")
{
    const std::vector<std::pair<int, const char*>> words{
        {5, "s1 s1 s2 s2"}, {4, "s2^2 s1^3"}, {4, "s2^-2 s1 s2"}, {7, "s1 s2^-1 s1^2 s2^-2"}, {6, "s1^3 s2^-1"}};
    for (const auto& [n, text] : words) {
        const auto r = run(n, text);
        for (double t : {-0.5, 0.0, 0.5}) {
            INFO(text << " t=" << t);
            CHECK(std::abs(estimate_growth(n, r.input, 24, t) - r.growth.evaluate(t)) < 0.08);
        }
    }
    CHECK_THROWS_AS(estimate_growth(5, parse_word("s1", 5), 1, 0.0), std::invalid_argument);
}

TEST_CASE("iteration bound")
{
    ClassifyOptions opt;
    opt.max_iter = 0;
    CHECK_THROWS_AS(classify(5, parse_word("s1 s1 s2 s2", 5), opt), std::runtime_error);
    CHECK_THROWS_AS(classify(automaton_for(4), parse_word("s1", 5)), std::invalid_argument);
}

TEST_CASE("random words: invariants of the classification")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 12);
    for (int n = 3; n <= 8; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            const auto w = oracle::random_word(n, len(rng), rng);
            INFO("n=" << n << " w=" << format_word(w));
            const auto r = classify(n, w);
            CHECK(r.rounds <= static_cast<int>(w.letters.size()) + 1);
            CHECK(burau_conjugate(r.out_beta, r.conjugator, r.input));
            if (r.pattern) {
                const auto pat = *r.pattern;
                if (pat == ZeroPattern::Full)
                    CHECK(r.type == BraidType::PseudoAnosov);
                else if (pat == ZeroPattern::Diagonal)
                    CHECK(r.type == BraidType::Periodic);
                else
                    CHECK(r.type == BraidType::Reducible);
            } else {
                CHECK(r.type == BraidType::Periodic);
            }
            if (r.type == BraidType::PseudoAnosov) {
                CHECK(r.growth.h0() >= std::log(2.0) - 1e-12);
            } else {
                CHECK(r.growth.h0() == 0.0);
            }
            // conjugation invariance at t = 0 and t = +-0.5
            const auto c = oracle::random_word(n, 4, rng);
            const auto r2 = classify(n, concat(concat(c, w), inverse(c)));
            CHECK(r2.type == r.type);
            for (double t : {-0.5, 0.0, 0.5})
                CHECK(std::abs(r2.growth.evaluate(t) - r.growth.evaluate(t)) < 1e-9);
        }
}

TEST_CASE("result json")
{
    const auto j = result_json(run(5, "s1 s1 s2 s2"), 9);
    CHECK(j["type"] == "pseudo_anosov");
    CHECK(j["h0"].get<double>() == doctest::Approx(2.122550124).epsilon(1e-9));
    CHECK(j["pattern"] == "full");
    CHECK(j["path"]["start"] == "v0");
    CHECK(j["normal_form"]["text"] == "sigma_{P1} sigma_{g^3P1} gamma^1");
    CHECK(j["growth"]["kind"] == "log_pf");
    const auto p = result_json(run(5, ""), 9);
    CHECK(p["path"].is_null());
    CHECK(p["h_t"] == "h_t = 0");
}
