#include <doctest.h>

#include <cmath>
#include <random>

#include "braiddyn/braidword.hpp"
#include "oracles.hpp"

using namespace braiddyn;

namespace {

QPoly mono(int n, int a, std::int64_t c, int e)
{
    return QPoly::monomial(SignedFusionVec::simple(n, a, c), e);
}

BraidWord alternating(int n, int first, int len)
{
    BraidWord w{n, {}};
    int g = first;
    for (int i = 0; i < len; ++i) {
        w.letters.push_back({g, 1});
        g = 3 - g;
    }
    return w;
}

}  // namespace

TEST_CASE("parse and format")
{
    const auto w = parse_word("s1^2 s2^-1", 5);
    CHECK(w.letters.size() == 3);
    CHECK(format_word(w) == "s1^2 s2^-1");
    CHECK(format_word(parse_word("  s1 s1\ts2 ", 4)) == "s1^2 s2");
    CHECK(parse_word("", 5).letters.empty());
    CHECK(format_word(parse_word("s1 s2 s2^-1 s1^-1 s2", 3)) == "s2");
    CHECK(format_word(parse_word("s2^+3", 3)) == "s2^3");
}

TEST_CASE("parse errors carry the byte offset")
{
    auto offset = [](const char* text) {
        try {
            parse_word(text, 5);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset("x") == 0);
    CHECK(offset("s1 s3") == 4);
    CHECK(offset("s1^") == 3);
    CHECK(offset("s1^0") == 3);
    CHECK(offset("s1s2") == 2);
    CHECK(offset("s1^-x") == 4);
    CHECK(offset("s1^99999999") >= 3);
    CHECK_THROWS_AS(parse_word("s1", 2), std::invalid_argument);
}

TEST_CASE("word algebra")
{
    const auto w = parse_word("s1^2 s2^-1 s1", 6);
    CHECK(concat(w, inverse(w)).letters.empty());
    CHECK(power(w, 3).letters.size() == 12);
    CHECK(power(w, -1) == inverse(w));
    CHECK(format_word(gamma_word(5, 2)) == "s2 s1 s2 s1");
    CHECK(chi_word(5, 1) == gamma_word(5, 5));
    CHECK(chi_word(6, -1) == gamma_word(6, -3));
}

TEST_CASE("Burau generators match the definition")
{
    for (int n = 3; n <= 8; ++n) {
        const auto s1 = burau_generator(n, 1, 1);
        CHECK(s1.e[0] == mono(n, 0, -1, 2));
        CHECK(s1.e[1] == mono(n, 1, -1, 1));
        CHECK(s1.e[2].is_zero());
        CHECK(s1.e[3] == mono(n, 0, 1, 0));
        const auto s2 = burau_generator(n, 2, 1);
        CHECK(s2.e[0] == mono(n, 0, 1, 0));
        CHECK(s2.e[1].is_zero());
        CHECK(s2.e[2] == mono(n, 1, -1, 1));
        CHECK(s2.e[3] == mono(n, 0, -1, 2));
        for (int g = 1; g <= 2; ++g) {
            CHECK(burau_generator(n, g, 1) * burau_generator(n, g, -1) == BurauMatrix::identity(n));
            CHECK(burau_generator(n, g, -1) * burau_generator(n, g, 1) == BurauMatrix::identity(n));
        }
    }
}

TEST_CASE("braid relation holds symbolically")
{
    for (int n = 3; n <= 10; ++n) {
        CHECK(burau(alternating(n, 1, n)) == burau(alternating(n, 2, n)));
        // shorter alternating words differ
        CHECK(!(burau(alternating(n, 1, n - 1)) == burau(alternating(n, 2, n - 1))));
    }
}

TEST_CASE("gamma^n at q = -1 is the identity")
{
    for (int n = 3; n <= 10; ++n) {
        const auto b = burau(gamma_word(n, n));
        CHECK(b.e[0].eval(-1) == doctest::Approx(1).epsilon(1e-9));
        CHECK(std::abs(b.e[1].eval(-1)) < 1e-9);
        CHECK(std::abs(b.e[2].eval(-1)) < 1e-9);
        CHECK(b.e[3].eval(-1) == doctest::Approx(1).epsilon(1e-9));
        // chi is central
        const auto chi = burau(chi_word(n, 1));
        for (int g = 1; g <= 2; ++g)
            CHECK(chi * burau_generator(n, g, 1) == burau_generator(n, g, 1) * chi);
    }
}

TEST_CASE("Coxeter matrices are Burau at q = -1")
{
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 8; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto w = oracle::random_word(n, 8, rng);
            const Mat2 m = coxeter_matrix(w);
            const auto b = burau(w);
            CHECK(m.a == doctest::Approx(b.e[0].eval(-1)));
            CHECK(m.b == doctest::Approx(b.e[1].eval(-1)));
            CHECK(m.c == doctest::Approx(b.e[2].eval(-1)));
            CHECK(m.d == doctest::Approx(b.e[3].eval(-1)));
        }
}

TEST_CASE("positive roots")
{
    for (int n = 3; n <= 10; ++n) {
        const auto roots = positive_roots(n);
        CHECK(roots.size() == static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < roots.size(); ++k)
            CHECK(std::arg(roots[k]) == doctest::Approx(M_PI * static_cast<double>(k) / n));
    }
}

TEST_CASE("viability")
{
    // odd n: sigma_{g^j P1} is not allowed out of v_{j+(n-1)/2}
    CHECK(forbidden_source(5, {1, 0}) == VertexId{false, 2});
    CHECK(forbidden_source(5, {1, 4}) == VertexId{false, 1});
    CHECK(!viable_pair(5, {1, 0}, {1, 2}));
    CHECK(viable_pair(5, {1, 0}, {1, 3}));
    // even n
    CHECK(forbidden_source(4, {1, 0}) == VertexId{true, 1});
    CHECK(forbidden_source(4, {2, 0}) == VertexId{false, 0});
    CHECK(!arrow_exists(4, {2, 0}, {false, 0}));
    CHECK(!arrow_exists(5, {1, 0}, {true, 0}));
    CHECK(canonical(5, {1, -1}).j == 4);
    CHECK_THROWS_AS(canonical(5, {2, 0}), std::invalid_argument);
}

TEST_CASE("normal forms of sample braids")
{
    CHECK(to_normal_form(parse_word("s1 s1 s2 s2", 5)).to_string() == "sigma_{P1}^2 sigma_{g^3P1}^2");
    CHECK(to_normal_form(parse_word("s2 s1 s2 s1^-1 s2 s1 s2^-1 s1 s2^3 s1", 5)).to_string() ==
          "sigma_{g^4P1} sigma_{g^3P1} sigma_{gP1} sigma_{P1} sigma_{g^3P1}^2 gamma^1");
    CHECK(to_normal_form(parse_word("s2^2 s1^3", 4)).to_string() == "sigma_{P2} sigma_{gP1}^2 gamma^1");
    CHECK(to_normal_form(parse_word("s2 s1", 7)).to_string() == "gamma^1");
    CHECK(to_normal_form(parse_word("", 7)).to_string() == "gamma^0");
}

TEST_CASE("twist words conjugate the generators")
{
    for (int n = 3; n <= 8; ++n)
        for (int j = 0; j < period(n); ++j)
            for (int which = 1; which <= (n % 2 == 0 ? 2 : 1); ++which) {
                const auto w = twist_word(n, {which, j});
                const auto g = gamma_word(n, j);
                CHECK(burau(w) * burau(g) == burau(g) * burau(generator_power(n, which, 1)));
            }
    // odd n: sigma_2 is the twist at (n+1)/2
    for (int n = 3; n <= 9; n += 2)
        CHECK(burau(twist_word(n, {1, (n + 1) / 2})) == burau(generator_power(n, 2, 1)));
}

TEST_CASE("normalisation preserves the braid and yields viable forms")
{
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 8; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            const auto w = oracle::random_word(n, 1 + trial % 12, rng);
            const auto nf = to_normal_form(w);
            INFO("n=" << n << " w=" << format_word(w));
            CHECK(is_viable(nf));
            CHECK(burau(to_word(nf)) == burau(w));
            CHECK(nf.total_mult() <= static_cast<long long>(w.letters.size()));
            CHECK(normalise(n, written_letters(nf)) == nf);
        }
}
