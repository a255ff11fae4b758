#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braiddyn/fusion.hpp"

namespace braiddyn {

struct Letter {
    int gen = 1;   // 1 or 2
    int sign = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Words compose right to left: the last letter acts first.
struct BraidWord {
    int n = 3;
    std::vector<Letter> letters;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

BraidWord parse_word(std::string_view text, int n);
std::string format_word(const BraidWord& w);

BraidWord free_reduce(BraidWord w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, long long k);
BraidWord generator_power(int n, int gen, long long k);
// gamma = s2 s1
BraidWord gamma_word(int n, long long k);
// chi = gamma^n (odd n) or gamma^(n/2) (even n)
BraidWord chi_word(int n, long long l);

// Integer combination of simple classes; negative coefficients allowed.
class SignedFusionVec {
public:
    SignedFusionVec() = default;
    explicit SignedFusionVec(int n);
    static SignedFusionVec simple(int n, int a, std::int64_t c = 1);

    int n() const { return n_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    double pf() const;

    SignedFusionVec& operator+=(const SignedFusionVec& o);
    SignedFusionVec operator-() const;
    friend SignedFusionVec operator*(const SignedFusionVec& a, const SignedFusionVec& b);
    friend bool operator==(const SignedFusionVec&, const SignedFusionVec&) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> c_;
};

// Laurent polynomial in q with SignedFusionVec coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(int n) : n_(n) {}
    static QPoly monomial(const SignedFusionVec& c, int e);

    int n() const { return n_; }
    const std::map<int, SignedFusionVec>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int e, const SignedFusionVec& c);
    double eval(double q) const;

    QPoly& operator+=(const QPoly& o);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly&, const QPoly&) = default;

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    int n_ = 0;
    std::map<int, SignedFusionVec> terms_;
};

// Row-major 2x2: e[0]=(0,0) e[1]=(0,1) e[2]=(1,0) e[3]=(1,1).
struct BurauMatrix {
    int n = 3;
    std::array<QPoly, 4> e;
    static BurauMatrix identity(int n);
    friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
    friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

BurauMatrix burau_generator(int n, int gen, int sign);
BurauMatrix burau(const BraidWord& w);

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
};

Mat2 coxeter_matrix(const BraidWord& w);
std::vector<std::complex<double>> positive_roots(int n);

// Automaton alphabet. which = 1: sigma of gamma^j P1; which = 2: sigma of
// gamma^j P2 (even n only).
struct TwistLetter {
    int which = 1;
    int j = 0;
    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

struct VertexId {
    bool u = false;
    int j = 0;
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

// Index period of twist letters and vertices: n (odd) or n/2 (even).
int period(int n);
int mod_period(int n, long long j);

TwistLetter canonical(int n, TwistLetter t);
VertexId target_vertex(int n, TwistLetter t);
VertexId forbidden_source(int n, TwistLetter t);
bool arrow_exists(int n, TwistLetter t, VertexId from);
// Can `later` be applied right after `earlier`?
bool viable_pair(int n, TwistLetter later, TwistLetter earlier);

std::string vertex_name(VertexId v);
std::string letter_name(int n, TwistLetter t);

// Letter of the extended alphabet used while rewriting.
struct ExtLetter {
    bool is_gamma = false;
    long long gamma_exp = 0;
    TwistLetter tw;

    static ExtLetter gamma(long long e) { return {true, e, {}}; }
    static ExtLetter twist(TwistLetter t) { return {false, 0, t}; }
};

struct Block {
    TwistLetter letter;
    int mult = 1;
    friend bool operator==(const Block&, const Block&) = default;
};

// blocks are in written order: blocks.front() acts last, gamma^s acts first.
struct NormalForm {
    int n = 3;
    std::vector<Block> blocks;
    long long gamma_exp = 0;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

    long long total_mult() const;
    // Letters in application order (gamma powers first).
    std::vector<ExtLetter> application_letters() const;
    std::string to_string() const;
    nlohmann::json to_json() const;
};

std::vector<ExtLetter> to_extended(const BraidWord& w);

// Moves every gamma to the right end without collapsing anything.
NormalForm push_gamma(int n, const std::vector<ExtLetter>& written);
// Pushes gammas and collapses non-viable pairs until none remain.
NormalForm normalise(int n, const std::vector<ExtLetter>& written);
NormalForm to_normal_form(const BraidWord& w);

std::vector<ExtLetter> written_letters(const NormalForm& nf);
bool is_viable(const NormalForm& nf);

BraidWord twist_word(int n, TwistLetter t);
BraidWord to_word(const NormalForm& nf);

}  // namespace braiddyn
