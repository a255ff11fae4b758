#include "braiddyn/braidword.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace braiddyn {

namespace {

constexpr long long kMaxExponent = 1'000'000;

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

BraidWord parse_word(std::string_view text, int n)
{
    require_rank(n);
    BraidWord w{n, {}};
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (text[i] != 's')
            throw ParseError(i, "expected 's1' or 's2'");
        ++i;
        if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
            throw ParseError(i, "expected generator index 1 or 2");
        const int gen = text[i] - '0';
        ++i;
        long long k = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            int sgn = 1;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                sgn = text[i] == '-' ? -1 : 1;
                ++i;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError(i, "expected decimal exponent");
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > kMaxExponent)
                    throw ParseError(i, "exponent too large");
                ++i;
            }
            if (v == 0)
                throw ParseError(i - 1, "exponent must be nonzero");
            k = sgn * v;
        }
        if (i < text.size() && !is_space(text[i]))
            throw ParseError(i, "unexpected character after token starting at " + std::to_string(start));
        for (long long r = 0; r < std::llabs(k); ++r)
            w.letters.push_back({gen, k > 0 ? 1 : -1});
    }
    return free_reduce(std::move(w));
}

std::string format_word(const BraidWord& w)
{
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i])
            ++j;
        const long long k = static_cast<long long>(j - i) * w.letters[i].sign;
        if (!first)
            os << ' ';
        first = false;
        os << 's' << w.letters[i].gen;
        if (k != 1)
            os << '^' << k;
        i = j;
    }
    return os.str();
}

BraidWord free_reduce(BraidWord w)
{
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (const auto& l : w.letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    w.letters = std::move(out);
    return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("concat: words for different n");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(std::move(r));
}

BraidWord inverse(const BraidWord& w)
{
    BraidWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->gen, -it->sign});
    return r;
}

BraidWord power(const BraidWord& w, long long k)
{
    const BraidWord base = k >= 0 ? w : inverse(w);
    BraidWord r{w.n, {}};
    for (long long i = 0; i < std::llabs(k); ++i)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return free_reduce(std::move(r));
}

BraidWord generator_power(int n, int gen, long long k)
{
    BraidWord r{n, {}};
    for (long long i = 0; i < std::llabs(k); ++i)
        r.letters.push_back({gen, k > 0 ? 1 : -1});
    return r;
}

BraidWord gamma_word(int n, long long k)
{
    return power(BraidWord{n, {{2, 1}, {1, 1}}}, k);
}

BraidWord chi_word(int n, long long l)
{
    return gamma_word(n, l * period(n));
}

// ---------------------------------------------------------------- Burau

SignedFusionVec::SignedFusionVec(int n) : n_(n), c_(static_cast<std::size_t>(n - 1), 0)
{
    require_rank(n);
}

SignedFusionVec SignedFusionVec::simple(int n, int a, std::int64_t c)
{
    SignedFusionVec v(n);
    v.c_.at(static_cast<std::size_t>(a)) = c;
    return v;
}

bool SignedFusionVec::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

double SignedFusionVec::pf() const
{
    double s = 0;
    for (std::size_t a = 0; a < c_.size(); ++a)
        if (c_[a] != 0)
            s += static_cast<double>(c_[a]) * pf_dim(n_, static_cast<int>(a));
    return s;
}

SignedFusionVec& SignedFusionVec::operator+=(const SignedFusionVec& o)
{
    if (n_ == 0) {
        *this = o;
        return *this;
    }
    if (o.n_ != n_)
        throw std::invalid_argument("signed fusion vectors for different n");
    for (std::size_t a = 0; a < c_.size(); ++a)
        c_[a] = add_checked(c_[a], o.c_[a]);
    return *this;
}

SignedFusionVec SignedFusionVec::operator-() const
{
    SignedFusionVec r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

SignedFusionVec operator*(const SignedFusionVec& u, const SignedFusionVec& v)
{
    if (u.n_ != v.n_)
        throw std::invalid_argument("signed fusion product: mismatched n");
    const int n = u.n_;
    SignedFusionVec r(n);
    for (int a = 0; a <= n - 2; ++a) {
        if (u.c_[a] == 0)
            continue;
        for (int b = 0; b <= n - 2; ++b) {
            if (v.c_[b] == 0)
                continue;
            const std::int64_t m = mul_checked(u.c_[a], v.c_[b]);
            const int top = a + b <= n - 2 ? a + b : 2 * n - a - b - 4;
            for (int x = std::abs(a - b); x <= top; x += 2)
                r.c_[x] = add_checked(r.c_[x], m);
        }
    }
    return r;
}

QPoly QPoly::monomial(const SignedFusionVec& c, int e)
{
    QPoly p(c.n());
    p.add_term(e, c);
    return p;
}

void QPoly::add_term(int e, const SignedFusionVec& c)
{
    if (n_ == 0)
        n_ = c.n();
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

double QPoly::eval(double q) const
{
    double s = 0;
    for (const auto& [e, c] : terms_)
        s += c.pf() * std::pow(q, e);
    return s;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (n_ == 0)
        n_ = o.n_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly r(a.n_ != 0 ? a.n_ : b.n_);
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::string QPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::ostringstream coef;
        int parts = 0;
        for (std::size_t a = 0; a < c.coeffs().size(); ++a) {
            const auto x = c.coeffs()[a];
            if (x == 0)
                continue;
            if (parts > 0)
                coef << (x > 0 ? " + " : " - ");
            else if (x < 0)
                coef << '-';
            const auto ax = x < 0 ? -x : x;
            if (ax != 1)
                coef << ax << '*';
            coef << "[P" << a << ']';
            ++parts;
        }
        if (!first_term)
            os << " + ";
        first_term = false;
        os << (parts > 1 ? "(" + coef.str() + ")" : coef.str());
        if (e != 0)
            os << "*q^" << e;
    }
    return os.str();
}

nlohmann::json QPoly::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({{"e", e}, {"coeffs", c.coeffs()}});
    return arr;
}

BurauMatrix BurauMatrix::identity(int n)
{
    BurauMatrix m;
    m.n = n;
    m.e = {QPoly::monomial(SignedFusionVec::simple(n, 0), 0), QPoly(n), QPoly(n),
           QPoly::monomial(SignedFusionVec::simple(n, 0), 0)};
    return m;
}

BurauMatrix operator*(const BurauMatrix& x, const BurauMatrix& y)
{
    BurauMatrix r;
    r.n = x.n;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            QPoly s(x.n);
            s += x.e[2 * i] * y.e[j];
            s += x.e[2 * i + 1] * y.e[2 + j];
            r.e[2 * i + j] = std::move(s);
        }
    return r;
}

BurauMatrix burau_generator(int n, int gen, int sign)
{
    require_rank(n);
    const auto one = SignedFusionVec::simple(n, 0, 1);
    const auto mone = SignedFusionVec::simple(n, 0, -1);
    const auto mdelta = SignedFusionVec::simple(n, 1, -1);
    const int sq = sign > 0 ? 2 : -2;
    const int lin = sign > 0 ? 1 : -1;
    BurauMatrix m;
    m.n = n;
    if (gen == 1)
        m.e = {QPoly::monomial(mone, sq), QPoly::monomial(mdelta, lin), QPoly(n), QPoly::monomial(one, 0)};
    else
        m.e = {QPoly::monomial(one, 0), QPoly(n), QPoly::monomial(mdelta, lin), QPoly::monomial(mone, sq)};
    return m;
}

BurauMatrix burau(const BraidWord& w)
{
    const std::array<BurauMatrix, 4> gens{burau_generator(w.n, 1, 1), burau_generator(w.n, 1, -1),
                                          burau_generator(w.n, 2, 1), burau_generator(w.n, 2, -1)};
    BurauMatrix m = BurauMatrix::identity(w.n);
    for (const auto& l : w.letters)
        m = m * gens[static_cast<std::size_t>(2 * (l.gen - 1) + (l.sign > 0 ? 0 : 1))];
    return m;
}

Mat2 coxeter_matrix(const BraidWord& w)
{
    const double d = delta(w.n);
    const Mat2 s1{-1, d, 0, 1}, s2{1, 0, d, -1};
    Mat2 m;
    for (const auto& l : w.letters)
        m = m * (l.gen == 1 ? s1 : s2);
    return m;
}

std::vector<std::complex<double>> positive_roots(int n)
{
    require_rank(n);
    const std::complex<double> z2 = std::polar(1.0, std::numbers::pi * (1.0 - 1.0 / n));
    std::vector<std::complex<double>> roots;
    // alternating words ... s1 s2 applied to alpha1 and alpha2
    for (int start = 1; start <= 2; ++start) {
        for (int len = 0; len < n; ++len) {
            BraidWord w{n, {}};
            int g = start == 1 ? 2 : 1;
            for (int i = 0; i < len; ++i) {
                w.letters.insert(w.letters.begin(), Letter{g, 1});
                g = 3 - g;
            }
            const Mat2 m = coxeter_matrix(w);
            const double x = start == 1 ? m.a : m.b;
            const double y = start == 1 ? m.c : m.d;
            const std::complex<double> z = x + y * z2;
            const double ang = std::arg(z);
            if (ang < -1e-9 || ang > std::numbers::pi - 1e-9)
                continue;
            bool dup = false;
            for (const auto& r : roots)
                if (std::abs(r - z) < 1e-9)
                    dup = true;
            if (!dup)
                roots.push_back(z);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return std::arg(a) < std::arg(b); });
    return roots;
}

// ---------------------------------------------------------------- alphabet

int period(int n)
{
    require_rank(n);
    return n % 2 == 1 ? n : n / 2;
}

int mod_period(int n, long long j)
{
    const long long p = period(n);
    return static_cast<int>(((j % p) + p) % p);
}

TwistLetter canonical(int n, TwistLetter t)
{
    if (t.which != 1 && (t.which != 2 || n % 2 == 1))
        throw std::invalid_argument("twist letter family not available for this n");
    t.j = mod_period(n, t.j);
    return t;
}

VertexId target_vertex(int n, TwistLetter t)
{
    t = canonical(n, t);
    return {t.which == 2, t.j};
}

VertexId forbidden_source(int n, TwistLetter t)
{
    t = canonical(n, t);
    if (t.which == 2)
        return {false, t.j};
    if (n % 2 == 1)
        return {false, mod_period(n, t.j + (n - 1) / 2)};
    return {true, mod_period(n, t.j + n / 2 - 1)};
}

bool arrow_exists(int n, TwistLetter t, VertexId from)
{
    if (n % 2 == 1 && from.u)
        return false;
    from.j = mod_period(n, from.j);
    return !(forbidden_source(n, t) == from);
}

bool viable_pair(int n, TwistLetter later, TwistLetter earlier)
{
    return arrow_exists(n, later, target_vertex(n, earlier));
}

std::string vertex_name(VertexId v)
{
    return (v.u ? "u" : "v") + std::to_string(v.j);
}

std::string letter_name(int n, TwistLetter t)
{
    t = canonical(n, t);
    std::string g = t.j == 0 ? "" : t.j == 1 ? "g" : "g^" + std::to_string(t.j);
    return "sigma_{" + g + (t.which == 1 ? "P1" : "P2") + "}";
}

long long NormalForm::total_mult() const
{
    long long s = 0;
    for (const auto& b : blocks)
        s += b.mult;
    return s;
}

std::vector<ExtLetter> NormalForm::application_letters() const
{
    std::vector<ExtLetter> out;
    if (gamma_exp != 0)
        out.push_back(ExtLetter::gamma(gamma_exp));
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        for (int r = 0; r < it->mult; ++r)
            out.push_back(ExtLetter::twist(it->letter));
    return out;
}

std::string NormalForm::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& b : blocks) {
        if (!first)
            os << ' ';
        first = false;
        os << letter_name(n, b.letter);
        if (b.mult != 1)
            os << '^' << b.mult;
    }
    if (gamma_exp != 0 || first) {
        if (!first)
            os << ' ';
        os << "gamma^" << gamma_exp;
    }
    return os.str();
}

nlohmann::json NormalForm::to_json() const
{
    auto bl = nlohmann::json::array();
    for (const auto& b : blocks)
        bl.push_back({{"family", b.letter.which}, {"j", b.letter.j}, {"mult", b.mult},
                      {"letter", letter_name(n, b.letter)}});
    return {{"blocks", bl}, {"gamma", gamma_exp}, {"text", to_string()},
            {"word", format_word(to_word(*this))}};
}

std::vector<ExtLetter> to_extended(const BraidWord& w)
{
    const int n = w.n;
    const TwistLetter t1{1, 0};
    const TwistLetter t2 = n % 2 == 1 ? TwistLetter{1, (n + 1) / 2} : TwistLetter{2, 0};
    std::vector<ExtLetter> out;
    for (const auto& l : w.letters) {
        if (l.gen == 1 && l.sign > 0) {
            out.push_back(ExtLetter::twist(t1));
        } else if (l.gen == 2 && l.sign > 0) {
            out.push_back(ExtLetter::twist(t2));
        } else if (l.gen == 1) {
            // s1^-1 = gamma^-1 s2
            out.push_back(ExtLetter::gamma(-1));
            out.push_back(ExtLetter::twist(t2));
        } else {
            // s2^-1 = s1 gamma^-1
            out.push_back(ExtLetter::twist(t1));
            out.push_back(ExtLetter::gamma(-1));
        }
    }
    return out;
}

namespace {

std::vector<Block> to_blocks(const std::vector<TwistLetter>& flat)
{
    std::vector<Block> blocks;
    for (const auto& t : flat) {
        if (!blocks.empty() && blocks.back().letter == t)
            ++blocks.back().mult;
        else
            blocks.push_back({t, 1});
    }
    return blocks;
}

std::vector<TwistLetter> flatten(const NormalForm& nf)
{
    std::vector<TwistLetter> flat;
    for (const auto& b : nf.blocks)
        for (int r = 0; r < b.mult; ++r)
            flat.push_back(b.letter);
    return flat;
}

}  // namespace

NormalForm push_gamma(int n, const std::vector<ExtLetter>& written)
{
    long long g = 0;
    std::vector<TwistLetter> flat;
    for (const auto& l : written) {
        if (l.is_gamma)
            g += l.gamma_exp;
        else
            flat.push_back(canonical(n, {l.tw.which, mod_period(n, l.tw.j + g)}));
    }
    return NormalForm{n, to_blocks(flat), g};
}

std::vector<ExtLetter> written_letters(const NormalForm& nf)
{
    std::vector<ExtLetter> out;
    for (const auto& t : flatten(nf))
        out.push_back(ExtLetter::twist(t));
    if (nf.gamma_exp != 0)
        out.push_back(ExtLetter::gamma(nf.gamma_exp));
    return out;
}

NormalForm normalise(int n, const std::vector<ExtLetter>& written)
{
    NormalForm nf = push_gamma(n, written);
    for (;;) {
        const auto flat = flatten(nf);
        // rightmost non-viable pair first, i.e. earliest in application order
        std::ptrdiff_t hit = -1;
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(flat.size()) - 2; i >= 0; --i)
            if (!viable_pair(n, flat[i], flat[i + 1])) {
                hit = i;
                break;
            }
        if (hit < 0)
            return nf;
        std::vector<ExtLetter> next;
        for (std::ptrdiff_t i = 0; i < hit; ++i)
            next.push_back(ExtLetter::twist(flat[i]));
        next.push_back(ExtLetter::gamma(1));
        for (std::size_t i = static_cast<std::size_t>(hit) + 2; i < flat.size(); ++i)
            next.push_back(ExtLetter::twist(flat[i]));
        next.push_back(ExtLetter::gamma(nf.gamma_exp));
        nf = push_gamma(n, next);
    }
}

NormalForm to_normal_form(const BraidWord& w)
{
    return normalise(w.n, to_extended(w));
}

bool is_viable(const NormalForm& nf)
{
    const auto flat = flatten(nf);
    for (std::size_t i = 0; i + 1 < flat.size(); ++i)
        if (!viable_pair(nf.n, flat[i], flat[i + 1]))
            return false;
    return true;
}

BraidWord twist_word(int n, TwistLetter t)
{
    t = canonical(n, t);
    const BraidWord g = gamma_word(n, t.j);
    return concat(concat(g, generator_power(n, t.which, 1)), inverse(g));
}

BraidWord to_word(const NormalForm& nf)
{
    BraidWord w{nf.n, {}};
    for (const auto& b : nf.blocks)
        w = concat(w, power(twist_word(nf.n, b.letter), b.mult));
    return concat(w, gamma_word(nf.n, nf.gamma_exp));
}

}  // namespace braiddyn
