#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace braiddyn;

namespace oracle {

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_mod(Poly a, const Poly& m)
{
    const std::size_t dm = m.size() - 1;
    if (m.back() != 1)
        throw std::invalid_argument("poly_mod: modulus must be monic");
    while (a.size() > dm) {
        const std::int64_t c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] -= c * m[i];
        a.pop_back();
    }
    return a;
}

Poly cheb(int k)
{
    Poly prev{1}, cur{0, 1};  // Delta_0 = 1, Delta_1 = d
    if (k == 0)
        return prev;
    for (int i = 1; i < k; ++i) {
        Poly next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j)
            next[j + 1] += cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j)
            next[j] -= prev[j];
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<std::int64_t> brute_fuse(int n, int a, int b)
{
    Poly p = poly_mod(poly_mul(cheb(a), cheb(b)), cheb(n - 1));
    std::vector<std::int64_t> out(static_cast<std::size_t>(n - 1), 0);
    // peel off leading terms; Delta_k is monic of degree k
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        const std::int64_t c = p[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        out[static_cast<std::size_t>(k)] = c;
        const Poly ck = cheb(k);
        for (std::size_t i = 0; i < ck.size(); ++i)
            p[i] -= c * ck[i];
    }
    return out;
}

double qdim(int n, int a)
{
    return std::sin((a + 1) * std::numbers::pi / n) / std::sin(std::numbers::pi / n);
}

namespace {

Vec apply_s(int n, int gen, Vec v)
{
    const double d = 2 * std::cos(std::numbers::pi / n);
    if (gen == 1)
        return {-v[0] + d * v[1], v[1]};
    return {v[0], d * v[0] - v[1]};
}

Vec apply_gamma(int n, Vec v, int k)
{
    for (int i = 0; i < k; ++i)
        v = apply_s(n, 2, apply_s(n, 1, v));
    return v;
}

// inverse of s_i is s_i on the K-group, so gamma^-1 = s1 s2
Vec apply_gamma_inv(int n, Vec v, int k)
{
    for (int i = 0; i < k; ++i)
        v = apply_s(n, 1, apply_s(n, 2, v));
    return v;
}

}  // namespace

Vec unit_class(int n, Family f, int j)
{
    Vec v = f == Family::V2 ? Vec{0, 1} : Vec{1, 0};
    if (f == Family::U)
        v = apply_s(n, 2, v);
    return apply_gamma(n, v, j);
}

std::complex<double> central_charge(int n, Vec v)
{
    return v[0] + v[1] * std::polar(1.0, std::numbers::pi * (1.0 - 1.0 / n));
}

std::complex<double> unit_charge(int n, const SemistableUnit& u)
{
    const double sign = u.level % 2 == 0 ? 1.0 : -1.0;
    return qdim(n, u.label) * sign * central_charge(n, unit_class(n, u.fam, u.j));
}

std::complex<double> letter_charge_k(int n, TwistLetter t, const SemistableUnit& u)
{
    const double sign = u.level % 2 == 0 ? 1.0 : -1.0;
    Vec v = unit_class(n, u.fam, u.j);
    v = apply_gamma_inv(n, v, t.j);
    v = apply_s(n, t.which, v);
    v = apply_gamma(n, v, t.j);
    return qdim(n, u.label) * sign * central_charge(n, v);
}

std::complex<double> support_charge(int n, const Support& s)
{
    std::complex<double> z = 0;
    for (const auto& term : s.terms) {
        double w = 0;
        for (const auto& [e, fv] : term.weight.terms()) {
            double c = 0;
            for (int a = 0; a < n - 1; ++a)
                c += static_cast<double>(fv[a]) * qdim(n, a);
            w += (e % 2 == 0 ? 1.0 : -1.0) * c;
        }
        z += w * unit_charge(n, term.unit);
    }
    return z;
}

TwistInput engine_unit(int n, Family f, int j)
{
    TwistInput c = RawObject{f == Family::V2 ? 2 : 1, 0, 0, 0};
    if (f == Family::U)
        c = twist_segment(n, 2, c);
    for (int i = 0; i < j; ++i) {
        c = twist_segment(n, 1, c);
        c = twist_segment(n, 2, c);
    }
    return c;
}

std::map<int, double> pf_coeffs(const MassPoly& p)
{
    std::map<int, double> out;
    for (const auto& [e, fv] : p.terms()) {
        double c = 0;
        for (int a = 0; a < fv.n() - 1; ++a)
            c += static_cast<double>(fv[a]) * qdim(fv.n(), a);
        out[e] = c;
    }
    return out;
}

bool same_pf(const MassPoly& a, const MassPoly& b)
{
    const auto x = pf_coeffs(a), y = pf_coeffs(b);
    if (x.size() != y.size())
        return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
        if (i->first != j->first || std::abs(i->second - j->second) > 1e-9 * (1 + std::abs(i->second)))
            return false;
    return true;
}

bool same_pf(const std::array<std::array<MassPoly, 2>, 2>& a, const std::array<std::array<MassPoly, 2>, 2>& b)
{
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!same_pf(a[r][c], b[r][c]))
                return false;
    return true;
}

BraidWord random_word(int n, int len, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, 3);
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) {
        const int r = pick(rng);
        w.letters.push_back({1 + r / 2, r % 2 == 0 ? 1 : -1});
    }
    return w;
}

bool find_conjugator(const BraidWord& out, const BraidWord& in, int max_len, BraidWord* found)
{
    const int n = in.n;
    const BurauMatrix bo = burau(out), bi = burau(in);
    std::vector<BraidWord> layer{BraidWord{n, {}}};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<BraidWord> next;
        for (const auto& c : layer) {
            const BurauMatrix bc = burau(c);
            if (bo * bc == bc * bi) {
                if (found != nullptr)
                    *found = c;
                return true;
            }
            if (len == max_len)
                continue;
            for (int g = 1; g <= 2; ++g)
                for (int s : {1, -1}) {
                    if (!c.letters.empty() && c.letters.back() == Letter{g, -s})
                        continue;
                    BraidWord w = c;
                    w.letters.push_back({g, s});
                    next.push_back(std::move(w));
                }
        }
        layer = std::move(next);
    }
    return false;
}

}  // namespace oracle
