#include "braiddyn/fusion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace braiddyn {

void require_rank(int n)
{
    if (n < 3)
        throw std::invalid_argument("n must be at least 3, got " + std::to_string(n));
}

std::int64_t add_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in fusion coefficient");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in fusion coefficient");
    return r;
}

std::vector<std::int64_t> chebyshev(int k)
{
    if (k < 0)
        throw std::invalid_argument("chebyshev index must be nonnegative");
    std::vector<std::int64_t> prev{1}, cur{1};
    if (k == 0)
        return cur;
    cur = {0, 1};
    for (int i = 1; i < k; ++i) {
        // next = d*cur - prev
        std::vector<std::int64_t> next(cur.size() + 1, 0);
        for (std::size_t e = 0; e < cur.size(); ++e)
            next[e + 1] = cur[e];
        for (std::size_t e = 0; e < prev.size(); ++e)
            next[e] = add_checked(next[e], -prev[e]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double chebyshev_value(int k, double d)
{
    double prev = 1.0, cur = d;
    if (k == 0)
        return 1.0;
    for (int i = 1; i < k; ++i) {
        double next = d * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double delta(int n)
{
    require_rank(n);
    return 2.0 * std::cos(std::numbers::pi / n);
}

FusionVec::FusionVec(int n) : n_(n), c_(static_cast<std::size_t>(n - 1), 0)
{
    require_rank(n);
}

FusionVec::FusionVec(int n, std::vector<std::int64_t> coeffs) : n_(n), c_(std::move(coeffs))
{
    require_rank(n);
    if (c_.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("fusion vector needs n-1 coefficients");
    for (auto x : c_)
        if (x < 0)
            throw std::invalid_argument("fusion coefficients must be nonnegative");
}

FusionVec FusionVec::simple(int n, int a)
{
    FusionVec v(n);
    if (a < 0 || a > n - 2)
        throw std::out_of_range("label " + std::to_string(a) + " outside [0, n-2]");
    v.c_[static_cast<std::size_t>(a)] = 1;
    return v;
}

bool FusionVec::is_zero() const
{
    for (auto x : c_)
        if (x != 0)
            return false;
    return true;
}

FusionVec& FusionVec::operator+=(const FusionVec& o)
{
    if (n_ == 0) {
        *this = o;
        return *this;
    }
    if (o.n_ != n_)
        throw std::invalid_argument("fusion vectors for different n");
    for (std::size_t a = 0; a < c_.size(); ++a)
        c_[a] = add_checked(c_[a], o.c_[a]);
    return *this;
}

double pf_dim(int n, int a)
{
    return chebyshev_value(a, delta(n));
}

double pf_dim(const FusionVec& v)
{
    require_rank(v.n());
    const double d = delta(v.n());
    double prev = 1.0, cur = d, sum = 0.0;
    for (std::size_t a = 0; a < v.coeffs().size(); ++a) {
        double da = a == 0 ? 1.0 : cur;
        sum += static_cast<double>(v.coeffs()[a]) * da;
        if (a >= 1) {
            double next = d * cur - prev;
            prev = cur;
            cur = next;
        }
    }
    return sum;
}

FusionVec fuse(int n, int a, int b)
{
    require_rank(n);
    if (a < 0 || a > n - 2 || b < 0 || b > n - 2)
        throw std::out_of_range("fusion label outside [0, n-2]");
    std::vector<std::int64_t> c(static_cast<std::size_t>(n - 1), 0);
    const int top = a + b <= n - 2 ? a + b : 2 * n - a - b - 4;
    for (int x = std::abs(a - b); x <= top; x += 2)
        c[static_cast<std::size_t>(x)] = 1;
    return FusionVec(n, std::move(c));
}

FusionVec ring_mul(const FusionVec& u, const FusionVec& v)
{
    if (u.n() != v.n())
        throw std::invalid_argument("ring_mul: mismatched n");
    const int n = u.n();
    std::vector<std::int64_t> c(static_cast<std::size_t>(n - 1), 0);
    for (int a = 0; a <= n - 2; ++a) {
        if (u[a] == 0)
            continue;
        for (int b = 0; b <= n - 2; ++b) {
            if (v[b] == 0)
                continue;
            const std::int64_t m = mul_checked(u[a], v[b]);
            const int top = a + b <= n - 2 ? a + b : 2 * n - a - b - 4;
            for (int x = std::abs(a - b); x <= top; x += 2)
                c[static_cast<std::size_t>(x)] = add_checked(c[static_cast<std::size_t>(x)], m);
        }
    }
    return FusionVec(n, std::move(c));
}

MassPoly MassPoly::monomial(const FusionVec& c, int e)
{
    MassPoly p(c.n());
    p.add_term(e, c);
    return p;
}

bool MassPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == FusionVec::unit(n_);
}

void MassPoly::add_term(int e, const FusionVec& c)
{
    if (n_ == 0)
        n_ = c.n();
    else if (c.n() != n_)
        throw std::invalid_argument("mass polynomial: mismatched n");
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end())
        terms_.emplace(e, c);
    else
        it->second += c;
}

MassPoly& MassPoly::operator+=(const MassPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    if (n_ == 0)
        n_ = o.n_;
    return *this;
}

MassPoly MassPoly::shifted(int e) const
{
    MassPoly r(n_);
    for (const auto& [x, c] : terms_)
        r.terms_.emplace(x + e, c);
    return r;
}

nlohmann::json MassPoly::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({{"e", e}, {"coeffs", c.coeffs()}});
    return arr;
}

MassPoly MassPoly::from_json(int n, const nlohmann::json& j)
{
    MassPoly p(n);
    for (const auto& t : j)
        p.add_term(t.at("e").get<int>(), FusionVec(n, t.at("coeffs").get<std::vector<std::int64_t>>()));
    return p;
}

MassPoly mass_mul(const MassPoly& p, const MassPoly& q)
{
    if (p.n() != 0 && q.n() != 0 && p.n() != q.n())
        throw std::invalid_argument("mass_mul: mismatched n");
    MassPoly r(p.n() != 0 ? p.n() : q.n());
    for (const auto& [e1, c1] : p.terms())
        for (const auto& [e2, c2] : q.terms())
            r.add_term(e1 + e2, ring_mul(c1, c2));
    return r;
}

MassPoly operator*(const MassPoly& p, const FusionVec& c)
{
    return mass_mul(p, MassPoly::monomial(c, 0));
}

double eval_mass(const MassPoly& p, double t)
{
    double s = 0.0;
    for (const auto& [e, c] : p.terms())
        s += pf_dim(c) * std::exp(e * t);
    return s;
}

}  // namespace braiddyn
