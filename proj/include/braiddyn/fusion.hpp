#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

namespace braiddyn {

// Throws std::invalid_argument unless n >= 3.
void require_rank(int n);

// Checked 64-bit arithmetic; throws std::overflow_error.
std::int64_t add_checked(std::int64_t a, std::int64_t b);
std::int64_t mul_checked(std::int64_t a, std::int64_t b);

// Coefficients of Delta_k(d), lowest degree first.
std::vector<std::int64_t> chebyshev(int k);

// Delta_k evaluated at d by the three-term recurrence.
double chebyshev_value(int k, double d);

// 2cos(pi/n)
double delta(int n);

// Element of the fusion ring of TLJ_n in the basis [Pi_0], ..., [Pi_{n-2}].
// Coefficients are nonnegative.
class FusionVec {
public:
    FusionVec() = default;
    explicit FusionVec(int n);
    FusionVec(int n, std::vector<std::int64_t> coeffs);

    static FusionVec simple(int n, int a);
    static FusionVec unit(int n) { return simple(n, 0); }

    int n() const { return n_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t operator[](int a) const { return c_.at(static_cast<std::size_t>(a)); }
    bool is_zero() const;

    FusionVec& operator+=(const FusionVec& o);
    friend FusionVec operator+(FusionVec a, const FusionVec& b) { return a += b; }
    friend bool operator==(const FusionVec& a, const FusionVec& b) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> c_;
};

double pf_dim(const FusionVec& v);
double pf_dim(int n, int a);

FusionVec fuse(int n, int a, int b);
FusionVec ring_mul(const FusionVec& u, const FusionVec& v);
inline FusionVec operator*(const FusionVec& u, const FusionVec& v) { return ring_mul(u, v); }

// Laurent polynomial in s = e^t with FusionVec coefficients. Zero
// coefficients are never stored.
class MassPoly {
public:
    MassPoly() = default;
    explicit MassPoly(int n) : n_(n) {}

    static MassPoly monomial(const FusionVec& c, int e);
    static MassPoly simple(int n, int a, int e) { return monomial(FusionVec::simple(n, a), e); }
    static MassPoly one(int n) { return simple(n, 0, 0); }

    int n() const { return n_; }
    const std::map<int, FusionVec>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void add_term(int e, const FusionVec& c);
    MassPoly& operator+=(const MassPoly& o);
    friend MassPoly operator+(MassPoly a, const MassPoly& b) { return a += b; }
    friend bool operator==(const MassPoly& a, const MassPoly& b) = default;

    // Multiplies by s^e.
    MassPoly shifted(int e) const;

    nlohmann::json to_json() const;
    static MassPoly from_json(int n, const nlohmann::json& j);

private:
    int n_ = 0;
    std::map<int, FusionVec> terms_;
};

MassPoly mass_mul(const MassPoly& p, const MassPoly& q);
inline MassPoly operator*(const MassPoly& p, const MassPoly& q) { return mass_mul(p, q); }
MassPoly operator*(const MassPoly& p, const FusionVec& c);

double eval_mass(const MassPoly& p, double t);

}  // namespace braiddyn
