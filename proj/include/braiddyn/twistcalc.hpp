#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "braiddyn/braidword.hpp"
#include "braiddyn/fusion.hpp"

namespace braiddyn {

using Rational = boost::rational<long long>;

// P_i (x) Pi_a <k>[l]. Masses only see level = l - k.
struct RawObject {
    int vertex = 1;
    int label = 0;
    int k = 0;
    int l = 0;
    int level() const { return l - k; }
    friend bool operator==(const RawObject&, const RawObject&) = default;
};

// Two-term complex head -> tail.
struct Segment {
    RawObject head;
    RawObject tail;
    friend bool operator==(const Segment&, const Segment&) = default;
};

using TwistInput = std::variant<RawObject, Segment>;

// sigma_{P_i} applied to a one- or two-term complex of the shapes that occur
// along alternating words. Throws std::invalid_argument on other shapes.
TwistInput twist_segment(int n, int i, const TwistInput& c);

// Sum of the terms of c, each P_i (x) Pi_a <k>[l] read as [Pi_a] s^{l-k}
// times the unit P_i; returns (coefficient of P1, coefficient of P2).
std::array<MassPoly, 2> term_weights(int n, const TwistInput& c);

enum class Family { V1, V2, U };  // gamma^j P1, gamma^j P2, gamma^j sigma_2 P1

struct SemistableUnit {
    Family fam = Family::V1;
    int j = 0;
    int label = 0;
    int level = 0;
    friend bool operator==(const SemistableUnit&, const SemistableUnit&) = default;
};

std::string unit_name(const SemistableUnit& u);

Rational base_phase(int n, Family f, int j);
Rational phase(int n, const SemistableUnit& u);
// m_t of a unit: pf(Pi_label) * exp(phase * t)
double unit_mass(int n, const SemistableUnit& u, double t);

SemistableUnit gamma_on_unit(int n, const SemistableUnit& u, int dir);

// Scalar picked up by gamma on the last index: gamma(X_{p-1}) = X_0 * W.
MassPoly wrap_factor(int n);
MassPoly wrap_factor_inverse(int n);

std::array<SemistableUnit, 2> vertex_basis(int n, VertexId v);

struct SupportTerm {
    SemistableUnit unit;  // undecorated basis unit of the target vertex
    MassPoly weight;
};

struct Support {
    std::vector<SupportTerm> terms;
    std::optional<VertexId> vertex;
    double mass(int n, double t) const;
};

// Weight carried by the decoration of u: [Pi_label] s^level.
MassPoly decoration(int n, const SemistableUnit& u);

// Column of the base tables: sigma_1 into v0 or sigma_2 into u0 (even n)
// applied to the canonical unit (f, j). Throws if the source is forbidden.
std::array<MassPoly, 2> base_column(int n, int which, Family f, int j, VertexId source);

// HN support of letter(u) for u in the basis of `source`, written in the
// basis of the target vertex.
Support letter_support(int n, TwistLetter letter, VertexId source, const SemistableUnit& u);

}  // namespace braiddyn
