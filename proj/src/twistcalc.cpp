#include "braiddyn/twistcalc.hpp"

#include <cmath>
#include <stdexcept>

namespace braiddyn {

namespace {

RawObject flip(int n, RawObject o)
{
    o.label = n - 2 - o.label;
    return o;
}

Segment flip(int n, Segment s)
{
    return {flip(n, s.head), flip(n, s.tail)};
}

TwistInput twist_standard(int n, int i, const Segment& s)
{
    const auto& h = s.head;
    const auto& t = s.tail;
    if (t.vertex != i || h.vertex == i)
        throw std::invalid_argument("twist_segment: tail must sit at the twisting vertex");
    if (t.label != h.label - 1 || t.k != h.k - 1 || t.l != h.l - 1)
        throw std::invalid_argument("twist_segment: not a segment of the expected shape");
    if (h.label == n - 2)
        return h;
    return Segment{{i, h.label + 1, h.k + 1, h.l + 1}, h};
}

}  // namespace

TwistInput twist_segment(int n, int i, const TwistInput& c)
{
    require_rank(n);
    if (i != 1 && i != 2)
        throw std::invalid_argument("twist_segment: vertex must be 1 or 2");
    if (const auto* o = std::get_if<RawObject>(&c)) {
        if (o->vertex == i)
            return RawObject{o->vertex, o->label, o->k + 2, o->l + 1};
        if (o->label == 0)
            return Segment{{i, 1, o->k + 1, o->l + 1}, *o};
        if (o->label == n - 2)
            return flip(n, Segment{{i, 1, o->k + 1, o->l + 1}, flip(n, *o)});
        throw std::invalid_argument("twist_segment: object label must be 0 or n-2");
    }
    const auto& s = std::get<Segment>(c);
    if (s.tail.label == s.head.label - 1)
        return twist_standard(n, i, s);
    if (s.tail.label == s.head.label + 1) {
        auto r = twist_standard(n, i, flip(n, s));
        if (auto* o = std::get_if<RawObject>(&r))
            return flip(n, *o);
        return flip(n, std::get<Segment>(r));
    }
    throw std::invalid_argument("twist_segment: labels of a segment must differ by one");
}

std::array<MassPoly, 2> term_weights(int n, const TwistInput& c)
{
    std::array<MassPoly, 2> w{MassPoly(n), MassPoly(n)};
    auto add = [&](const RawObject& o) {
        w[static_cast<std::size_t>(o.vertex - 1)] += MassPoly::simple(n, o.label, o.level());
    };
    if (const auto* o = std::get_if<RawObject>(&c)) {
        add(*o);
    } else {
        add(std::get<Segment>(c).head);
        add(std::get<Segment>(c).tail);
    }
    return w;
}

std::string unit_name(const SemistableUnit& u)
{
    std::string g = u.j == 0 ? "" : u.j == 1 ? "g" : "g^" + std::to_string(u.j);
    std::string base = u.fam == Family::V1 ? "P1" : u.fam == Family::V2 ? "P2" : "s2P1";
    std::string s = g + base;
    if (u.label != 0)
        s += "(x)Pi" + std::to_string(u.label);
    if (u.level != 0)
        s += "{" + std::to_string(u.level) + "}";
    return s;
}

Rational base_phase(int n, Family f, int j)
{
    switch (f) {
    case Family::V1:
        return Rational(-2 * j, n);
    case Family::V2:
        return Rational(1) - Rational(2 * j + 1, n);
    case Family::U:
        return Rational(1) - Rational(2 * j + 2, n);
    }
    return {};
}

Rational phase(int n, const SemistableUnit& u)
{
    return base_phase(n, u.fam, u.j) + Rational(u.level);
}

double unit_mass(int n, const SemistableUnit& u, double t)
{
    const Rational ph = phase(n, u);
    return pf_dim(n, u.label) * std::exp(boost::rational_cast<double>(ph) * t);
}

SemistableUnit gamma_on_unit(int n, const SemistableUnit& u, int dir)
{
    if (dir != 1 && dir != -1)
        throw std::invalid_argument("gamma_on_unit: dir must be +1 or -1");
    if (u.fam == Family::U && n % 2 == 1)
        throw std::invalid_argument("gamma_on_unit: U units exist only for even n");
    const int p = period(n);
    SemistableUnit r = u;
    r.j = u.j + dir;
    if (r.j >= 0 && r.j < p)
        return r;
    r.j = mod_period(n, r.j);
    if (n % 2 == 1) {
        r.level += dir > 0 ? -2 : 2;
    } else {
        r.level += dir > 0 ? -1 : 1;
        r.label = n - 2 - r.label;
    }
    return r;
}

MassPoly wrap_factor(int n)
{
    return n % 2 == 1 ? MassPoly::simple(n, 0, -2) : MassPoly::simple(n, n - 2, -1);
}

MassPoly wrap_factor_inverse(int n)
{
    return n % 2 == 1 ? MassPoly::simple(n, 0, 2) : MassPoly::simple(n, n - 2, 1);
}

std::array<SemistableUnit, 2> vertex_basis(int n, VertexId v)
{
    const int j = mod_period(n, v.j);
    if (v.u) {
        if (n % 2 == 1)
            throw std::invalid_argument("u vertices exist only for even n");
        return {SemistableUnit{Family::V2, j}, SemistableUnit{Family::U, j}};
    }
    return {SemistableUnit{Family::V1, j}, SemistableUnit{Family::V2, j}};
}

double Support::mass(int n, double t) const
{
    double m = 0;
    for (const auto& term : terms)
        m += eval_mass(term.weight, t) * unit_mass(n, term.unit, t);
    return m;
}

MassPoly decoration(int n, const SemistableUnit& u)
{
    return MassPoly::simple(n, u.label, u.level);
}

namespace {

[[noreturn]] void forbidden(int n, int which, VertexId source)
{
    throw std::invalid_argument("no arrow " + letter_name(n, {which, 0}) + " from " + vertex_name(source));
}

}  // namespace

std::array<MassPoly, 2> base_column(int n, int which, Family f, int j, VertexId source)
{
    require_rank(n);
    const int p = period(n);
    if (j < 0 || j >= p)
        throw std::out_of_range("base_column: index outside the period");
    if (!arrow_exists(n, {which, 0}, source))
        forbidden(n, which, source);
    auto D = [n](int x, int e) { return MassPoly::simple(n, x, e); };
    const MassPoly zero(n);
    using Col = std::array<MassPoly, 2>;

    if (n % 2 == 1) {
        if (which != 1 || f == Family::U)
            throw std::invalid_argument("odd n uses only sigma_1 tables on V units");
        const int h = (n - 1) / 2;
        if (j == h)
            forbidden(n, which, source);
        if (f == Family::V1) {
            if (j == 0)
                return Col{D(0, -1), zero};
            if (j < h)
                return Col{D(2 * j, -1), D(2 * j - 1, -1)};
            return Col{D(2 * n - 2 * j - 2, -2), D(2 * n - 2 * j - 1, -2)};
        }
        if (j < h)
            return Col{D(2 * j + 1, 0), D(2 * j, 0)};
        if (j <= n - 2)
            return Col{D(2 * n - 2 * j - 3, -1), D(2 * n - 2 * j - 2, -1)};
        return Col{zero, D(0, -1)};
    }

    if (which == 1) {
        switch (f) {
        case Family::V1:
            if (j == 0)
                return Col{D(0, -1), zero};
            return Col{D(2 * j, -1), D(2 * j - 1, -1)};
        case Family::V2:
            if (j <= p - 2)
                return Col{D(2 * j + 1, 0), D(2 * j, 0)};
            return Col{zero, D(n - 2, 0)};
        case Family::U:
            if (j <= p - 2)
                return Col{D(2 * j + 2, 0), D(2 * j + 1, 0)};
            forbidden(n, which, source);
        }
    }
    switch (f) {
    case Family::V2:
        if (j == 0)
            return Col{D(0, -1), zero};
        return Col{D(2 * j, -1), D(2 * j - 1, 0)};
    case Family::U:
        if (j <= p - 2)
            return Col{D(2 * j + 1, -1), D(2 * j, 0)};
        return Col{zero, D(n - 2, 0)};
    case Family::V1:
        if (j == 0)
            forbidden(n, which, source);
        return Col{D(2 * j - 1, -2), D(2 * j - 2, -1)};
    }
    throw std::logic_error("base_column: unreachable");
}

Support letter_support(int n, TwistLetter letter, VertexId source, const SemistableUnit& u)
{
    letter = canonical(n, letter);
    source.j = mod_period(n, source.j);
    if (!arrow_exists(n, letter, source))
        throw std::invalid_argument("no arrow " + letter_name(n, letter) + " from " + vertex_name(source));
    const auto basis = vertex_basis(n, source);
    if (!(basis[0].fam == u.fam && basis[0].j == u.j) && !(basis[1].fam == u.fam && basis[1].j == u.j))
        throw std::invalid_argument("letter_support: unit " + unit_name(u) + " not in the basis of " +
                                    vertex_name(source));

    // sigma_{g^k P} = g^k sigma g^-k: move the unit down by k first.
    const int k = letter.j;
    SemistableUnit v = u;
    for (int r = 0; r < k; ++r)
        v = gamma_on_unit(n, v, -1);
    const VertexId base_source{source.u, mod_period(n, source.j - k)};
    const auto col = base_column(n, letter.which, v.fam, v.j, base_source);
    const MassPoly dec = decoration(n, v);

    Support s;
    s.vertex = target_vertex(n, letter);
    const auto target_basis = vertex_basis(n, *s.vertex);
    for (int c = 0; c < 2; ++c) {
        if (col[c].is_zero())
            continue;
        s.terms.push_back({target_basis[c], col[c] * dec});
    }
    return s;
}

}  // namespace braiddyn
