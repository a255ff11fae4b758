#include "braiddyn/automaton.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace braiddyn {

MassMatrix identity_matrix(int n)
{
    return scalar_matrix(MassPoly::one(n));
}

MassMatrix scalar_matrix(const MassPoly& p)
{
    MassMatrix m{{{p, MassPoly(p.n())}, {MassPoly(p.n()), p}}};
    return m;
}

MassMatrix operator*(const MassMatrix& a, const MassMatrix& b)
{
    MassMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            MassPoly s(a[i][0].n() != 0 ? a[i][0].n() : b[0][j].n());
            s += a[i][0] * b[0][j];
            s += a[i][1] * b[1][j];
            r[i][j] = std::move(s);
        }
    return r;
}

bool operator==(const MassMatrix& a, const MassMatrix& b)
{
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(a[i][j].terms() == b[i][j].terms()))
                return false;
    return true;
}

std::array<std::array<double, 2>, 2> eval_matrix(const MassMatrix& m, double t)
{
    return {{{eval_mass(m[0][0], t), eval_mass(m[0][1], t)}, {eval_mass(m[1][0], t), eval_mass(m[1][1], t)}}};
}

nlohmann::json matrix_json(const MassMatrix& m)
{
    return {{m[0][0].to_json(), m[0][1].to_json()}, {m[1][0].to_json(), m[1][1].to_json()}};
}

std::string label_name(int n, const ArrowLabel& l)
{
    if (l.is_gamma)
        return l.dir > 0 ? "gamma" : "gamma^-1";
    return letter_name(n, l.tw);
}

MassAutomaton::MassAutomaton(int n, std::vector<Vertex> vertices, std::vector<Arrow> arrows)
    : n_(n), vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const auto& a = arrows_[i];
        const int v = vertex_index(a.from);
        if (a.label.is_gamma)
            gamma_index_[{a.label.dir, v}] = static_cast<int>(i);
        else
            twist_index_[{a.label.tw.which, a.label.tw.j, v}] = static_cast<int>(i);
    }
}

int MassAutomaton::vertex_index(VertexId v) const
{
    const int p = period(n_);
    return (v.u ? p : 0) + mod_period(n_, v.j);
}

int MassAutomaton::find(const ArrowLabel& label, VertexId from) const
{
    const int v = vertex_index(from);
    if (label.is_gamma) {
        auto it = gamma_index_.find({label.dir, v});
        return it == gamma_index_.end() ? -1 : it->second;
    }
    const auto tw = canonical(n_, label.tw);
    auto it = twist_index_.find({tw.which, tw.j, v});
    return it == twist_index_.end() ? -1 : it->second;
}

namespace {

MassMatrix base_arrow_matrix(int n, TwistLetter letter, VertexId source)
{
    const auto basis = vertex_basis(n, source);
    const auto target = target_vertex(n, letter);
    const auto tbasis = vertex_basis(n, target);
    MassMatrix m{{{MassPoly(n), MassPoly(n)}, {MassPoly(n), MassPoly(n)}}};
    for (int c = 0; c < 2; ++c) {
        const Support s = letter_support(n, letter, source, basis[c]);
        for (const auto& term : s.terms) {
            const int r = term.unit == tbasis[0] ? 0 : 1;
            m[r][c] += term.weight;
        }
    }
    return m;
}

}  // namespace

MassAutomaton build(int n)
{
    require_rank(n);
    const int p = period(n);
    const bool even = n % 2 == 0;

    std::vector<Vertex> vertices;
    for (int fam = 0; fam < (even ? 2 : 1); ++fam)
        for (int j = 0; j < p; ++j) {
            const VertexId id{fam == 1, j};
            vertices.push_back({id, vertex_basis(n, id)});
        }

    std::vector<Arrow> arrows;
    auto gamma_matrix = [&](int j, int dir) {
        if (dir > 0 && j == p - 1)
            return scalar_matrix(wrap_factor(n));
        if (dir < 0 && j == 0)
            return scalar_matrix(wrap_factor_inverse(n));
        return identity_matrix(n);
    };
    for (const auto& v : vertices)
        for (int dir : {1, -1})
            arrows.push_back({v.id, {v.id.u, mod_period(n, v.id.j + dir)}, {true, dir, {}},
                              gamma_matrix(v.id.j, dir)});

    // Base letters first; the rest are conjugates along gamma arrows.
    for (int which = 1; which <= (even ? 2 : 1); ++which) {
        std::vector<MassMatrix> base(vertices.size());
        for (std::size_t s = 0; s < vertices.size(); ++s)
            if (arrow_exists(n, {which, 0}, vertices[s].id))
                base[s] = base_arrow_matrix(n, {which, 0}, vertices[s].id);

        for (int k = 0; k < p; ++k) {
            const TwistLetter letter{which, k};
            const VertexId target = target_vertex(n, letter);
            for (std::size_t s = 0; s < vertices.size(); ++s) {
                const VertexId src = vertices[s].id;
                if (!arrow_exists(n, letter, src))
                    continue;
                // src --gamma^-1 (k times)--> src' --base--> T_0 --gamma (k times)--> T_k
                MassMatrix down = identity_matrix(n);
                int j = src.j;
                for (int r = 0; r < k; ++r) {
                    const auto g = gamma_matrix(j, -1);
                    if (!(g == identity_matrix(n)))
                        down = g * down;
                    j = mod_period(n, j - 1);
                }
                MassMatrix up = identity_matrix(n);
                for (int r = 0; r < k; ++r) {
                    const auto g = gamma_matrix(r, 1);
                    if (!(g == identity_matrix(n)))
                        up = g * up;
                }
                const VertexId shifted{src.u, j};
                const auto& b = base[static_cast<std::size_t>((shifted.u ? p : 0) + j)];
                arrows.push_back({src, target, {false, 1, letter}, up * b * down});
            }
        }
    }
    return MassAutomaton(n, std::move(vertices), std::move(arrows));
}

const MassAutomaton& automaton_for(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<MassAutomaton>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<MassAutomaton>(build(n));
    return *slot;
}

std::optional<PathWitness> follow(const MassAutomaton& a, const NormalForm& nf, VertexId start)
{
    const int n = a.n();
    PathWitness w{start, {}, false};
    VertexId cur = start;
    for (const auto& l : nf.application_letters()) {
        if (l.is_gamma) {
            const int dir = l.gamma_exp > 0 ? 1 : -1;
            for (long long r = 0; r < std::llabs(l.gamma_exp); ++r) {
                const int idx = a.find({true, dir, {}}, cur);
                w.arrows.push_back(idx);
                cur = a.arrows()[static_cast<std::size_t>(idx)].to;
            }
            continue;
        }
        const int idx = a.find({false, 1, canonical(n, l.tw)}, cur);
        if (idx < 0)
            return std::nullopt;
        w.arrows.push_back(idx);
        cur = a.arrows()[static_cast<std::size_t>(idx)].to;
    }
    w.closed = cur == start;
    return w;
}

std::optional<PathWitness> recognize(const MassAutomaton& a, const NormalForm& nf, bool require_closed)
{
    std::optional<PathWitness> first;
    for (const auto& v : a.vertices()) {
        auto w = follow(a, nf, v.id);
        if (!w)
            continue;
        if (w->closed)
            return w;
        if (!first)
            first = w;
    }
    if (require_closed)
        return std::nullopt;
    return first;
}

MassMatrix path_matrix(const MassAutomaton& a, const PathWitness& p)
{
    MassMatrix m = identity_matrix(a.n());
    for (int idx : p.arrows)
        m = a.arrows().at(static_cast<std::size_t>(idx)).matrix * m;
    return m;
}

nlohmann::json path_json(const MassAutomaton& a, const PathWitness& p)
{
    auto steps = nlohmann::json::array();
    for (int idx : p.arrows) {
        const auto& ar = a.arrows().at(static_cast<std::size_t>(idx));
        steps.push_back({{"from", vertex_name(ar.from)}, {"to", vertex_name(ar.to)},
                         {"label", label_name(a.n(), ar.label)}});
    }
    return {{"start", vertex_name(p.start)}, {"closed", p.closed}, {"arrows", steps}};
}

std::string pattern_name(ZeroPattern z)
{
    switch (z) {
    case ZeroPattern::Diagonal:
        return "diagonal";
    case ZeroPattern::LowerTriangular:
        return "lower_triangular";
    case ZeroPattern::UpperTriangular:
        return "upper_triangular";
    case ZeroPattern::Full:
        return "full";
    }
    return "?";
}

ZeroPattern zero_pattern(const MassMatrix& m)
{
    if (m[0][0].is_zero() || m[1][1].is_zero())
        throw std::logic_error("zero_pattern: identically zero diagonal entry");
    const bool upper = !m[0][1].is_zero();
    const bool lower = !m[1][0].is_zero();
    if (upper && lower)
        return ZeroPattern::Full;
    if (upper)
        return ZeroPattern::UpperTriangular;
    if (lower)
        return ZeroPattern::LowerTriangular;
    return ZeroPattern::Diagonal;
}

double pf_eigenvalue(const MassMatrix& m, double t)
{
    const auto e = eval_matrix(m, t);
    const double tr = e[0][0] + e[1][1];
    const double det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    const double disc = tr * tr - 4 * det;
    return (tr + std::sqrt(disc > 0 ? disc : 0.0)) / 2;
}

nlohmann::json dump_json(const MassAutomaton& a)
{
    const int n = a.n();
    auto vs = nlohmann::json::array();
    for (const auto& v : a.vertices())
        vs.push_back({{"id", vertex_name(v.id)}, {"basis", {unit_name(v.basis[0]), unit_name(v.basis[1])}}});
    auto as = nlohmann::json::array();
    for (const auto& ar : a.arrows())
        as.push_back({{"from", vertex_name(ar.from)}, {"to", vertex_name(ar.to)},
                      {"label", label_name(n, ar.label)}, {"matrix", matrix_json(ar.matrix)}});
    return {{"n", n}, {"vertices", vs}, {"arrows", as}};
}

}  // namespace braiddyn
