#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braiddyn/braidword.hpp"
#include "braiddyn/fusion.hpp"
#include "braiddyn/twistcalc.hpp"

namespace braiddyn {

// m[row][col]; column c holds the image of source basis element c.
using MassMatrix = std::array<std::array<MassPoly, 2>, 2>;

MassMatrix identity_matrix(int n);
MassMatrix scalar_matrix(const MassPoly& p);
MassMatrix operator*(const MassMatrix& a, const MassMatrix& b);
bool operator==(const MassMatrix& a, const MassMatrix& b);
std::array<std::array<double, 2>, 2> eval_matrix(const MassMatrix& m, double t);
nlohmann::json matrix_json(const MassMatrix& m);

struct ArrowLabel {
    bool is_gamma = false;
    int dir = 1;  // gamma^dir
    TwistLetter tw;
    friend bool operator==(const ArrowLabel&, const ArrowLabel&) = default;
};

std::string label_name(int n, const ArrowLabel& l);

struct Vertex {
    VertexId id;
    std::array<SemistableUnit, 2> basis;
};

struct Arrow {
    VertexId from;
    VertexId to;
    ArrowLabel label;
    MassMatrix matrix;
};

class MassAutomaton {
public:
    MassAutomaton() = default;
    MassAutomaton(int n, std::vector<Vertex> vertices, std::vector<Arrow> arrows);

    int n() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    // Index of the arrow with this label out of `from`, or -1.
    int find(const ArrowLabel& label, VertexId from) const;
    int vertex_index(VertexId v) const;

private:
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::pair<int, int>, int> gamma_index_;                    // (dir, vertex)
    std::map<std::tuple<int, int, int>, int> twist_index_;              // (which, j, vertex)
};

MassAutomaton build(int n);
// Shared read-only instance per n.
const MassAutomaton& automaton_for(int n);

struct PathWitness {
    VertexId start;
    std::vector<int> arrows;  // e_1 first
    bool closed = false;
};

std::optional<PathWitness> recognize(const MassAutomaton& a, const NormalForm& nf, bool require_closed);
// Follows the letters of nf from `start`; nullopt if some arrow is missing.
std::optional<PathWitness> follow(const MassAutomaton& a, const NormalForm& nf, VertexId start);

MassMatrix path_matrix(const MassAutomaton& a, const PathWitness& p);
nlohmann::json path_json(const MassAutomaton& a, const PathWitness& p);

enum class ZeroPattern { Diagonal, LowerTriangular, UpperTriangular, Full };
std::string pattern_name(ZeroPattern z);
ZeroPattern zero_pattern(const MassMatrix& m);

double pf_eigenvalue(const MassMatrix& m, double t);

nlohmann::json dump_json(const MassAutomaton& a);

}  // namespace braiddyn
