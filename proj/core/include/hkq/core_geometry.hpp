#ifndef HKQ_CORE_GEOMETRY_HPP
#define HKQ_CORE_GEOMETRY_HPP

#include "hkq/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hkq {

enum class PieceStatus { Empty, Unbounded, Bounded };

// One extended-core piece Delta_A.
struct CorePiece {
    Subset A = 0;
    PieceStatus status = PieceStatus::Empty;
    bool full_dimensional = false;
    bool is_X = false;  // the A = emptyset piece, Delta itself
    std::vector<std::vector<Rational>> verts;  // vertex set when nonempty
    // face of Delta_A minimizing the functional sum_{i in A} a_i
    // (meaningful for bounded pieces): minimizing vertices and their common
    // active set B
    std::vector<std::size_t> min_face_vertices;  // indices into verts
    Subset min_face_active = 0;
    int min_face_dim = -1;
};

// A vertex of the polyhedral complex |A| together with the unique
// S^1-fixed point of M sitting over it.
struct ComplexVertex {
    std::vector<Rational> point;
    Subset active = 0;   // hyperplanes through the point
    Subset pattern = 0;  // strict G-side hyperplanes (the z-vanishing set)
    int component = -1;  // fixed-point component id
};

struct FixedComponent {
    std::vector<std::size_t> vertex_ids;  // complex vertices it contains
    int dim = 0;                          // affine dimension of their span
    bool contains_X = false;              // true for the component of Phi^{-1}(0)
    // a representative (A, B): a sign subset and the active set of a maximal
    // face on which the moment-map functional is constant
    Subset rep_A = 0;
    Subset rep_B = 0;
};

struct CoreReport {
    bool delta_bounded = true;  // false triggers the properness warning
    std::vector<CorePiece> pieces;  // all 2^n sign subsets, bitmask order
    std::vector<ComplexVertex> complex_vertices;
    std::vector<FixedComponent> fixed_components;
    std::vector<std::string> warnings;

    int bounded_full_dim_count() const {
        int c = 0;
        for (const auto& p : pieces)
            if (p.status == PieceStatus::Bounded && p.full_dimensional) ++c;
        return c;
    }
};

struct FlowEdge {
    int from_component = 0;  // higher Phi
    int to_component = 0;    // lower Phi
    Subset within_A = 0;     // the core piece carrying the flow line
};

struct FlowGraph {
    std::vector<FixedComponent> nodes;
    std::vector<FlowEdge> edges;
    std::vector<std::string> tie_warnings;
};

// Classify all 2^n sign subsets and find the S^1-fixed components.
CoreReport extended_core(const ValidatedArrangement& va);

// Gradient-flow digraph of Phi on the core: nodes are fixed components,
// edges run along edges of bounded Delta_A towards decreasing Phi.
FlowGraph flow_graph(const ValidatedArrangement& va, const CoreReport& report);

std::string flow_graph_to_dot(const FlowGraph& g, const Arrangement& arr);

}  // namespace hkq

#endif
