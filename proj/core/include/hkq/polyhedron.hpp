#ifndef HKQ_POLYHEDRON_HPP
#define HKQ_POLYHEDRON_HPP

#include "hkq/linalg.hpp"
#include "hkq/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hkq {

enum class Sense { Ge, Le, Eq };  // v.normal + offset  >= / <= / == 0

struct Constraint {
    std::vector<long long> normal;  // integer normal in Z^d
    Rational offset;
    Sense sense = Sense::Ge;
};

// Rational polyhedron in H-representation {v : v.a + r (sense) 0}.
struct Polyhedron {
    int d = 0;
    std::vector<Constraint> constraints;

    Polyhedron() = default;
    Polyhedron(int dim, std::vector<Constraint> cs) : d(dim), constraints(std::move(cs)) {}
    void add(std::vector<long long> normal, Rational offset, Sense s = Sense::Ge) {
        constraints.push_back({std::move(normal), std::move(offset), s});
    }
};

// Exact feasibility of a system of rational linear constraints
// (phase-one simplex for general d, Fourier-Motzkin for d <= 3).
bool feasible(const Polyhedron& P);

// Some feasible point, when one exists.
std::optional<std::vector<Rational>> feasible_point(const Polyhedron& P);

// Is there a point satisfying every inequality strictly (equalities stay)?
std::optional<std::vector<Rational>> strict_interior_point(const Polyhedron& P);

// Recession cone nontrivial? (P assumed feasible.)
bool bounded(const Polyhedron& P);

// Exact vertex set (basic feasible points), deduplicated, sorted
// lexicographically.
std::vector<std::vector<Rational>> vertices(const Polyhedron& P);

// Exact d-volume. Zero for lower-dimensional input; error when infeasible
// or unbounded.
Rational volume(const Polyhedron& P);

// Deterministic rational interior points: the vertex barycenter first, then
// seeded convex combinations.
std::vector<std::vector<Rational>> sample_interior(const Polyhedron& P, int count,
                                                   std::uint64_t seed);

// affine dimension of P (or -1 when empty)
int affine_dimension(const Polyhedron& P);

// --- exact phase-one simplex (shared with other modules) -------------------
// Feasibility of {x : A x >= b, C x = e} over the rationals.
struct LinearSystem {
    int n = 0;  // number of variables
    std::vector<std::vector<Rational>> ge_lhs;  // rows a with a.x >= rhs
    std::vector<Rational> ge_rhs;
    std::vector<std::vector<Rational>> eq_lhs;
    std::vector<Rational> eq_rhs;

    void add_ge(std::vector<Rational> a, Rational rhs) {
        ge_lhs.push_back(std::move(a));
        ge_rhs.push_back(std::move(rhs));
    }
    void add_eq(std::vector<Rational> a, Rational rhs) {
        eq_lhs.push_back(std::move(a));
        eq_rhs.push_back(std::move(rhs));
    }
};

std::optional<std::vector<Rational>> lp_feasible_point(const LinearSystem& sys);

}  // namespace hkq

#endif
