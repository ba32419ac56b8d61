#ifndef HKQ_COGEN_HPP
#define HKQ_COGEN_HPP

#include "hkq/arrangement.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hkq {

// Volume polynomial of Delta_A^r as a function of the offsets, valid on the
// chamber of the tag offsets. Homogeneous of degree d in x1..xn and
// translation invariant (killed by every kernel linear form under the
// differentiation action).
struct VolumePolynomial {
    Poly<Rational> poly;            // in Q[x1..xn]
    Subset A = 0;
    std::vector<Rational> chamber_tag;
};

// Signed characteristic-function decomposition
//   1_{Delta_A^r} = sum_j eta_j 1_{Delta^{r(j)}}
// where each r(j) agrees with r except on coordinates pushed to a large
// parameter N_i. Term offsets store the instantiated values; `pushed`
// records which coordinates are symbolic.
struct CharTerm {
    int eta = 1;
    std::vector<Rational> offsets;
    Subset pushed = 0;
};

struct CharDecomposition {
    Subset A = 0;
    std::vector<Rational> base_offsets;
    std::vector<Rational> large_values;  // instantiation of N_1, N_2, ... per index
    std::vector<CharTerm> terms;
};

// Sign subsets whose signed normals positively span R^d.
std::vector<Subset> admissible_sets(const ValidatedArrangement& va);
bool is_admissible(const Arrangement& arr, Subset A);

// Wall functionals (one per circuit of the normal matroid) and chamber
// representatives of the simple locus in offset space.
struct Wall {
    Subset circuit = 0;
    std::vector<Rational> functional;  // lambda with sum lambda_i a_i = 0
};

std::vector<Wall> wall_functionals(const Arrangement& arr);
std::vector<std::vector<Rational>> chambers(const ValidatedArrangement& va);
bool same_chamber(const Arrangement& arr, const std::vector<Wall>& walls,
                  const std::vector<Rational>& r1, const std::vector<Rational>& r2);

// Exact interpolated volume polynomial of Delta_A over the chamber of r.
VolumePolynomial volume_polynomial(const ValidatedArrangement& va, Subset A,
                                   const std::vector<Rational>& r, std::uint64_t seed = 0);

// Basis of U^r = span{ P^r_A : A admissible }.
std::vector<VolumePolynomial> span_U(const ValidatedArrangement& va,
                                     const std::vector<Rational>& r, std::uint64_t seed = 0);

// Ideal in Q[t1..tn] of operators annihilating every polynomial under the
// differentiation action, generated through degree d+1. Always contains the
// kernel linear forms.
Ideal<Rational> inverse_system_annihilator(const ValidatedArrangement& va,
                                           const std::vector<Poly<Rational>>& polys);

CharDecomposition char_decompose(const ValidatedArrangement& va,
                                 const std::vector<Rational>& r, Subset A);

struct KernelIntersectionReport {
    bool equal = false;
    Ideal<Rational> intersection_of_chamber_kernels;  // cap_r Ann(P^r)
    Ideal<Rational> annihilator_of_U;                 // Ann(U^r)
    std::vector<std::vector<Rational>> chamber_reps;
};

KernelIntersectionReport verify_kernel_intersection(const ValidatedArrangement& va, std::uint64_t seed = 0);

}  // namespace hkq

#endif
