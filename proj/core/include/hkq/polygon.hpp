#ifndef HKQ_POLYGON_HPP
#define HKQ_POLYGON_HPP

#include "hkq/arrangement.hpp"
#include "hkq/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hkq {

// Edge-length data for a hyperpolygon space, with its short-subset
// combinatorics. Genericity: no subset's edge sum equals its complement's.
struct PolygonSpec {
    std::vector<Rational> alpha;
    int n() const { return static_cast<int>(alpha.size()); }
};

struct ShortSetFamily {
    int n = 0;
    std::vector<Subset> all_short;     // every short subset, including empty
    std::vector<Subset> short_prime;   // S' : short with |S| >= 2
    bool is_short(Subset S) const;
    bool is_long(Subset S) const { return !is_short(S); }
};

// throws precondition_error naming a tying subset when alpha is not generic
ShortSetFamily validate_alpha(const PolygonSpec& spec);

int min_element(Subset S);                  // m_S (0-based)
int min_complement_element(Subset S, int n);  // n_S (0-based)

// --- fixed points -----------------------------------------------------------

struct FixedComponentReport {
    bool is_X = false;        // the polygon space itself
    Subset S = 0;             // for the CP^{|S|-2} components
    int complex_dim = 0;
    std::vector<std::int64_t> poincare;  // coefficients of 1 + t^2 + ... (per complex degree)
};

std::vector<FixedComponentReport> fixed_report(const PolygonSpec& spec);

// Fixed-point structure of a single core component U_S: the polygon subspace
// X_S plus one point per short T strictly containing S, plus M_S itself.
struct USFixedReport {
    Subset S = 0;
    std::vector<Rational> xs_edge_lengths;  // edges of the polygon space X_S
    int xs_complex_dim = 0;
    std::vector<Subset> point_components;   // M_S and U_S cap M_T for T strictly containing S
};

USFixedReport us_fixed_report(const PolygonSpec& spec, Subset S);

// --- presentations ----------------------------------------------------------

// H^*_{S^1} of the abelian quotient N:
//   Q[a1..an, b1..bn, del, x] / < a_i - b_i - del, a_i b_i > + < A_S, B_S >.
PresentedRing<Rational> abelian_presentation(const PolygonSpec& spec);

// The hypertoric arrangement of N: 2n hyperplanes x_i = +-alpha_i restricted
// to {sum x_i = 0}, in coordinates y_1..y_{n-1} with v_i = y_i (i < n) and
// v_n = -sum y_i. Hyperplane order: a_1, b_1, a_2, b_2, ...
Arrangement abelian_arrangement(const PolygonSpec& spec);

// Variable images identifying the abelian presentation inside the
// 2n-hyperplane Kirwan presentation (a_i -> t_{2i-1}, b_i -> t_{2i},
// del -> t_1 - t_2, x -> x).
std::vector<Poly<Rational>> abelian_to_kirwan_images(const PolygonSpec& spec,
                                                     const RingPtr& target);

// Ambient ring Q[c1..cn, del, x]; all ideals below implicitly carry the
// relations c_i^2 - del^2. Inputs and outputs are del-even.
RingPtr hp_ambient(int n);
std::vector<Poly<Rational>> hp_quadratic_relations(const RingPtr& ring, int n);

// C_S = A_S + B_S written in c_i, del^2, x.
Poly<Rational> hp_CS(const RingPtr& ring, const ShortSetFamily& fam, Subset S);
// D_S for nonempty short S.
Poly<Rational> hp_DS(const RingPtr& ring, const ShortSetFamily& fam, Subset S);
// e = del^2 (x^2 - del^2).
Poly<Rational> hp_euler(const RingPtr& ring);

// H^*_{S^1}(M) = Q / < D_S : S nonempty short >.
PresentedRing<Rational> hp_presentation(const PolygonSpec& spec);

// Ordinary cohomology: Q[c1..cn] / <c_i^2 - c_j^2> + <monomials of degree n-2>.
PresentedRing<Rational> konno_presentation(const PolygonSpec& spec);

struct HpColonReport {
    bool equal = false;
    bool memberships = true;  // e * D_S in J for every short S
    Ideal<Rational> colon;    // (J : e) with the quadratic relations adjoined
    Ideal<Rational> ds_ideal;
};

HpColonReport verify_hp_colon(const PolygonSpec& spec);

// --- core components --------------------------------------------------------

struct CoreComponentRing {
    Subset S = 0;
    std::vector<int> relabel;  // permutation applied so that 1 in S
    bool equivariant = false;
    PresentedRing<Rational> ring;  // in d1..dn (and x when equivariant)
};

// The four relation families of the core-component ring, for a short S
// containing edge 1 (other subsets are relabeled and the permutation recorded).
CoreComponentRing core_presentation(const PolygonSpec& spec, Subset S, bool equivariant);

// ker phi_T for short T containing S: <d1 - d_i (i in T), d_j (j not in T),
// (d1+x)^{|S|-1}>.
Ideal<Rational> core_kernel_phi_T(const RingPtr& ring, const ShortSetFamily& fam, Subset S,
                                  Subset T, bool equivariant);

// Both sides of the face-kernel intersection identity; used as a verification.
struct JtReport {
    bool equal = false;
    Ideal<Rational> intersection;
    Ideal<Rational> closed_form;
};
JtReport verify_jt(const PolygonSpec& spec, Subset S, bool equivariant);

// --- triangularity of the core-basis transition ------------------------------

struct UpsilonReport {
    bool unit_lower_triangular = false;
    std::vector<Subset> row_sets;  // proper subsets of {2..n}, cardinality-lex
    std::vector<Subset> col_short_sets;  // S(A) per row
    Matrix<Rational> matrix;
};

UpsilonReport upsilon_check(const PolygonSpec& spec);

// --- intersection forms (n = 5) ----------------------------------------------

struct IntersectionForm {
    Subset S = 0;
    std::vector<std::string> basis_labels;
    Matrix<Rational> matrix;
    std::string normalization;
};

IntersectionForm intersection_form_n5(const PolygonSpec& spec, Subset S);

}  // namespace hkq

#endif
