#ifndef HKQ_ARRANGEMENT_HPP
#define HKQ_ARRANGEMENT_HPP

#include "hkq/groebner.hpp"
#include "hkq/polyhedron.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hkq {

// A rational, weighted, cooriented affine hyperplane arrangement
//   H_i = { v : v.a_i + r_i = 0 },  F_i = {>= 0},  G_i = {<= 0}.
// Flipping the sign of a normal flips the coorientation. Normals need not be
// primitive.
struct Arrangement {
    int d = 0;
    std::vector<std::vector<long long>> normals;  // a_i in Z^d
    std::vector<Rational> offsets;                // r_i

    int n() const { return static_cast<int>(normals.size()); }
};

// Validation attaches an integer basis of ker(pi: t^n -> t^d), i.e. of the
// subtorus t^k.
struct ValidatedArrangement {
    Arrangement arr;
    std::vector<std::vector<long long>> kernel_basis;  // k = n - d rows in Z^n
    int k() const { return static_cast<int>(kernel_basis.size()); }
};

ValidatedArrangement validate(const Arrangement& arr);

bool is_simple(const Arrangement& arr);
bool is_smooth(const Arrangement& arr);

// Index subsets are bitmasks over hyperplanes 0..n-1.
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s, int n);
std::string subset_to_string(Subset s, int n);  // 1-based, e.g. "{2,3}"

// Half-space / hyperplane pieces as rational polyhedra.
Polyhedron halfspace_F(const Arrangement& arr, int i);
Polyhedron halfspace_G(const Arrangement& arr, int i);

// Delta_A = cap_{i in A} G_i  cap  cap_{i not in A} F_i.
// A = emptyset gives Delta itself. (The sign subset records which
// hyperplanes are flipped to their G side; the fiberwise z-coordinates
// vanish over A and the w-coordinates over its complement.)
Polyhedron delta_A(const Arrangement& arr, Subset A);

// Inclusion-minimal S with cap_{i in S} H_i empty.
std::vector<Subset> sr_empty_sets(const Arrangement& arr);

// Inclusion-minimal (componentwise) disjoint pairs (S1, S2) with
// cap_{i in S1} G_i cap cap_{j in S2} F_j empty.
std::vector<std::pair<Subset, Subset>> coor_empty_pairs(const Arrangement& arr);

enum class KirwanFlavor { H, HTd, HS1, HTdS1 };

// Equivariant cohomology presentations of the hypertoric variety:
//   HTd    Q[t1..tn]      / <prod_{S} t_i : S in sr_empty_sets>
//   H      ... plus the d linear forms rows of the normal matrix
//   HTdS1  Q[t1..tn, x]   / <prod_{S1} t_i * prod_{S2}(x - t_j)>
//   HS1    ... plus the linear forms.
PresentedRing<Rational> kirwan_presentation(const ValidatedArrangement& va,
                                            KirwanFlavor flavor);

// Linear forms generating ker(iota^*): one per row of the d x n normal matrix.
std::vector<Poly<Rational>> kernel_linear_forms(const Arrangement& arr, const RingPtr& ring);

// Ambient rings used by the presentations.
RingPtr kirwan_ring(int n, bool with_x, FieldTag field = FieldTag::Q);

}  // namespace hkq

#endif
