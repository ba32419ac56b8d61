#ifndef HKQ_OS2_HPP
#define HKQ_OS2_HPP

#include "hkq/annihilator.hpp"
#include "hkq/arrangement.hpp"

#include <map>
#include <vector>

namespace hkq {

// Z2-equivariant cohomology of the complexified complement of a smooth real
// arrangement: F2[t1..tn, x] modulo t_i(x - t_i) and the oriented-matroid
// products.
struct OS2Ring {
    PresentedRing<GF2> ring;
    Arrangement source;
};

OS2Ring os2_presentation(const ValidatedArrangement& va);

// x := 0 gives the Orlik-Solomon algebra mod 2, x := 1 the
// Varchenko-Gelfand ring.
PresentedRing<GF2> os_specialize(const OS2Ring& R, int value);

// For every nonzero F2-combination of the degree-1 generators (capped), the
// sorted minimal-generator degrees of its annihilator. The returned multiset
// is an isomorphism invariant of the graded ring.
using FingerprintMultiset = std::map<std::vector<int>, int>;

FingerprintMultiset annihilator_fingerprint(const PresentedRing<GF2>& R, int degree,
                                            int candidate_cap = 1 << 14);

}  // namespace hkq

#endif
