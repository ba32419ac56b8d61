#include "hkq/os2.hpp"

namespace hkq {

OS2Ring os2_presentation(const ValidatedArrangement& va) {
    const Arrangement& arr = va.arr;
    if (!is_simple(arr)) throw precondition_error("os2_presentation requires a simple arrangement");
    if (!is_smooth(arr))
        throw precondition_error("os2_presentation requires a smooth arrangement");
    const int n = arr.n();
    RingPtr ring = kirwan_ring(n, true, FieldTag::F2);
    Poly<GF2> x = Poly<GF2>::variable(ring, "x");
    std::vector<Poly<GF2>> rels;
    for (int i = 0; i < n; ++i) {
        Poly<GF2> ti = Poly<GF2>::variable(ring, static_cast<std::size_t>(i));
        rels.push_back(ti * (x - ti));
    }
    for (auto& [S1, S2] : coor_empty_pairs(arr)) {
        Poly<GF2> m = Poly<GF2>::constant(ring, GF2(1));
        for (int i : subset_elements(S1, n))
            m = m * Poly<GF2>::variable(ring, static_cast<std::size_t>(i));
        for (int j : subset_elements(S2, n))
            m = m * (x - Poly<GF2>::variable(ring, static_cast<std::size_t>(j)));
        rels.push_back(m);
    }
    return OS2Ring{PresentedRing<GF2>{ring, Ideal<GF2>(ring, rels)}, arr};
}

PresentedRing<GF2> os_specialize(const OS2Ring& R, int value) {
    const int n = R.source.n();
    RingPtr small = kirwan_ring(n, false, FieldTag::F2);
    std::vector<Poly<GF2>> images;
    for (int i = 0; i < n; ++i)
        images.push_back(Poly<GF2>::variable(small, static_cast<std::size_t>(i)));
    images.push_back(Poly<GF2>::constant(small, GF2(value)));
    std::vector<Poly<GF2>> rels;
    for (const auto& g : R.ring.relations.gens) rels.push_back(poly_subst(g, images));
    return PresentedRing<GF2>{small, Ideal<GF2>(small, rels)};
}

FingerprintMultiset annihilator_fingerprint(const PresentedRing<GF2>& R, int degree,
                                            int candidate_cap) {
    auto Grel = groebner(R.relations);
    // stabilization bound from freeness over F2[x]: top degree of R/(x) + 1
    int maxdeg = 2;
    {
        int xi = R.ring->var_index("x");
        std::vector<Poly<GF2>> rels = R.relations.gens;
        if (xi >= 0) rels.push_back(Poly<GF2>::variable(R.ring, static_cast<std::size_t>(xi)));
        PresentedRing<GF2> modx{R.ring, Ideal<GF2>(R.ring, rels)};
        auto G = groebner(modx.relations);
        for (int k = 1; k <= 32; ++k) {
            if (staircase_count(G, k) == 0) {
                maxdeg = k + 1;
                break;
            }
        }
    }

    auto mons = monomials_of_degree<GF2>(R.ring, degree);
    FingerprintMultiset out;
    long long count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << mons.size()); ++mask) {
        if (++count > candidate_cap) break;
        Poly<GF2> f(R.ring);
        for (std::size_t i = 0; i < mons.size(); ++i)
            if ((mask >> i) & 1) f.add_term(mons[i], GF2(1));
        if (normal_form(f, Grel).is_zero()) continue;
        auto profile = annihilator_profile(R, Grel, f, maxdeg);
        out[profile] += 1;
    }
    return out;
}

}  // namespace hkq
