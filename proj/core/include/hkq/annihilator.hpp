#ifndef HKQ_ANNIHILATOR_HPP
#define HKQ_ANNIHILATOR_HPP

#include "hkq/groebner.hpp"

#include <map>
#include <vector>

namespace hkq {

// Annihilator of f in the quotient ring, as the ambient preimage ideal
// (relations : f) together with a minimal generating set modulo the
// relations.
template <class K>
struct QuotientAnnihilator {
    Ideal<K> preimage;
    std::vector<Poly<K>> quotient_minimal_gens;
};

template <class K>
QuotientAnnihilator<K> annihilator_in_quotient(const PresentedRing<K>& R, const Poly<K>& f) {
    auto Grel = groebner(R.relations);
    if (normal_form(f, Grel).is_zero())
        throw precondition_error("annihilator_in_quotient: element is zero in the quotient");
    Ideal<K> pre = colon_ideal(R.relations, f);
    // the relations are always contained; expose them explicitly
    for (const auto& g : R.relations.gens) pre.gens.push_back(g);
    QuotientAnnihilator<K> out;
    out.quotient_minimal_gens = minimal_generators(pre.gens, R.relations.gens);
    out.preimage = std::move(pre);
    return out;
}

// Degreewise annihilator profile: the sorted degrees of a minimal generating
// set of ann(f) in the quotient, computed through degree maxdeg by exact
// linear algebra against a fixed Groebner basis of the relations. For the
// graded rings used here (free over k[x], x a nonzerodivisor) every minimal
// generator appears at or below (top degree of R/(x)) + 1, so a finite
// maxdeg certifies the full profile.
template <class K>
std::vector<int> annihilator_profile(const PresentedRing<K>& R, const GroebnerBasis<K>& Grel,
                                     const Poly<K>& f, int maxdeg) {
    if (normal_form(f, Grel).is_zero())
        throw precondition_error("annihilator_profile: element is zero in the quotient");
    const RingPtr& ring = R.ring;
    std::int64_t df = f.degree();

    // standard-monomial coordinates of NF(p) in each degree
    auto coords = [&](const Poly<K>& p, const std::vector<Monomial>& basis) {
        std::vector<K> v(basis.size(), field_traits<K>::zero());
        std::map<Monomial, std::size_t, detail::DrlLess> pos;
        for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
        for (auto& [m, c] : p.terms()) {
            auto it = pos.find(m);
            if (it == pos.end()) throw internal_error("coordinate outside basis");
            v[it->second] = c;
        }
        return v;
    };

    std::vector<int> profile;
    std::vector<std::vector<Poly<K>>> ann_basis(static_cast<std::size_t>(maxdeg) + 1);
    for (int k = 1; k <= maxdeg; ++k) {
        auto kmons = monomials_of_degree<K>(ring, k);
        auto tmons = monomials_of_degree<K>(ring, k + df);
        // rows: candidate monomial coefficients of h; solve NF(h f) = 0
        Matrix<K> M;
        for (const auto& m : kmons) {
            Poly<K> h(ring);
            h.add_term(m, field_traits<K>::one());
            M.append_row(coords(normal_form(h * f, Grel), tmons));
        }
        Matrix<K> T(M.cols(), M.rows());
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) T.at(j, i) = M.at(i, j);
        auto null_vecs = T.nullspace();
        std::vector<Poly<K>> ann_k;
        for (const auto& v : null_vecs) {
            Poly<K> h(ring);
            for (std::size_t i = 0; i < kmons.size(); ++i) h.add_term(kmons[i], v[i]);
            if (!h.is_zero()) ann_k.push_back(std::move(h));
        }
        // already-known part in degree k: relations_k plus ambient_1 * ann_{k-1}
        Matrix<K> known;
        auto add_known = [&](const Poly<K>& p) {
            if (!p.is_zero()) known.append_row(coords(p, kmons));
        };
        for (const auto& g : Grel.polys) {
            std::int64_t dg = g.degree();
            if (dg > k) continue;
            for (const auto& m : monomials_of_degree<K>(ring, k - dg))
                add_known(g.mul_term(m, field_traits<K>::one()));
        }
        if (k >= 2) {
            for (const auto& h : ann_basis[static_cast<std::size_t>(k) - 1])
                for (std::size_t i = 0; i < ring->nvars(); ++i)
                    add_known(Poly<K>::variable(ring, i) * h);
        }
        std::size_t base_rank = known.rank();
        Matrix<K> extended = known;
        for (const auto& h : ann_k) extended.append_row(coords(h, kmons));
        std::size_t full_rank = extended.rank();
        for (std::size_t c = 0; c < full_rank - base_rank; ++c) profile.push_back(k);
        ann_basis[static_cast<std::size_t>(k)] = std::move(ann_k);
    }
    return profile;
}

}  // namespace hkq

#endif
