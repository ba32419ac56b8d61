#ifndef HKQ_GROEBNER_HPP
#define HKQ_GROEBNER_HPP

#include "hkq/linalg.hpp"
#include "hkq/poly.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace hkq {

template <class K>
struct Ideal {
    RingPtr ring;
    std::vector<Poly<K>> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Poly<K>> g) : ring(std::move(r)), gens(std::move(g)) {
        drop_zeros();
    }
    void drop_zeros() {
        std::erase_if(gens, [](const Poly<K>& p) { return p.is_zero(); });
    }
};

// Quotient-ring presentation: ambient ring together with a relations ideal.
// Every declared variable is a distinguished generator of polynomial degree 1
// (cohomological degree 2).
template <class K>
struct PresentedRing {
    RingPtr ring;
    Ideal<K> relations;
};

template <class K>
struct RingMap {
    PresentedRing<K> source;
    PresentedRing<K> target;
    std::vector<Poly<K>> images;  // one target polynomial per source variable
};

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace gb_detail {

template <class K>
void make_monic(Poly<K>& p, const MonomialOrder& ord) {
    if (p.is_zero()) return;
    auto [lm, lc] = p.leading_term(ord);
    if (lc == field_traits<K>::one()) return;
    K inv = field_traits<K>::one() / lc;
    p = inv * p;
}

// top-reduction loop; returns the full normal form of f against G
template <class K>
Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& G, const MonomialOrder& ord) {
    Poly<K> rem(f.ring());
    Poly<K> cur = f;
    while (!cur.is_zero()) {
        auto [lm, lc] = cur.leading_term(ord);
        bool reduced = false;
        for (const auto& g : G) {
            auto [gm, gc] = g.leading_term(ord);
            if (gm.divides(lm)) {
                cur = cur - g.mul_term(lm / gm, lc / gc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            cur.add_term(lm, -lc);  // strip the leading term
        }
    }
    return rem;
}

}  // namespace gb_detail

// Reduced Groebner basis (monic, autoreduced, sorted ascending by leading
// monomial). Pair pruning: Buchberger's coprimality and chain criteria.
template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& input, const MonomialOrder& ord) {
    std::vector<Poly<K>> G;
    for (const auto& f : input) {
        if (f.is_zero()) continue;
        Poly<K> g = f;
        gb_detail::make_monic(g, ord);
        G.push_back(std::move(g));
    }
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::int64_t sugar;
    };
    auto lm_of = [&](std::size_t i) { return G[i].leading_term(ord).first; };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(lm_of(i), lm_of(j));
            pairs.push_back({i, j, l, l.degree()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree first, then smallest lcm
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].sugar < pairs[best].sugar ||
                (pairs[k].sugar == pairs[best].sugar && ord.less(pairs[k].lcm, pairs[best].lcm)))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const Monomial lmi = lm_of(pr.i), lmj = lm_of(pr.j);
        if (Monomial::coprime(lmi, lmj)) continue;  // Buchberger 1
        bool chained = false;                       // Buchberger 2 (chain criterion)
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lm_of(k).divides(pr.lcm)) continue;
            auto survives = [&](std::size_t a, std::size_t b) {
                Monomial l = Monomial::lcm(lm_of(a), lm_of(b));
                for (const auto& q : pairs)
                    if (((q.i == a && q.j == b) || (q.i == b && q.j == a)) && q.lcm == l)
                        return true;
                return false;
            };
            if (!survives(std::min(pr.i, k), std::max(pr.i, k)) &&
                !survives(std::min(pr.j, k), std::max(pr.j, k)))
                chained = true;
        }
        if (chained) continue;

        auto [mi, ci] = G[pr.i].leading_term(ord);
        auto [mj, cj] = G[pr.j].leading_term(ord);
        Poly<K> spoly = G[pr.i].mul_term(pr.lcm / mi, field_traits<K>::one() / ci) -
                        G[pr.j].mul_term(pr.lcm / mj, field_traits<K>::one() / cj);
        Poly<K> r = gb_detail::reduce(spoly, G, ord);
        if (!r.is_zero()) {
            gb_detail::make_monic(r, ord);
            G.push_back(std::move(r));
            push_pairs_for(G.size() - 1);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by another's
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        Monomial mi = lm_of(i);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial mj = lm_of(j);
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = !(mi == mj) || j < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // autoreduce tails
    std::vector<Poly<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> r = gb_detail::reduce(minimal[i], others, ord);
        if (!r.is_zero()) {
            gb_detail::make_monic(r, ord);
            reduced.push_back(std::move(r));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return reduced;
}

// A Groebner basis bundled with its order.
template <class K>
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly<K>> polys;
};

template <class K>
GroebnerBasis<K> groebner(const Ideal<K>& I,
                          MonomialOrder ord = MonomialOrder::degrevlex()) {
    return GroebnerBasis<K>{I.ring, ord, buchberger(I.gens, ord)};
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& G) {
    if (!(*f.ring() == *G.ring)) throw input_error("normal_form ring mismatch");
    return gb_detail::reduce(f, G.polys, G.order);
}

template <class K>
bool ideal_member(const Poly<K>& f, const GroebnerBasis<K>& G) {
    return normal_form(f, G).is_zero();
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
    if (!(*I.ring == *J.ring)) throw input_error("ideal_equal ring mismatch");
    auto GI = groebner(I);
    auto GJ = groebner(J);
    for (const auto& g : J.gens)
        if (!ideal_member(g, GI)) return false;
    for (const auto& g : I.gens)
        if (!ideal_member(g, GJ)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Elimination-based constructions
// ---------------------------------------------------------------------------

namespace gb_detail {

// Move a polynomial into the ring with one auxiliary variable prepended.
template <class K>
Poly<K> lift_aux(const RingPtr& big, const Poly<K>& p, std::int32_t aux_exp) {
    Poly<K> r(big);
    for (auto& [m, c] : p.terms()) {
        Monomial mm(big->nvars());
        mm.e[0] = aux_exp;
        for (std::size_t i = 0; i < m.e.size(); ++i) mm.e[i + 1] = m.e[i];
        r.add_term(mm, c);
    }
    return r;
}

template <class K>
Poly<K> drop_aux(const RingPtr& small, const Poly<K>& p) {
    Poly<K> r(small);
    for (auto& [m, c] : p.terms()) {
        Monomial mm(small->nvars());
        for (std::size_t i = 0; i < small->nvars(); ++i) mm.e[i] = m.e[i + 1];
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace gb_detail

// I cap J via one auxiliary elimination variable u:  (u I + (1-u) J) cap k[x].
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& I, const Ideal<K>& J) {
    if (!(*I.ring == *J.ring)) throw input_error("ideal_intersect ring mismatch");
    std::vector<std::string> vars = I.ring->vars;
    vars.insert(vars.begin(), "_u");
    RingPtr big = make_ring(vars, I.ring->field);
    Poly<K> u = Poly<K>::variable(big, std::size_t{0});
    Poly<K> one_minus_u = Poly<K>::constant(big, field_traits<K>::one()) - u;
    std::vector<Poly<K>> gens;
    for (const auto& f : I.gens) gens.push_back(u * gb_detail::lift_aux(big, f, 0));
    for (const auto& f : J.gens) gens.push_back(one_minus_u * gb_detail::lift_aux(big, f, 0));
    auto G = buchberger(gens, MonomialOrder::elimination_block(1));
    std::vector<Poly<K>> out;
    for (const auto& g : G) {
        bool has_u = false;
        for (auto& [m, c] : g.terms())
            if (m.e[0] > 0) { has_u = true; break; }
        if (!has_u) out.push_back(gb_detail::drop_aux(I.ring, g));
    }
    return Ideal<K>(I.ring, out);
}

// (I : f) = (1/f) * (I cap <f>), the standard principal-intersection route.
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& I, const Poly<K>& f) {
    if (f.is_zero()) throw input_error("colon_ideal by zero");
    Ideal<K> principal(I.ring, {f});
    Ideal<K> meet = ideal_intersect(I, principal);
    std::vector<Poly<K>> out;
    for (const auto& g : meet.gens) out.push_back(poly_divexact(g, f));
    return Ideal<K>(I.ring, out);
}

// ---------------------------------------------------------------------------
// Graded dimension counts
// ---------------------------------------------------------------------------

namespace gb_detail {

template <class K>
void walk_monomials(const RingPtr& ring, std::int64_t degree,
                    const std::function<void(const Monomial&)>& visit) {
    Monomial m(ring->nvars());
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == ring->nvars()) {
            m.e[i] = static_cast<std::int32_t>(left);
            visit(m);
            m.e[i] = 0;
            return;
        }
        for (std::int64_t k = 0; k <= left; ++k) {
            m.e[i] = static_cast<std::int32_t>(k);
            rec(i + 1, left - k);
        }
        m.e[i] = 0;
    };
    if (degree < 0) return;
    if (ring->nvars() == 0) {
        if (degree == 0) visit(m);
        return;
    }
    rec(0, degree);
}

}  // namespace gb_detail

template <class K>
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, std::int64_t d) {
    std::vector<Monomial> out;
    gb_detail::walk_monomials<K>(ring, d, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

// Standard monomials of degree d: those not divisible by any leading monomial.
template <class K>
std::int64_t staircase_count(const GroebnerBasis<K>& G, std::int64_t d) {
    std::vector<Monomial> leads;
    for (const auto& g : G.polys) leads.push_back(g.leading_term(G.order).first);
    std::int64_t count = 0;
    gb_detail::walk_monomials<K>(G.ring, d, [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return;
        ++count;
    });
    return count;
}

// Exact graded dimensions of the quotient in degrees 0..maxdeg.
template <class K>
std::vector<std::int64_t> hilbert_function(const PresentedRing<K>& R, int maxdeg) {
    auto G = groebner(R.relations);
    std::vector<std::int64_t> out;
    for (int d = 0; d <= maxdeg; ++d) out.push_back(staircase_count(G, d));
    return out;
}

// Total dimension of an Artinian quotient (error when not finite below bound).
template <class K>
std::int64_t total_dimension(const PresentedRing<K>& R, int hard_bound = 64) {
    auto G = groebner(R.relations);
    std::int64_t total = 0;
    for (int d = 0; d <= hard_bound; ++d) {
        std::int64_t c = staircase_count(G, d);
        if (c == 0) return total;
        total += c;
    }
    throw precondition_error("quotient not Artinian below bound");
}

// ---------------------------------------------------------------------------
// Minimal generators of graded ideals
// ---------------------------------------------------------------------------

// Minimal generating set of a homogeneous ideal, computed degree by degree
// modulo lower-degree generators. `modulo` generators are treated as already
// present (used for annihilators in a quotient ring: pass the relations).
template <class K>
std::vector<Poly<K>> minimal_generators(const std::vector<Poly<K>>& gens,
                                        const std::vector<Poly<K>>& modulo) {
    std::vector<Poly<K>> sorted = gens;
    std::erase_if(sorted, [](const Poly<K>& p) { return p.is_zero(); });
    std::sort(sorted.begin(), sorted.end(), [](const Poly<K>& a, const Poly<K>& b) {
        return a.degree() < b.degree();
    });
    std::vector<Poly<K>> kept = modulo;
    std::vector<Poly<K>> result;
    for (const auto& g : sorted) {
        auto G = buchberger(kept, MonomialOrder::degrevlex());
        if (!gb_detail::reduce(g, G, MonomialOrder::degrevlex()).is_zero()) {
            kept.push_back(g);
            result.push_back(g);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Graded ring maps
// ---------------------------------------------------------------------------

// Isomorphism test for graded quotient presentations:
//   (a) every source relation maps into the target relations,
//   (b) generator images are homogeneous of degree 1 and span the target's
//       degree-1 piece modulo relations,
//   (c) graded Hilbert functions agree through `depth` (chosen past the
//       stabilization degree for the rings at hand).
template <class K>
bool map_is_isomorphism(const RingMap<K>& m, int depth = 10) {
    if (m.images.size() != m.source.ring->nvars())
        throw input_error("ring map image count mismatch");
    for (const auto& img : m.images) {
        if (img.is_zero()) continue;
        if (!img.is_homogeneous() || img.degree() != 1)
            throw precondition_error("ring map is not grading-preserving");
    }
    auto GT = groebner(m.target.relations);
    for (const auto& rel : m.source.relations.gens) {
        Poly<K> image = poly_subst(rel, m.images);
        if (!ideal_member(image, GT)) return false;
    }
    // degree-1 spanning check
    {
        std::size_t n = m.target.ring->nvars();
        Matrix<K> rowspace;
        for (const auto& img : m.images) {
            std::vector<K> row(n, field_traits<K>::zero());
            for (auto& [mono, c] : img.terms())
                for (std::size_t i = 0; i < n; ++i)
                    if (mono.e[i] == 1) row[i] = c;
            rowspace.append_row(row);
        }
        for (const auto& rel : m.target.relations.gens) {
            if (rel.degree() != 1) continue;
            std::vector<K> row(n, field_traits<K>::zero());
            for (auto& [mono, c] : rel.terms())
                for (std::size_t i = 0; i < n; ++i)
                    if (mono.e[i] == 1) row[i] = c;
            rowspace.append_row(row);
        }
        std::size_t need = 0;  // dim of target degree-1 piece + relation rows
        Matrix<K> full = rowspace;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<K> row(n, field_traits<K>::zero());
            row[i] = field_traits<K>::one();
            full.append_row(row);
        }
        need = full.rank();
        if (rowspace.rank() != need) return false;
    }
    auto hs = hilbert_function(m.source, depth);
    auto ht = hilbert_function(m.target, depth);
    return hs == ht;
}

}  // namespace hkq

#endif
