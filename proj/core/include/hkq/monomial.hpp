#ifndef HKQ_MONOMIAL_HPP
#define HKQ_MONOMIAL_HPP

#include "hkq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace hkq {

// Exponent vector with cached total degree. All variables sit in degree 1;
// cohomological degree is twice this by convention and appears only in
// reports.
struct Monomial {
    std::vector<std::int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    std::int64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::int64_t{0});
    }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    // caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
};

struct MonomialOrder {
    enum Kind { Degrevlex, Lex, Block };
    Kind kind = Degrevlex;
    // Block: variables [0, split) form the (degrevlex-compared) leading block,
    // eliminating them; the tail block is compared degrevlex as well.
    std::size_t split = 0;

    static MonomialOrder degrevlex() { return {Degrevlex, 0}; }
    static MonomialOrder lex() { return {Lex, 0}; }
    static MonomialOrder elimination_block(std::size_t split) { return {Block, split}; }

    // returns <0, 0, >0 as a gets smaller/equal/greater than b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Lex: {
                for (std::size_t i = 0; i < a.e.size(); ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
                return 0;
            }
            case Degrevlex:
                return drl(a, b, 0, a.e.size());
            case Block: {
                int lead = drl(a, b, 0, split);
                if (lead != 0) return lead;
                return drl(a, b, split, a.e.size());
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  private:
    static int drl(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        std::int64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
};

}  // namespace hkq

#endif
