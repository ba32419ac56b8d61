#ifndef HKQ_POLY_HPP
#define HKQ_POLY_HPP

#include "hkq/field.hpp"
#include "hkq/monomial.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hkq {

// Ambient polynomial ring: an ordered list of named degree-1 indeterminates.
// The conventional alphabets are t1..tn (cotangent-class generators),
// x, c1..cn, del, d1..dn, a1..an, b1..bn, x1..xn.
struct PolyRing {
    std::vector<std::string> vars;
    FieldTag field = FieldTag::Q;

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const PolyRing& o) const {
        return vars == o.vars && field == o.field;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldTag f = FieldTag::Q) {
    return std::make_shared<PolyRing>(PolyRing{std::move(vars), f});
}

inline std::vector<std::string> numbered_vars(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

namespace detail {
// fixed canonical storage order: degrevlex ascending by map comparator
struct DrlLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::degrevlex().less(a, b);
    }
};
}  // namespace detail

// Immutable-by-convention sparse multivariate polynomial. Terms live in a
// map keyed by exponent vector; no zero coefficients are ever stored.
template <class K>
class Poly {
  public:
    using TermMap = std::map<Monomial, K, detail::DrlLess>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const K& c) {
        Poly p(ring);
        p.add_term(Monomial(ring->nvars()), c);
        return p;
    }
    static Poly variable(RingPtr ring, std::size_t i) {
        Poly p(ring);
        Monomial m(ring->nvars());
        m.e[i] = 1;
        p.add_term(m, field_traits<K>::one());
        return p;
    }
    static Poly variable(RingPtr ring, const std::string& name) {
        int i = ring->var_index(name);
        if (i < 0) throw input_error("unknown variable '" + name + "'");
        return variable(ring, static_cast<std::size_t>(i));
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::int64_t degree() const {  // -1 for the zero polynomial
        std::int64_t d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    bool is_homogeneous() const {
        std::int64_t d = -2;
        for (auto& [m, c] : terms_) {
            if (d == -2) d = m.degree();
            else if (m.degree() != d) return false;
        }
        return true;
    }

    void add_term(const Monomial& m, const K& c) {
        if (field_traits<K>::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (field_traits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a);
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a);
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const K& c, const Poly& p) {
        Poly r(p.ring_);
        for (auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
        return r;
    }
    Poly mul_term(const Monomial& m, const K& c) const {
        Poly r(ring_);
        for (auto& [pm, pc] : terms_) r.add_term(pm * m, pc * c);
        return r;
    }
    bool operator==(const Poly& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // leading term with respect to an order (linear scan; polynomials at
    // this scale stay small)
    std::pair<Monomial, K> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw internal_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_traits<K>::zero() : it->second;
    }

    void check_ring(const Poly& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
            throw input_error("polynomial ring mismatch");
    }

  private:
    RingPtr ring_;
    TermMap terms_;
};

// ---- evaluation -----------------------------------------------------------

template <class K>
K poly_eval(const Poly<K>& p, const std::vector<K>& point) {
    if (point.size() != p.ring()->nvars())
        throw input_error("poly_eval arity mismatch");
    K acc = field_traits<K>::zero();
    for (auto& [m, c] : p.terms()) {
        K t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (std::int32_t k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

// Substitute polynomials for the variables (ring homomorphism into the
// common ring of the images).
template <class K>
Poly<K> poly_subst(const Poly<K>& p, const std::vector<Poly<K>>& images) {
    if (images.size() != p.ring()->nvars())
        throw input_error("poly_subst arity mismatch");
    RingPtr target = images.empty() ? p.ring() : images.front().ring();
    Poly<K> acc = Poly<K>::zero(target);
    for (auto& [m, c] : p.terms()) {
        Poly<K> t = Poly<K>::constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::int32_t k = 0; k < m.e[i]; ++k) t = t * images[i];
        acc = acc + t;
    }
    return acc;
}

// ---- exact division -------------------------------------------------------

// p / q when q divides p exactly; inexact division is an error, never a
// silent truncation.
template <class K>
Poly<K> poly_divexact(const Poly<K>& p, const Poly<K>& q) {
    p.check_ring(q);
    if (q.is_zero()) throw input_error("division by zero polynomial");
    MonomialOrder ord = MonomialOrder::degrevlex();
    auto [lmq, lcq] = q.leading_term(ord);
    Poly<K> rem = p, quot(p.ring());
    while (!rem.is_zero()) {
        auto [lmr, lcr] = rem.leading_term(ord);
        if (!lmq.divides(lmr)) throw input_error("inexact polynomial division");
        Monomial m = lmr / lmq;
        K c = lcr / lcq;
        quot.add_term(m, c);
        rem = rem - q.mul_term(m, c);
    }
    return quot;
}

// ---- apolarity ------------------------------------------------------------

namespace detail {
inline Rational falling_factorial(std::int32_t b, std::int32_t a) {
    Rational r(1);
    for (std::int32_t k = 0; k < a; ++k) r *= (b - k);
    return r;
}
}  // namespace detail

// The differentiation action: op(d/dx_1, ..., d/dx_n) applied to f.
// Contraction rule on monomials: del^a (x^b) = (b!/(b-a)!) x^{b-a} when
// a <= b componentwise, else 0.
inline Poly<Rational> poly_apolar(const Poly<Rational>& op, const Poly<Rational>& f) {
    if (op.ring()->nvars() != f.ring()->nvars())
        throw input_error("poly_apolar arity mismatch");
    Poly<Rational> acc(f.ring());
    for (auto& [ma, ca] : op.terms()) {
        for (auto& [mb, cb] : f.terms()) {
            if (!ma.divides(mb)) continue;
            Rational factor = ca * cb;
            for (std::size_t i = 0; i < ma.e.size(); ++i)
                factor *= detail::falling_factorial(mb.e[i], ma.e[i]);
            acc.add_term(mb / ma, factor);
        }
    }
    return acc;
}

// ---- canonical strings ----------------------------------------------------

// Canonical grammar: terms in degrevlex-descending order joined by
// " + " / " - "; each term is "coef*var^e*..." with unit coefficients
// omitted, exponent 1 omitted, rationals printed p/q.
template <class K>
std::string poly_to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, K>> terms(p.terms().begin(), p.terms().end());
    // map iterates degrevlex ascending; reverse for descending
    std::ostringstream out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [m, c] = *it;
        std::string cs = field_traits<K>::str(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (cs == "1");
        if (m.is_one()) {
            out << cs;
            continue;
        }
        bool star = false;
        if (!unit) {
            out << cs;
            star = true;
        }
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (star) out << "*";
            out << p.ring()->vars[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
            star = true;
        }
    }
    return out.str();
}

template <class K>
Poly<K> poly_parse(const RingPtr& ring, const std::string& text) {
    Poly<K> acc(ring);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw input_error("empty polynomial string");
    bool negative = false;
    if (text[i] == '-') { negative = true; ++i; }
    else if (text[i] == '+') ++i;
    while (true) {
        skip_ws();
        // one term: factors separated by '*'
        K coef = field_traits<K>::one();
        Monomial mono(ring->nvars());
        bool saw_factor = false;
        while (true) {
            skip_ws();
            std::size_t start = i;
            if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
                while (i < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                    ++i;
                coef = coef * field_traits<K>::parse(text.substr(start, i - start));
                saw_factor = true;
            } else if (i < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                while (i < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    ++i;
                std::string name = text.substr(start, i - start);
                int vi = ring->var_index(name);
                if (vi < 0) throw input_error("unknown variable '" + name + "'");
                std::int32_t exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    std::size_t es = i;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                    if (es == i) throw input_error("missing exponent");
                    exp = static_cast<std::int32_t>(std::stol(text.substr(es, i - es)));
                }
                mono.e[static_cast<std::size_t>(vi)] += exp;
                saw_factor = true;
            } else {
                throw input_error("bad polynomial syntax near position " + std::to_string(i));
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; continue; }
            break;
        }
        if (!saw_factor) throw input_error("empty term");
        acc.add_term(mono, negative ? -coef : coef);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+') negative = false;
        else if (text[i] == '-') negative = true;
        else throw input_error("bad polynomial syntax near position " + std::to_string(i));
        ++i;
    }
    return acc;
}

}  // namespace hkq

#endif
