#ifndef HKQ_FIELD_HPP
#define HKQ_FIELD_HPP

#include "hkq/gf2.hpp"
#include "hkq/rational.hpp"

#include <string>

namespace hkq {

enum class FieldTag { Q, F2 };

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr FieldTag tag = FieldTag::Q;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string str(const Rational& x) { return rational_to_string(x); }
    static Rational parse(const std::string& s) { return parse_rational(s); }
    static const char* name() { return "Q"; }
};

template <>
struct field_traits<GF2> {
    static constexpr FieldTag tag = FieldTag::F2;
    static GF2 zero() { return GF2(); }
    static GF2 one() { return GF2(1); }
    static bool is_zero(GF2 x) { return x.is_zero(); }
    static std::string str(GF2 x) { return x.str(); }
    static GF2 parse(const std::string& s) {
        return GF2(std::stoll(s));
    }
    static const char* name() { return "F2"; }
};

}  // namespace hkq

#endif
