#ifndef HKQ_RATIONAL_HPP
#define HKQ_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkq {

// Exact arbitrary-precision rational, always stored in canonical form
// (coprime numerator/denominator, positive denominator).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw input_error("bad rational literal '" + s + "'");
    }
}

// Deterministic 64-bit linear-congruential stream used everywhere a seeded
// random choice is needed (interior sampling, fixture searches, property
// tests). Constants from Knuth's MMIX.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // uniform integer in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace hkq

#endif
