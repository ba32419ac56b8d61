// Shared arrangement and polygon fixtures. The triplet consists of three
// four-line arrangements related by a coorientation flip and a translation;
// its normals are chosen so that ker(iota^*) = <t1+t2-t3, t1-t4>. The other
// fixtures realize a five-line arrangement with a positive-dimensional fixed
// component and a four-line arrangement with a non-unimodular double point.
#ifndef HKQ_TEST_FIXTURES_HPP
#define HKQ_TEST_FIXTURES_HPP

#include "hkq/arrangement.hpp"
#include "hkq/polygon.hpp"

namespace hkq::fixtures {

inline Arrangement triplet(const std::vector<Rational>& offsets) {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 1}, {1, 0}, {-1, 0}, {0, -1}};
    arr.offsets = offsets;
    return arr;
}

inline Arrangement triplet_a() { return triplet({Rational(1), Rational(0), Rational(1), Rational(0)}); }
inline Arrangement triplet_c() { return triplet({Rational(0), Rational(1), Rational(1), Rational(0)}); }

// 2(b) = 2(a) with the coorientation of H_2 reversed
inline Arrangement triplet_b() {
    Arrangement arr = triplet_a();
    arr.normals[1] = {-1, 0};
    arr.offsets[1] = -arr.offsets[1];
    return arr;
}

// fifth hyperplane of the primed arrangements: parallel to H_1, far enough
// out that it precedes the whole configuration
inline Arrangement add_fifth(Arrangement arr) {
    arr.normals.push_back({1, 1});
    arr.offsets.push_back(Rational(2));
    return arr;
}
inline Arrangement triplet_a_prime() { return add_fifth(triplet_a()); }
inline Arrangement triplet_c_prime() { return add_fifth(triplet_c()); }

// five lines, three bounded regions; the fixed locus has one component per
// bounded region, one of them an edge (a projective line)
inline Arrangement five_line() {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 0}, {0, 1}, {-1, -1}, {0, -1}, {0, 1}};
    arr.offsets = {Rational(0), Rational(0), Rational(2), Rational(1), Rational(1)};
    return arr;
}

// four lines with one non-unimodular double point (H_3 cap H_4): four fixed
// components but only three core components
inline Arrangement orbifold_double_point() {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 0}, {0, 1}, {-1, -1}, {1, -1}};
    arr.offsets = {Rational(0), Rational(0), Rational(2), Rational(3)};
    return arr;
}

inline Arrangement triangle() {
    Arrangement arr;
    arr.d = 2;
    arr.normals = {{1, 0}, {0, 1}, {-1, -1}};
    arr.offsets = {Rational(0), Rational(0), Rational(1)};
    return arr;
}

inline PolygonSpec alpha11333() {
    return PolygonSpec{{Rational(1), Rational(1), Rational(3), Rational(3), Rational(3)}};
}

inline PolygonSpec alpha2348() {
    return PolygonSpec{{Rational(2), Rational(3), Rational(4), Rational(8)}};
}

}  // namespace hkq::fixtures

#endif
