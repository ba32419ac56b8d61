#ifndef HKQ_GF2_HPP
#define HKQ_GF2_HPP

#include <cstdint>
#include <string>

namespace hkq {

// The two-element field.
class GF2 {
  public:
    GF2() : v_(0) {}
    explicit GF2(long long n) : v_(static_cast<std::uint8_t>(((n % 2) + 2) % 2)) {}

    friend GF2 operator+(GF2 a, GF2 b) { return from_bit(a.v_ ^ b.v_); }
    friend GF2 operator-(GF2 a, GF2 b) { return from_bit(a.v_ ^ b.v_); }
    friend GF2 operator*(GF2 a, GF2 b) { return from_bit(a.v_ & b.v_); }
    friend GF2 operator/(GF2 a, GF2 b) { return from_bit(a.v_ & b.v_); }  // b must be 1
    GF2 operator-() const { return *this; }
    GF2& operator+=(GF2 o) { v_ ^= o.v_; return *this; }
    GF2& operator-=(GF2 o) { v_ ^= o.v_; return *this; }
    GF2& operator*=(GF2 o) { v_ &= o.v_; return *this; }
    friend bool operator==(GF2 a, GF2 b) { return a.v_ == b.v_; }
    friend bool operator!=(GF2 a, GF2 b) { return a.v_ != b.v_; }

    bool is_zero() const { return v_ == 0; }
    std::string str() const { return v_ ? "1" : "0"; }

  private:
    static GF2 from_bit(int v) {
        GF2 g;
        g.v_ = static_cast<std::uint8_t>(v & 1);
        return g;
    }
    std::uint8_t v_;
};

}  // namespace hkq

#endif
