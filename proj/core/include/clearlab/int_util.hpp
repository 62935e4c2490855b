#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace clearlab {

/// Exact arbitrary-precision integer used for all Z-valued data.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Extended Euclid: returns g = gcd(a,b) >= 0 and x,y with a*x + b*y = g.
inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) + b) % n);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t n) {
    return a == 0 ? 0 : n - a;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

/// Inverse of a mod n when gcd(a,n)=1; 0 otherwise (0 is never an inverse
/// since n >= 2).
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t n) {
    Int x, y;
    Int g = xgcd(Int(a), Int(n), x, y);
    if (g != 1) return 0;
    Int r = x % Int(n);
    if (r < 0) r += n;
    return static_cast<std::uint64_t>(r);
}

/// SplitMix64: tiny deterministic generator for seeded surveys. The stream
/// is fixed by the seed alone, independent of platform or standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, range) by rejection.
    std::uint64_t below(std::uint64_t range) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % range);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % range;
    }

    /// Uniform in [-bound, bound].
    std::int64_t symmetric(std::int64_t bound) {
        return static_cast<std::int64_t>(below(2 * bound + 1)) - bound;
    }

private:
    std::uint64_t state_;
};

} // namespace clearlab
