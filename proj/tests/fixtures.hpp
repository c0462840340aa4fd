#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimetric/space.hpp"

// Small hand-checked spaces shared by the test binaries.
namespace fx {

using trimetric::Matrix;
using trimetric::PseudometricSpace;
using trimetric::Rational;

inline PseudometricSpace ints(std::vector<std::string> labels,
                              const std::vector<std::vector<long>>& m) {
    Matrix d(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long v : m[i]) d[i].push_back(Rational(v));
    return PseudometricSpace(std::move(labels), d);
}

// Right triangle with side lengths 3, 4, 5.  Not trim; one trimming step
// collapses it to a point.
inline PseudometricSpace triangle345() {
    return ints({"x", "y", "z"}, {{0, 3, 4}, {3, 0, 5}, {4, 5, 0}});
}

// Two diametrically opposite pairs on a circle: d(a,b)=d(c,e)=r,
// d(a,c)=d(b,e)=s, d(a,e)=d(b,c)=r+s.  Trim metric space for r,s > 0.
inline PseudometricSpace crossed_pairs(const Rational& r, const Rational& s) {
    Matrix d(4, std::vector<Rational>(4, Rational(0)));
    auto set = [&](std::size_t i, std::size_t j, const Rational& v) { d[i][j] = d[j][i] = v; };
    set(0, 1, r);      // a,b
    set(2, 3, r);      // c,e
    set(0, 2, s);      // a,c
    set(1, 3, s);      // b,e
    set(0, 3, r + s);  // a,e
    set(1, 2, r + s);  // b,c
    return PseudometricSpace({"a", "b", "c", "e"}, d);
}

// Binary words of the given length under the Hamming distance (number of
// differing positions).  Trim for length >= 2.
inline PseudometricSpace hamming(std::size_t length) {
    std::size_t n = std::size_t{1} << length;
    std::vector<std::string> labels(n);
    for (std::size_t w = 0; w < n; ++w) {
        std::string bits(length, '0');
        for (std::size_t k = 0; k < length; ++k)
            if (w & (std::size_t{1} << (length - 1 - k))) bits[k] = '1';
        labels[w] = bits;
    }
    Matrix d(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t x = i ^ j;
            long bits = 0;
            while (x) {
                bits += static_cast<long>(x & 1);
                x >>= 1;
            }
            d[i][j] = d[j][i] = Rational(bits);
        }
    return PseudometricSpace(std::move(labels), d);
}

// Eight equally spaced points on a circle of circumference 8 with the
// shorter-arc distance; every open half-circle holds three of them, so the
// space is trim.
inline PseudometricSpace circle8() {
    Matrix d(8, std::vector<Rational>(8, Rational(0)));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 8; ++i) labels.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            long gap = static_cast<long>(j - i);
            d[i][j] = d[j][i] = Rational(std::min(gap, 8 - gap));
        }
    return PseudometricSpace(std::move(labels), d);
}

// Trim pseudometric space whose metric quotient (two points at distance 1)
// is not trim: x~y and a~b at distance 0, all cross distances 1.
inline PseudometricSpace two_blocks() {
    return ints({"x", "y", "a", "b"}, {{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}});
}

// Does m send a onto b bijectively and preserve every distance?
inline bool preserves_distances(const PseudometricSpace& a, const PseudometricSpace& b,
                                const std::vector<std::size_t>& m) {
    if (a.size() != b.size() || m.size() != a.size()) return false;
    std::vector<bool> hit(b.size(), false);
    for (std::size_t j : m) {
        if (j >= b.size() || hit[j]) return false;
        hit[j] = true;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.dist(i, j) != b.dist(m[i], m[j])) return false;
    return true;
}

}  // namespace fx
