#pragma once

#include <algorithm>
#include <vector>

#include "distgraph/transition.hpp"

namespace distgraph {

/// Exact 2x2 integer matrix; products of generators have determinant +-1.
struct Mat2 {
    Int128 m11{1}, m12{0}, m21{0}, m22{1};

    static Mat2 identity() { return {}; }
    Int128 det() const { return m11 * m22 - m12 * m21; }
    Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// The generator E(a) = [[a, 1], [-1, 0]]; always determinant +1.
inline Mat2 e_matrix(Int128 a) { return {a, 1, -1, 0}; }

/// A signed product of generators, leftmost factor first.  The number of
/// factors equals the length of the represented path.
struct EWord {
    int sign = 1;
    std::vector<Int128> coeffs;

    long long length() const { return static_cast<long long>(coeffs.size()); }
    friend bool operator==(const EWord&, const EWord&) = default;
};

inline Mat2 eval_word(const EWord& w) {
    Mat2 m = Mat2::identity();
    for (const Int128& c : w.coeffs) m = m * e_matrix(c);
    return w.sign < 0 ? -m : m;
}

/// Continued fraction q/p = [d_0; d_1, ..., d_n] with d_n > 1.
struct CFExpansion {
    std::vector<Int128> d;

    long long n() const { return static_cast<long long>(d.size()) - 1; }
};

inline CFExpansion cf_expand(Int128 p, Int128 q) {
    if (p < Int128(1)) throw BadSlopeError("denominator must be positive");
    if (gcd(p, q) != Int128(1)) throw NonUnimodularError("slope must be in lowest terms");
    if (q < Int128(2) * p) throw BadSlopeError("slope " + to_string(q) + "/" + to_string(p) + " is below 2");
    CFExpansion cf;
    Int128 num = q, den = p;
    while (den != Int128(0)) {
        Int128 digit = floor_div(num, den);
        cf.d.push_back(digit);
        Int128 rem = num - digit * den;
        num = den;
        den = rem;
    }
    // Plain Euclid never ends in 1 here, but the convention d_n > 1 is part
    // of the contract, so fold defensively.
    if (cf.d.size() >= 2 && cf.d.back() == Int128(1)) {
        cf.d.pop_back();
        cf.d.back() += Int128(1);
    }
    return cf;
}

/// Basis adapted to the word construction: (x, f_1), switched to (-x, e_1)
/// when the slope of y falls below 2, so the continued fraction of the
/// returned coordinates always starts with d_0 >= 2.
struct StandardBasis {
    IVec2 u, v;
    IVec2 y_coords;  // y = y_coords.u * u + y_coords.v * v, slope v/u >= 2
};

inline StandardBasis standard_basis(const ProjPoint& x, const ProjPoint& y) {
    TransitionData td = transition(x, y);
    const IVec2& e1 = td.orientation == Orientation::TR ? td.e_vecs.front() : td.f_vecs.front();
    const IVec2& f1 = td.orientation == Orientation::TR ? td.f_vecs.front() : td.e_vecs.front();
    const Int128 q = det2(td.x_vec, td.y_vec);
    const Int128 p = det2(td.y_vec, f1);
    if (q >= Int128(2) * p) return {td.x_vec, f1, {p, q}};
    return {-td.x_vec, e1, {q - p, q}};
}

/// The word of the standard path: E((-1)^{n+1} d_n) ... E(d_1) E(-d_0) E(0),
/// built over the continued fraction of the standard-basis coordinates.
inline EWord standard_word(const ProjPoint& x, const ProjPoint& y) {
    StandardBasis sb = standard_basis(x, y);
    CFExpansion cf = cf_expand(sb.y_coords.u, sb.y_coords.v);
    EWord w;
    for (long long k = cf.n(); k >= 1; --k) {
        const Int128& dk = cf.d[static_cast<std::size_t>(k)];
        w.coeffs.push_back(k % 2 == 1 ? dk : -dk);
    }
    w.coeffs.push_back(-cf.d[0]);
    w.coeffs.push_back(0);
    return w;
}

/// Exhaustively rewrites inner factors E(+-1) through
/// E(a) E(s) E(b) = s E(a-s) E(b-s),  s = +-1,
/// leftmost first.  Each rewrite shortens the word by one, so the result has
/// no inner +-1 and its length is the graph distance of the endpoints when
/// applied to a standard word.
inline EWord reduce_word(EWord w) {
    while (true) {
        bool rewrote = false;
        for (std::size_t i = 1; i + 1 < w.coeffs.size(); ++i) {
            if (w.coeffs[i] != Int128(1) && w.coeffs[i] != Int128(-1)) continue;
            const Int128 s = w.coeffs[i];
            w.coeffs[i - 1] -= s;
            w.coeffs[i + 1] -= s;
            w.coeffs.erase(w.coeffs.begin() + static_cast<std::ptrdiff_t>(i));
            if (s < Int128(0)) w.sign = -w.sign;
            rewrote = true;
            break;
        }
        if (!rewrote) return w;
    }
}

/// The matrices representing the shortest paths: always the reduced standard
/// word's value A; a second representative -[[1,0],[(-1)^n,1]] A exists
/// unless d_n > 2 or the ones directly below d_n = 2 form an odd run.
inline std::vector<Mat2> shortest_path_matrices(const ProjPoint& x, const ProjPoint& y) {
    StandardBasis sb = standard_basis(x, y);
    CFExpansion cf = cf_expand(sb.y_coords.u, sb.y_coords.v);
    Mat2 a = eval_word(reduce_word(standard_word(x, y)));
    const long long n = cf.n();
    bool unique = cf.d[static_cast<std::size_t>(n)] > Int128(2);
    if (!unique && cf.d[static_cast<std::size_t>(n)] == Int128(2)) {
        long long ones = 0;
        while (n - 1 - ones >= 0 && cf.d[static_cast<std::size_t>(n - 1 - ones)] == Int128(1)) ++ones;
        unique = ones >= 1 && ones % 2 == 1;
    }
    if (unique) return {a};
    Mat2 lower{1, 0, n % 2 == 0 ? 1 : -1, 1};
    return {a, -(lower * a)};
}

}  // namespace distgraph
