#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distgraph/error.hpp"
#include "distgraph/int128.hpp"

namespace distgraph {

/// Integer 2-vector, a representative of a point of the projective line.
struct IVec2 {
    Int128 u{0}, v{0};

    friend IVec2 operator+(const IVec2& a, const IVec2& b) { return {a.u + b.u, a.v + b.v}; }
    friend IVec2 operator-(const IVec2& a, const IVec2& b) { return {a.u - b.u, a.v - b.v}; }
    IVec2 operator-() const { return {-u, -v}; }
    friend IVec2 operator*(Int128 k, const IVec2& a) { return {k * a.u, k * a.v}; }
    friend bool operator==(const IVec2& a, const IVec2& b) = default;
};

/// det[u, v] for the matrix with columns u and v, exact.
inline Int128 det2(const IVec2& a, const IVec2& b) { return a.u * b.v - a.v * b.u; }

/// A point of the projective line over the integers: the cyclic module
/// generated by a unimodular pair, stored as its canonical representative.
///
/// Canonical sign: b > 0, or b == 0 and a == 1.  Exactly one representative
/// per point, so equality, ordering and hashing are plain field comparisons.
class ProjPoint {
public:
    ProjPoint() = default;  // the axis point 1:0
    ProjPoint(Int128 a, Int128 b) {
        if (a == Int128(0) && b == Int128(0)) throw ZeroVectorError("(0,0) generates no projective point");
        if (gcd(a, b) != Int128(1))
            throw NonUnimodularError("(" + to_string(a) + "," + to_string(b) + ") is not unimodular");
        if (b < Int128(0) || (b == Int128(0) && a < Int128(0))) {
            a = -a;
            b = -b;
        }
        a_ = a;
        b_ = b;
    }
    explicit ProjPoint(const IVec2& v) : ProjPoint(v.u, v.v) {}

    const Int128& a() const noexcept { return a_; }
    const Int128& b() const noexcept { return b_; }
    IVec2 vec() const { return {a_, b_}; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& p, const ProjPoint& q) {
        if (auto c = p.a_ <=> q.a_; c != std::strong_ordering::equal) return c;
        return p.b_ <=> q.b_;
    }

private:
    Int128 a_{1}, b_{0};
};

/// Canonical representative of the module generated by (a, b); idempotent.
inline ProjPoint canonicalize(Int128 a, Int128 b) { return {a, b}; }

// Exact-match overload so integer literals never fall through to the C
// library's canonicalize(double*, const double*) when both are in scope.
inline ProjPoint canonicalize(long long a, long long b) { return {Int128(a), Int128(b)}; }
inline ProjPoint canonicalize(int a, int b) { return {Int128(a), Int128(b)}; }

inline std::string to_string(const ProjPoint& p) { return to_string(p.a()) + ":" + to_string(p.b()); }

/// Parses the `a:b` point syntax used across the CLI, then canonicalizes.
inline ProjPoint parse_point(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected a:b, got '" + std::string(text) + "'");
    return {parse_int128(text.substr(0, colon)), parse_int128(text.substr(colon + 1))};
}

/// Two points are distant when representatives form a matrix of determinant
/// +-1.  Symmetric, irreflexive.
inline bool is_distant(const ProjPoint& p, const ProjPoint& q) {
    return abs(det2(p.vec(), q.vec())) == Int128(1);
}

/// The bi-sequence c_n = seed + n*step of all vectors with det[x, c_n] = 1.
///
/// step is -x, so consecutive members differ by a representative of the base
/// point and {c_n, c_{n+1}, base} is always a clique.
struct NeighborSequence {
    ProjPoint base;
    IVec2 seed;  // minimal-nonnegative extended-Euclid solution of det[x, c] = 1
    IVec2 step;  // -x

    IVec2 at(Int128 n) const { return seed + n * step; }
};

inline NeighborSequence neighbor_sequence(const ProjPoint& p) {
    const IVec2 x = p.vec();
    // det[x, c] = x.u*c.v - x.v*c.u = 1; extended_gcd gives s*u + t*v = 1.
    auto eg = extended_gcd(x.u, x.v);
    IVec2 c{-eg.t, eg.s};
    // Shifting c by k*x is free; normalize the component where x is larger
    // into [0, |that component|) for a deterministic seed.
    if (x.u != Int128(0) && (x.v == Int128(0) || abs(x.u) >= abs(x.v))) {
        Int128 m = abs(x.u);
        Int128 r = ((c.u % m) + m) % m;
        Int128 k = (r - c.u) / x.u;
        c = c + k * x;
    } else {
        Int128 m = abs(x.v);
        Int128 r = ((c.v % m) + m) % m;
        Int128 k = (r - c.v) / x.v;
        c = c + k * x;
    }
    return {p, c, -x};
}

/// Neighbors c_n of p for n in [lo, hi], canonicalized, in window order.
inline std::vector<ProjPoint> neighbors(const ProjPoint& p, long long lo, long long hi) {
    NeighborSequence seq = neighbor_sequence(p);
    std::vector<ProjPoint> out;
    for (long long n = lo; n <= hi; ++n) out.emplace_back(seq.at(Int128(n)));
    return out;
}

enum class ConeClass { Positive, Negative };

/// Exact coordinates of u in the basis (x, y): u*denom = alpha_num*x + beta_num*y.
struct ConeCoordinates {
    Int128 alpha_num;  // det[u, y]
    Int128 beta_num;   // det[x, u]
    Int128 denom;      // det[x, y]
};

inline ConeCoordinates cone_coordinates(const ProjPoint& x, const ProjPoint& y, const ProjPoint& u) {
    return {det2(u.vec(), y.vec()), det2(x.vec(), u.vec()), det2(x.vec(), y.vec())};
}

namespace detail {

/// Which open cone spanned by (x, y) contains u: +1 for C+, -1 for C-.
/// alpha*beta has the sign of det[u,y]*det[x,u] (the denominator appears
/// squared), so the product test is representative-independent.
inline int cone_side(const IVec2& x, const IVec2& y, const IVec2& u) {
    int s = sign(det2(u, y)) * sign(det2(x, u));
    if (s == 0) throw DegenerateArgumentsError("cone side undefined: point lies on a spanning line");
    return s;
}

}  // namespace detail

/// Class of u under the cone relation determined by distinct x, y.
inline ConeClass cone_class(const ProjPoint& x, const ProjPoint& y, const ProjPoint& u) {
    if (x == y) throw DegenerateArgumentsError("cone relation needs distinct points");
    if (u == x || u == y) throw DegenerateArgumentsError("cone relation is defined away from the base pair");
    return detail::cone_side(x.vec(), y.vec(), u.vec()) > 0 ? ConeClass::Positive : ConeClass::Negative;
}

/// +1 when u and v lie in the same equivalence class of the cone relation
/// determined by x and y, -1 otherwise.  Never 0 for valid arguments.
inline int cone_sign(const ProjPoint& x, const ProjPoint& y, const ProjPoint& u, const ProjPoint& v) {
    if (x == y) throw DegenerateArgumentsError("cone relation needs distinct points");
    if (u == x || u == y || v == x || v == y)
        throw DegenerateArgumentsError("cone relation is defined away from the base pair");
    return detail::cone_side(x.vec(), y.vec(), u.vec()) * detail::cone_side(x.vec(), y.vec(), v.vec());
}

/// The two maximal cliques through a distant pair: third vertices are the
/// classes of p+q and p-q, one in each cone class of the pair.
inline std::pair<std::array<ProjPoint, 3>, std::array<ProjPoint, 3>> maximal_cliques(const ProjPoint& p,
                                                                                     const ProjPoint& q) {
    if (!is_distant(p, q)) throw NotDistantError("maximal cliques exist only through distant pairs");
    ProjPoint sum{p.vec() + q.vec()};
    ProjPoint diff{p.vec() - q.vec()};
    return {std::array<ProjPoint, 3>{p, q, sum}, std::array<ProjPoint, 3>{p, q, diff}};
}

}  // namespace distgraph

template <>
struct std::hash<distgraph::IVec2> {
    std::size_t operator()(const distgraph::IVec2& v) const noexcept {
        std::size_t h = std::hash<distgraph::Int128>{}(v.u);
        h ^= std::hash<distgraph::Int128>{}(v.v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

template <>
struct std::hash<distgraph::ProjPoint> {
    std::size_t operator()(const distgraph::ProjPoint& p) const noexcept {
        return std::hash<distgraph::IVec2>{}(p.vec());
    }
};
