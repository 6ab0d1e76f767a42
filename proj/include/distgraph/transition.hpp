#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "distgraph/core.hpp"

namespace distgraph {

/// Which geometric side plays the role of the first-growing sequence.
/// TR: the clique partner of (e1, f1) lies in e1's cone class, so the
/// e-labelled side grows first.  TL is the mirrored case; the algorithm runs
/// one code path and swaps labels, recording the swap here.
enum class Orientation { TR, TL };

/// Full output of the transition algorithm between two non-adjacent points.
///
/// e_seq/f_seq are the two vertex chains (each consecutive pair distant, the
/// two chains in different cone classes), a/b the run lengths, A/B their
/// prefix sums with the unit sentinels a_0 = a_{r+1} = b_0 = b_{l+1} = 1.
struct TransitionData {
    ProjPoint x, y;
    Orientation orientation = Orientation::TR;
    std::vector<ProjPoint> e_seq, f_seq;
    std::vector<long long> a, b;  // a[0] is a_1; a.size() == r
    std::vector<long long> A, B;  // A[k] is A_k for k = 0..r+1
    long long r = 0, l = 0;

    // Representatives behind the canonical points: det[x_vec, y_vec] >= 2 and
    // every e_vec has positive coordinates in the (x_vec, y_vec) basis sense.
    IVec2 x_vec, y_vec;
    std::vector<IVec2> e_vecs, f_vecs;

    long long d_a() const { return 1 + A[r]; }
    long long d_b() const { return 1 + B[l]; }

    ProjPoint e_corner(long long k) const { return e_seq[static_cast<std::size_t>(A[k] - 1)]; }
    ProjPoint f_corner(long long k) const { return f_seq[static_cast<std::size_t>(B[k] - 1)]; }
    const IVec2& e_corner_vec(long long k) const { return e_vecs[static_cast<std::size_t>(A[k] - 1)]; }
    const IVec2& f_corner_vec(long long k) const { return f_vecs[static_cast<std::size_t>(B[k] - 1)]; }

    /// Coefficients with the unit sentinels at 0 and r+1 (resp. l+1).
    long long a_at(long long k) const { return (k == 0 || k == r + 1) ? 1 : a[static_cast<std::size_t>(k - 1)]; }
    long long b_at(long long k) const { return (k == 0 || k == l + 1) ? 1 : b[static_cast<std::size_t>(k - 1)]; }

    /// The interleaving (a_1, b_1, a_2, b_2, ...) of length r + l.
    std::vector<long long> c_sequence() const {
        std::vector<long long> c;
        for (long long k = 0; k < std::max(r, l); ++k) {
            if (k < r) c.push_back(a[static_cast<std::size_t>(k)]);
            if (k < l) c.push_back(b[static_cast<std::size_t>(k)]);
        }
        return c;
    }
};

namespace detail {

constexpr long long kTransitionStepCap = 8'000'000;

struct RawTransition {
    IVec2 x_vec, y_vec;                // det[x_vec, y_vec] = d >= 2
    std::vector<IVec2> q1_seq, q2_seq; // Q1 = positive-cone side, Q2 = the other
    std::vector<std::pair<int, long long>> runs;  // (+1 = Q1, -1 = Q2), in order
};

/// The affine fan walk shared by transition() and sails().
inline RawTransition raw_transition(const ProjPoint& x, const ProjPoint& y) {
    RawTransition out;
    out.x_vec = x.vec();
    out.y_vec = y.vec();
    Int128 d = det2(out.x_vec, out.y_vec);
    if (d < Int128(0)) {
        out.y_vec = -out.y_vec;
        d = -d;
    }
    const IVec2 c0 = neighbor_sequence(x).seed;
    const Int128 s0 = det2(c0, out.y_vec);
    const Int128 n0 = floor_div(s0, d);
    IVec2 e = c0 - n0 * out.x_vec;  // det[e, y] in (0, d): the Q1 seed
    IVec2 f = e - out.x_vec;        // det[f, y] in (-d, 0): the Q2 seed
    out.q1_seq.push_back(e);
    out.q2_seq.push_back(f);
    long long steps = 0;
    while (true) {
        const IVec2 g = e + f;
        if (g == out.y_vec) break;
        if (++steps > kTransitionStepCap)
            throw Error("transition sequence longer than " + std::to_string(kTransitionStepCap) +
                        " vertices; endpoints too far apart to materialize");
        const int side = sign(det2(g, out.y_vec));
        if (side == 0) throw Error("internal: fan walk produced a vector collinear with y");
        if (side > 0) {
            e = g;
            out.q1_seq.push_back(g);
        } else {
            f = g;
            out.q2_seq.push_back(g);
        }
        if (!out.runs.empty() && out.runs.back().first == side)
            ++out.runs.back().second;
        else
            out.runs.emplace_back(side, 1);
    }
    return out;
}

}  // namespace detail

/// Runs the transition algorithm between two non-adjacent points.
inline TransitionData transition(const ProjPoint& x, const ProjPoint& y) {
    if (x == y) throw TrivialPairError("transition endpoints coincide");
    if (is_distant(x, y)) throw TrivialPairError("transition endpoints are distant");

    detail::RawTransition raw = detail::raw_transition(x, y);

    TransitionData td;
    td.x = x;
    td.y = y;
    td.x_vec = raw.x_vec;
    td.y_vec = raw.y_vec;
    const bool tl = !raw.runs.empty() && raw.runs.front().first < 0;
    td.orientation = tl ? Orientation::TL : Orientation::TR;
    td.e_vecs = tl ? std::move(raw.q2_seq) : std::move(raw.q1_seq);
    td.f_vecs = tl ? std::move(raw.q1_seq) : std::move(raw.q2_seq);

    const int first_side = tl ? -1 : +1;
    for (std::size_t i = 0; i < raw.runs.size(); ++i) {
        const auto& [side, count] = raw.runs[i];
        const bool a_side = side == first_side;
        if (a_side != (i % 2 == 0)) throw Error("internal: fan runs do not alternate");
        (a_side ? td.a : td.b).push_back(count);
    }
    td.r = static_cast<long long>(td.a.size());
    td.l = static_cast<long long>(td.b.size());
    if (td.r - td.l != 0 && td.r - td.l != 1) throw Error("internal: run counts violate r - l in {0, 1}");

    td.A.assign(1, 1);
    for (long long k = 0; k < td.r; ++k) td.A.push_back(td.A.back() + td.a[static_cast<std::size_t>(k)]);
    td.A.push_back(td.A.back() + 1);
    td.B.assign(1, 1);
    for (long long k = 0; k < td.l; ++k) td.B.push_back(td.B.back() + td.b[static_cast<std::size_t>(k)]);
    td.B.push_back(td.B.back() + 1);
    if (td.A[static_cast<std::size_t>(td.r)] != static_cast<long long>(td.e_vecs.size()) ||
        td.B[static_cast<std::size_t>(td.l)] != static_cast<long long>(td.f_vecs.size()))
        throw Error("internal: corner index sums disagree with sequence lengths");

    td.e_seq.reserve(td.e_vecs.size());
    for (const IVec2& v : td.e_vecs) td.e_seq.emplace_back(v);
    td.f_seq.reserve(td.f_vecs.size());
    for (const IVec2& v : td.f_vecs) td.f_seq.emplace_back(v);
    return td;
}

/// Builds the transition data forward from a base point and run lengths,
/// choosing the endpoint y that the fan walk would stop on.  Inverse of
/// transition() in the sense that transition(x, result.y) reproduces the
/// coefficients exactly.  Requires len(a) - len(b) in {0, 1}, entries >= 1.
inline TransitionData transition_from_coefficients(const ProjPoint& x, const std::vector<long long>& a,
                                                   const std::vector<long long>& b) {
    const long long r = static_cast<long long>(a.size());
    const long long l = static_cast<long long>(b.size());
    if (r - l != 0 && r - l != 1)
        throw DegenerateArgumentsError("coefficient sequences must have lengths differing by 0 or 1");
    for (long long v : a)
        if (v < 1) throw DegenerateArgumentsError("run lengths must be positive");
    for (long long v : b)
        if (v < 1) throw DegenerateArgumentsError("run lengths must be positive");

    TransitionData td;
    td.x = x;
    td.x_vec = x.vec();
    td.orientation = Orientation::TR;
    const IVec2 c0 = neighbor_sequence(x).seed;
    IVec2 f = c0;
    IVec2 e = c0 + td.x_vec;
    td.e_vecs.push_back(e);
    td.f_vecs.push_back(f);
    for (long long i = 0; i < r; ++i) {
        for (long long k = 0; k < a[static_cast<std::size_t>(i)]; ++k) {
            e = e + f;
            td.e_vecs.push_back(e);
        }
        if (i < l) {
            for (long long k = 0; k < b[static_cast<std::size_t>(i)]; ++k) {
                f = f + e;
                td.f_vecs.push_back(f);
            }
        }
    }
    td.y_vec = e + f;
    td.y = ProjPoint(td.y_vec);
    td.a = a;
    td.b = b;
    td.r = r;
    td.l = l;
    td.A.assign(1, 1);
    for (long long v : a) td.A.push_back(td.A.back() + v);
    td.A.push_back(td.A.back() + 1);
    td.B.assign(1, 1);
    for (long long v : b) td.B.push_back(td.B.back() + v);
    td.B.push_back(td.B.back() + 1);
    td.e_seq.reserve(td.e_vecs.size());
    for (const IVec2& v : td.e_vecs) td.e_seq.emplace_back(v);
    td.f_seq.reserve(td.f_vecs.size());
    for (const IVec2& v : td.f_vecs) td.f_seq.emplace_back(v);
    return td;
}

/// Induced subgraph of the distant graph on {x, y} and the transition
/// vertices.  Vertex order is fixed for serialization: x, e_seq, f_seq, y.
struct KleinGraph {
    std::vector<ProjPoint> vertices;
    std::vector<std::pair<int, int>> edges;  // index pairs, first < second, sorted
    int e_count = 0, f_count = 0;

    int x_index() const { return 0; }
    int e_index(long long pos) const { return static_cast<int>(1 + pos); }  // pos 0-based into e_seq
    int f_index(long long pos) const { return static_cast<int>(1 + e_count + pos); }
    int y_index() const { return 1 + e_count + f_count; }

    bool is_e_vertex(int idx) const { return idx >= 1 && idx <= e_count; }
    bool is_f_vertex(int idx) const { return idx > e_count && idx <= e_count + f_count; }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(vertices.size());
        for (auto [i, j] : edges) {
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
        }
        return adj;
    }
};

/// The edge set comes out of the fan structure: chain edges along each
/// sequence, the four endpoint edges, and the cross edges
///   f_{B_m} ~ e_k   for A_m <= k <= A_{m+1},
///   e_{A_{m+1}} ~ f_k for B_m <= k <= B_{m+1}.
/// This is exactly the induced edge set (every other pair spans area >= 2);
/// the tests verify the equivalence against a determinant scan.
inline KleinGraph klein_graph(const TransitionData& td) {
    KleinGraph kg;
    kg.e_count = static_cast<int>(td.e_seq.size());
    kg.f_count = static_cast<int>(td.f_seq.size());
    kg.vertices.reserve(static_cast<std::size_t>(kg.e_count + kg.f_count + 2));
    kg.vertices.push_back(td.x);
    kg.vertices.insert(kg.vertices.end(), td.e_seq.begin(), td.e_seq.end());
    kg.vertices.insert(kg.vertices.end(), td.f_seq.begin(), td.f_seq.end());
    kg.vertices.push_back(td.y);

    std::set<std::pair<int, int>> edges;
    auto add = [&edges](int i, int j) { edges.emplace(std::min(i, j), std::max(i, j)); };

    for (int i = 0; i + 1 < kg.e_count; ++i) add(kg.e_index(i), kg.e_index(i + 1));
    for (int i = 0; i + 1 < kg.f_count; ++i) add(kg.f_index(i), kg.f_index(i + 1));
    add(kg.x_index(), kg.e_index(0));
    add(kg.x_index(), kg.f_index(0));
    add(kg.e_index(kg.e_count - 1), kg.y_index());
    add(kg.f_index(kg.f_count - 1), kg.y_index());
    add(kg.e_index(0), kg.f_index(0));
    for (long long m = 0; m + 1 <= td.r; ++m)
        for (long long k = td.A[static_cast<std::size_t>(m)]; k <= td.A[static_cast<std::size_t>(m + 1)]; ++k)
            add(kg.f_index(td.B[static_cast<std::size_t>(m)] - 1), kg.e_index(k - 1));
    for (long long m = 0; m + 1 <= td.l; ++m)
        for (long long k = td.B[static_cast<std::size_t>(m)]; k <= td.B[static_cast<std::size_t>(m + 1)]; ++k)
            add(kg.e_index(td.A[static_cast<std::size_t>(m + 1)] - 1), kg.f_index(k - 1));

    kg.edges.assign(edges.begin(), edges.end());
    return kg;
}

/// The Klein graph restricted to corner vertices and the endpoints.
/// Vertex order: x, e-corners, f-corners, y.
struct CornerGraph {
    std::vector<ProjPoint> vertices;
    std::vector<std::pair<int, int>> edges;
    int e_corner_count = 0, f_corner_count = 0;

    int x_index() const { return 0; }
    int e_corner_index(long long k) const { return static_cast<int>(1 + k); }  // k = 0..r
    int f_corner_index(long long k) const { return static_cast<int>(1 + e_corner_count + k); }
    int y_index() const { return 1 + e_corner_count + f_corner_count; }
};

inline CornerGraph corner_graph(const KleinGraph& kg, const TransitionData& td) {
    CornerGraph cg;
    cg.e_corner_count = static_cast<int>(td.r + 1);
    cg.f_corner_count = static_cast<int>(td.l + 1);

    std::vector<int> klein_index;  // corner index -> klein index
    klein_index.push_back(kg.x_index());
    cg.vertices.push_back(td.x);
    for (long long k = 0; k <= td.r; ++k) {
        klein_index.push_back(kg.e_index(td.A[static_cast<std::size_t>(k)] - 1));
        cg.vertices.push_back(td.e_corner(k));
    }
    for (long long k = 0; k <= td.l; ++k) {
        klein_index.push_back(kg.f_index(td.B[static_cast<std::size_t>(k)] - 1));
        cg.vertices.push_back(td.f_corner(k));
    }
    klein_index.push_back(kg.y_index());
    cg.vertices.push_back(td.y);

    std::vector<int> back(kg.vertices.size(), -1);
    for (std::size_t i = 0; i < klein_index.size(); ++i) back[static_cast<std::size_t>(klein_index[i])] = static_cast<int>(i);
    for (auto [i, j] : kg.edges) {
        int ci = back[static_cast<std::size_t>(i)], cj = back[static_cast<std::size_t>(j)];
        if (ci >= 0 && cj >= 0) cg.edges.emplace_back(std::min(ci, cj), std::max(ci, cj));
    }
    std::sort(cg.edges.begin(), cg.edges.end());
    return cg;
}

/// Lattice points of the four Klein sails, one polyline per open cone spanned
/// by (x, y), (-x, y), (-x, -y), (x, -y), ordered from the x-side toward the
/// y-side.  Sails are infinite only through their two boundary rays; the
/// polylines here are the finite middle parts, clipped to |coordinate| <=
/// window (default ten times the endpoint magnitude, which never clips).
inline std::array<std::vector<IVec2>, 4> sails(const ProjPoint& x, const ProjPoint& y, Int128 window = 0) {
    if (x == y) throw TrivialPairError("sails need two distinct points");
    std::vector<IVec2> q1, q2;
    IVec2 xv = x.vec(), yv = y.vec();
    Int128 d = det2(xv, yv);
    if (d < Int128(0)) {
        yv = -yv;
        d = -d;
    }
    if (d == Int128(1)) {
        q1 = {xv + yv};
        q2 = {yv - xv};
    } else {
        detail::RawTransition raw = detail::raw_transition(x, y);
        q1 = std::move(raw.q1_seq);
        q2 = std::move(raw.q2_seq);
    }
    if (window == Int128(0)) {
        Int128 m = std::max(std::max(abs(xv.u), abs(xv.v)), std::max(abs(yv.u), abs(yv.v)));
        window = Int128(10) * m;
    }
    auto clip = [&window](std::vector<IVec2> pts) {
        std::vector<IVec2> kept;
        for (const IVec2& p : pts)
            if (abs(p.u) <= window && abs(p.v) <= window) kept.push_back(p);
        return kept;
    };
    q1 = clip(std::move(q1));
    q2 = clip(std::move(q2));
    std::vector<IVec2> q3, q4;
    q3.reserve(q1.size());
    for (const IVec2& p : q1) q3.push_back(-p);
    q4.reserve(q2.size());
    for (const IVec2& p : q2) q4.push_back(-p);
    return {q1, q2, q3, q4};
}

}  // namespace distgraph
