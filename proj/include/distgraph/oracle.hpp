#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "distgraph/matrices.hpp"
#include "distgraph/paths.hpp"

namespace distgraph {

/// Finite window onto the distant graph: canonical points with
/// max(|a|,|b|) <= bound, with exact neighbor queries inside the window.
/// Neighbor generation solves |det| = 1 directly and never touches the
/// transition machinery, so it can arbitrate it.
struct BoundedGraphView {
    Int128 bound;

    explicit BoundedGraphView(Int128 m) : bound(m) {
        if (bound < Int128(1)) throw OutOfBoundError("bound must be positive");
    }

    bool contains(const ProjPoint& p) const { return abs(p.a()) <= bound && abs(p.b()) <= bound; }

    /// All q in the view with |det[p, q]| = 1, ascending.
    std::vector<ProjPoint> neighbors_within(const ProjPoint& p) const {
        // Solutions of det[p, c] = 1 are c = seed + t*p; the -1 family is the
        // same set of points up to sign.  Clip t so c stays inside the window.
        const IVec2 pv = p.vec();
        const IVec2 seed = neighbor_sequence(p).seed;
        auto range = [this](Int128 c, Int128 step) -> std::pair<Int128, Int128> {
            // |c + t*step| <= bound
            if (step == Int128(0)) return {Int128(0), Int128(0)};  // caller intersects; no constraint encoded here
            Int128 lo_num = -bound - c, hi_num = bound - c;
            if (step < Int128(0)) std::swap(lo_num, hi_num);
            Int128 lo = -floor_div(-lo_num, step >= Int128(0) ? step : -step);
            Int128 hi = floor_div(hi_num, step >= Int128(0) ? step : -step);
            if (step < Int128(0)) {
                lo = -lo;
                hi = -hi;
                std::swap(lo, hi);
            }
            return {lo, hi};
        };
        Int128 lo(0), hi(-1);
        bool constrained = false;
        auto intersect = [&](Int128 c, Int128 step) {
            if (step == Int128(0)) return;
            auto [a, b] = range(c, step);
            if (!constrained) {
                lo = a;
                hi = b;
                constrained = true;
            } else {
                lo = std::max(lo, a);
                hi = std::min(hi, b);
            }
        };
        intersect(seed.u, pv.u);
        intersect(seed.v, pv.v);
        std::vector<ProjPoint> out;
        for (Int128 t = lo; t <= hi; t += Int128(1)) {
            IVec2 c = seed + t * pv;
            if (abs(c.u) > bound || abs(c.v) > bound) continue;
            out.emplace_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Exact shortest-path length inside the view, or nullopt when y is not
/// reachable through it.
inline std::optional<long long> bfs_distance(const ProjPoint& x, const ProjPoint& y, Int128 bound) {
    BoundedGraphView view(bound);
    if (!view.contains(x) || !view.contains(y)) throw OutOfBoundError("endpoint outside the view");
    if (x == y) return 0;
    std::unordered_map<ProjPoint, long long> dist;
    dist.emplace(x, 0);
    std::deque<ProjPoint> queue{x};
    while (!queue.empty()) {
        ProjPoint u = queue.front();
        queue.pop_front();
        long long du = dist.at(u);
        for (const ProjPoint& v : view.neighbors_within(u)) {
            if (dist.count(v)) continue;
            if (v == y) return du + 1;
            dist.emplace(v, du + 1);
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

namespace detail {

struct BfsLayers {
    std::unordered_map<ProjPoint, long long> dist;
    bool reached = false;
    long long target_dist = -1;
};

inline BfsLayers bfs_layers(const BoundedGraphView& view, const ProjPoint& x, const ProjPoint& y) {
    BfsLayers out;
    out.dist.emplace(x, 0);
    std::deque<ProjPoint> queue{x};
    while (!queue.empty()) {
        ProjPoint u = queue.front();
        queue.pop_front();
        long long du = out.dist.at(u);
        if (out.reached && du + 1 > out.target_dist) continue;  // deeper layers cannot matter
        for (const ProjPoint& v : view.neighbors_within(u)) {
            if (out.dist.count(v)) continue;
            out.dist.emplace(v, du + 1);
            if (v == y) {
                out.reached = true;
                out.target_dist = du + 1;
            }
            queue.push_back(v);
        }
    }
    return out;
}

}  // namespace detail

/// All distinct geodesics inside the view, by layered predecessor expansion,
/// ascending by vertex sequence.
inline std::vector<Path> bfs_geodesics(const ProjPoint& x, const ProjPoint& y, Int128 bound) {
    BoundedGraphView view(bound);
    if (!view.contains(x) || !view.contains(y)) throw OutOfBoundError("endpoint outside the view");
    if (x == y) return {Path{{x}}};
    detail::BfsLayers layers = detail::bfs_layers(view, x, y);
    if (!layers.reached) return {};

    constexpr std::size_t kPathCap = 1'000'000;
    std::vector<Path> out;
    std::vector<ProjPoint> current{y};
    // depth-first over dist-decreasing neighbors, ascending at each branch
    auto recurse = [&](auto&& self, const ProjPoint& v) -> void {
        long long dv = layers.dist.at(v);
        if (dv == 0) {
            Path p;
            p.vertices.assign(current.rbegin(), current.rend());
            out.push_back(std::move(p));
            if (out.size() > kPathCap) throw Error("geodesic enumeration exceeded cap");
            return;
        }
        for (const ProjPoint& u : view.neighbors_within(v)) {
            auto it = layers.dist.find(u);
            if (it == layers.dist.end() || it->second != dv - 1) continue;
            current.push_back(u);
            self(self, u);
            current.pop_back();
        }
    };
    recurse(recurse, y);
    std::sort(out.begin(), out.end());
    return out;
}

/// One structured consistency record comparing the closed-form machinery
/// against the brute-force view.  Disagreements are report content.
struct VerifyReport {
    ProjPoint x, y;
    bool trivial = false;           // equal or distant endpoints
    long long formula_distance = 0;
    Int128 bound_m = 0;
    std::optional<long long> bfs_distance_m, bfs_distance_2m;
    long long geodesic_count = 0;
    bool predicate_unique = true;
    long long standard_word_length = 0, reduced_word_length = 0;

    bool distance_ok = true;     // formula distance = BFS distance at both bounds
    bool uniqueness_ok = true;   // predicate <=> geodesic count == 1
    bool word_ok = true;         // reduced word length = distance
    bool containment_ok = true;  // geodesic vertices inside the Klein graph

    bool ok() const { return distance_ok && uniqueness_ok && word_ok && containment_ok; }
};

inline Int128 default_verify_bound(const ProjPoint& x, const ProjPoint& y) {
    Int128 m = std::max(std::max(abs(x.a()), abs(x.b())), std::max(abs(y.a()), abs(y.b())));
    return std::max(Int128(64), Int128(4) * m);
}

inline VerifyReport verify_pair(const ProjPoint& x, const ProjPoint& y, Int128 bound = 0) {
    VerifyReport rep;
    rep.x = x;
    rep.y = y;
    rep.bound_m = bound == Int128(0) ? default_verify_bound(x, y) : bound;
    rep.formula_distance = distance(x, y);
    rep.bfs_distance_m = bfs_distance(x, y, rep.bound_m);
    rep.bfs_distance_2m = bfs_distance(x, y, Int128(2) * rep.bound_m);
    rep.distance_ok = rep.bfs_distance_m.has_value() && rep.bfs_distance_2m.has_value() &&
                      *rep.bfs_distance_m == rep.formula_distance &&
                      *rep.bfs_distance_2m == rep.formula_distance;
    if (x == y || is_distant(x, y)) {
        rep.trivial = true;
        return rep;
    }
    TransitionData td = transition(x, y);
    rep.predicate_unique = is_unique_shortest(td);
    std::vector<Path> geos = bfs_geodesics(x, y, rep.bound_m);
    rep.geodesic_count = static_cast<long long>(geos.size());
    rep.uniqueness_ok = rep.predicate_unique == (rep.geodesic_count == 1);

    KleinGraph kg = klein_graph(td);
    std::set<ProjPoint> klein_vertices(kg.vertices.begin(), kg.vertices.end());
    for (const Path& g : geos)
        for (const ProjPoint& v : g.vertices)
            if (!klein_vertices.count(v)) rep.containment_ok = false;

    EWord w = standard_word(x, y);
    rep.standard_word_length = static_cast<long long>(w.coeffs.size());
    rep.reduced_word_length = static_cast<long long>(reduce_word(w).coeffs.size());
    rep.word_ok = rep.reduced_word_length == rep.formula_distance;
    return rep;
}

}  // namespace distgraph
