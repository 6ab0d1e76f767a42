#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "distgraph/transition.hpp"

namespace distgraph {

/// A walk in the distant graph: consecutive vertices distant, none repeated.
/// length() counts edges.
struct Path {
    std::vector<ProjPoint> vertices;

    long long length() const { return static_cast<long long>(vertices.size()) - 1; }
    friend bool operator==(const Path&, const Path&) = default;
    friend bool operator<(const Path& a, const Path& b) { return a.vertices < b.vertices; }
};

inline bool is_valid_path(const Path& p) {
    if (p.vertices.empty()) return false;
    std::set<ProjPoint> seen(p.vertices.begin(), p.vertices.end());
    if (seen.size() != p.vertices.size()) return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!is_distant(p.vertices[i], p.vertices[i + 1])) return false;
    return true;
}

/// Cyclically ordered vertices, consecutive ones distant, wrap included.
struct Cycle {
    std::vector<ProjPoint> vertices;

    long long length() const { return static_cast<long long>(vertices.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool is_valid_cycle(const Cycle& c) {
    if (c.vertices.size() < 3) return false;
    std::set<ProjPoint> seen(c.vertices.begin(), c.vertices.end());
    if (seen.size() != c.vertices.size()) return false;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (!is_distant(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()])) return false;
    return true;
}

/// The two consistent paths: x, e_1..e_{A_r}, y of length 1 + A_r and
/// x, f_1..f_{B_l}, y of length 1 + B_l.  Each is the unique consistent path
/// inside its cone class.
inline std::pair<Path, Path> consistent_paths(const TransitionData& td) {
    Path pa, pb;
    pa.vertices.reserve(td.e_seq.size() + 2);
    pa.vertices.push_back(td.x);
    pa.vertices.insert(pa.vertices.end(), td.e_seq.begin(), td.e_seq.end());
    pa.vertices.push_back(td.y);
    pb.vertices.reserve(td.f_seq.size() + 2);
    pb.vertices.push_back(td.x);
    pb.vertices.insert(pb.vertices.end(), td.f_seq.begin(), td.f_seq.end());
    pb.vertices.push_back(td.y);
    return {pa, pb};
}

/// The alternating corner path x, f_{B_0}, e_{A_1}, f_{B_1}, ..., y.
/// Length r + l + 1 when l > 0, and 2 when l = 0.
inline Path standard_path(const TransitionData& td) {
    Path p;
    p.vertices.push_back(td.x);
    if (td.l == 0) {
        p.vertices.push_back(td.f_corner(0));
    } else {
        for (long long i = 0; i < td.r + td.l; ++i) {
            if (i % 2 == 0)
                p.vertices.push_back(td.f_corner(i / 2));
            else
                p.vertices.push_back(td.e_corner((i + 1) / 2));
        }
    }
    p.vertices.push_back(td.y);
    return p;
}

/// Corner-walk recipe: follow the standard path, but while the upcoming run
/// length is 1 keep to the current side of the corner graph; rejoin when a
/// number greater than one is met; one final step to y from e_{A_r} or f_{B_l}.
inline Path standard_shortest_path(const TransitionData& td) {
    Path p;
    p.vertices.push_back(td.x);
    if (td.l == 0) {
        p.vertices.push_back(td.f_corner(0));
        p.vertices.push_back(td.y);
        return p;
    }
    bool on_f = true;
    long long k = 0;
    p.vertices.push_back(td.f_corner(0));
    while (true) {
        if (on_f && k == td.l) break;
        if (!on_f && k == td.r) break;
        if (on_f) {
            if (td.b_at(k + 1) == 1) {
                ++k;  // f_k ~ f_{k+1}, skipping e_{A_{k+1}}
                p.vertices.push_back(td.f_corner(k));
            } else {
                ++k;
                on_f = false;
                p.vertices.push_back(td.e_corner(k));
            }
        } else {
            if (td.a_at(k + 1) == 1) {
                ++k;  // e_k ~ e_{k+1}, skipping f_{B_k}
                p.vertices.push_back(td.e_corner(k));
            } else {
                on_f = true;  // back to the standard path at f_{B_k}
                p.vertices.push_back(td.f_corner(k));
            }
        }
    }
    p.vertices.push_back(td.y);
    return p;
}

/// Shortening bookkeeping of the standard path: runs of ones before index k
/// on each side (s_k, t_k), end-corrected run lengths, and the index set D.
struct ShorteningAnalysis {
    std::vector<long long> s, t;        // s[k-1] holds s_k, k = 1..l
    std::vector<long long> a_tilde, b_tilde;
    std::set<long long> D;              // subset of {1..l}
};

inline ShorteningAnalysis shortening(const TransitionData& td) {
    if (td.l == 0) throw TrivialPairError("shortening analysis needs l > 0");
    ShorteningAnalysis sa;
    for (long long k = 1; k <= td.l; ++k) {
        long long s = 0;
        while (k - 1 - s >= 0 && td.b_at(k - 1 - s) == 1) ++s;
        sa.s.push_back(td.b_at(k - 1) > 1 ? 0 : s);
        long long t = 0;
        while (k - 1 - t >= 0 && td.a_at(k - 1 - t) == 1) ++t;
        sa.t.push_back(td.a_at(k - 1) > 1 ? 0 : t);
    }
    for (long long k = 1; k <= td.l; ++k) {
        long long ak = td.a_at(k);
        sa.a_tilde.push_back(k == 1 ? std::max(ak, 2ll) : ak);
        long long bk = td.b_at(k);
        sa.b_tilde.push_back(td.r == td.l && k == td.l ? std::max(bk, 2ll) : bk);
    }
    for (long long k = 1; k <= td.l; ++k) {
        bool removed = td.b_at(k) > 1 && td.a_at(k) == 1 &&
                       sa.s[static_cast<std::size_t>(k - 1)] > sa.t[static_cast<std::size_t>(k - 1)];
        if (!removed) sa.D.insert(k);
    }
    return sa;
}

namespace detail {

/// Shortest x-y distance through the corner graph; correct for the whole
/// graph because some geodesic always lies inside it.
inline long long corner_distance(const TransitionData& td) {
    std::vector<IVec2> verts;
    verts.push_back(td.x_vec);
    for (long long k = 0; k <= td.r; ++k) verts.push_back(td.e_corner_vec(k));
    for (long long k = 0; k <= td.l; ++k) verts.push_back(td.f_corner_vec(k));
    verts.push_back(td.y_vec);
    const std::size_t n = verts.size();
    const std::size_t target = n - 1;
    std::vector<long long> dist(n, -1);
    std::deque<std::size_t> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (u == target) return dist[u];
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] >= 0 || v == u) continue;
            if (abs(det2(verts[u], verts[v])) != Int128(1)) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    throw Error("internal: corner graph disconnected");
}

}  // namespace detail

/// Graph distance dist(x, y) in the distant graph.
inline long long distance(const ProjPoint& x, const ProjPoint& y) {
    if (x == y) return 0;
    if (is_distant(x, y)) return 1;
    TransitionData td = transition(x, y);
    if (td.l == 0) return 2;
    return detail::corner_distance(td);
}

namespace detail {

struct OneRun {
    long long first, last;  // inclusive index range in the sentinel-extended sequence
};

template <typename ValueAt>
std::vector<OneRun> one_runs(ValueAt&& value_at, long long sentinel_end) {
    std::vector<OneRun> runs;
    long long k = 0;
    while (k <= sentinel_end) {
        if (value_at(k) == 1) {
            long long j = k;
            while (j + 1 <= sentinel_end && value_at(j + 1) == 1) ++j;
            runs.push_back({k, j});
            k = j + 1;
        } else {
            ++k;
        }
    }
    return runs;
}

/// Lemma-style overlap test for two blocks of ones, one per side, over the
/// sentinel-extended sequences (indices 0..l+1 and 0..r+1, ends = 1).
inline bool one_blocks_overlap(const TransitionData& td) {
    const long long r = td.r, l = td.l;
    auto a_runs = one_runs([&td](long long k) { return td.a_at(k); }, r + 1);
    auto b_runs = one_runs([&td](long long k) { return td.b_at(k); }, l + 1);
    for (const OneRun& br : b_runs) {
        for (long long l1 = br.first; l1 <= br.last; ++l1) {
            for (long long l2 = l1; l2 <= br.last; ++l2) {
                for (const OneRun& ar : a_runs) {
                    const long long sa = ar.first, ea = ar.last;
                    // (o1) l1 < r1 <= l2+1 <= r2, and l2 < l+1 required iff r = l+1
                    if (!(r == l + 1 && l2 > l)) {
                        long long r1lo = std::max(sa, l1 + 1);
                        long long r1hi = std::min(ea, l2 + 1);
                        if (r1lo <= r1hi && std::max(r1lo, l2 + 1) <= ea) return true;
                    }
                    // (o2) l1 < r1 <= l2 = r2 = r+1 = l+1
                    if (r == l && l2 == l + 1 && ea == r + 1 && std::max(sa, l1 + 1) <= r + 1) return true;
                    // (o3) 0 = r1 = l1 <= l2 < r2
                    if (l1 == 0 && sa == 0 && ea > l2) return true;
                    // (o4) r1 <= l1 <= r2 <= l2 with l1 != 0, and r2 < r+1 required iff r = l
                    if (l1 >= 1 && sa <= l1) {
                        long long r2hi = std::min({ea, l2, r == l ? r : r + 1});
                        if (l1 <= r2hi) return true;
                    }
                    // (o5) r1 <= l1 <= l2 < r2 = r+1
                    if (ea == r + 1 && sa <= l1 && l2 <= r) return true;
                }
            }
        }
    }
    return false;
}

/// Splitting caused by a 2 in the run-length sequence.
inline bool two_splits(const TransitionData& td) {
    const long long l = td.l;
    // (st1) b_k = 2 with both surrounding a-runs > 1; at k = 1 only the
    // right neighbor matters because f_{B_0} is always on the path.
    if (l >= 1 && td.b_at(1) == 2 && td.a_at(2) > 1) return true;
    for (long long k = 2; k <= l; ++k)
        if (td.b_at(k) == 2 && td.a_at(k) > 1 && td.a_at(k + 1) > 1) return true;
    // (st2) a_k = 2 with b_k > 1 and s_k <= t_k
    if (l >= 1) {
        ShorteningAnalysis sa = shortening(td);
        for (long long k = 2; k <= l; ++k)
            if (td.a_at(k) == 2 && td.b_at(k) > 1 &&
                sa.s[static_cast<std::size_t>(k - 1)] <= sa.t[static_cast<std::size_t>(k - 1)])
                return true;
    }
    return false;
}

}  // namespace detail

/// Whether the shortest path between the endpoints is unique.
inline bool is_unique_shortest(const TransitionData& td) {
    if (td.l == 0) return td.r >= 1;  // r = l = 0 is the two-cliques split
    bool all_ones = td.r == td.l;
    for (long long v : td.a) all_ones = all_ones && v == 1;
    for (long long v : td.b) all_ones = all_ones && v == 1;
    if (all_ones) return false;
    if (detail::one_blocks_overlap(td)) return false;
    if (detail::two_splits(td)) return false;
    return true;
}

/// Every geodesic, enumerated inside the Klein graph (which contains them
/// all), in lexicographic order of side choices: f-side before e-side at
/// every branch.
inline std::vector<Path> all_shortest_paths(const ProjPoint& x, const ProjPoint& y) {
    if (x == y) throw TrivialPairError("no paths between equal points");
    if (is_distant(x, y)) return {Path{{x, y}}};
    TransitionData td = transition(x, y);
    KleinGraph kg = klein_graph(td);
    const int n = static_cast<int>(kg.vertices.size());
    const int src = kg.x_index(), dst = kg.y_index();
    std::vector<std::vector<int>> adj = kg.adjacency();

    std::vector<long long> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    const long long d = dist[static_cast<std::size_t>(dst)];
    if (d < 0) throw Error("internal: Klein graph disconnected");

    // branch order: f-side first, then e-side, each in sequence order, y last
    auto branch_rank = [&kg](int v) {
        if (kg.is_f_vertex(v)) return std::make_pair(0, v);
        if (kg.is_e_vertex(v)) return std::make_pair(1, v);
        return std::make_pair(2, v);
    };
    for (auto& list : adj)
        std::sort(list.begin(), list.end(),
                  [&branch_rank](int a, int b) { return branch_rank(a) < branch_rank(b); });

    constexpr std::size_t kPathCap = 1'000'000;
    std::vector<Path> out;
    std::vector<int> stack{src};
    auto emit = [&]() {
        Path p;
        for (int idx : stack) p.vertices.push_back(kg.vertices[static_cast<std::size_t>(idx)]);
        out.push_back(std::move(p));
        if (out.size() > kPathCap) throw Error("geodesic enumeration exceeded cap");
    };
    // iterative DFS over dist-increasing edges
    std::vector<std::size_t> cursor{0};
    while (!stack.empty()) {
        int u = stack.back();
        if (u == dst) {
            emit();
            stack.pop_back();
            cursor.pop_back();
            continue;
        }
        bool advanced = false;
        auto& edges = adj[static_cast<std::size_t>(u)];
        for (std::size_t& i = cursor.back(); i < edges.size(); ++i) {
            int v = edges[i];
            if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(u)] + 1 &&
                dist[static_cast<std::size_t>(v)] <= d) {
                ++i;
                stack.push_back(v);
                cursor.push_back(0);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            stack.pop_back();
            cursor.pop_back();
        }
    }
    return out;
}

/// A Hamiltonian consistent cycle through x of length d_a + d_b: the union
/// of two consistent paths to a constructed endpoint, of lengths d_a and d_b.
/// Realization: single-run coefficient sequences of mass d_a - 2 and d_b - 2;
/// a part of size one degenerates to the direct edge x ~ y.
inline Cycle hamiltonian_cycle(const ProjPoint& x, long long d_a, long long d_b) {
    if (d_a < 1 || d_b < 1 || d_a + d_b <= 2)
        throw InvalidSplitError("need d_a, d_b >= 1 with d_a + d_b > 2");
    const long long p = std::max(d_a, d_b), q = std::min(d_a, d_b);
    Cycle cycle;
    if (q == 1) {
        const IVec2 c0 = neighbor_sequence(x).seed;
        cycle.vertices.push_back(x);
        IVec2 e = x.vec();
        for (long long k = 1; k <= p - 1; ++k) {
            e = e + c0;
            cycle.vertices.emplace_back(e);
        }
        cycle.vertices.emplace_back(c0);
        return cycle;
    }
    std::vector<long long> a, b;
    if (p - 2 > 0) a.push_back(p - 2);
    if (q - 2 > 0) b.push_back(q - 2);
    TransitionData td = transition_from_coefficients(x, a, b);
    cycle.vertices.push_back(x);
    cycle.vertices.insert(cycle.vertices.end(), td.e_seq.begin(), td.e_seq.end());
    cycle.vertices.push_back(td.y);
    cycle.vertices.insert(cycle.vertices.end(), td.f_seq.rbegin(), td.f_seq.rend());
    return cycle;
}

}  // namespace distgraph
