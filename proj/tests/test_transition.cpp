#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "distgraph/transition.hpp"
#include "testutil.hpp"

using namespace distgraph;

namespace {

ProjPoint P(long long a, long long b) { return canonicalize(a, b); }

std::vector<ProjPoint> pts(std::initializer_list<std::pair<long long, long long>> lst) {
    std::vector<ProjPoint> out;
    for (auto [a, b] : lst) out.push_back(P(a, b));
    return out;
}

// Determinant scan over all vertex pairs, for comparing with klein_graph.
std::set<std::pair<int, int>> induced_edges(const std::vector<ProjPoint>& vs) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (is_distant(vs[i], vs[j])) out.emplace(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace

TEST_CASE("worked pair (1,0)-(37,158): vertex sequences") {
    TransitionData td = transition(P(1, 0), P(37, 158));
    CHECK(td.orientation == Orientation::TR);
    CHECK(td.e_seq == pts({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 17}, {15, 64}, {26, 111}}));
    CHECK(td.f_seq == pts({{0, 1}, {1, 5}, {2, 9}, {3, 13}, {7, 30}, {11, 47}}));
}

TEST_CASE("worked pair (1,0)-(37,158): corner structure") {
    TransitionData td = transition(P(1, 0), P(37, 158));
    CHECK(td.a == std::vector<long long>{3, 1, 2});
    CHECK(td.b == std::vector<long long>{3, 2});
    CHECK(td.r == 3);
    CHECK(td.l == 2);
    CHECK(td.A == std::vector<long long>{1, 4, 5, 7, 8});
    CHECK(td.B == std::vector<long long>{1, 4, 6, 7});
    CHECK(td.d_a() == 8);
    CHECK(td.d_b() == 7);
    // corner positions 1,4,5,7 on the e side and 1,4,6 on the f side
    CHECK(td.e_corner(0) == P(1, 1));
    CHECK(td.e_corner(1) == P(1, 4));
    CHECK(td.e_corner(2) == P(4, 17));
    CHECK(td.e_corner(3) == P(26, 111));
    CHECK(td.f_corner(0) == P(0, 1));
    CHECK(td.f_corner(1) == P(3, 13));
    CHECK(td.f_corner(2) == P(11, 47));
}

TEST_CASE("worked pair (1,0)-(26,111)") {
    TransitionData td = transition(P(1, 0), P(26, 111));
    CHECK(td.e_seq == pts({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 17}, {15, 64}}));
    CHECK(td.f_seq == pts({{0, 1}, {1, 5}, {2, 9}, {3, 13}, {7, 30}, {11, 47}}));
    CHECK(td.d_a() == 7);
    CHECK(td.d_b() == 7);
    CHECK(td.a == std::vector<long long>{3, 1, 1});
    CHECK(td.b == std::vector<long long>{3, 2});
}

TEST_CASE("trivial pairs are rejected") {
    CHECK_THROWS_AS(transition(P(1, 0), P(1, 0)), TrivialPairError);
    CHECK_THROWS_AS(transition(P(1, 0), P(0, 1)), TrivialPairError);
    CHECK_THROWS_AS(transition(P(1, 0), P(-1, 0)), TrivialPairError);  // same point
}

TEST_CASE("immediate stop gives r = l = 0") {
    TransitionData td = transition(P(1, 0), P(1, 2));
    CHECK(td.r == 0);
    CHECK(td.l == 0);
    CHECK(td.e_seq == pts({{1, 1}}));
    CHECK(td.f_seq == pts({{0, 1}}));
    CHECK(td.A == std::vector<long long>{1, 2});
    CHECK(td.d_a() == 2);
    CHECK(td.d_b() == 2);
}

TEST_CASE("single e-run gives l = 0, r = 1") {
    TransitionData td = transition(P(1, 0), P(1, 5));
    CHECK(td.r == 1);
    CHECK(td.l == 0);
    CHECK(td.a == std::vector<long long>{3});
    CHECK(td.e_seq == pts({{1, 1}, {1, 2}, {1, 3}, {1, 4}}));
    CHECK(td.f_seq == pts({{0, 1}}));
}

TEST_CASE("type invariants hold across a corpus") {
    auto points = testutil::canonical_points(25);
    const ProjPoint x = P(1, 0);
    int visited = 0;
    for (const auto& y : points) {
        if (y == x || is_distant(x, y)) continue;
        TransitionData td = transition(x, y);
        ++visited;
        CHECK(td.r - td.l >= 0);
        CHECK(td.r - td.l <= 1);
        CHECK(static_cast<long long>(td.e_seq.size()) == td.A[static_cast<std::size_t>(td.r)]);
        CHECK(static_cast<long long>(td.f_seq.size()) == td.B[static_cast<std::size_t>(td.l)]);
        for (std::size_t i = 0; i + 1 < td.e_seq.size(); ++i) CHECK(is_distant(td.e_seq[i], td.e_seq[i + 1]));
        for (std::size_t i = 0; i + 1 < td.f_seq.size(); ++i) CHECK(is_distant(td.f_seq[i], td.f_seq[i + 1]));
        CHECK(is_distant(td.e_seq.back(), y));
        CHECK(is_distant(td.f_seq.back(), y));
        // the two sequences live in different cone classes
        for (const auto& e : td.e_seq) CHECK(cone_sign(x, y, e, td.e_seq.front()) == 1);
        for (const auto& f : td.f_seq) CHECK(cone_sign(x, y, f, td.e_seq.front()) == -1);
    }
    CHECK(visited > 200);
}

TEST_CASE("endpoint symmetry: same Klein vertex set both ways") {
    auto points = testutil::canonical_points(15);
    const ProjPoint x = P(1, 0);
    for (const auto& y : points) {
        if (y == x || is_distant(x, y)) continue;
        TransitionData fwd = transition(x, y);
        TransitionData bwd = transition(y, x);
        std::set<ProjPoint> vf(fwd.e_seq.begin(), fwd.e_seq.end());
        vf.insert(fwd.f_seq.begin(), fwd.f_seq.end());
        std::set<ProjPoint> vb(bwd.e_seq.begin(), bwd.e_seq.end());
        vb.insert(bwd.f_seq.begin(), bwd.f_seq.end());
        CHECK(vf == vb);
    }
}

TEST_CASE("forward build reproduces through transition") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        auto [a, b] = testutil::random_coefficients(rng, 5, 4);
        ProjPoint x = iter % 3 == 0 ? P(1, 0) : (iter % 3 == 1 ? P(2, 3) : P(-5, 7));
        TransitionData built = transition_from_coefficients(x, a, b);
        if (built.r == 0) {
            CHECK(built.d_a() == 2);
        }
        TransitionData back = transition(built.x, built.y);
        CHECK(back.a == built.a);
        CHECK(back.b == built.b);
        CHECK(back.r == built.r);
        CHECK(back.l == built.l);
        CHECK(back.e_seq == built.e_seq);
        CHECK(back.f_seq == built.f_seq);
        CHECK(back.orientation == Orientation::TR);
    }
}

TEST_CASE("mirrored build lands in the TL branch with labels swapped") {
    // Grow the first run on the other side: transition must relabel so the
    // first-growing side carries the a-coefficients, reporting TL.
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        auto [a, b] = testutil::random_coefficients(rng, 4, 3);
        if (a.empty()) continue;
        ProjPoint x = P(1, 0);
        // Mirror by hand: swap seed roles in the forward walk.
        IVec2 xv = x.vec();
        IVec2 e = neighbor_sequence(x).seed;        // Q2-role seed now grows first
        IVec2 f = e + xv;                            // Q1-role seed
        std::vector<long long> arr_a = a, arr_b = b;
        IVec2 cur_grow = e, cur_other = f;
        // run the alternation: a-runs grow the seed that is NOT the Q1 seed
        std::vector<IVec2> grow_seq{cur_grow}, other_seq{cur_other};
        for (std::size_t i = 0; i < arr_a.size(); ++i) {
            for (long long k = 0; k < arr_a[i]; ++k) {
                cur_grow = cur_grow + cur_other;
                grow_seq.push_back(cur_grow);
            }
            if (i < arr_b.size()) {
                for (long long k = 0; k < arr_b[i]; ++k) {
                    cur_other = cur_other + cur_grow;
                    other_seq.push_back(cur_other);
                }
            }
        }
        ProjPoint y{cur_grow + cur_other};
        TransitionData td = transition(x, y);
        CHECK(td.a == arr_a);
        CHECK(td.b == arr_b);
        CHECK(td.orientation == Orientation::TL);
    }
}

TEST_CASE("Klein graph of the worked pair") {
    TransitionData td = transition(P(1, 0), P(37, 158));
    KleinGraph kg = klein_graph(td);
    REQUIRE(kg.vertices.size() == 15u);
    CHECK(kg.vertices.front() == P(1, 0));
    CHECK(kg.vertices.back() == P(37, 158));

    auto has_edge = [&kg](const ProjPoint& p, const ProjPoint& q) {
        int i = -1, j = -1;
        for (std::size_t k = 0; k < kg.vertices.size(); ++k) {
            if (kg.vertices[k] == p) i = static_cast<int>(k);
            if (kg.vertices[k] == q) j = static_cast<int>(k);
        }
        REQUIRE(i >= 0);
        REQUIRE(j >= 0);
        return std::find(kg.edges.begin(), kg.edges.end(),
                         std::make_pair(std::min(i, j), std::max(i, j))) != kg.edges.end();
    };
    CHECK(has_edge(P(0, 1), P(1, 4)));    // cross edge f_1 ~ e_4
    CHECK(has_edge(P(1, 4), P(4, 17)));   // consecutive e-vertices e_4 ~ e_5
    CHECK_FALSE(has_edge(P(1, 0), P(3, 13)));  // x is far from f_4
}

TEST_CASE("Klein edge set equals the determinant scan") {
    auto points = testutil::canonical_points(20);
    const ProjPoint x = P(1, 0);
    for (const auto& y : points) {
        if (y == x || is_distant(x, y)) continue;
        TransitionData td = transition(x, y);
        KleinGraph kg = klein_graph(td);
        std::set<std::pair<int, int>> expect = induced_edges(kg.vertices);
        std::set<std::pair<int, int>> got(kg.edges.begin(), kg.edges.end());
        REQUIRE(got == expect);
    }
    // and for some pairs away from (1,0)
    for (auto& [p, q] : testutil::random_pairs(60, 30, 3)) {
        if (is_distant(p, q)) continue;
        KleinGraph kg = klein_graph(transition(p, q));
        CHECK(std::set<std::pair<int, int>>(kg.edges.begin(), kg.edges.end()) == induced_edges(kg.vertices));
    }
}

TEST_CASE("every sequence vertex has a cross edge") {
    for (auto& [p, q] : testutil::random_pairs(80, 25, 5)) {
        if (is_distant(p, q)) continue;
        TransitionData td = transition(p, q);
        for (const auto& e : td.e_seq) {
            bool crossed = false;
            for (const auto& f : td.f_seq) crossed = crossed || is_distant(e, f);
            CHECK(crossed);
        }
        for (const auto& f : td.f_seq) {
            bool crossed = false;
            for (const auto& e : td.e_seq) crossed = crossed || is_distant(e, f);
            CHECK(crossed);
        }
    }
}

TEST_CASE("corner graph of the worked pair") {
    TransitionData td = transition(P(1, 0), P(37, 158));
    KleinGraph kg = klein_graph(td);
    CornerGraph cg = corner_graph(kg, td);
    std::set<ProjPoint> verts(cg.vertices.begin(), cg.vertices.end());
    std::set<ProjPoint> expect{P(1, 0),  P(1, 1),  P(1, 4),  P(4, 17), P(26, 111),
                               P(0, 1),  P(3, 13), P(11, 47), P(37, 158)};
    CHECK(verts == expect);

    // a_2 = 1 makes consecutive e-corners adjacent
    int i = cg.e_corner_index(1), j = cg.e_corner_index(2);
    CHECK(std::find(cg.edges.begin(), cg.edges.end(), std::make_pair(std::min(i, j), std::max(i, j))) !=
          cg.edges.end());

    // connected: reachable set from x covers all vertices
    std::vector<std::vector<int>> adj(cg.vertices.size());
    for (auto [u, v] : cg.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<bool> seen(cg.vertices.size(), false);
    std::vector<int> stack{cg.x_index()};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
}

TEST_CASE("corner graph edges are induced") {
    for (auto& [p, q] : testutil::random_pairs(60, 25, 9)) {
        if (is_distant(p, q)) continue;
        TransitionData td = transition(p, q);
        CornerGraph cg = corner_graph(klein_graph(td), td);
        std::set<std::pair<int, int>> got(cg.edges.begin(), cg.edges.end());
        CHECK(got == induced_edges(cg.vertices));
    }
}
