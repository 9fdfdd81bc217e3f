#include <doctest.h>

#include <array>

#include "sigcover/instances.hpp"
#include "sigcover/sp.hpp"
#include "support.hpp"

using namespace sigcover;
using testsupport::make_graph;

namespace {

// Assign every vertex to one of four branch sets or none and test for a K4 model.
bool brute_force_has_k4_minor(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 4) return false;
    std::vector<int> cls(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::array<int, 4> count{};
        for (std::size_t i = 0; i < n; ++i) {
            cls[i] = static_cast<int>(c % 5) - 1;
            c /= 5;
            if (cls[i] >= 0) count[cls[i]]++;
        }
        if (count[0] == 0 || count[1] == 0 || count[2] == 0 || count[3] == 0) continue;
        testsupport::UnionFind uf(n);
        bool adj[4][4] = {};
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            int a = cls[e.u], b = cls[e.v];
            if (a < 0 || b < 0) continue;
            if (a == b) uf.unite(static_cast<int>(e.u), static_cast<int>(e.v));
            else adj[a][b] = adj[b][a] = true;
        }
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = a + 1; b < 4 && ok; ++b) ok = adj[a][b];
        if (!ok) continue;
        std::array<int, 4> root{-1, -1, -1, -1};
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (cls[i] < 0) continue;
            int r = uf.find(static_cast<int>(i));
            if (root[cls[i]] < 0) root[cls[i]] = r;
            else if (root[cls[i]] != r) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

void check_tree(const SignedGraph& g, const SpNode& n) {
    if (n.kind == SpKind::leaf) {
        const Edge& e = g.edge(n.edge);
        CHECK(((e.u == n.source && e.v == n.target) || (e.v == n.source && e.u == n.target)));
        return;
    }
    if (n.kind == SpKind::loop_leaf) {
        CHECK(n.source == n.target);
        CHECK(g.edge(n.edge).u == n.source);
        return;
    }
    REQUIRE(n.children.size() >= 2);
    if (n.kind == SpKind::series) {
        CHECK(n.children.front().source == n.source);
        CHECK(n.children.back().target == n.target);
        for (std::size_t i = 0; i + 1 < n.children.size(); ++i) CHECK(n.children[i].target == n.children[i + 1].source);
    } else {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            CHECK(n.children[i].source == n.source);
            CHECK(n.children[i].target == n.target);
            if (i > 0) CHECK(n.children[i - 1].edges.front() < n.children[i].edges.front());
        }
    }
    for (const auto& c : n.children) check_tree(g, c);
}

}  // namespace

TEST_CASE("k4 minor freeness") {
    auto k4 = make_graph(4, {{0, 1, '+'}, {0, 2, '+'}, {0, 3, '+'}, {1, 2, '+'}, {1, 3, '+'}, {2, 3, '+'}});
    CHECK_FALSE(is_k4_minor_free(k4));
    CHECK(is_k4_minor_free(make_graph(5, {{0, 1, '+'}, {1, 2, '+'}, {2, 3, '+'}, {3, 4, '+'}, {4, 0, '-'}})));
    CHECK(is_k4_minor_free(gadget(GadgetId::FIG1_CHAIN).graph));
    std::mt19937_64 rng(17);
    int with_minor = 0;
    for (int i = 0; i < 500; ++i) {
        std::size_t n = 4 + rng() % 4;
        auto g = testsupport::random_multigraph(rng, n, 4 + rng() % 10, 0.05, 0.5);
        bool expect = !brute_force_has_k4_minor(g);
        with_minor += expect ? 0 : 1;
        CHECK(is_k4_minor_free(g) == expect);
    }
    CHECK(with_minor > 20);
}

TEST_CASE("sp decomposition") {
    auto e = make_graph(2, {{0, 1, '+'}});
    CHECK(sp_decompose(e, 0, 1).root.kind == SpKind::leaf);
    auto path = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}});
    auto tp = sp_decompose(path, 0, 2);
    CHECK(tp.root.kind == SpKind::series);
    CHECK(tp.root.children.size() == 2);

    auto d2 = gadget(GadgetId::D2);
    auto t = sp_decompose(d2.graph, 0, 3).root;
    REQUIRE(t.kind == SpKind::series);
    REQUIRE(t.children.size() == 3);
    CHECK(t.children[0].kind == SpKind::leaf);
    CHECK(t.children[0].edge == 0);
    CHECK(t.children[1].kind == SpKind::parallel);
    REQUIRE(t.children[1].children.size() == 2);
    CHECK(t.children[1].children[0].edge == 1);
    CHECK(t.children[1].children[1].edge == 3);
    CHECK(t.children[2].edge == 2);

    auto k4 = make_graph(4, {{0, 1, '+'}, {0, 2, '+'}, {0, 3, '+'}, {1, 2, '+'}, {1, 3, '+'}, {2, 3, '+'}});
    CHECK_THROWS_AS(sp_decompose(k4, 0, 1), PreconditionError);
    // pendant block hanging off a terminal
    CHECK_THROWS_AS(sp_decompose(make_graph(3, {{0, 1, '+'}, {1, 2, '+'}}), 0, 1), PreconditionError);
    CHECK(sp_decompose(make_graph(1, {{0, 0, '-'}}), 0, 0).root.kind == SpKind::loop_leaf);
}

TEST_CASE("sp decomposition of generated graphs flattens back") {
    SpParams p;
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto g = random_sp_signed(p, s);
        auto tree = sp_decompose(g, 0, 1);
        check_tree(g, tree.root);
        auto leaves = flatten(tree.root);
        std::sort(leaves.begin(), leaves.end());
        std::vector<EdgeId> all(g.edge_count());
        std::iota(all.begin(), all.end(), 0);
        CHECK(leaves == all);
        auto pp = parts(g, 0, 1);
        // maximal: no B2 part splits further in series
        for (const auto& part : pp.parts) {
            if (part.cls != PartClass::b2) continue;
            auto sub = sp_decompose_edges(g, part.edges, part.source, part.target);
            CHECK(sub.kind == SpKind::parallel);
        }
    }
}

TEST_CASE("parts") {
    auto chain = gadget(GadgetId::FIG1_CHAIN);
    auto pp = parts(chain.graph, 0, 5);
    REQUIRE(pp.parts.size() == 7);
    CHECK(pp.indices(PartClass::b0) == std::vector<std::size_t>{1, 5});
    CHECK(pp.indices(PartClass::b1) == std::vector<std::size_t>{0, 2, 4});
    CHECK(pp.indices(PartClass::b2) == std::vector<std::size_t>{3, 6});
    auto e = parts(make_graph(2, {{0, 1, '+'}}), 0, 1);
    REQUIRE(e.parts.size() == 1);
    CHECK(e.parts[0].cls == PartClass::b1);
    auto d = parts(gadget(GadgetId::R0).graph, 0, 1);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].cls == PartClass::b2);
}

TEST_CASE("pieces") {
    auto dig = gadget(GadgetId::R0).graph;
    CHECK(pieces_at(dig, 0, 1).size() == 2);
    auto r4 = gadget(GadgetId::R4).graph;
    auto pr = pieces_at(r4, 0, 1);
    REQUIRE(pr.size() == 2);
    CHECK(pr[0] == EdgeSet{0});
    CHECK(pr[1] == EdgeSet{1, 2, 3, 4, 5});
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    CHECK(pieces_at(tri, 0, 1).size() == 2);
    CHECK(max_parallel_pieces(make_graph(2, {{0, 1, '+'}, {0, 1, '+'}, {0, 1, '-'}}), 0, 1) == 3);
    CHECK(max_parallel_pieces(make_graph(2, {{0, 1, '+'}}), 0, 1) == 1);
    CHECK(max_parallel_pieces(tri, 0, 1) == 2);
    CHECK_THROWS_AS(pieces_at(tri, 1, 1), PreconditionError);
}
