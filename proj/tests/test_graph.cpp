#include <doctest.h>

#include <sstream>

#include "sigcover/circuits.hpp"
#include "sigcover/coverability.hpp"
#include "sigcover/graph_io.hpp"
#include "sigcover/negativeness.hpp"
#include "support.hpp"

using namespace sigcover;
using testsupport::make_graph;

TEST_CASE("switching") {
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    auto s = switch_at(tri, {0});
    CHECK(s.edge(0).sign == Sign::negative);
    CHECK(s.edge(1).sign == Sign::positive);
    CHECK(s.edge(2).sign == Sign::negative);
    CHECK(switch_at(tri, {}) == tri);
    auto loop = make_graph(1, {{0, 0, '-'}});
    CHECK(switch_at(loop, {0}).edge(0).sign == Sign::negative);
    CHECK_THROWS_AS(switch_at(tri, {3}), std::out_of_range);
}

TEST_CASE("balance and negativeness") {
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    auto r0 = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}});
    auto p3 = make_graph(3, {{0, 1, '-'}, {1, 2, '-'}});
    CHECK(is_balanced(tri));
    CHECK_FALSE(is_balanced(r0));
    CHECK(is_balanced(p3));
    CHECK_FALSE(is_balanced(make_graph(1, {{0, 0, '-'}})));
    CHECK(negativeness(tri) == 0);
    CHECK(negativeness(r0) == 1);
    // two unbalanced digons joined by a path
    auto two = make_graph(5, {{0, 1, '+'}, {0, 1, '-'}, {1, 2, '-'}, {2, 3, '+'}, {3, 4, '-'}, {3, 4, '+'}});
    CHECK(testsupport::brute_force_epsilon(two) == 2);
    CHECK(negativeness(two) == 2);
    CHECK_THROWS_AS(negativeness(tri, 2), CapExceeded);
}

TEST_CASE("negativeness kernels agree with brute force") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng() % 8;
        auto g = testsupport::random_multigraph(rng, n, rng() % 14, 0.1, 0.5);
        std::size_t expect = testsupport::brute_force_epsilon(g);
        CHECK(negativeness(g, 24, Kernel::serial) == expect);
        CHECK(negativeness(g, 24, Kernel::parallel) == expect);
        CHECK((expect == 0) == is_balanced(g));
    }
}

TEST_CASE("sign_of") {
    auto r0 = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}});
    CHECK(sign_of(r0, std::vector<EdgeId>{}) == Sign::positive);
    CHECK(sign_of(r0, std::vector<EdgeId>{1}) == Sign::negative);
    CHECK(sign_of(r0, std::vector<EdgeId>{0, 1}) == Sign::negative);
    CHECK_THROWS(sign_of(r0, std::vector<EdgeId>{2}));
}

TEST_CASE("suppress") {
    auto path = make_graph(3, {{0, 1, '+'}, {1, 2, '-'}});
    auto s = suppress(path);
    REQUIRE(s.graph.edge_count() == 1);
    CHECK(s.graph.edge(0).sign == Sign::negative);
    CHECK(s.edge_paths[0] == std::vector<EdgeId>{0, 1});
    CHECK(s.graph.vertex_count() == 2);

    auto theta = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}, {0, 1, '+'}});
    auto st = suppress(theta);
    CHECK(st.graph == theta);
    CHECK(st.edge_paths == std::vector<std::vector<EdgeId>>{{0}, {1}, {2}});

    auto c4 = make_graph(4, {{0, 1, '+'}, {1, 2, '+'}, {2, 3, '+'}, {3, 0, '-'}});
    auto sc = suppress(c4);
    REQUIRE(sc.graph.vertex_count() == 1);
    REQUIRE(sc.graph.edge_count() == 1);
    CHECK(sc.graph.edge(0).is_loop());
    CHECK(sc.graph.edge(0).sign == Sign::negative);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto g = testsupport::random_multigraph(rng, 1 + rng() % 7, rng() % 10, 0.1, 0.5);
        auto r = suppress(g);
        std::size_t total = 0;
        for (EdgeId e = 0; e < r.graph.edge_count(); ++e) {
            CHECK(r.graph.edge(e).sign == sign_of(g, r.edge_paths[e]));
            total += r.edge_paths[e].size();
        }
        CHECK(total == g.edge_count());
        for (VertexId v = 0; v < r.graph.vertex_count(); ++v) {
            if (is_two_vertex(r.graph, v)) {
                // only whole-circuit components may keep a 2-vertex, and those become loops
                CHECK(false);
            }
        }
    }
}

TEST_CASE("blocks and two-connectivity") {
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    auto bt = blocks_and_cuts(tri);
    CHECK(bt.blocks.size() == 1);
    CHECK(bt.cut_vertices.empty());

    auto bow = make_graph(5, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}, {2, 3, '+'}, {3, 4, '+'}, {4, 2, '+'}});
    auto bb = blocks_and_cuts(bow);
    CHECK(bb.blocks.size() == 2);
    CHECK(bb.cut_vertices == std::vector<VertexId>{2});

    auto barbell = make_graph(2, {{0, 0, '-'}, {0, 1, '+'}, {1, 1, '-'}});
    auto bl = blocks_and_cuts(barbell);
    CHECK(bl.blocks.size() == 3);
    CHECK(bl.cut_vertices == std::vector<VertexId>{0, 1});

    CHECK(is_two_connected(make_graph(2, {{0, 1, '+'}, {0, 1, '-'}})));
    CHECK(is_two_connected(make_graph(2, {{0, 1, '+'}})));
    CHECK_FALSE(is_two_connected(make_graph(3, {{0, 1, '+'}, {1, 2, '+'}})));
    CHECK_FALSE(is_two_connected(bow));
}

TEST_CASE("graph text format") {
    std::string text = "# comment\nv 3\ne 0 1 +\ne 1 2 -  # trailing\n\ne 2 2 -\nt 0 2\n";
    auto f = read_graph_string(text);
    CHECK(f.graph.vertex_count() == 3);
    CHECK(f.graph.edge_count() == 3);
    CHECK(f.graph.edge(2).is_loop());
    REQUIRE(f.terminals);
    CHECK(f.terminals->second == 2);
    CHECK(read_graph_string(graph_to_string(f.graph, f.terminals)).graph == f.graph);

    try {
        read_graph_string("v 2\ne 0 1 +\ne 0 5 -\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(read_graph_string("e 0 1 +\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string("v 2\ne 0 1 x\n"), ParseError);
    CHECK_THROWS_AS(read_graph_string(""), ParseError);
}

TEST_CASE("circuit enumeration") {
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    CHECK(enumerate_circuits(tri).size() == 1);
    auto dig = make_graph(3, {{0, 1, '+'}, {0, 1, '-'}, {1, 2, '+'}});
    auto dc = enumerate_circuits(dig);
    REQUIRE(dc.size() == 1);
    CHECK(dc[0].edges == EdgeSet{0, 1});
    auto theta = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}, {0, 1, '+'}});
    CHECK(testsupport::brute_force_circuits(theta).size() == 3);
    CHECK(enumerate_circuits(theta).size() == 3);
    CHECK_THROWS_AS(enumerate_circuits(theta, 2), CapExceeded);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 150; ++i) {
        auto g = testsupport::random_multigraph(rng, 1 + rng() % 6, rng() % 10, 0.15, 0.5);
        std::set<EdgeSet> got;
        for (const auto& c : enumerate_circuits(g)) {
            CHECK(got.insert(c.edges).second);
            CHECK((classify_circuit(g, c.edges) == Balance::balanced) == (sign_of(g, c.edges) == Sign::positive));
        }
        CHECK(got == testsupport::brute_force_circuits(g));
    }
}

TEST_CASE("classify circuit") {
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    CHECK(classify_circuit(tri, {0, 1, 2}) == Balance::balanced);
    CHECK(classify_circuit(make_graph(1, {{0, 0, '-'}}), {0}) == Balance::unbalanced);
    CHECK(classify_circuit(make_graph(2, {{0, 1, '+'}, {0, 1, '-'}}), {0, 1}) == Balance::unbalanced);
    CHECK_THROWS_AS(classify_circuit(tri, {0, 1}), PreconditionError);
}

TEST_CASE("signed circuits") {
    auto barbell = make_graph(2, {{0, 0, '-'}, {0, 1, '+'}, {1, 1, '-'}});
    auto sb = enumerate_signed_circuits(barbell);
    REQUIRE(sb.size() == 1);
    CHECK(sb[0].kind() == SignedCircuitKind::long_barbell);
    CHECK(sb[0].edges == EdgeSet{0, 1, 2});
    CHECK(enumerate_signed_circuits(make_graph(2, {{0, 1, '+'}, {0, 1, '-'}})).empty());
    auto two_loops = make_graph(1, {{0, 0, '-'}, {0, 0, '-'}});
    auto sl = enumerate_signed_circuits(two_loops);
    REQUIRE(sl.size() == 1);
    CHECK(sl[0].kind() == SignedCircuitKind::short_barbell);

    auto c4 = make_graph(4, {{0, 1, '+'}, {1, 2, '-'}, {2, 3, '+'}, {3, 0, '-'}});
    auto p = is_signed_circuit(c4, {0, 1, 2, 3});
    REQUIRE(p);
    CHECK(p->kind() == SignedCircuitKind::balanced);
    auto lb = is_signed_circuit(barbell, {0, 1, 2});
    REQUIRE(lb);
    CHECK(lb->kind() == SignedCircuitKind::long_barbell);
    CHECK(std::get<Barbell>(lb->shape).path == std::vector<EdgeId>{1});
    CHECK_FALSE(is_signed_circuit(make_graph(2, {{0, 1, '+'}, {0, 1, '-'}}), {0, 1}));
    // theta with two unbalanced circuits is not a barbell
    auto theta = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}, {0, 1, '+'}});
    CHECK_FALSE(is_signed_circuit(theta, {0, 1, 2}));
    CHECK_THROWS(is_signed_circuit(theta, {7}));
}

TEST_CASE("signed circuits agree with a subset oracle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 120; ++i) {
        auto g = testsupport::random_multigraph(rng, 1 + rng() % 6, rng() % 10, 0.2, 0.5);
        auto expect = testsupport::brute_force_signed_circuits(g);
        std::set<EdgeSet> got;
        for (const auto& sc : enumerate_signed_circuits(g)) {
            CHECK(got.insert(sc.edges).second);
            CHECK(is_signed_circuit(g, sc.edges));
        }
        CHECK(got == expect);
    }
}

TEST_CASE("tadpoles and paths") {
    auto loop = make_graph(1, {{0, 0, '-'}});
    auto t0 = is_tadpole_at(loop, {0}, 0);
    REQUIRE(t0);
    CHECK(t0->path.empty());
    auto g = make_graph(2, {{0, 1, '+'}, {1, 1, '-'}});
    auto g2 = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {1, 2, '-'}});
    auto t1 = is_tadpole_at(g2, {0, 1, 2}, 0);
    REQUIRE(t1);
    CHECK(t1->path == std::vector<EdgeId>{0});
    CHECK(t1->head == 1);
    CHECK_FALSE(is_tadpole_at(g2, {0, 1, 2}, 2));
    auto tri = make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}});
    for (VertexId x = 0; x < 3; ++x) CHECK_FALSE(is_tadpole_at(tri, {0, 1, 2}, x));
    CHECK(is_tadpole_at(g, {0, 1}, 0));

    auto paths = enumerate_xy_paths(g2, 0, 2);
    CHECK(paths.size() == 2);
    auto p = as_xy_path(g2, {0, 2}, 0, 2);
    REQUIRE(p);
    CHECK(p->sign == Sign::negative);
    CHECK(p->vertices == std::vector<VertexId>{0, 1, 2});
    CHECK_FALSE(as_xy_path(g2, {0, 1, 2}, 0, 2));
}

TEST_CASE("coverability criterion") {
    auto r0 = make_graph(2, {{0, 1, '+'}, {0, 1, '-'}});
    auto rep = is_coverable(r0);
    CHECK_FALSE(rep.coverable);
    CHECK(rep.reason() == "epsilon=1");
    CHECK_FALSE(is_coverable_oracle(r0));
    CHECK(is_coverable(make_graph(2, {{0, 0, '-'}, {0, 1, '+'}, {1, 1, '-'}})).coverable);
    auto lolli = make_graph(4, {{0, 0, '-'}, {0, 1, '+'}, {1, 2, '+'}, {2, 3, '+'}, {3, 1, '+'}});
    auto rl = is_coverable(lolli);
    CHECK_FALSE(rl.coverable);
    REQUIRE(rl.bridge);
    CHECK(*rl.bridge == 1);
    CHECK(rl.balanced_side == std::vector<VertexId>{1, 2, 3});
    CHECK_THROWS_AS(is_coverable(make_graph(2, {})), PreconditionError);
    CHECK(is_coverable_oracle(make_graph(3, {{0, 1, '+'}, {1, 2, '+'}, {2, 0, '+'}})));
}
