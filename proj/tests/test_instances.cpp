#include <doctest.h>

#include "sigcover/coverability.hpp"
#include "sigcover/instances.hpp"
#include "sigcover/sp.hpp"

using namespace sigcover;

TEST_CASE("R gadgets have negativeness one") {
    for (GadgetId id : {GadgetId::R0, GadgetId::R1, GadgetId::R2, GadgetId::R3, GadgetId::R4, GadgetId::R5}) {
        auto g = gadget(id);
        CAPTURE(gadget_name(id));
        CHECK_FALSE(is_balanced(g.graph));
        CHECK(negativeness(g.graph) == 1);
        CHECK_FALSE(is_coverable(g.graph).coverable);
        CHECK(is_k4_minor_free(g.graph));
        REQUIRE(g.terminals);
        CHECK(g.terminals->first == 0);
        CHECK(g.terminals->second == 1);
    }
}

TEST_CASE("gadget shapes") {
    auto r0 = gadget(GadgetId::R0).graph;
    CHECK(r0.vertex_count() == 2);
    CHECK(r0.edge(0).sign == Sign::positive);
    CHECK(r0.edge(1).sign == Sign::negative);
    auto d1 = gadget(GadgetId::D1).graph;
    CHECK(d1.edge_count() == 3);
    CHECK(negativeness(d1) == 1);
    auto t = gadget(GadgetId::TIGHTNESS).graph;
    CHECK(negativeness(t) == 2);
    CHECK(is_coverable(t).coverable);
    CHECK(is_k4_minor_free(t));
    for (VertexId v = 0; v < 6; ++v) CHECK(t.degree(v) == 3);
    CHECK(gadget_from_name("FIG1_CHAIN") == GadgetId::FIG1_CHAIN);
    CHECK_FALSE(gadget_from_name("R9"));
}

TEST_CASE("generator") {
    SpParams p;
    CHECK(random_sp_signed(p, 42) == random_sp_signed(p, 42));
    SpParams noloop = p;
    noloop.loop_prob = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = random_sp_signed(noloop, s);
        for (const Edge& e : g.edges()) CHECK_FALSE(e.is_loop());
        auto h = random_sp_signed(p, s);
        CHECK(is_k4_minor_free(h));
        CHECK(is_connected(h));
        CHECK(h.vertex_count() <= p.max_vertices);
        CHECK(h.edge_count() <= p.max_edges);
    }
    SpParams strict = p;
    strict.no_two_vertices = true;
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto g = random_sp_signed(strict, s);
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK_FALSE(is_two_vertex(g, v));
    }
}

TEST_CASE("coverable corpus") {
    SpParams p;
    CHECK(coverable_corpus(0, p, 1).graphs.empty());
    auto a = coverable_corpus(20, p, 9);
    auto b = coverable_corpus(20, p, 9);
    REQUIRE(a.graphs.size() == 20);
    CHECK(a.graphs == b.graphs);
    for (const auto& g : a.graphs) CHECK(is_coverable(g).coverable);
    CHECK(a.draws == a.rejected + 20);
    CHECK_THROWS_AS(coverable_corpus(5, p, 9, 3), CapExceeded);
}
