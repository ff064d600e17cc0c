#include "doctest.h"

#include <cmath>
#include <vector>

#include "shc/errors.hpp"
#include "shc/metrics.hpp"
#include "shc/sbm.hpp"
#include "support.hpp"

using namespace shc;

namespace {

SbmParams params(std::size_t n, Colour k, double p, double q, std::size_t pcc, std::uint64_t seed) {
    SbmParams sp;
    sp.n = n;
    sp.k = k;
    sp.p = p;
    sp.q = q;
    sp.pcc = pcc;
    sp.seed = seed;
    return sp;
}

} // namespace

TEST_CASE("parameter domain") {
    CHECK_THROWS_AS(generate(params(6, 2, 1.0, 1.0, 1, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.7, 1, 1), 0.5), ParameterError);
    CHECK_NOTHROW(generate(params(6, 2, 1.0, 1.0 - 1e-12, 1, 1), 0.5));
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.5, 1, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.0, 1, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 1, 0.5, 0.1, 1, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(3, 4, 0.5, 0.1, 1, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.1, 0, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.1, 4, 1), 0.5), ParameterError);
    CHECK_THROWS_AS(generate(params(6, 2, 0.5, 0.1, 1, 1), 1.5), ParameterError);
    CHECK_NOTHROW(generate(params(6, 2, 0.9, 0.5, 3, 1), 0.5));
}

TEST_CASE("p = 1 gives intra-community cliques") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Instance inst = generate(params(6, 2, 1.0, 0.5, 1, s), 0.5);
        CHECK(community_sizes(6, 2) == std::vector<std::size_t>{3, 3});
        CHECK(inst.communities == std::vector<Colour>{1, 1, 1, 2, 2, 2});
        for (Vertex u = 0; u < 6; ++u)
            for (Vertex v = u + 1; v < 6; ++v)
                if (inst.communities[u] == inst.communities[v])
                    CHECK(inst.graph.adjacent(u, v));
    }
}

TEST_CASE("n = 8, k = 3 community sizes and precolouring") {
    CHECK(community_sizes(8, 3) == std::vector<std::size_t>{3, 3, 2});
    const Instance inst = generate(params(8, 3, 0.9, 0.4, 1, 4), 0.5);
    CHECK(inst.precoloured == std::vector<Precolour>{{0, 1}, {3, 2}, {6, 3}});
    const Colouring c = community_colouring(inst);
    std::vector<std::size_t> sizes(4, 0);
    for (Vertex v = 0; v < 8; ++v)
        ++sizes[c[v]];
    CHECK(sizes == std::vector<std::size_t>{0, 3, 3, 2});
    CHECK(acd(inst, c) == 1.0);
}

TEST_CASE("community colouring of disjoint cliques is complete at rho = 1") {
    // q -> 0 limit: two triangles with nothing between them.
    const Instance inst = testing::make_instance(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 2, 1.0,
                                                 {1, 1, 1, 2, 2, 2}, {{0, 1}, {3, 2}});
    const HappinessReport r = happiness_report(inst, community_colouring(inst));
    CHECK(r.complete);
    CHECK(r.alpha == 1.0);
}

TEST_CASE("generation is deterministic and valid") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const SbmParams sp = params(50 + s, 2 + static_cast<Colour>(s % 4), 0.4, 0.05, 1 + s % 3, s);
        const Instance a = generate(sp, 0.3);
        const Instance b = generate(sp, 0.3);
        CHECK(a == b);
        CHECK_NOTHROW(a.validate());
        CHECK(is_connected(a.graph));
        CHECK(a.precoloured.size() == sp.pcc * sp.k);
        CHECK(a.params == sp);
    }
    CHECK_FALSE(generate(params(40, 2, 0.5, 0.1, 1, 1), 0.3) == generate(params(40, 2, 0.5, 0.1, 1, 2), 0.3));
}

TEST_CASE("rho does not change the graph") {
    const SbmParams sp = params(60, 3, 0.3, 0.05, 1, 17);
    CHECK(generate(sp, 0.1).graph == generate(sp, 0.9).graph);
}

TEST_CASE("empirical edge densities") {
    const double p = 0.5, q = 0.1;
    double intra_pairs = 0, intra_edges = 0, inter_pairs = 0, inter_edges = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Instance inst = generate(params(60, 3, p, q, 1, s), 0.5);
        for (Vertex u = 0; u < 60; ++u)
            for (Vertex v = u + 1; v < 60; ++v) {
                const bool e = inst.graph.adjacent(u, v);
                if (inst.communities[u] == inst.communities[v]) {
                    ++intra_pairs;
                    intra_edges += e;
                } else {
                    ++inter_pairs;
                    inter_edges += e;
                }
            }
    }
    CHECK(std::abs(intra_edges / intra_pairs - p) < 0.05);
    CHECK(std::abs(inter_edges / inter_pairs - q) < 0.05);
}

TEST_CASE("too sparse to connect") {
    CHECK_THROWS_WITH_AS(generate(params(200, 4, 0.001, 0.0001, 1, 1), 0.5),
                         doctest::Contains("connectivity retry limit exceeded"), GenerationError);
}

TEST_CASE("instance validation catches broken invariants") {
    const auto base = [] {
        return testing::make_instance(4, testing::path_edges(4), 2, 0.5, {1, 1, 2, 2}, {{0, 1}, {2, 2}});
    };
    CHECK_NOTHROW(base().validate());

    Instance i = base();
    i.precoloured = {{0, 1}, {2, 1}};
    CHECK_THROWS_WITH_AS(i.validate(), doctest::Contains("precolouring violates community rule"), InstanceError);

    i = base();
    i.precoloured = {{0, 1}};
    CHECK_THROWS_AS(i.validate(), InstanceError);

    i = base();
    i.communities = {1, 1, 1, 2};
    CHECK_THROWS_AS(i.validate(), InstanceError);

    i = base();
    i.graph = build_graph(4, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(i.validate(), doctest::Contains("instance not connected"), InstanceError);

    i = base();
    i.rho = 1.5;
    CHECK_THROWS_AS(i.validate(), InstanceError);
}
