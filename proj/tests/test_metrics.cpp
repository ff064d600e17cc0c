#include "doctest.h"

#include <cmath>
#include <vector>

#include "shc/errors.hpp"
#include "shc/metrics.hpp"
#include "support.hpp"

using namespace shc;
using testing::make_instance;

TEST_CASE("ceiling with slack") {
    CHECK(required_matches(0.3, 10) == 3);
    CHECK(required_matches(0.5, 3) == 2);
    CHECK(required_matches(1.0, 7) == 7);
    CHECK(required_matches(0.0, 7) == 0);
    CHECK(required_matches(0.7, 0) == 0);
    CHECK(required_matches(0.1 + 0.2, 10) == 3);
}

TEST_CASE("happiness predicate") {
    const Graph k3 = build_graph(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    const Colouring mono(std::vector<Colour>{1, 1, 1}, 2);
    for (Vertex v = 0; v < 3; ++v)
        CHECK(is_rho_happy(k3, mono, 1.0, v));

    const Graph star = build_graph(4, testing::star_edges(3));
    const Colouring c(std::vector<Colour>{1, 2, 2, 2}, 2);
    CHECK_FALSE(is_rho_happy(star, c, 0.5, 0));

    const Colouring partial(std::vector<Colour>{0, 1, 1, 1}, 2);
    CHECK_FALSE(is_rho_happy(star, partial, 0.0, 0));

    const Graph isolated = build_graph(2, {});
    const Colouring lone(std::vector<Colour>{1, 0}, 1);
    CHECK(is_rho_happy(isolated, lone, 1.0, 0));
    CHECK_FALSE(is_rho_happy(isolated, lone, 1.0, 1));
}

TEST_CASE("happiness report") {
    const Instance k3 = make_instance(3, {{0, 1}, {0, 2}, {1, 2}}, 2, 1.0, {1, 1, 2}, {});
    const HappinessReport r = happiness_report(k3, Colouring(std::vector<Colour>{1, 1, 2}, 2));
    CHECK(r.happy_count == 0);
    CHECK_FALSE(r.complete);

    const HappinessReport empty = happiness_report(k3, Colouring(3, 2));
    CHECK(empty.happy_count == 0);
    CHECK(empty.alpha == 0.0);
    CHECK(empty.acd == 0.0);

    const Instance cliques = make_instance(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 2, 1.0,
                                           {1, 1, 1, 2, 2, 2}, {});
    const HappinessReport full = happiness_report(cliques, community_colouring(cliques));
    CHECK(full.alpha == 1.0);
    CHECK(full.complete);
}

TEST_CASE("acd") {
    const Instance inst = make_instance(8, testing::path_edges(8), 2, 0.5, {1, 1, 1, 1, 2, 2, 2, 2}, {});
    CHECK(acd(inst, community_colouring(inst)) == 1.0);
    CHECK(acd(inst, Colouring(std::vector<Colour>{1, 1, 2, 2, 2, 2, 1, 1}, 2)) == 0.5);
    CHECK(acd(inst, Colouring(std::vector<Colour>{1, 1, 1, 1, 0, 0, 0, 0}, 2)) == 0.5);
    CHECK(acd(inst, Colouring(8, 2)) == 0.0);
}

TEST_CASE("pi overlap") {
    const Instance inst = make_instance(8, testing::path_edges(8), 2, 0.5, {1, 1, 1, 1, 2, 2, 2, 2}, {});
    const Colouring comm = community_colouring(inst);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(pi_overlap(inst, comm, v) == 1.0);
    const Colouring c(std::vector<Colour>{1, 2, 2, 2, 1, 1, 1, 1}, 2);
    CHECK(pi_overlap(inst, c, 0) == 0.25);
    CHECK(pi_overlap(inst, c, 1) == 0.75);
    const Colouring lone(std::vector<Colour>{2, 1, 1, 1, 1, 1, 1, 1}, 2);
    CHECK(pi_overlap(inst, lone, 0) == 0.25);
    CHECK_THROWS_WITH_AS(pi_overlap(inst, Colouring(8, 2), 3), doctest::Contains("pi undefined for uncoloured vertex"),
                         ParameterError);
}

TEST_CASE("closed-form thresholds") {
    CHECK(mu(0.5, 0.5, 2) == doctest::Approx(0.5));
    CHECK(xi_tilde(0.5, 0.5, 2) == doctest::Approx(0.5));
    CHECK(xi_tilde(0.5, 0.1, 5) == doctest::Approx(0.5 / 0.9).epsilon(1e-12));
    CHECK(mu(0.5, 0.1, 5) == doctest::Approx(0.1 / 0.9).epsilon(1e-12));
    CHECK(std::abs(xi(1'000'000'000, 5, 0.5, 0.1, 0.1) - xi_tilde(0.5, 0.1, 5)) < 1e-6);
    CHECK_THROWS_AS(mu(0.5, 0.6, 2), ParameterError);
    CHECK_THROWS_AS(mu(0.5, 0.0, 2), ParameterError);
    CHECK_THROWS_AS(xi_tilde(0.5, 0.1, 1), ParameterError);
    CHECK_THROWS_AS(xi(0, 2, 0.5, 0.1, 0.1), ParameterError);
    CHECK_THROWS_AS(xi(10, 2, 0.5, 0.1, 1.0), ParameterError);
    // Tiny n drives the log argument negative.
    CHECK(xi(2, 2, 0.01, 0.005, 0.01) == 0.0);

    const Thresholds t = thresholds(2000, 4, 0.6, 0.05);
    CHECK(t.epsilon == kDefaultEpsilon);
    CHECK(t.mu == mu(0.6, 0.05, 4));
    CHECK(t.xi == xi(2000, 4, 0.6, 0.05, 0.1));
}

TEST_CASE("xi barely moves with epsilon at desk scale") {
    const double xt = xi_tilde(0.3, 0.05, 4);
    for (double eps : {0.01, 0.1, 0.5}) {
        const double x = xi(1500, 4, 0.3, 0.05, eps);
        CHECK(x <= xt);
        CHECK(xt - x < 0.02);
    }
}

TEST_CASE("inequality one") {
    CHECK_FALSE(eq1_holds(2000, 4, 0.6, 0.05, 1.0, 0.1));
    CHECK(eq1_holds(1'000'000, 4, 0.6, 0.05, 1e-3, 0.1));
    const double x = xi(2000, 4, 0.6, 0.05, 0.1);
    CHECK(eq1_holds(2000, 4, 0.6, 0.05, x - 1e-6, 0.1));
    // Here xi is clamped to xi_tilde = 0.8; the log term is about 0.862.
    CHECK(eq1_holds(2000, 4, 0.6, 0.05, 0.86, 0.1));
    CHECK_FALSE(eq1_holds(2000, 4, 0.6, 0.05, 0.87, 0.1));
}

TEST_CASE("buckets") {
    const Thresholds t = thresholds(1000, 4, 0.5, 0.1);
    CHECK(rho_bucket(0.0, t) == Bucket::BelowMu);
    CHECK(rho_bucket(t.mu, t) == Bucket::MuToXiTilde);
    CHECK(rho_bucket(t.xi_tilde, t) == Bucket::MuToXiTilde);
    CHECK(rho_bucket(1.0, t) == Bucket::AboveXiTilde);
    CHECK(bucket_name(Bucket::BelowMu) == "below_mu");
    CHECK(bucket_name(Bucket::MuToXiTilde) == "mu_to_xitilde");
    CHECK(bucket_name(Bucket::AboveXiTilde) == "above_xitilde");
}

TEST_CASE("pi lower bound") {
    CHECK(pi_lower_bound(mu(0.5, 0.1, 5), 0.5, 0.1, 5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pi_lower_bound(xi_tilde(0.5, 0.1, 5), 0.5, 0.1, 5) == doctest::Approx(1.0));
    CHECK(pi_lower_bound(0.0, 0.5, 0.1, 5) == doctest::Approx(-0.25));
    CHECK_THROWS_WITH_AS(pi_lower_bound(0.5, 0.3, 0.3, 2), doctest::Contains("bound undefined"), ParameterError);
}

TEST_CASE("threshold properties over random parameters") {
    Rng rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const double p = rng.uniform_open_closed(0.0, 1.0);
        const double q = p * rng.uniform_open_closed(0.0, 0.999);
        const std::size_t k = 2 + rng.below(19);
        const std::size_t n = k + rng.below(5000);
        const double m = mu(p, q, k);
        const double xt = xi_tilde(p, q, k);
        CHECK(m < xt);
        CHECK(xt < 1.0);
        const double x = xi(n, k, p, q, 0.1);
        CHECK(x >= 0.0);
        CHECK(x <= xt);
        CHECK(std::abs(pi_lower_bound(xt, p, q, k) - 1.0) < 1e-12);
    }
}

TEST_CASE("happiness is downward closed in rho") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Instance inst = testing::small_sbm(s, 6, 20);
        Rng rng(s);
        std::vector<Colour> a(inst.num_vertices());
        for (auto& x : a)
            x = static_cast<Colour>(rng.below(inst.k + 1));
        const Colouring c(a, inst.k);
        for (Vertex v = 0; v < inst.num_vertices(); ++v) {
            CHECK(is_rho_happy(inst.graph, c, 0.0, v) == (c[v] != kUncoloured));
            bool prev = true;
            for (double rho = 0.0; rho <= 1.0; rho += 0.05) {
                const bool h = is_rho_happy(inst.graph, c, rho, v);
                CHECK((prev || !h));
                prev = h;
            }
        }
        Instance probe = inst;
        probe.rho = 0.6;
        const HappinessReport r = happiness_report(probe, c);
        std::size_t bits = 0;
        for (bool b : r.per_vertex)
            bits += b;
        CHECK(bits == r.happy_count);
        CHECK(r.happy_count == testing::naive_happy(probe, c));
        CHECK(r.alpha == doctest::Approx(static_cast<double>(r.happy_count) / static_cast<double>(inst.num_vertices())));
        CHECK(acd(inst, community_colouring(inst)) == 1.0);
    }
}
