#include <doctest.h>

#include "hubres/randomwalk.hpp"
#include "support.hpp"

using namespace hubres;
namespace tg = hubres::testing;

namespace {

// triangle 0-1-2 with a pendant vertex hanging off 2
Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

}  // namespace

TEST_SUITE_BEGIN("randomwalk");

TEST_CASE("transition matrices are row-stochastic and bias-aware") {
    SplitMix64 rng(808);
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = tg::random_connected_graph(8, 0.4, rng);
        for (Bias a : kAllBiases) {
            const TransitionMatrix t = transition_matrix(g, a);
            CHECK((t.P * Vector::Ones(g.order()) - Vector::Ones(g.order())).cwiseAbs().maxCoeff() <
                  1e-12);
            CHECK(t.P.minCoeff() >= 0.0);
        }
    }

    // at the degree-2 corner of the paw, the walk splits 3:2 away from the
    // hub when repelling and 2:3 toward it when attracting
    const Graph g = paw();
    const TransitionMatrix rep = transition_matrix(g, Bias::repelling);
    CHECK(rep.P(0, 1) == doctest::Approx(0.6));
    CHECK(rep.P(0, 2) == doctest::Approx(0.4));
    const TransitionMatrix att = transition_matrix(g, Bias::attracting);
    CHECK(att.P(0, 1) == doctest::Approx(0.4));
    CHECK(att.P(0, 2) == doctest::Approx(0.6));
    const TransitionMatrix std0 = transition_matrix(g, Bias::standard);
    CHECK(std0.P(0, 1) == doctest::Approx(0.5));
    CHECK(std0.P(0, 2) == doctest::Approx(0.5));
}

TEST_CASE("exact hitting times on hand graphs") {
    // walking to the far end of the 3-path (identical for all biases here:
    // every vertex sees neighbors of equal degree)
    for (Bias a : kAllBiases) {
        const Vector h = exact_hitting_times(tg::path(3), a, 2);
        CHECK(h(0) == doctest::Approx(4.0));
        CHECK(h(1) == doctest::Approx(3.0));
        CHECK(h(2) == doctest::Approx(0.0));
    }

    // complete graph: expected n-1 steps from anywhere
    const Vector k5 = exact_hitting_times(tg::complete(5), Bias::standard, 0);
    for (int v = 1; v < 5; ++v) CHECK(k5(v) == doctest::Approx(4.0));

    CHECK_THROWS_AS(exact_hitting_times(tg::path(3), Bias::standard, 3), std::invalid_argument);
    SplitMix64 rng(17);
    CHECK_THROWS_AS(
        exact_hitting_times(tg::random_disconnected_graph(2, 3, 0.8, rng), Bias::standard, 0),
        std::invalid_argument);
}

TEST_CASE("commute times") {
    CHECK(exact_commute_time(tg::path(3), Bias::standard, 0, 2) == doctest::Approx(8.0));
    // cycle: commute = 2 d (n - d) at hop distance d
    CHECK(exact_commute_time(tg::cycle(8), Bias::standard, 0, 4) == doctest::Approx(32.0));
    CHECK(exact_commute_time(tg::cycle(8), Bias::standard, 0, 1) == doctest::Approx(14.0));
    // the biased round trip on the 3-path
    CHECK(exact_commute_time(tg::path(3), Bias::attracting, 0, 2) == doctest::Approx(8.0));
}

TEST_CASE("commute identity report") {
    const CommuteReport std0 = commute_identity_report(tg::path(3), Bias::standard);
    CHECK(std0.vol == doctest::Approx(4.0));
    REQUIRE(std0.pairs.size() == 3);
    CHECK(std0.min_ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std0.max_ratio == doctest::Approx(1.0).epsilon(1e-10));

    const CommuteReport att = commute_identity_report(tg::path(3), Bias::attracting);
    CHECK(att.vol == doctest::Approx(5.0));
    bool saw_far_pair = false;
    for (const CommutePair& p : att.pairs) {
        if (p.v == 0 && p.w == 2) {
            saw_far_pair = true;
            CHECK(p.exact == doctest::Approx(8.0));
            CHECK(p.predicted == doctest::Approx(5.0));
            CHECK(p.ratio == doctest::Approx(1.6).epsilon(1e-9));
        }
    }
    CHECK(saw_far_pair);
    CHECK(att.min_ratio == doctest::Approx(16.0 / 15.0));
    CHECK(att.max_ratio == doctest::Approx(1.6));

    // unbiased identity holds pairwise on random graphs
    SplitMix64 rng(9090);
    for (int rep = 0; rep < 8; ++rep) {
        const Graph g = tg::random_connected_graph(7, 0.4, rng);
        const CommuteReport r = commute_identity_report(g, Bias::standard);
        CHECK(r.min_ratio == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(r.max_ratio == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("Monte Carlo hitting times agree with the exact solver") {
    const Graph p3 = tg::path(3);
    const McEstimate est = mc_hitting_time(p3, Bias::standard, 0, 2, 20000, 20240817);
    CHECK(est.trials == 20000);
    CHECK(est.censored == 0);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.mean - 4.0) <= 3.0 * est.std_error);

    const McEstimate att = mc_hitting_time(paw(), Bias::attracting, 3, 0, 20000, 555);
    const double exact = exact_hitting_times(paw(), Bias::attracting, 0)(3);
    CHECK(std::abs(att.mean - exact) <= 3.0 * att.std_error);

    // same seed, same estimate, bit for bit
    const McEstimate rerun = mc_hitting_time(p3, Bias::standard, 0, 2, 20000, 20240817);
    CHECK(rerun.mean == est.mean);
    CHECK(rerun.std_error == est.std_error);
}

TEST_CASE("Monte Carlo censoring") {
    // reaching the far end needs at least two steps, so a one-step cap
    // censors every trial
    CHECK_THROWS_AS(mc_hitting_time(tg::path(3), Bias::standard, 0, 2, 100, 1, 1),
                    numerical_error);
    // a generous-but-finite cap censors some long walks yet still reports
    const McEstimate est = mc_hitting_time(tg::path(3), Bias::standard, 0, 2, 5000, 99, 3);
    CHECK(est.censored > 0);
    CHECK(est.censored < est.trials);
}

TEST_CASE("volumes") {
    CHECK(volume(tg::path(3), Bias::standard) == doctest::Approx(4.0));
    CHECK(volume(tg::path(3), Bias::repelling) == doctest::Approx(5.0));
    CHECK(volume(tg::path(3), Bias::attracting) == doctest::Approx(5.0));
    SplitMix64 rng(777);
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = tg::random_connected_graph(8, 0.4, rng);
        CHECK(volume(g, Bias::standard) == doctest::Approx(2.0 * g.size()));
        CHECK(volume(g, Bias::repelling) == doctest::Approx(hubs_trace(g)));
        CHECK(volume(g, Bias::attracting) == doctest::Approx(hubs_trace(g)));
    }
}

TEST_CASE("walk efficiencies on the 3-path") {
    CHECK(walk_efficiency(tg::path(3), Bias::standard) == doctest::Approx(1.0 / 32.0));
    CHECK(walk_efficiency(tg::path(3), Bias::attracting) == doctest::Approx(1.0 / 25.0));
    CHECK(walk_efficiency(tg::path(3), Bias::repelling) == doctest::Approx(3.0 / 200.0));

    CHECK(relative_efficiency(tg::path(3), Bias::attracting) ==
          doctest::Approx(1.28).epsilon(1e-10));
    CHECK(relative_efficiency(tg::path(3), Bias::repelling) ==
          doctest::Approx(0.48).epsilon(1e-10));
    CHECK_THROWS_AS(relative_efficiency(tg::path(3), Bias::standard), std::invalid_argument);

    // on regular graphs the biased walks change nothing
    for (const Graph& g : {tg::cycle(6), tg::complete(5)}) {
        CHECK(relative_efficiency(g, Bias::attracting) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(relative_efficiency(g, Bias::repelling) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_SUITE_END();
