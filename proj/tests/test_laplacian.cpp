#include <doctest.h>

#include "hubres/laplacian.hpp"
#include "support.hpp"

using namespace hubres;
namespace tg = hubres::testing;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE_BEGIN("laplacian");

TEST_CASE("bias helpers") {
    CHECK(bias_exponent(Bias::attracting) == -1);
    CHECK(bias_exponent(Bias::standard) == 0);
    CHECK(bias_exponent(Bias::repelling) == 1);
    CHECK(bias_from_int(-1) == Bias::attracting);
    CHECK(bias_from_int(1) == Bias::repelling);
    CHECK_THROWS_AS(bias_from_int(2), std::invalid_argument);
    CHECK(bias_name(Bias::attracting) == std::string("attracting"));
    CHECK(bias_name(Bias::repelling) == std::string("repelling"));
}

TEST_CASE("conductances on the 3-path") {
    const Graph p3 = tg::path(3);
    // end-middle: degrees 1 and 2
    CHECK(conductance(p3, Bias::repelling, 0, 1) == doctest::Approx(0.5));
    CHECK(conductance(p3, Bias::repelling, 1, 0) == doctest::Approx(2.0));
    CHECK(conductance(p3, Bias::attracting, 0, 1) == doctest::Approx(2.0));
    CHECK(conductance(p3, Bias::attracting, 1, 0) == doctest::Approx(0.5));
    CHECK(conductance(p3, Bias::standard, 0, 1) == doctest::Approx(1.0));
    // conductance is defined on edges only
    CHECK_THROWS_AS(conductance(p3, Bias::repelling, 0, 2), std::invalid_argument);

    CHECK(total_conductance(p3, Bias::repelling, 1) == doctest::Approx(4.0));
    CHECK(total_conductance(p3, Bias::attracting, 1) == doctest::Approx(1.0));
}

TEST_CASE("3-path biased matrices, entry by entry") {
    const Graph p3 = tg::path(3);

    const LaplacianBundle rep = build_laplacian(p3, Bias::repelling);
    Matrix expected_rep(3, 3);
    expected_rep << 0.5, -0.5, 0.0,
                   -2.0,  4.0, -2.0,
                    0.0, -0.5, 0.5;
    CHECK(max_abs(rep.L - expected_rep) < 1e-14);

    const LaplacianBundle att = build_laplacian(p3, Bias::attracting);
    Matrix expected_att(3, 3);
    expected_att << 2.0, -2.0, 0.0,
                   -0.5,  1.0, -0.5,
                    0.0, -2.0, 2.0;
    CHECK(max_abs(att.L - expected_att) < 1e-14);

    const LaplacianBundle std0 = build_laplacian(p3, Bias::standard);
    Matrix expected_std(3, 3);
    expected_std << 1.0, -1.0, 0.0,
                   -1.0,  2.0, -1.0,
                    0.0, -1.0, 1.0;
    CHECK(max_abs(std0.L - expected_std) < 1e-14);

    // symmetric companion of the repelling matrix keeps the diagonal,
    // replaces off-diagonals with plain -A
    Matrix expected_s(3, 3);
    expected_s << 0.5, -1.0, 0.0,
                 -1.0,  4.0, -1.0,
                  0.0, -1.0, 0.5;
    CHECK(max_abs(rep.S - expected_s) < 1e-14);
}

TEST_CASE("bundle invariants hold on random graphs") {
    SplitMix64 rng(31337);
    for (int rep = 0; rep < 15; ++rep) {
        const Graph g = tg::random_connected_graph(8, 0.4, rng);
        for (Bias bias : kAllBiases) {
            const LaplacianBundle b = build_laplacian(g, bias);
            const int n = g.order();

            // rows sum to zero
            CHECK(max_abs(b.L * Vector::Ones(n)) < 1e-12);

            // similarity: L = K^a S K^{-a}
            const double a = bias_exponent(bias);
            Vector ka(n), kia(n);
            for (int v = 0; v < n; ++v) {
                ka[v] = std::pow(static_cast<double>(g.degree(v)), a);
                kia[v] = 1.0 / ka[v];
            }
            const Matrix recon = ka.asDiagonal() * b.S * kia.asDiagonal();
            CHECK(max_abs(b.L - recon) < 1e-12);

            // opposite off-diagonal entries multiply to 1 across each edge
            for (const auto& [v, w] : g.edges()) {
                CHECK(b.L(v, w) * b.L(w, v) == doctest::Approx(1.0).epsilon(1e-12));
            }

            // S is symmetric with -1 off-diagonals on edges
            CHECK(max_abs(b.S - b.S.transpose()) < 1e-14);
            for (const auto& [v, w] : g.edges()) CHECK(b.S(v, w) == doctest::Approx(-1.0));
        }
    }
}

TEST_CASE("biased trace on hand graphs") {
    // path on 3 vertices: ordered adjacent pairs contribute 1/2+2+2+1/2
    CHECK(hubs_trace(tg::path(3)) == doctest::Approx(5.0));
    // complete bipartite K_{p,q}: trace is p^2 + q^2
    CHECK(hubs_trace(tg::complete_bipartite(1, 3)) == doctest::Approx(10.0));
    CHECK(hubs_trace(tg::complete_bipartite(2, 3)) == doctest::Approx(13.0));
    CHECK(hubs_trace(tg::complete_bipartite(3, 3)) == doctest::Approx(18.0));
    CHECK(hubs_trace(tg::complete_bipartite(2, 4)) == doctest::Approx(20.0));
    // regular graphs: trace equals 2m
    CHECK(hubs_trace(tg::cycle(8)) == doctest::Approx(16.0));
    CHECK(hubs_trace(tg::complete(5)) == doctest::Approx(20.0));
}

TEST_CASE("trace equals matrix trace for both biased variants") {
    SplitMix64 rng(404);
    for (int rep = 0; rep < 15; ++rep) {
        const Graph g = tg::random_connected_graph(9, 0.35, rng);
        const double t = hubs_trace(g);
        CHECK(build_laplacian(g, Bias::repelling).L.trace() == doctest::Approx(t).epsilon(1e-12));
        CHECK(build_laplacian(g, Bias::attracting).L.trace() == doctest::Approx(t).epsilon(1e-12));
    }
}

TEST_CASE("trace bounds: every row passes on small graphs") {
    SplitMix64 rng(808);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g = tg::random_connected_graph(2 + static_cast<int>(rng.next_below(5)), 0.5, rng);
        const auto rows = trace_bounds_report(g);
        CHECK(rows.size() == 6);
        CHECK(count_bound_violations(rows) == 0);
    }
}

TEST_CASE("trace bounds are all tight on regular graphs") {
    for (const Graph& g : {tg::complete(4), tg::cycle(6), tg::complete_bipartite(3, 3)}) {
        for (const BoundRow& row : trace_bounds_report(g)) {
            CHECK(row.pass);
            if (std::isfinite(row.upper)) {
                INFO(row.id);
                CHECK(row.tight);
            }
        }
    }
}

TEST_CASE("trace bounds on the 3-path match hand computation") {
    const auto rows = trace_bounds_report(tg::path(3));
    REQUIRE(rows.size() == 6);
    for (const BoundRow& row : rows) {
        CHECK(row.value == doctest::Approx(5.0));
        CHECK(row.pass);
    }

    auto find = [&](const std::string& id) -> const BoundRow& {
        for (const auto& r : rows)
            if (r.id == id) return r;
        REQUIRE(false);
        return rows.front();
    };

    const BoundRow& deg = find("trace_degree");
    CHECK(deg.lower == doctest::Approx(2.0));  // 2m d/D = 4*1/2
    CHECK(deg.upper == doctest::Approx(8.0));  // 2m D/d = 4*2

    const BoundRow& zagreb = find("trace_zagreb");
    CHECK(zagreb.lower == doctest::Approx(3.0));  // 6/2
    CHECK(zagreb.upper == doctest::Approx(6.0));  // 6/1

    const BoundRow& extremal = find("trace_zagreb_extremal");
    CHECK(extremal.lower == doctest::Approx(8.0 / 3.0));  // 4m^2/(nD) = 16/6
    CHECK(extremal.upper == doctest::Approx(6.0));        // 2m(2m+(n-1)(D-d))/(d(n+D-d)) = 4*6/4

    // neighborhood-degree row is tight here: both sides equal 5
    const BoundRow& nd = find("trace_neighborhood_degree");
    CHECK(nd.lower == doctest::Approx(5.0));
    CHECK(nd.upper == doctest::Approx(5.0));
    CHECK(nd.tight);

    // cubic lower bound is also tight on the 3-path (value 5)
    const BoundRow& cubic = find("trace_cubic");
    CHECK(cubic.lower == doctest::Approx(5.0));
    CHECK(cubic.tight);
    CHECK(std::isinf(cubic.upper));
}

TEST_CASE("bound row CSV serialization") {
    std::vector<BoundRow> rows;
    rows.push_back(make_bound_row("demo", 1.0, 2.0, 3.0));
    rows.push_back(make_bound_row("open", 0.5, 5.0, std::numeric_limits<double>::infinity()));
    const std::string csv = bounds_to_csv(rows);
    CHECK(csv.find("bound_id,lhs,value,rhs,pass,tight") == 0);
    CHECK(csv.find("demo,1,2,3,1,0") != std::string::npos);
    CHECK(csv.find("open,0.5,5,inf,1,0") != std::string::npos);
}

TEST_SUITE_END();
