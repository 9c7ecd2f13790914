#include "doctest.h"
#include "quadrature.hpp"

#include "netrank/error.hpp"
#include "netrank/event_stats.hpp"

#include <cmath>
#include <numbers>

using namespace netrank;
using namespace netrank::event_stats;

namespace {

FrequencyMatrix total_of(double total, int n) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    m(0, 1) = total;
    return FrequencyMatrix::make(m);
}

}  // namespace

TEST_CASE("gaussian parameters") {
    SUBCASE("network A success") {
        const auto g = gaussian_params(total_of(100, 10), {2.6610, 3.0, 10});
        CHECK(g.mu == 10.0);
        CHECK(g.delta == doctest::Approx(3.7580).epsilon(1e-4));
        CHECK(g.delta == doctest::Approx(3.757).epsilon(1e-3));
    }
    SUBCASE("network A fail") {
        const auto g = gaussian_params(25.0, 10, 0.01);
        CHECK(g.mu == 2.5);
        CHECK(g.delta == doctest::Approx(250.0).epsilon(1e-12));
    }
    SUBCASE("network D fail") {
        const auto g = gaussian_params(10.0, 9, 0.7935);
        CHECK(g.mu == doctest::Approx(1.1111).epsilon(1e-4));
        CHECK(g.delta == doctest::Approx(1.4002).epsilon(1e-4));
    }
    SUBCASE("zero unpredictability is degenerate") {
        try {
            gaussian_params(10.0, 5, 0.0);
            FAIL("expected rejection");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("degenerate density concentration") == 0);
        }
    }
}

TEST_CASE("density and zero-event probability") {
    const double peak = 1.0 / (2.5 * std::sqrt(2.0 * std::numbers::pi));
    CHECK(pdf(4.0, 4.0, 2.5) == doctest::Approx(peak).epsilon(1e-15));
    CHECK(pdf(0.0, 0.0, 2.5) == doctest::Approx(peak).epsilon(1e-15));
    CHECK(prob_zero(0.0, 2.5) == doctest::Approx(peak).epsilon(1e-15));
    CHECK(pdf(0.0, 2.5, 250.0) == doctest::Approx(0.00159568933514432858).epsilon(1e-13));
    CHECK(prob_zero(1.1111, 1.4002) == doctest::Approx(0.207962366257113325).epsilon(1e-13));
    CHECK(prob_zero(1.1111, 1.4002) == pdf(0.0, 1.1111, 1.4002));
    CHECK_THROWS_AS(prob_zero(1.0, 0.0), Error);
}

TEST_CASE("expected score") {
    SUBCASE("printed decision-matrix entries") {
        CHECK(expected_score(10.0, 3.757) == doctest::Approx(10.0045).epsilon(1e-5));
        CHECK(expected_score(2.5, 250.0) == doctest::Approx(100.991).epsilon(1e-5));
        CHECK(expected_score(2.083, 1.186) == doctest::Approx(2.10188).epsilon(1e-5));
    }
    SUBCASE("closed form agrees with quadrature") {
        for (double mu = 0.0; mu <= 20.0; mu += 2.5) {
            for (double delta : {0.1, 0.7, 3.0, 17.0, 120.0, 300.0}) {
                const double closed = expected_score(mu, delta);
                const double oracle = netrank::testing::first_moment_by_quadrature(mu, delta);
                CHECK(std::abs(closed - oracle) / closed < 1e-8);
            }
        }
    }
    SUBCASE("collapses to the mean as the dispersion vanishes") {
        CHECK(expected_score(3.0, 1e-6) == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(expected_score(3.0, 1e-3) == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("never below the mean, increasing in dispersion") {
        for (double mu = 0.0; mu <= 20.0; mu += 0.5) {
            double prev = -1.0;
            for (double delta = 0.1; delta <= 300.0; delta *= 1.2) {
                const double s = expected_score(mu, delta);
                CHECK(s - mu >= -1e-12);
                CHECK(s >= mu * 0.5 * std::erfc(-(mu / delta) / std::numbers::sqrt2) - 1e-12);
                CHECK(s >= prev);
                prev = s;
            }
        }
    }
}

TEST_CASE("event distribution bundles the model") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
    m(0, 1) = 4;
    m(1, 2) = 2;
    const auto f = FrequencyMatrix::make(m);
    const auto d = event_distribution(f, {1.25, 3.0, 3});
    CHECK(d.mu == 2.0);
    CHECK(d.delta == d.mu / d.h.value);
    CHECK(d.p_zero == prob_zero(d.mu, d.delta));
    CHECK(d.score == expected_score(d.mu, d.delta));
}

TEST_CASE("pdf sampling") {
    SUBCASE("two samples hit both endpoints") {
        const auto pts = sample_pdf(2.0, 0.5, 2);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].x == 0.0);
        CHECK(pts[1].x == 4.0);
        CHECK(pts[0].density == prob_zero(2.0, 0.5));
    }
    SUBCASE("uniform grid of nonnegative densities") {
        const auto pts = sample_pdf(10.0, 3.757, 101);
        REQUIRE(pts.size() == 101);
        CHECK(pts.back().x == 10.0 + 4 * 3.757);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            CHECK(pts[k].density >= 0.0);
            CHECK(pts[k].x == doctest::Approx(k * (10.0 + 4 * 3.757) / 100).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(sample_pdf(1.0, 1.0, 0), Error);
}
