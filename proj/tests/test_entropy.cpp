#include "doctest.h"

#include "netrank/entropy.hpp"
#include "netrank/error.hpp"

#include <cmath>
#include <random>

using namespace netrank;
using namespace netrank::entropy;

namespace {

Eigen::VectorXd random_simplex(std::mt19937_64& rng, int n) {
    std::exponential_distribution<double> e(1.0);
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i) p(i) = e(rng);
    return p / p.sum();
}

}  // namespace

TEST_CASE("shannon entropy") {
    CHECK(shannon(Eigen::Vector4d::Constant(0.25), 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(shannon(Eigen::Vector3d(0.0, 1.0, 0.0), 2.0) == 0.0);
    CHECK(shannon(Eigen::Vector3d(0.5, 0.25, 0.25), std::exp(1.0)) ==
          doctest::Approx(1.03972077083991796).epsilon(1e-14));
    CHECK_THROWS_AS(shannon(Eigen::Vector2d(0.5, 0.6), 2.0), Error);
    CHECK_THROWS_AS(shannon(Eigen::Vector2d(1.5, -0.5), 2.0), Error);
}

TEST_CASE("renyi unpredictability") {
    SUBCASE("uniform over N at order 3 is log2 N") {
        for (int n : {2, 4, 8, 16}) {
            const auto h = renyi_unpredictability(Eigen::VectorXd::Constant(n, 1.0 / n), 3.0);
            CHECK(h.value == std::log2(static_cast<double>(n)));
            CHECK(h.alpha == 3.0);
            CHECK(h.n == n);
        }
    }
    SUBCASE("one-hot is zero") {
        CHECK(renyi_unpredictability(Eigen::Vector4d(0, 0, 1, 0), 3.0).value == 0.0);
    }
    SUBCASE("order near 1 approaches shannon in bits") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 50; ++t) {
            const auto p = random_simplex(rng, 2 + t % 15);
            CHECK(std::abs(renyi_unpredictability(p, 1.0 + 1e-6).value - shannon(p, 2.0)) < 1e-4);
        }
    }
    SUBCASE("order 1 is rejected") {
        try {
            renyi_unpredictability(Eigen::Vector2d(0.5, 0.5), 1.0);
            FAIL("expected rejection");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("differ from 1") != std::string::npos);
        }
    }
    SUBCASE("bounded by log2 n and maximized by the uniform distribution") {
        std::mt19937_64 rng(19);
        for (int t = 0; t < 200; ++t) {
            const int n = 2 + t % 12;
            const auto p = random_simplex(rng, n);
            const double h = renyi_unpredictability(p, 3.0).value;
            const double top = renyi_unpredictability(Eigen::VectorXd::Constant(n, 1.0 / n), 3.0).value;
            CHECK(h >= 0.0);
            CHECK(h <= top + 1e-12);
        }
    }
    SUBCASE("invariant under permutation") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 50; ++t) {
            Eigen::VectorXd p = random_simplex(rng, 7);
            const double h = renyi_unpredictability(p, 3.0).value;
            std::shuffle(p.data(), p.data() + p.size(), rng);
            CHECK(renyi_unpredictability(p, 3.0).value == doctest::Approx(h).epsilon(1e-13));
        }
    }
    SUBCASE("mixing toward uniform never decreases it") {
        std::mt19937_64 rng(29);
        for (int t = 0; t < 50; ++t) {
            const int n = 3 + t % 9;
            const auto p = random_simplex(rng, n);
            const Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / n);
            double prev = renyi_unpredictability(p, 3.0).value;
            for (double mix = 0.05; mix <= 1.0 + 1e-12; mix += 0.05) {
                const Eigen::VectorXd q = (1.0 - mix) * p + mix * u;
                const double h = renyi_unpredictability(q / q.sum(), 3.0).value;
                CHECK(h >= prev - 1e-12);
                prev = h;
            }
        }
    }
}
