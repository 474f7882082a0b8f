#include <doctest.h>

#include <cmath>
#include <random>

#include "tsd/kernels.hpp"
#include "tsd/metric.hpp"
#include "tsd/poisson.hpp"
#include "tsd/spike.hpp"

using namespace tsd;

TEST_CASE("TimeGrid rejects bad parameters") {
    CHECK_THROWS(TimeGrid(0.0));
    CHECK_THROWS(TimeGrid(100.0, -0.1));
    CHECK_THROWS(TimeGrid(100.05, 0.1));
    TimeGrid g(100.0);
    CHECK(g.n_ticks() == 1000);
    CHECK(g.tick_of(99.9) == 999);
}

TEST_CASE("SpikeTrain enforces strict ordering") {
    CHECK_THROWS(SpikeTrain({10.0, 10.0}));
    CHECK_THROWS(SpikeTrain({10.0, 5.0}));
    CHECK_THROWS(SpikeTrain({-1.0}));
    SpikeTrain s({1.0, 2.5, 7.0});
    CHECK(s.contains(2.5));
    CHECK(!s.contains(2.4));
    CHECK(s.in_window(1.0, 7.0) == std::vector<double>{2.5, 7.0});
}

TEST_CASE("poisson: zero rate gives empty train") {
    CHECK(generate_poisson_train(0.0, TimeGrid(1000.0), 42).empty());
}

TEST_CASE("poisson: same seed gives identical trains") {
    TimeGrid g(500.0);
    CHECK(generate_poisson_train(50.0, g, 7).times() ==
          generate_poisson_train(50.0, g, 7).times());
}

TEST_CASE("poisson: rate too high for grid is rejected") {
    CHECK_THROWS(generate_poisson_train(20000.0, TimeGrid(100.0), 1));
}

TEST_CASE("poisson: mean count over 1000 seeds near the nominal rate") {
    TimeGrid g(1000.0);
    double total = 0.0;
    for (std::uint64_t s = 0; s < 1000; ++s)
        total += static_cast<double>(generate_poisson_train(100.0, g, mix_seed(1234, s)).count());
    const double mean = total / 1000.0;
    CHECK(mean > 95.0);
    CHECK(mean < 105.0);
    // 5% band (binomial sd of the mean is ~0.3 spikes here)
    CHECK(std::abs(mean - 100.0) < 5.0);
}

TEST_CASE("kernel_eval: reference values") {
    KernelSpec laplace(KernelShape::Laplace, 7.0);
    CHECK(kernel_eval(laplace, 0.0) == doctest::Approx(1.0));
    CHECK(kernel_eval(laplace, 7.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    KernelSpec alpha(KernelShape::Alpha, 7.0);
    CHECK(kernel_eval(alpha, 7.0) == doctest::Approx(1.0));  // peak at s = tau
    for (auto shape : {KernelShape::Laplace, KernelShape::Exponential, KernelShape::Alpha,
                       KernelShape::Gaussian})
        CHECK(kernel_eval(KernelSpec(shape, 7.0), -1.0) == 0.0);
}

TEST_CASE("kernels are non-negative and causal") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const double tau = 0.5 + 20.0 * u01(rng());
        const double s = -50.0 + 100.0 * u01(rng());
        for (auto shape : {KernelShape::Laplace, KernelShape::Exponential, KernelShape::Alpha,
                           KernelShape::Gaussian}) {
            const double v = kernel_eval(KernelSpec(shape, tau), s);
            CHECK(v >= 0.0);
            if (s < 0.0) CHECK(v == 0.0);
        }
    }
}

TEST_CASE("filter_train: empty train gives zero vector") {
    TimeGrid g(100.0);
    for (double v : filter_train(SpikeTrain{}, 2.0, g)) CHECK(v == 0.0);
}

TEST_CASE("filter_train: single spike peaks at its own tick with value 1") {
    TimeGrid g(100.0);
    auto v = filter_train(SpikeTrain({50.0}), 2.0, g);
    CHECK(v[500] == doctest::Approx(1.0));
    for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] <= v[500] + 1e-12);
}

TEST_CASE("filter_train: two spikes one sigma apart vs direct summation") {
    TimeGrid g(100.0);
    const double sigma = 2.0;
    SpikeTrain s({50.0, 52.0});
    auto v = filter_train(s, sigma, g);
    // direct summation oracle, no truncation
    for (std::int64_t k = 0; k <= g.n_ticks(); ++k) {
        double expect = 0.0;
        for (double t : s.times()) {
            const double d = g.time_of(k) - t;
            if (std::abs(d) <= 4.0 * sigma) expect += std::exp(-d * d / (2.0 * sigma * sigma));
        }
        CHECK(v[static_cast<std::size_t>(k)] == doctest::Approx(expect).epsilon(1e-12));
    }
    const double mid = v[510];  // 51 ms
    CHECK(mid > 1.0);
    CHECK(mid < 2.0);
}

TEST_CASE("filter_train is linear over disjoint trains") {
    TimeGrid g(200.0);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = generate_poisson_train(30.0, g, rng());
        std::vector<double> b_times;
        auto b_src = generate_poisson_train(30.0, g, rng());
        for (double t : b_src.times())
            if (!a.contains(t)) b_times.push_back(t);
        SpikeTrain b(b_times);
        SpikeTrain both(merge_event_times(a, b));
        auto va = filter_train(a, 2.0, g);
        auto vb = filter_train(b, 2.0, g);
        auto vab = filter_train(both, 2.0, g);
        for (std::size_t k = 0; k < va.size(); ++k)
            CHECK(vab[k] == doctest::Approx(va[k] + vb[k]).epsilon(1e-12));
    }
}

TEST_CASE("correlation_c: identical trains give 1") {
    TimeGrid g(100.0);
    SpikeTrain s({10.0, 20.0, 30.0});
    CHECK(correlation_c(s, s, 2.0, g) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("correlation_c: empty-train conventions") {
    TimeGrid g(100.0);
    CHECK(correlation_c(SpikeTrain{}, SpikeTrain{}, 2.0, g) == 1.0);
    CHECK(correlation_c(SpikeTrain{}, SpikeTrain({10.0}), 2.0, g) == 0.0);
    CHECK(correlation_c(SpikeTrain({10.0}), SpikeTrain{}, 2.0, g) == 0.0);
}

TEST_CASE("correlation_c: monotone in shift") {
    TimeGrid g(100.0);
    SpikeTrain desired({10.0});
    const double c1 = correlation_c(SpikeTrain({11.0}), desired, 2.0, g);
    const double c2 = correlation_c(SpikeTrain({12.0}), desired, 2.0, g);
    CHECK(c2 > 0.0);
    CHECK(c2 < 1.0);
    CHECK(c2 < c1);
}

TEST_CASE("correlation_c: symmetric and within [0,1]") {
    TimeGrid g(300.0);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = generate_poisson_train(40.0, g, rng());
        auto d = generate_poisson_train(40.0, g, rng());
        const double c = correlation_c(a, d, 2.0, g);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(c == doctest::Approx(correlation_c(d, a, 2.0, g)).epsilon(1e-12));
    }
}

TEST_CASE("correlation_c: invariant under common shift away from boundaries") {
    TimeGrid g(200.0);
    SpikeTrain a({40.0, 55.0, 90.0});
    SpikeTrain d({42.0, 60.0, 88.0});
    const double c0 = correlation_c(a, d, 2.0, g);
    auto shift = [](const SpikeTrain& s, double by) {
        std::vector<double> t;
        for (double x : s.times()) t.push_back(x + by);
        return SpikeTrain(t);
    };
    for (double by : {10.0, 25.0, 50.0})
        CHECK(correlation_c(shift(a, by), shift(d, by), 2.0, g) ==
              doctest::Approx(c0).epsilon(1e-9));
}
