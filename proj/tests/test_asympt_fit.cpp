#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <random>

#include "zmom/asympt_fit.hpp"
#include "zmom/verify.hpp"

using namespace zmom;

TEST_CASE("exact recovery of y = 3 + 2 log X") {
    FitSamples s;
    for (int j = 0; j < 64; ++j) {
        double x = 1e4 * std::pow(400.0, j / 63.0);
        s.u.push_back(std::log(x));
        s.y.push_back(3.0 + 2.0 * std::log(x));
    }
    PolyFit fit = fit_log_polynomial(s, 1);
    CHECK(fit.coeffs[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(fit.coeffs[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.rel_rms < 1e-12);
}

TEST_CASE("constant data selects degree 0") {
    FitSamples s;
    for (int j = 0; j < 64; ++j) {
        double x = 100.0 * std::pow(100.0, j / 63.0);
        s.u.push_back(std::log(x));
        s.y.push_back(1.0);
    }
    FitReport rep = select_degree(s, 5);
    REQUIRE(rep.conclusive);
    CHECK(rep.selected_degree == 0);
    CHECK(rep.coeffs[0] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("residual ladder is non-increasing") {
    FitSamples s;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    for (int j = 0; j < 64; ++j) {
        double u = 7.0 + 0.1 * j;
        s.u.push_back(u);
        s.y.push_back(1.0 + 0.5 * u + 0.25 * u * u + noise(rng));
    }
    FitReport rep = select_degree(s, 5);
    for (size_t i = 1; i < rep.residual_ladder.size(); ++i)
        CHECK(rep.residual_ladder[i] <= rep.residual_ladder[i - 1] * (1 + 1e-9));
    CHECK(rep.conclusive);
    CHECK(rep.selected_degree == 2);
}

TEST_CASE("fit guardrails") {
    FitSamples s;
    s.u = {1.0, 2.0, 3.0};
    s.y = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fit_log_polynomial(s, 2), std::invalid_argument); // needs degree+2 points
    CHECK_THROWS_AS(select_degree(s, 0), std::invalid_argument);
}

TEST_CASE("samples from series divide exactly") {
    MomentSeries series;
    series.l = 1;
    series.points = {{4, u128(8)}, {16, u128(64)}};
    FitSamples s = samples_from_series(series);
    CHECK(s.y[0] == doctest::Approx(2.0));
    CHECK(s.y[1] == doctest::Approx(4.0));
    CHECK(s.u[1] == doctest::Approx(std::log(16.0)));
}

TEST_CASE("fit verify suite passes") {
    for (const auto& r : verify_fit_suite(31337)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("fit report JSON carries prediction") {
    FitSamples s;
    for (int j = 0; j < 32; ++j) {
        double x = 1e3 * std::pow(1e3, j / 31.0);
        s.u.push_back(std::log(x));
        s.y.push_back(2.0 + 0.7 * std::log(x));
    }
    FitReport rep = select_degree(s, 4);
    attach_prediction(rep, 1);
    REQUIRE(rep.degree_match.has_value());
    CHECK(*rep.degree_match);
    std::string j = fit_report_json(rep, 2, "test");
    CHECK(j.find("\"predicted_degree\": 1") != std::string::npos);
    CHECK(j.find("\"degree_match\": true") != std::string::npos);
}
