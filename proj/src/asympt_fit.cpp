#include "zmom/asympt_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "json.hpp"

namespace zmom {

FitSamples samples_from_series(const MomentSeries& series) {
    FitSamples s;
    s.u.reserve(series.points.size());
    s.y.reserve(series.points.size());
    for (const auto& [x, sum] : series.points) {
        if (x == 0) throw std::invalid_argument("checkpoint at X=0");
        s.u.push_back(std::log(double(x)));
        // S fits a double exactly through ~2^53; beyond that the fit is
        // dominated by model error anyway
        long double sl = 0;
        u128 v = sum;
        long double scale = 1;
        while (v > 0) {
            sl += (long double)(uint64_t)(v % 1000000000ULL) * scale;
            v /= 1000000000ULL;
            scale *= 1e9L;
        }
        s.y.push_back(double(sl / (long double)x));
    }
    return s;
}

double PolyFit::eval(double u) const {
    double acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
    return acc;
}

PolyFit fit_log_polynomial(const FitSamples& s, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    const int n = int(s.size());
    if (n < degree + 2)
        throw std::invalid_argument("need at least degree+2 checkpoints, have " +
                                    std::to_string(n));

    Eigen::MatrixXd A(n, degree + 1);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        double f = 1.0;
        for (int j = 0; j <= degree; ++j) {
            A(i, j) = f;
            f *= s.u[i];
        }
        b(i) = s.y[i];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < degree + 1)
        throw std::runtime_error("rank-deficient fit (duplicate checkpoints?): rank " +
                                 std::to_string(qr.rank()) + " < " + std::to_string(degree + 1));
    Eigen::VectorXd c = qr.solve(b);

    PolyFit fit;
    fit.coeffs.assign(c.data(), c.data() + degree + 1);
    double ss_res = 0, ss_y = 0;
    for (int i = 0; i < n; ++i) {
        double r = fit.eval(s.u[i]) - s.y[i];
        ss_res += r * r;
        ss_y += s.y[i] * s.y[i];
    }
    if (ss_y == 0) throw std::invalid_argument("all-zero sample values");
    fit.rel_rms = std::sqrt(ss_res / ss_y);
    return fit;
}

FitReport select_degree(const FitSamples& s, int max_degree, const SelectionThresholds& th) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    FitReport rep;
    std::vector<PolyFit> fits;
    for (int k = 0; k <= max_degree; ++k) {
        fits.push_back(fit_log_polynomial(s, k));
        rep.residual_ladder.push_back(fits.back().rel_rms);
    }
    auto clamped = [&](double r) { return std::max(r, th.residual_floor); };
    double best = clamped(rep.residual_ladder[max_degree]);

    // the degree -1 "model" is the zero polynomial with relative residual 1;
    // a qualifying degree must beat it by the improvement factor and sit
    // within a factor of the deepest fit
    for (int k = 0; k <= max_degree; ++k) {
        double rk = clamped(rep.residual_ladder[k]);
        if (rk <= th.within_factor_of_best * best && rk <= 1.0 / th.improvement_factor) {
            rep.conclusive = true;
            rep.selected_degree = k;
            rep.coeffs = fits[k].coeffs;
            break;
        }
    }
    if (!rep.conclusive) return rep;

    // leading coefficient over nested windows, upper half widening to full
    rep.leading_full = rep.coeffs.back();
    size_t half = s.size() / 2;
    for (size_t start : {half, half / 2, size_t(0)}) {
        FitSamples w;
        w.u.assign(s.u.begin() + start, s.u.end());
        w.y.assign(s.y.begin() + start, s.y.end());
        if (int(w.size()) < rep.selected_degree + 2) continue;
        PolyFit wf = fit_log_polynomial(w, rep.selected_degree);
        rep.leading_trajectory.push_back(wf.coeffs.back());
        if (start == half) rep.leading_half = wf.coeffs.back();
    }
    if (rep.leading_full != 0 && !rep.leading_trajectory.empty())
        rep.half_window_shift =
            std::abs(rep.leading_half - rep.leading_full) / std::abs(rep.leading_full);
    return rep;
}

void attach_prediction(FitReport& report, long long predicted_degree) {
    report.predicted_degree = predicted_degree;
    report.degree_match = report.conclusive && report.selected_degree == predicted_degree;
}

std::string fit_report_json(const FitReport& report, int l, const std::string& label) {
    nlohmann::ordered_json j;
    j["series"] = label;
    j["l"] = l;
    j["conclusive"] = report.conclusive;
    if (report.conclusive) {
        j["selected_degree"] = report.selected_degree;
        j["coefficients"] = report.coeffs;
        j["leading_coefficient"] = {{"full_window", report.leading_full},
                                    {"upper_half", report.leading_half},
                                    {"relative_shift", report.half_window_shift},
                                    {"nested_window_trajectory", report.leading_trajectory}};
    }
    j["residual_ladder"] = report.residual_ladder;
    if (report.predicted_degree) {
        j["predicted_degree"] = *report.predicted_degree;
        j["degree_match"] = *report.degree_match;
    }
    j["note"] = "error-term exponents are not estimated from residuals; "
                "finite-X noise swamps them at desk scale";
    return j.dump(2);
}

} // namespace zmom
