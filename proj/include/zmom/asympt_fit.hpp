#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zmom/moment_sieve.hpp"

namespace zmom {

// (u, y) = (log X_j, S(X_j)/X_j) samples extracted from a moment series.
struct FitSamples {
    std::vector<double> u;
    std::vector<double> y;
    size_t size() const { return u.size(); }
};

FitSamples samples_from_series(const MomentSeries& series);

struct PolyFit {
    std::vector<double> coeffs; // monomial basis, constant first
    double rel_rms = 0.0;       // RMS residual / RMS of y

    double eval(double u) const;
};

// Least-squares fit of y against a polynomial of the given degree in u,
// via column-pivoted Householder QR (never the normal equations).
// Throws on rank deficiency (e.g. duplicate checkpoints).
PolyFit fit_log_polynomial(const FitSamples& s, int degree);

struct SelectionThresholds {
    double within_factor_of_best = 2.0; // r_k <= factor * r_maxdeg
    double improvement_factor = 5.0;    // r_k <= r_{k-1} / factor
    double residual_floor = 1e-12;      // comparisons clamp below this
};

struct FitReport {
    bool conclusive = false;
    int selected_degree = -1;
    std::vector<double> coeffs;          // for the selected degree
    std::vector<double> residual_ladder; // rel RMS per degree 0..max_degree
    double leading_full = 0.0;           // leading coeff, all checkpoints
    double leading_half = 0.0;           // leading coeff, upper half window
    double half_window_shift = 0.0;      // |half - full| / |full|
    std::vector<double> leading_trajectory; // leading coeff over nested windows,
                                            // upper half widening to the full set
    std::optional<long long> predicted_degree;
    std::optional<bool> degree_match;
};

// Picks the smallest degree whose residual is within a factor of the
// max-degree residual and improves on the previous degree by the stated
// factor (degree -1 counts as the trivial zero model with residual 1).
// No qualifying degree is reported as inconclusive, never silently picked.
FitReport select_degree(const FitSamples& s, int max_degree,
                        const SelectionThresholds& th = {});

// Adds the prediction (alpha(l) - 1) and the match flag to a report.
void attach_prediction(FitReport& report, long long predicted_degree);

std::string fit_report_json(const FitReport& report, int l, const std::string& label);

} // namespace zmom
