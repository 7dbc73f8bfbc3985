#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

namespace lagflow {

enum class EntropyKind { constant, power, exponential, tabulated };

/// Entropy function S(s) along the mass coordinate.  The closed-form
/// variants are the classification cases S = A0, S = A0 s^q, S = A0 e^{qs};
/// the tabulated variant interpolates sample points with a monotone
/// piecewise cubic so that the derivative stays continuous.
class EntropyProfile {
public:
    static EntropyProfile constant(double A0);
    static EntropyProfile power(double A0, double q);
    static EntropyProfile exponential(double A0, double q);
    static EntropyProfile tabulated(std::vector<double> s, std::vector<double> S);

    EntropyKind kind() const { return kind_; }
    double A0() const { return A0_; }
    double q() const { return q_; }

    /// Value and derivative (S, dS/ds).
    std::pair<double, double> eval(double s) const;

    double value(double s) const { return eval(s).first; }
    double derivative(double s) const { return eval(s).second; }

private:
    EntropyProfile() = default;

    EntropyKind kind_ = EntropyKind::constant;
    double A0_ = 1.0;
    double q_ = 0.0;

    // tabulated data with per-interval monotone cubic slopes
    std::vector<double> ts_;
    std::vector<double> tS_;
    std::vector<double> slope_;
};

/// Max over `samples` of |(alpha s + beta) S'(s) - q S(s)| / max(1, |S(s)|).
/// Zero exactly on the closed-form classification families.
double check_classifying_equation(const EntropyProfile& profile, double alpha, double beta,
                                  double q, const std::vector<double>& samples);

}  // namespace lagflow
