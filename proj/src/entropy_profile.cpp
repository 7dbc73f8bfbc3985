#include "lagflow/entropy_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lagflow {

EntropyProfile EntropyProfile::constant(double A0) {
    if (!(A0 > 0.0)) throw std::domain_error("EntropyProfile: A0 must be > 0");
    EntropyProfile p;
    p.kind_ = EntropyKind::constant;
    p.A0_ = A0;
    return p;
}

EntropyProfile EntropyProfile::power(double A0, double q) {
    if (!(A0 > 0.0)) throw std::domain_error("EntropyProfile: A0 must be > 0");
    if (q == 0.0) throw std::domain_error("EntropyProfile: power case requires q != 0");
    EntropyProfile p;
    p.kind_ = EntropyKind::power;
    p.A0_ = A0;
    p.q_ = q;
    return p;
}

EntropyProfile EntropyProfile::exponential(double A0, double q) {
    if (!(A0 > 0.0)) throw std::domain_error("EntropyProfile: A0 must be > 0");
    if (q == 0.0) throw std::domain_error("EntropyProfile: exponential case requires q != 0");
    EntropyProfile p;
    p.kind_ = EntropyKind::exponential;
    p.A0_ = A0;
    p.q_ = q;
    return p;
}

EntropyProfile EntropyProfile::tabulated(std::vector<double> s, std::vector<double> S) {
    if (s.size() != S.size() || s.size() < 2)
        throw std::invalid_argument("EntropyProfile: tabulated needs >= 2 matching samples");
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (!(s[i + 1] > s[i]))
            throw std::invalid_argument("EntropyProfile: tabulated s_k must be strictly increasing");
    for (double v : S)
        if (!(v > 0.0)) throw std::domain_error("EntropyProfile: tabulated S values must be > 0");

    EntropyProfile p;
    p.kind_ = EntropyKind::tabulated;
    p.ts_ = std::move(s);
    p.tS_ = std::move(S);

    // Fritsch-Carlson monotone slopes
    const std::size_t n = p.ts_.size();
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (p.tS_[i + 1] - p.tS_[i]) / (p.ts_[i + 1] - p.ts_[i]);
    p.slope_.resize(n);
    auto endpoint_slope = [](double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return m;
    };
    if (n == 2) {
        p.slope_[0] = p.slope_[1] = d[0];
    } else {
        p.slope_[0] = endpoint_slope(p.ts_[1] - p.ts_[0], p.ts_[2] - p.ts_[1], d[0], d[1]);
        p.slope_[n - 1] = endpoint_slope(p.ts_[n - 1] - p.ts_[n - 2], p.ts_[n - 2] - p.ts_[n - 3],
                                         d[n - 2], d[n - 3]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            p.slope_[i] = 0.0;
        } else {
            double w1 = 2.0 * (p.ts_[i + 1] - p.ts_[i]) + (p.ts_[i] - p.ts_[i - 1]);
            double w2 = (p.ts_[i + 1] - p.ts_[i]) + 2.0 * (p.ts_[i] - p.ts_[i - 1]);
            p.slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            p.slope_[i] = p.slope_[i + 1] = 0.0;
            continue;
        }
        double a = p.slope_[i] / d[i];
        double b = p.slope_[i + 1] / d[i];
        double r = a * a + b * b;
        if (r > 9.0) {
            double f = 3.0 / std::sqrt(r);
            p.slope_[i] = f * a * d[i];
            p.slope_[i + 1] = f * b * d[i];
        }
    }
    return p;
}

std::pair<double, double> EntropyProfile::eval(double s) const {
    switch (kind_) {
        case EntropyKind::constant:
            return {A0_, 0.0};
        case EntropyKind::power: {
            double v = A0_ * std::pow(s, q_);
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::domain_error("EntropyProfile: power profile non-positive at sample");
            return {v, q_ * v / s};
        }
        case EntropyKind::exponential: {
            double v = A0_ * std::exp(q_ * s);
            return {v, q_ * v};
        }
        case EntropyKind::tabulated: {
            if (s < ts_.front() || s > ts_.back())
                throw std::out_of_range("EntropyProfile: s outside tabulated range");
            auto it = std::upper_bound(ts_.begin(), ts_.end(), s);
            std::size_t i = (it == ts_.begin()) ? 0 : static_cast<std::size_t>(it - ts_.begin()) - 1;
            if (i + 1 >= ts_.size()) i = ts_.size() - 2;
            double h = ts_[i + 1] - ts_[i];
            double x = (s - ts_[i]) / h;
            double y0 = tS_[i], y1 = tS_[i + 1];
            double m0 = slope_[i] * h, m1 = slope_[i + 1] * h;
            // cubic Hermite basis
            double x2 = x * x, x3 = x2 * x;
            double v = (2 * x3 - 3 * x2 + 1) * y0 + (x3 - 2 * x2 + x) * m0 +
                       (-2 * x3 + 3 * x2) * y1 + (x3 - x2) * m1;
            double dv = ((6 * x2 - 6 * x) * y0 + (3 * x2 - 4 * x + 1) * m0 +
                         (-6 * x2 + 6 * x) * y1 + (3 * x2 - 2 * x) * m1) / h;
            return {v, dv};
        }
    }
    throw std::logic_error("EntropyProfile: bad kind");
}

double check_classifying_equation(const EntropyProfile& profile, double alpha, double beta,
                                  double q, const std::vector<double>& samples) {
    if (samples.empty())
        throw std::invalid_argument("check_classifying_equation: empty sample list");
    double worst = 0.0;
    for (double s : samples) {
        auto [S, dS] = profile.eval(s);
        double res = std::abs((alpha * s + beta) * dS - q * S) / std::max(1.0, std::abs(S));
        worst = std::max(worst, res);
    }
    return worst;
}

}  // namespace lagflow
