#pragma once

// Scalar special functions used throughout: complex and real log-gamma,
// digamma, the regularized lower incomplete gamma, and compensated summation.

#include <alphamu/error.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <math.h>
#include <numbers>

namespace alphamu {

using complex = std::complex<double>;

/// Neumaier's compensated summation. Order-dependent but deterministic.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// log|Γ(x)| together with the sign of Γ(x) for real x.
struct SignedLog {
    double log_abs;
    int sign;
};

namespace detail {

inline constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640562;
inline constexpr double kLogPi = 1.1447298858494001741434273513530587;

// B_{2k} / (2k (2k-1)), k = 1..10.
inline constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,         1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,    1.0 / 156.0,      -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

inline complex stirling_log_gamma(complex z) {
    const complex inv = 1.0 / z;
    const complex inv2 = inv * inv;
    complex series = 0.0;
    complex power = inv;
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kLogSqrtTwoPi + series;
}

// log(1 + u) for complex u without cancellation at small |u|.
inline complex log1p(complex u) {
    const double re = u.real();
    const double im = u.imag();
    return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace detail

/// Signed log-gamma for real arguments; negative non-integers go through the
/// reflection formula inside lgamma_r.
inline SignedLog log_gamma_signed(double x) {
    if (detail::is_nonpositive_integer(x)) {
        throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(x));
    }
    int sign = 1;
    const double v = ::lgamma_r(x, &sign);
    return {v, sign};
}

/// log Γ(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0)) {
        const SignedLog s = log_gamma_signed(x);
        if (s.sign < 0) throw DomainError("log_gamma: Γ(x) < 0 for x = " + std::to_string(x));
        return s.log_abs;
    }
    int sign = 1;
    return ::lgamma_r(x, &sign);
}

/// Principal branch of log Γ(s): analytic off the negative real axis, real on
/// the positive real axis, satisfying log Γ(s+1) = log Γ(s) + log s.
inline complex log_gamma(complex s) {
    const double x = s.real();
    const double y = s.imag();
    if (y == 0.0) {
        if (detail::is_nonpositive_integer(x)) {
            throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(x));
        }
        if (x > 0.0) return {log_gamma(x), 0.0};
    }
    if (x < 0.5) {
        if (y < 0.0) return std::conj(log_gamma(std::conj(s)));
        // Upper half-plane reflection with log sin(πs) continued analytically:
        // log sin(πs) = -log 2 + πy + i(π/2 - πx) + log(1 - e^{2πis}).
        const double pi = std::numbers::pi;
        const double decay = std::exp(-2.0 * pi * y);
        const complex w = decay * complex(std::cos(2.0 * pi * x), std::sin(2.0 * pi * x));
        const complex log_sin = complex(-std::numbers::ln2 + pi * y, 0.5 * pi - pi * x) + detail::log1p(-w);
        return detail::kLogPi - log_sin - log_gamma(1.0 - s);
    }
    complex z = s;
    complex shift = 0.0;
    while (std::abs(z) < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::stirling_log_gamma(z) - shift;
}

/// Digamma ψ(x) for real x (not a non-positive integer).
inline double digamma(double x) {
    if (detail::is_nonpositive_integer(x)) throw PoleError("digamma: pole at " + std::to_string(x));
    if (x < 0.0) return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    const double tail =
        inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
    return acc + std::log(x) - 0.5 / x - tail;
}

/// Regularized lower incomplete gamma P(shape, y) = γ(shape, y) / Γ(shape).
/// Series below y = shape + 1, Lentz continued fraction for the complement above.
inline double regularized_lower_gamma(double shape, double y) {
    detail::require_positive(shape, "regularized_lower_gamma: shape");
    if (!(y >= 0.0)) throw DomainError("regularized_lower_gamma: y must be non-negative");
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) return 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_iter = 100000;
    const double log_front = -y + shape * std::log(y) - log_gamma(shape);

    if (y < shape + 1.0) {
        double ap = shape;
        double term = 1.0 / shape;
        double sum = term;
        for (int i = 0; i < max_iter; ++i) {
            ap += 1.0;
            term *= y / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps) return std::min(1.0, sum * std::exp(log_front));
        }
        throw NumericalError("regularized_lower_gamma: series did not converge");
    }

    constexpr double tiny = 1e-300;
    double b = y + 1.0 - shape;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iter; ++i) {
        const double an = -i * (i - shape);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return std::max(0.0, 1.0 - std::exp(log_front) * h);
    }
    throw NumericalError("regularized_lower_gamma: continued fraction did not converge");
}

}  // namespace alphamu
