#pragma once

#include <cmath>
#include <numbers>
#include <deque>
#include <vector>

namespace alphamu::detail {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int order) : nodes(order), weights(order) {
        const int half = (order + 1) / 2;
        for (int i = 0; i < half; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int j = 2; j <= order; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
    }
};

/// Rule cached per thread; callers share nothing across threads.
inline const GaussLegendre& gauss_legendre(int order) {
    thread_local std::deque<GaussLegendre> cache;
    for (const auto& rule : cache) {
        if (static_cast<int>(rule.nodes.size()) == order) return rule;
    }
    cache.emplace_back(order);
    return cache.back();
}

}  // namespace alphamu::detail
