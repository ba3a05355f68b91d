#pragma once

// Monte Carlo estimators for the ratio statistics and the applications.
//
// Trials are cut into fixed-size chunks; chunk i always draws from the stream
// (seed, stream_base * 2^32 + i) and partial results are reduced in chunk
// order, so an estimate depends only on (seed, stream_base, trials) and not
// on how many workers ran it.

#include <alphamu/apps.hpp>
#include <alphamu/dists.hpp>
#include <alphamu/error.hpp>
#include <alphamu/ratio.hpp>
#include <alphamu/rng.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace alphamu {

struct McConfig {
    std::uint64_t trials = 10'000'000;
    std::uint64_t seed = 20240521;
    unsigned worker_count = std::max(1u, std::thread::hardware_concurrency());
    /// Selects an independent family of chunk streams for the same seed.
    std::uint64_t stream_base = 0;
    int histogram_bins = 200;
    double histogram_lo = 1e-3;
    double histogram_hi = 1e3;

    static constexpr std::uint64_t chunk_size = 65536;

    void validate() const {
        detail::require(trials >= 10'000, "McConfig: trials must be >= 1e4");
        detail::require(worker_count >= 1, "McConfig: worker_count must be >= 1");
        detail::require(histogram_bins >= 1, "McConfig: histogram_bins must be >= 1");
        detail::require(histogram_lo > 0.0 && histogram_lo < histogram_hi, "McConfig: need 0 < histogram_lo < histogram_hi");
    }

    McConfig with_stream(std::uint64_t base) const {
        McConfig c = *this;
        c.stream_base = base;
        return c;
    }
};

struct McReport {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::optional<double> ks_statistic;
    std::uint64_t n_effective = 0;

    /// |estimate - value| <= sigmas * standard_error
    bool covers(double value, double sigmas = 3.0) const { return std::abs(estimate - value) <= sigmas * standard_error; }

    /// Binomial score check for a probability estimate: the standard error is
    /// taken at the hypothesised p, so zero observed events still test sensibly.
    double probability_se(double p) const {
        p = std::clamp(p, 0.0, 1.0);
        return std::sqrt(p * (1.0 - p) / static_cast<double>(n_effective));
    }
    bool covers_probability(double p, double sigmas = 3.0) const {
        return std::abs(estimate - p) <= sigmas * probability_se(p);
    }
};

namespace detail {

struct MomentAcc {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    void merge(const MomentAcc& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }
};

// Pairwise reduction of per-chunk partials, fixed tree shape.
template <class Acc>
Acc reduce_pairwise(std::vector<Acc>& parts) {
    if (parts.empty()) return Acc{};
    for (std::size_t width = 1; width < parts.size(); width *= 2) {
        for (std::size_t i = 0; i + width < parts.size(); i += 2 * width) parts[i].merge(parts[i + width]);
    }
    return parts.front();
}

/// Runs body(rng, count, acc) for every chunk, in parallel, and returns the
/// per-chunk partials in chunk order.
template <class Acc, class Body>
std::vector<Acc> run_chunks(const McConfig& cfg, Body&& body) {
    cfg.validate();
    const std::uint64_t nchunks = (cfg.trials + McConfig::chunk_size - 1) / McConfig::chunk_size;
    std::vector<Acc> parts(nchunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t i = next++; i < nchunks; i = next++) {
            const std::uint64_t begin = i * McConfig::chunk_size;
            const std::uint64_t count = std::min(McConfig::chunk_size, cfg.trials - begin);
            Xoshiro256 rng(cfg.seed, (cfg.stream_base << 32) + i);
            body(rng, count, parts[i]);
        }
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(cfg.worker_count, nchunks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return parts;
}

template <class Draw>
McReport estimate_mean(const McConfig& cfg, Draw&& draw) {
    auto parts = run_chunks<MomentAcc>(cfg, [&](Xoshiro256& rng, std::uint64_t count, MomentAcc& acc) {
        for (std::uint64_t t = 0; t < count; ++t) acc.add(draw(rng));
    });
    const MomentAcc total = reduce_pairwise(parts);
    const double n = static_cast<double>(total.n);
    const double mean = total.sum / n;
    const double var = std::max(0.0, total.sum_sq / n - mean * mean) * n / (n - 1.0);
    return {mean, std::sqrt(var / n), std::nullopt, total.n};
}

template <class Event>
McReport estimate_probability(const McConfig& cfg, Event&& event) {
    McReport r = estimate_mean(cfg, [&](Xoshiro256& rng) { return event(rng) ? 1.0 : 0.0; });
    const double p = r.estimate;
    r.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(r.n_effective));
    return r;
}

class RatioDraw {
public:
    explicit RatioDraw(const RatioPair& pair) : num_(pair.num()), den_(pair.den()) {}
    double operator()(Xoshiro256& rng) const {
        const double y1 = num_.snr(rng);
        return y1 / den_.snr(rng);
    }

private:
    AlphaMuSampler num_;
    AlphaMuSampler den_;
};

}  // namespace detail

inline McReport estimate_ratio_cdf(const RatioPair& pair, double x, const McConfig& cfg) {
    const detail::RatioDraw draw(pair);
    return detail::estimate_probability(cfg, [&](Xoshiro256& rng) { return draw(rng) <= x; });
}

/// Pr{X <= x} at every x of `xs` from one common sample.
inline std::vector<McReport> estimate_ratio_cdf_grid(const RatioPair& pair, const std::vector<double>& xs,
                                                     const McConfig& cfg) {
    detail::require(std::is_sorted(xs.begin(), xs.end()), "estimate_ratio_cdf_grid: xs must be sorted");
    struct Counts {
        std::vector<std::uint64_t> c;
        void merge(const Counts& o) {
            if (c.empty()) c.assign(o.c.size(), 0);
            for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        }
    };
    const detail::RatioDraw draw(pair);
    auto parts = detail::run_chunks<Counts>(cfg, [&](Xoshiro256& rng, std::uint64_t count, Counts& acc) {
        acc.c.assign(xs.size() + 1, 0);
        for (std::uint64_t t = 0; t < count; ++t) {
            ++acc.c[static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), draw(rng)) - xs.begin())];
        }
    });
    const auto counts = detail::reduce_pairwise(parts).c;
    std::vector<McReport> out;
    std::uint64_t below = 0;
    const double n = static_cast<double>(cfg.trials);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        below += counts[i];
        const double p = static_cast<double>(below) / n;
        out.push_back({p, std::sqrt(p * (1.0 - p) / n), std::nullopt, cfg.trials});
    }
    return out;
}

inline McReport estimate_ratio_moment(const RatioPair& pair, double n, const McConfig& cfg) {
    const detail::RatioDraw draw(pair);
    return detail::estimate_mean(cfg, [&](Xoshiro256& rng) { return std::pow(draw(rng), n); });
}

inline McReport estimate_ratio_mgf(const RatioPair& pair, double s, const McConfig& cfg) {
    const detail::RatioDraw draw(pair);
    return detail::estimate_mean(cfg, [&](Xoshiro256& rng) { return std::exp(-s * draw(rng)); });
}

/// All cfg.trials ratio samples, in chunk order.
inline std::vector<double> sample_ratio(const RatioPair& pair, const McConfig& cfg) {
    const detail::RatioDraw draw(pair);
    auto parts = detail::run_chunks<std::vector<double>>(cfg, [&](Xoshiro256& rng, std::uint64_t count, std::vector<double>& out) {
        out.resize(count);
        for (auto& v : out) v = draw(rng);
    });
    std::vector<double> all;
    all.reserve(cfg.trials);
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

/// Log-spaced histogram of the ratio over [histogram_lo, histogram_hi].
struct Histogram {
    std::vector<double> edges;
    std::vector<std::uint64_t> counts;
    std::uint64_t n = 0;

    double probability(std::size_t i) const { return static_cast<double>(counts[i]) / static_cast<double>(n); }
    double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
    double density(std::size_t i) const { return probability(i) / width(i); }
    double density_se(std::size_t i) const {
        const double p = probability(i);
        return std::sqrt(p * (1.0 - p) / static_cast<double>(n)) / width(i);
    }
};

inline Histogram estimate_ratio_histogram(const RatioPair& pair, const McConfig& cfg) {
    cfg.validate();
    const int bins = cfg.histogram_bins;
    const double llo = std::log(cfg.histogram_lo);
    const double step = (std::log(cfg.histogram_hi) - llo) / bins;
    Histogram h;
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) h.edges[i] = std::exp(llo + i * step);
    h.edges.front() = cfg.histogram_lo;
    h.edges.back() = cfg.histogram_hi;

    struct Counts {
        std::vector<std::uint64_t> c;
        void merge(const Counts& o) {
            if (c.empty()) c.assign(o.c.size(), 0);
            for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        }
    };
    const detail::RatioDraw draw(pair);
    auto parts = detail::run_chunks<Counts>(cfg, [&](Xoshiro256& rng, std::uint64_t count, Counts& acc) {
        acc.c.assign(bins, 0);
        for (std::uint64_t t = 0; t < count; ++t) {
            const double x = draw(rng);
            if (!(x >= cfg.histogram_lo && x < cfg.histogram_hi)) continue;
            auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
            ++acc.c[static_cast<std::size_t>(it - h.edges.begin()) - 1];
        }
    });
    h.counts = detail::reduce_pairwise(parts).c;
    h.n = cfg.trials;
    return h;
}

/// Exact one-sample KS distance sup |F_n - F| (F evaluated at every sample).
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    detail::require(!samples.empty(), "ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

/// Upper bound on the KS distance using F at `grid_points` sample quantiles
/// only: between consecutive grid samples both F_n and F are monotone, which
/// bounds the gap on each interval.
inline double ks_statistic_bound(std::vector<double> samples, const std::function<double(double)>& cdf,
                                 std::size_t grid_points = 4096) {
    detail::require(samples.size() >= 2, "ks_statistic_bound: need at least two samples");
    detail::require(grid_points >= 2, "ks_statistic_bound: need at least two grid points");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    const double nd = static_cast<double>(n);
    grid_points = std::min(grid_points, n);
    std::vector<std::size_t> idx(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j) idx[j] = j * (n - 1) / (grid_points - 1);

    // Fn(x_j) = (#samples <= x_j) / n, Fn(x_j^-) = (#samples < x_j) / n
    auto count_le = [&](std::size_t i) {
        return static_cast<double>(std::upper_bound(samples.begin(), samples.end(), samples[i]) - samples.begin());
    };
    auto count_lt = [&](std::size_t i) {
        return static_cast<double>(std::lower_bound(samples.begin(), samples.end(), samples[i]) - samples.begin());
    };

    double prev_f = cdf(samples[idx[0]]);
    double d = std::max(prev_f, count_le(idx[0]) / nd - prev_f);  // below x_0 F_n = 0
    for (std::size_t j = 1; j < grid_points; ++j) {
        const double f = cdf(samples[idx[j]]);
        const double fn_prev = count_le(idx[j - 1]) / nd;
        const double fn_left = count_lt(idx[j]) / nd;
        d = std::max({d, fn_left - prev_f, f - fn_prev, std::abs(count_le(idx[j]) / nd - f)});
        prev_f = f;
    }
    return std::max(d, 1.0 - prev_f);  // above the largest sample F_n = 1
}

/// Asymptotic 1% critical value of the one-sample KS distance.
inline double ks_critical_1pct(std::uint64_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

/// Exact secrecy outage Pr{(1+γB)/(1+γE) < 2^R}.
inline McReport estimate_sop_exact(const SecrecyScenario& sc, const McConfig& cfg) {
    sc.validate();
    const AlphaMuSampler b(sc.main);
    const AlphaMuSampler e(sc.eve);
    const double tau = sc.tau1();
    return detail::estimate_probability(cfg, [&](Xoshiro256& rng) {
        const double gb = b.snr(rng);
        const double ge = e.snr(rng);
        return (1.0 + gb) < tau * (1.0 + ge);
    });
}

/// Pr{γB/γE < τ1}, the event behind the analytic lower bound.
inline McReport estimate_sop_bound(const SecrecyScenario& sc, const McConfig& cfg) {
    sc.validate();
    const AlphaMuSampler b(sc.main);
    const AlphaMuSampler e(sc.eve);
    const double tau = sc.tau1();
    return detail::estimate_probability(cfg, [&](Xoshiro256& rng) {
        const double gb = b.snr(rng);
        return gb < tau * e.snr(rng);
    });
}

/// Pr{min(γ_SR, γ_RD) < τ2} with γ_SR = g_SR Ῡ_I / g_SP and γ_RD = g_RD Ῡ_I / g_RP.
inline McReport estimate_cr_outage(const CognitiveScenario& sc, const McConfig& cfg) {
    sc.validate();
    const AlphaMuSampler sr(sc.sr), sp(sc.sp), rd(sc.rd), rp(sc.rp);
    const double i = sc.interference_snr;
    const double tau = sc.tau2();
    return detail::estimate_probability(cfg, [&](Xoshiro256& rng) {
        const double g_sr = sr.snr(rng);
        const double g_sp = sp.snr(rng);
        const double g_rd = rd.snr(rng);
        const double g_rp = rp.snr(rng);
        return std::min(g_sr * i / g_sp, g_rd * i / g_rp) < tau;
    });
}

/// Pr{min(γ_SR / (γ_RR + 1), γ_RD) < τ3}; with exact_rsi = false the +1 is
/// dropped (interference-limited model).
inline McReport estimate_fd_outage(const FullDuplexScenario& sc, const McConfig& cfg, bool exact_rsi) {
    sc.validate();
    const AlphaMuSampler sr(sc.sr_snr()), rd(sc.rd_snr()), rr(sc.rr_snr());
    const double tau = sc.tau3();
    return detail::estimate_probability(cfg, [&](Xoshiro256& rng) {
        const double g_sr = sr.snr(rng);
        const double g_rr = rr.snr(rng);
        const double g_rd = rd.snr(rng);
        const double sir = exact_rsi ? g_sr / (g_rr + 1.0) : g_sr / g_rr;
        return std::min(sir, g_rd) < tau;
    });
}

}  // namespace alphamu
