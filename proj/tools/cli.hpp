#pragma once

// Command-line front end: parameter parsing, sweeps, presets, CSV/JSON output.

#include <alphamu/apps.hpp>
#include <alphamu/dists.hpp>
#include <alphamu/error.hpp>
#include <alphamu/foxh.hpp>
#include <alphamu/mc.hpp>
#include <alphamu/presets.hpp>
#include <alphamu/ratio.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace alphamu::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3, kNumerical = 4 };

inline constexpr std::uint64_t kDefaultSeed = 20240521;
inline constexpr std::uint64_t kPresetTrials = 1'000'000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("bad number for " + what + ": '" + text + "'");
    }
    if (used != text.size()) throw UsageError("bad number for " + what + ": '" + text + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Sweep axis "name:start:stop:points:spacing". With db spacing the values
/// are dB and the parameter receives 10^(v/10).
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    std::string spacing = "linear";

    static Axis parse(const std::string& text) {
        const auto f = split(text, ':');
        if (f.size() != 5) throw UsageError("axis must look like name:start:stop:points:spacing, got '" + text + "'");
        Axis a;
        a.name = f[0];
        if (a.name.empty()) throw UsageError("axis name is empty");
        a.start = parse_double(f[1], "axis start");
        a.stop = parse_double(f[2], "axis stop");
        const double pts = parse_double(f[3], "axis points");
        if (pts < 2 || pts != std::floor(pts) || pts > 1e6) throw UsageError("axis points must be an integer >= 2");
        a.points = static_cast<int>(pts);
        a.spacing = f[4];
        if (a.spacing != "linear" && a.spacing != "log" && a.spacing != "db") {
            throw UsageError("axis spacing must be linear, log or db");
        }
        if (a.spacing == "log" && !(a.start > 0.0 && a.stop > 0.0)) throw UsageError("log axis needs positive bounds");
        return a;
    }

    std::vector<double> values() const {
        std::vector<double> v(points);
        for (int i = 0; i < points; ++i) {
            const double t = static_cast<double>(i) / (points - 1);
            v[i] = spacing == "log" ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                    : start + t * (stop - start);
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }

    double parameter_value(double v) const { return spacing == "db" ? db_to_linear(v) : v; }
    std::string column() const { return spacing == "db" ? name + "_db" : name; }
    std::string text() const {
        return name + ":" + format_number(start) + ":" + format_number(stop) + ":" + std::to_string(points) + ":" + spacing;
    }
};

/// key=value parameters. A quantity `q` may also be given as `q_db`.
class Params {
public:
    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    void set(const std::string& key, double value) { values_[key] = format_number(value); }
    void set_default(const std::string& key, double value) {
        if (!has(key) && !has(key + "_db")) set(key, value);
    }
    void erase(const std::string& key) { values_.erase(key); }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string>& all() const { return values_; }

    std::string str(const std::string& key, const std::string& fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    double num(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw UsageError("missing parameter '" + key + "'");
        return parse_double(it->second, key);
    }

    double num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }

    /// Linear value of `key`, reading `key_db` when only that is present.
    double linear(const std::string& key, std::optional<double> fallback = std::nullopt) const {
        if (has(key) && has(key + "_db")) throw UsageError("give either '" + key + "' or '" + key + "_db', not both");
        if (has(key)) return num(key);
        if (has(key + "_db")) return db_to_linear(num(key + "_db"));
        if (fallback) return *fallback;
        throw UsageError("missing parameter '" + key + "'");
    }

    void parse_assignment(const std::string& text) {
        const auto eq = text.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + text + "'");
        set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    }

private:
    std::map<std::string, std::string> values_;
};

struct RunSpec {
    std::string command;
    Params params;
    std::optional<Axis> axis;
    std::string out;  // empty: standard output
    std::string format = "csv";
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> trials;
    bool mc = false;
    std::string preset;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

/// Numeric result table; every cell is a double.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add(std::vector<double> row) {
        if (row.size() != columns.size()) throw std::logic_error("Table::add: row width mismatch");
        rows.push_back(std::move(row));
    }
};

inline std::string to_csv(const Table& t) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + t.columns[i];
    s += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_number(row[i]);
        s += '\n';
    }
    return s;
}

inline nlohmann::ordered_json spec_json(const RunSpec& spec) {
    nlohmann::ordered_json j;
    j["command"] = spec.command;
    if (!spec.preset.empty()) j["preset"] = spec.preset;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.params.all()) params[k] = v;
    j["params"] = params;
    if (spec.axis) j["axis"] = spec.axis->text();
    j["seed"] = spec.seed;
    if (spec.trials) j["trials"] = *spec.trials;
    j["mc"] = spec.mc;
    return j;
}

inline std::string to_json(const Table& t, const RunSpec& spec) {
    auto number = [](double v) { return std::isfinite(v) ? format_number(v) : std::string("null"); };
    std::string s = "{\"spec\":" + spec_json(spec).dump() + ",\"columns\":" + nlohmann::json(t.columns).dump() + ",\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        s += r ? ",[" : "[";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) s += (i ? "," : "") + number(t.rows[r][i]);
        s += "]";
    }
    s += "]}\n";
    return s;
}

// ---------------------------------------------------------------------------
// Parameter vocabulary per command

inline const std::map<std::string, std::set<std::string>>& accepted_keys() {
    static const std::set<std::string> ratio = {"alpha1", "mu1", "alpha2", "mu2", "snr1", "snr2", "policy", "x", "s", "n"};
    static const std::map<std::string, std::set<std::string>> keys = {
        {"eval-pdf", ratio},
        {"eval-cdf", ratio},
        {"eval-mgf", ratio},
        {"eval-moment", ratio},
        {"sweep", [] {
             auto k = ratio;
             k.insert("quantity");
             return k;
         }()},
        {"app-sop", {"case", "alpha_b", "mu_b", "alpha_e", "mu_e", "snr_b", "snr_e", "tau", "rate", "policy"}},
        {"app-cr",
         {"case", "alpha_sr", "mu_sr", "alpha_sp", "mu_sp", "alpha_rd", "mu_rd", "alpha_rp", "mu_rp", "snr_sr", "snr_sp",
          "snr_rd", "snr_rp", "interference", "tau", "rate", "policy"}},
        {"app-fd",
         {"case", "alpha_sr", "mu_sr", "alpha_rd", "mu_rd", "alpha_rr", "mu_rr", "snr_sr", "snr_rd", "snr_rr", "gamma_p",
          "tau", "rate", "policy"}},
        {"validate", {}},
        {"foxh", {"m", "n", "a", "b", "z", "offset"}},
    };
    return keys;
}

inline void check_keys(const RunSpec& spec) {
    const auto it = accepted_keys().find(spec.command);
    if (it == accepted_keys().end()) throw UsageError("unknown command '" + spec.command + "'");
    auto base = [](const std::string& key) {
        return key.size() > 3 && key.compare(key.size() - 3, 3, "_db") == 0 ? key.substr(0, key.size() - 3) : key;
    };
    auto known = [&](const std::string& key) { return it->second.count(key) || it->second.count(base(key)); };
    for (const auto& [k, v] : spec.params.all()) {
        if (!known(k)) throw UsageError("parameter '" + k + "' is not used by " + spec.command);
    }
    if (spec.axis && !known(spec.axis->name)) {
        throw UsageError("axis '" + spec.axis->name + "' is not a parameter of " + spec.command);
    }
}

inline EvalOptions eval_options(const Params& p) {
    EvalOptions o;
    const std::string policy = p.str("policy", "auto");
    if (policy == "auto") o.policy = EvalPolicy::Auto;
    else if (policy == "contour") o.policy = EvalPolicy::Contour;
    else if (policy == "series") o.policy = EvalPolicy::Series;
    else throw UsageError("policy must be auto, contour or series");
    return o;
}

inline AlphaMuChannel channel(const Params& p, const std::string& suffix, double snr_default = 1.0) {
    return AlphaMuChannel::from_mean_snr(p.num("alpha" + suffix, 2.0), p.num("mu" + suffix, 1.0),
                                         p.linear("snr" + suffix, snr_default));
}

/// Case 1-11 defaults for the application commands; explicit parameters win.
inline void apply_case(const std::string& command, Params& p) {
    if (!p.has("case")) return;
    const double id = p.num("case");
    auto fade = [&](const std::string& link, presets::FadingParams f) {
        p.set_default("alpha_" + link, f.alpha);
        p.set_default("mu_" + link, f.mu);
    };
    auto db_default = [&](const std::string& key, double db) {
        if (!p.has(key) && !p.has(key + "_db")) p.set(key + "_db", db);
    };
    if (command == "app-sop") {
        for (const auto& c : presets::secrecy_cases) {
            if (c.id != id) continue;
            fade("b", c.bob);
            fade("e", c.eve);
            db_default("snr_e", presets::secrecy_eve_snr_db);
            if (!p.has("rate")) p.set_default("tau", presets::secrecy_tau1);
            return;
        }
    } else if (command == "app-cr") {
        for (const auto& c : presets::cognitive_cases) {
            if (c.id != id) continue;
            fade("sr", c.sr);
            fade("sp", c.sp);
            fade("rd", c.rd);
            fade("rp", c.rp);
            for (const char* l : {"snr_sr", "snr_sp", "snr_rd", "snr_rp"}) db_default(l, presets::cognitive_link_snr_db);
            if (!p.has("rate")) p.set_default("tau", presets::cognitive_tau2);
            return;
        }
    } else if (command == "app-fd") {
        for (const auto& c : presets::fullduplex_cases) {
            if (c.id != id) continue;
            fade("sr", c.sr);
            fade("rr", c.rr);
            fade("rd", c.rd);
            db_default("snr_sr", presets::fullduplex_hop_snr_db);
            db_default("snr_rd", presets::fullduplex_hop_snr_db);
            if (!p.has("rate")) p.set_default("tau", presets::fullduplex_tau3);
            return;
        }
    }
    throw UsageError("case " + p.str("case", "") + " does not apply to " + command);
}

inline McConfig mc_config(const RunSpec& spec, std::uint64_t default_trials) {
    McConfig c;
    c.trials = spec.trials.value_or(default_trials);
    c.seed = spec.seed;
    c.worker_count = spec.workers;
    c.validate();
    return c;
}

// Evaluates `row(params, stream)` once, or at every axis point.
inline Table sweep_table(const RunSpec& spec, const std::string& single_column, std::vector<std::string> value_columns,
                         const std::function<std::vector<double>(const Params&, std::uint64_t)>& row) {
    Table t;
    if (!spec.axis) {
        t.columns.push_back(single_column);
        t.columns.insert(t.columns.end(), value_columns.begin(), value_columns.end());
        const auto vals = row(spec.params, 1);
        std::vector<double> r = {spec.params.linear(single_column)};
        r.insert(r.end(), vals.begin(), vals.end());
        t.add(std::move(r));
        return t;
    }
    t.columns.push_back(spec.axis->column());
    t.columns.insert(t.columns.end(), value_columns.begin(), value_columns.end());
    std::uint64_t stream = 1;
    for (double v : spec.axis->values()) {
        Params p = spec.params;
        p.erase(spec.axis->name);
        p.erase(spec.axis->name + "_db");
        p.set(spec.axis->name, spec.axis->parameter_value(v));
        std::vector<double> r = {v};
        const auto vals = row(p, stream++);
        r.insert(r.end(), vals.begin(), vals.end());
        t.add(std::move(r));
    }
    return t;
}

inline std::vector<std::string> with_mc(std::vector<std::string> cols, bool mc, std::vector<std::string> extra) {
    if (mc) cols.insert(cols.end(), extra.begin(), extra.end());
    return cols;
}

inline Table ratio_command(const RunSpec& spec, const std::string& quantity) {
    const std::string var = quantity == "mgf" ? "s" : quantity == "moment" ? "n" : "x";
    auto row = [&](const Params& p, std::uint64_t stream) {
        const RatioPair pair(channel(p, "1"), channel(p, "2"), eval_options(p));
        const double v = p.linear(var);
        std::vector<double> r;
        if (quantity == "pdf") r.push_back(ratio_pdf(pair, v));
        else if (quantity == "cdf") r.push_back(ratio_cdf(pair, v));
        else if (quantity == "mgf") r.push_back(ratio_mgf(pair, v));
        else r.push_back(ratio_moment(pair, v));
        if (spec.mc) {
            const McConfig cfg = mc_config(spec, McConfig{}.trials).with_stream(stream);
            McReport m;
            if (quantity == "pdf") {
                // density over the window [x e^-w, x e^w]
                constexpr double w = 0.025;
                const auto reps = estimate_ratio_cdf_grid(pair, {v * std::exp(-w), v * std::exp(w)}, cfg);
                const double width = v * (std::exp(w) - std::exp(-w));
                const double prob = reps[1].estimate - reps[0].estimate;
                m = {prob / width, std::sqrt(prob * (1.0 - prob) / cfg.trials) / width, std::nullopt, cfg.trials};
            } else if (quantity == "cdf") {
                m = estimate_ratio_cdf(pair, v, cfg);
            } else if (quantity == "mgf") {
                m = estimate_ratio_mgf(pair, v, cfg);
            } else {
                m = estimate_ratio_moment(pair, v, cfg);
            }
            r.push_back(m.estimate);
            r.push_back(m.standard_error);
        }
        return r;
    };
    return sweep_table(spec, var, with_mc({"analytic"}, spec.mc, {"mc", "mc_se"}), row);
}

inline SecrecyScenario secrecy_scenario(const Params& p) {
    const AlphaMuChannel bob = AlphaMuChannel::from_mean_snr(p.num("alpha_b", 2.0), p.num("mu_b", 1.0), p.linear("snr_b", 1.0));
    const AlphaMuChannel eve = AlphaMuChannel::from_mean_snr(p.num("alpha_e", 2.0), p.num("mu_e", 1.0), p.linear("snr_e", 1.0));
    if (p.has("rate")) return SecrecyScenario{bob, eve, p.num("rate")};
    return SecrecyScenario::with_threshold(bob, eve, p.linear("tau", 1.0));
}

inline CognitiveScenario cognitive_scenario(const Params& p) {
    auto link = [&](const std::string& l) {
        return AlphaMuChannel::from_mean_snr(p.num("alpha_" + l, 2.0), p.num("mu_" + l, 1.0), p.linear("snr_" + l, 1.0));
    };
    const double i = p.linear("interference", 1.0);
    if (p.has("rate")) return CognitiveScenario{link("sr"), link("sp"), link("rd"), link("rp"), i, p.num("rate")};
    return CognitiveScenario::with_threshold(link("sr"), link("sp"), link("rd"), link("rp"), i, p.linear("tau", 1.0));
}

inline FullDuplexScenario fullduplex_scenario(const Params& p) {
    auto link = [&](const std::string& l, double snr) {
        return AlphaMuChannel::from_mean_snr(p.num("alpha_" + l, 2.0), p.num("mu_" + l, 1.0), p.linear("snr_" + l, snr));
    };
    const double gp = p.linear("gamma_p", 1.0);
    if (p.has("rate")) return FullDuplexScenario{link("sr", 1.0), link("rd", 1.0), link("rr", 0.1), gp, p.num("rate")};
    return FullDuplexScenario::with_threshold(link("sr", 1.0), link("rd", 1.0), link("rr", 0.1), gp, p.linear("tau", 1.0));
}

inline Table app_sop_command(const RunSpec& spec) {
    auto row = [&](const Params& p, std::uint64_t stream) {
        const SecrecyScenario sc = secrecy_scenario(p);
        std::vector<double> r = {sop_lower_bound(sc, eval_options(p))};
        if (spec.mc) {
            const McReport m = estimate_sop_exact(sc, mc_config(spec, McConfig{}.trials).with_stream(stream));
            r.push_back(m.estimate);
            r.push_back(m.standard_error);
        }
        return r;
    };
    return sweep_table(spec, "snr_b", with_mc({"analytic"}, spec.mc, {"mc", "mc_se"}), row);
}

inline Table app_cr_command(const RunSpec& spec) {
    auto row = [&](const Params& p, std::uint64_t stream) {
        const CognitiveScenario sc = cognitive_scenario(p);
        std::vector<double> r = {cognitive_outage(sc, eval_options(p))};
        if (spec.mc) {
            const McReport m = estimate_cr_outage(sc, mc_config(spec, McConfig{}.trials).with_stream(stream));
            r.push_back(m.estimate);
            r.push_back(m.standard_error);
        }
        return r;
    };
    return sweep_table(spec, "interference", with_mc({"analytic"}, spec.mc, {"mc", "mc_se"}), row);
}

inline Table app_fd_command(const RunSpec& spec) {
    auto row = [&](const Params& p, std::uint64_t stream) {
        const FullDuplexScenario sc = fullduplex_scenario(p);
        const EvalOptions o = eval_options(p);
        std::vector<double> r = {fullduplex_outage(sc, o), fullduplex_floor(sc, o)};
        if (spec.mc) {
            const McConfig cfg = mc_config(spec, McConfig{}.trials);
            const McReport approx = estimate_fd_outage(sc, cfg.with_stream(2 * stream), false);
            const McReport exact = estimate_fd_outage(sc, cfg.with_stream(2 * stream + 1), true);
            r.insert(r.end(), {approx.estimate, approx.standard_error, exact.estimate, exact.standard_error});
        }
        return r;
    };
    return sweep_table(spec, "gamma_p", with_mc({"analytic", "floor"}, spec.mc, {"mc", "mc_se", "mc_exact", "mc_exact_se"}),
                       row);
}

inline std::vector<GammaArg> parse_gamma_args(const std::string& text) {
    std::vector<GammaArg> out;
    if (trim(text).empty()) return out;
    for (const auto& item : split(text, ',')) {
        const auto f = split(item, ':');
        if (f.empty() || f.size() > 2) throw UsageError("gamma argument must be shift or shift:weight, got '" + item + "'");
        out.push_back({parse_double(trim(f[0]), "shift"), f.size() == 2 ? parse_double(trim(f[1]), "weight") : 1.0});
    }
    return out;
}

inline Table foxh_command(const RunSpec& spec) {
    auto row = [&](const Params& p, std::uint64_t) {
        const double m = p.num("m");
        const double n = p.num("n");
        if (m != std::floor(m) || n != std::floor(n)) throw UsageError("m and n must be integers");
        const FoxHParams params(static_cast<int>(m), static_cast<int>(n), parse_gamma_args(p.str("a", "")),
                                parse_gamma_args(p.str("b", "")));
        QuadratureConfig q;
        if (p.has("offset")) {
            q.contour_offset_override = p.num("offset");
            q.saddle_refine = false;
        }
        return std::vector<double>{foxh_contour(params, p.linear("z"), q)};
    };
    return sweep_table(spec, "z", {"value"}, row);
}

// ---------------------------------------------------------------------------
// Validation presets: analytic values next to Monte Carlo estimates.

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    return v;
}

inline std::vector<double> lin_grid(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    v.back() = hi;
    return v;
}

inline double within(double analytic, const McReport& m) { return m.covers(analytic) ? 1.0 : 0.0; }
inline double within_probability(double p, const McReport& m) { return m.covers_probability(p) ? 1.0 : 0.0; }

/// PDF preset: histogram density against the analytic bin-average density.
inline Table preset_fig4(const McConfig& base) {
    Table t{{"case", "x", "pdf", "analytic", "mc", "mc_se", "pass"}, {}};
    McConfig cfg = base;
    cfg.histogram_bins = 40;
    cfg.histogram_lo = 1e-2;
    cfg.histogram_hi = 1e2;
    int id = 0;
    for (const auto& [mu1, mu2] : presets::pdf_preset_mu) {
        ++id;
        const RatioPair pair(AlphaMuChannel::from_mean_snr(presets::pdf_preset_alpha.first, mu1, 1.0),
                             AlphaMuChannel::from_mean_snr(presets::pdf_preset_alpha.second, mu2, 1.0));
        const Histogram h = estimate_ratio_histogram(pair, cfg.with_stream(id));
        for (std::size_t i = 0; i + 1 < h.edges.size(); ++i) {
            const double prob = ratio_cdf(pair, h.edges[i + 1]) - ratio_cdf(pair, h.edges[i]);
            if (prob < 1e-4) continue;  // too few expected counts for a normal-theory check
            const double xc = std::sqrt(h.edges[i] * h.edges[i + 1]);
            const double analytic = prob / h.width(i);
            const McReport m{h.density(i), h.density_se(i), std::nullopt, h.n};
            t.add({double(id), xc, ratio_pdf(pair, xc), analytic, m.estimate, m.standard_error, within(analytic, m)});
        }
    }
    return t;
}

/// CDF preset: empirical CDF on a log grid.
inline Table preset_fig5(const McConfig& cfg) {
    Table t{{"case", "x", "analytic", "mc", "mc_se", "pass"}, {}};
    const auto xs = log_grid(1e-2, 1e2, 41);
    int id = 0;
    for (const auto& [a1, a2] : presets::cdf_preset_alpha) {
        ++id;
        const RatioPair pair(AlphaMuChannel::from_mean_snr(a1, presets::cdf_preset_mu.first, 1.0),
                             AlphaMuChannel::from_mean_snr(a2, presets::cdf_preset_mu.second, 1.0));
        const auto reps = estimate_ratio_cdf_grid(pair, xs, cfg.with_stream(id));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double f = ratio_cdf(pair, xs[i]);
            if (f < 1e-4 || f > 1.0 - 1e-4) continue;
            t.add({double(id), xs[i], f, reps[i].estimate, reps[i].standard_error, within_probability(f, reps[i])});
        }
    }
    return t;
}

/// Secrecy outage: analytic lower bound against the simulated exact SOP.
inline Table preset_fig6(const McConfig& cfg) {
    Table t{{"case", "snr_b_db", "analytic", "mc", "mc_se", "pass"}, {}};
    std::uint64_t stream = 0;
    for (const auto& c : presets::secrecy_cases) {
        const AlphaMuChannel eve = AlphaMuChannel::from_mean_snr(c.eve.alpha, c.eve.mu, db_to_linear(presets::secrecy_eve_snr_db));
        for (double db : lin_grid(0.0, 30.0, 16)) {
            const AlphaMuChannel bob = AlphaMuChannel::from_mean_snr(c.bob.alpha, c.bob.mu, db_to_linear(db));
            const auto sc = SecrecyScenario::with_threshold(bob, eve, presets::secrecy_tau1);
            const double bound = sop_lower_bound(sc);
            const McReport m = estimate_sop_exact(sc, cfg.with_stream(++stream));
            t.add({double(c.id), db, bound, m.estimate, m.standard_error,
                   bound <= m.estimate + 3.0 * m.probability_se(bound) ? 1.0 : 0.0});
        }
    }
    return t;
}

inline CognitiveScenario cognitive_case(const presets::CognitiveCase& c, double interference) {
    const double g = db_to_linear(presets::cognitive_link_snr_db);
    auto link = [&](presets::FadingParams f) { return AlphaMuChannel::from_mean_snr(f.alpha, f.mu, g); };
    return CognitiveScenario::with_threshold(link(c.sr), link(c.sp), link(c.rd), link(c.rp), interference,
                                             presets::cognitive_tau2);
}

/// Cognitive relaying outage against Ῡ_I.
inline Table preset_fig7(const McConfig& cfg) {
    Table t{{"case", "interference_db", "analytic", "mc", "mc_se", "pass"}, {}};
    std::uint64_t stream = 0;
    for (const auto& c : presets::cognitive_cases) {
        for (double db : lin_grid(0.0, 30.0, 8)) {
            const auto sc = cognitive_case(c, db_to_linear(db));
            const double p = cognitive_outage(sc);
            const McReport m = estimate_cr_outage(sc, cfg.with_stream(++stream));
            t.add({double(c.id), db, p, m.estimate, m.standard_error, within_probability(p, m)});
        }
    }
    return t;
}

inline FullDuplexScenario fullduplex_case(const presets::FullDuplexCase& c, double rr_db, double gamma_p) {
    const double g = db_to_linear(presets::fullduplex_hop_snr_db);
    return FullDuplexScenario::with_threshold(AlphaMuChannel::from_mean_snr(c.sr.alpha, c.sr.mu, g),
                                              AlphaMuChannel::from_mean_snr(c.rd.alpha, c.rd.mu, g),
                                              AlphaMuChannel::from_mean_snr(c.rr.alpha, c.rr.mu, db_to_linear(rr_db)),
                                              gamma_p, presets::fullduplex_tau3);
}

/// Full-duplex outage against γ_P, interference-limited simulation.
inline Table preset_fig8(const McConfig& cfg) {
    Table t{{"case", "rr_db", "gamma_p_db", "analytic", "floor", "mc", "mc_se", "pass"}, {}};
    std::uint64_t stream = 0;
    for (const auto& c : presets::fullduplex_cases) {
        for (double rr : presets::fullduplex_rr_db) {
            for (double db : lin_grid(0.0, 40.0, 9)) {
                const auto sc = fullduplex_case(c, rr, db_to_linear(db));
                const double p = fullduplex_outage(sc);
                const McReport m = estimate_fd_outage(sc, cfg.with_stream(++stream), false);
                t.add({double(c.id), rr, db, p, fullduplex_floor(sc), m.estimate, m.standard_error, within_probability(p, m)});
            }
        }
    }
    return t;
}

inline Table validate_command(const RunSpec& spec) {
    const McConfig cfg = mc_config(spec, kPresetTrials);
    if (spec.preset == "fig4") return preset_fig4(cfg);
    if (spec.preset == "fig5") return preset_fig5(cfg);
    if (spec.preset == "fig6") return preset_fig6(cfg);
    if (spec.preset == "fig7") return preset_fig7(cfg);
    if (spec.preset == "fig8") return preset_fig8(cfg);
    throw UsageError("validate needs --preset fig4|fig5|fig6|fig7|fig8");
}

inline Table execute(RunSpec spec) {
    check_keys(spec);
    apply_case(spec.command, spec.params);
    if (spec.command == "eval-pdf") return ratio_command(spec, "pdf");
    if (spec.command == "eval-cdf") return ratio_command(spec, "cdf");
    if (spec.command == "eval-mgf") return ratio_command(spec, "mgf");
    if (spec.command == "eval-moment") return ratio_command(spec, "moment");
    if (spec.command == "sweep") {
        if (!spec.axis) throw UsageError("sweep needs --axis");
        const std::string q = spec.params.str("quantity", "cdf");
        if (q != "pdf" && q != "cdf" && q != "mgf" && q != "moment") throw UsageError("quantity must be pdf, cdf, mgf or moment");
        spec.params.erase("quantity");
        return ratio_command(spec, q);
    }
    if (spec.command == "app-sop") return app_sop_command(spec);
    if (spec.command == "app-cr") return app_cr_command(spec);
    if (spec.command == "app-fd") return app_fd_command(spec);
    if (spec.command == "foxh") return foxh_command(spec);
    if (spec.command == "validate") return validate_command(spec);
    throw UsageError("unknown command '" + spec.command + "'");
}

/// Runs `spec`, writes the table, returns an exit code.
inline int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.format != "csv" && spec.format != "json") throw UsageError("format must be csv or json");
        const Table t = execute(spec);
        const std::string text = spec.format == "csv" ? to_csv(t) : to_json(t, spec);
        if (spec.out.empty()) {
            out << text;
        } else {
            std::ofstream f(spec.out, std::ios::binary);
            if (!f) throw UsageError("cannot open output file '" + spec.out + "'");
            f << text;
            if (!f) {
                err << "error: failed writing '" << spec.out << "'\n";
                return kFailure;
            }
        }
        if (spec.command == "validate") {
            const auto pass_col = t.columns.size() - 1;
            std::size_t ok = 0;
            for (const auto& r : t.rows) ok += r[pass_col] != 0.0;
            err << "validate " << spec.preset << ": " << ok << "/" << t.rows.size() << " points pass\n";
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

inline std::optional<std::uint64_t> parse_seed(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Reads a config file: either a flat JSON object or `key = value` lines.
inline std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    std::map<std::string, std::string> kv;
    if (trim(text).rfind('{', 0) == 0) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("config file '" + path + "': " + e.what());
        }
        if (!j.is_object()) throw UsageError("config file must hold a flat object");
        for (const auto& [k, v] : j.items()) {
            if (v.is_string()) kv[k] = v.get<std::string>();
            else if (v.is_boolean()) kv[k] = v.get<bool>() ? "true" : "false";
            else if (v.is_number_integer()) kv[k] = std::to_string(v.get<long long>());
            else if (v.is_number()) kv[k] = format_number(v.get<double>());
            else throw UsageError("config key '" + k + "' must be a scalar");
        }
        return kv;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line without '=': '" + line + "'");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ratio statistics of squared alpha-mu variates: evaluation, applications, Monte Carlo validation"};
    app.require_subcommand(1);

    std::vector<std::string> sets;
    std::vector<std::string> positional;
    std::string axis, out_path, format = "csv", config, preset, seed_text;
    std::uint64_t trials = 0;
    unsigned workers = 0;
    bool mc = false;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"eval-pdf", "ratio PDF at x"},
        {"eval-cdf", "ratio CDF at x"},
        {"eval-mgf", "ratio MGF at s"},
        {"eval-moment", "ratio moment of order n"},
        {"sweep", "ratio statistic (quantity=pdf|cdf|mgf|moment) along an axis"},
        {"app-sop", "secrecy outage lower bound"},
        {"app-cr", "cognitive relaying outage"},
        {"app-fd", "full-duplex relaying outage"},
        {"validate", "validation preset: analytic values against Monte Carlo"},
        {"foxh", "Fox H-function by contour integration"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("params", positional, "key=value parameters");
        sub->add_option("--set", sets, "key=value parameter (repeatable)");
        sub->add_option("--axis", axis, "sweep axis name:start:stop:points:spacing (linear|log|db)");
        sub->add_option("--config", config, "flat key=value or JSON file mirroring the flags");
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed_text, "Monte Carlo seed (default: $ALPHAMU_SEED or built-in)");
        sub->add_option("--trials", trials, "Monte Carlo trials per point");
        sub->add_option("--workers", workers, "Monte Carlo worker threads");
        sub->add_flag("--mc", mc, "add Monte Carlo columns");
        sub->add_option("--preset", preset, "fig4|fig5|fig6|fig7|fig8 (validate)");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    RunSpec spec;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (subs[i]->parsed()) spec.command = commands[i].first;
    }
    CLI::App* sub = app.get_subcommand(spec.command);
    auto given = [&](const char* flag) { return sub->count(flag) > 0; };

    try {
        std::map<std::string, std::string> file;
        if (!config.empty()) file = read_config(config);
        auto pick = [&](const char* flag, const std::string& key, std::string& target) {
            if (!given(flag) && file.count(key)) target = file[key];
            file.erase(key);
        };
        std::string trials_text = given("--trials") ? std::to_string(trials) : "";
        std::string workers_text = given("--workers") ? std::to_string(workers) : "";
        std::string mc_text = given("--mc") ? "true" : "";
        pick("--axis", "axis", axis);
        pick("--out", "out", out_path);
        pick("--format", "format", format);
        pick("--seed", "seed", seed_text);
        pick("--trials", "trials", trials_text);
        pick("--workers", "workers", workers_text);
        pick("--mc", "mc", mc_text);
        pick("--preset", "preset", preset);
        for (const auto& [k, v] : file) spec.params.set(k, v);
        for (const auto& s : positional) spec.params.parse_assignment(s);
        for (const auto& s : sets) spec.params.parse_assignment(s);

        if (!axis.empty()) spec.axis = Axis::parse(axis);
        spec.out = out_path;
        spec.format = format;
        spec.preset = preset;
        spec.mc = mc_text == "true" || mc_text == "1";
        if (!mc_text.empty() && mc_text != "true" && mc_text != "false" && mc_text != "1" && mc_text != "0") {
            throw UsageError("mc must be true or false");
        }
        if (!trials_text.empty()) {
            const auto t = parse_seed(trials_text);
            if (!t) throw UsageError("trials must be a positive integer");
            spec.trials = *t;
        }
        if (!workers_text.empty()) {
            const auto w = parse_seed(workers_text);
            if (!w || *w == 0 || *w > 1024) throw UsageError("workers must be in 1..1024");
            spec.workers = static_cast<unsigned>(*w);
        }
        if (seed_text.empty()) {
            if (const char* env = std::getenv("ALPHAMU_SEED"); env && *env) seed_text = env;
        }
        if (!seed_text.empty()) {
            const auto s = parse_seed(seed_text);
            if (!s) throw UsageError("seed must be a non-negative integer");
            spec.seed = *s;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    return run(spec, out, err);
}

}  // namespace alphamu::cli
