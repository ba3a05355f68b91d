#pragma once

// Fading parameter sets of the reference scenarios (Cases 1-11) and the
// parameter pairs of the PDF / CDF validation presets.

#include <array>
#include <utility>

namespace alphamu::presets {

struct FadingParams {
    double alpha;
    double mu;
};

/// Wiretap cases 1-5: Bob and Eve fading; Ῡ_E = 1 dB, τ1 = 1.
struct SecrecyCase {
    int id;
    FadingParams bob;
    FadingParams eve;
};

inline constexpr std::array<SecrecyCase, 5> secrecy_cases = {{
    {1, {2.0, 4.5}, {2.0, 0.6}},
    {2, {3.9, 1.0}, {1.3, 1.0}},
    {3, {2.0, 1.0}, {2.0, 1.0}},
    {4, {1.2, 1.0}, {4.5, 1.0}},
    {5, {2.0, 0.5}, {2.0, 3.1}},
}};
inline constexpr double secrecy_eve_snr_db = 1.0;
inline constexpr double secrecy_tau1 = 1.0;

/// Cognitive relaying cases 6-9; every link mean 1 dB, τ2 = 1.
struct CognitiveCase {
    int id;
    FadingParams sr;
    FadingParams sp;
    FadingParams rd;
    FadingParams rp;
};

inline constexpr std::array<CognitiveCase, 4> cognitive_cases = {{
    {6, {4.2, 1.0}, {2.0, 4.1}, {3.9, 1.0}, {2.0, 3.8}},
    {7, {2.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}},
    {8, {2.0, 0.6}, {0.8, 1.0}, {2.0, 0.9}, {0.7, 1.0}},
    {9, {0.6, 1.0}, {2.0, 4.2}, {4.1, 1.0}, {2.0, 0.8}},
}};
inline constexpr double cognitive_link_snr_db = 1.0;
inline constexpr double cognitive_tau2 = 1.0;

/// Full-duplex cases 10 (severe fading) and 11 (weak fading);
/// Ῡ_SR = Ῡ_RD = 0 dB, τ3 = 1.
struct FullDuplexCase {
    int id;
    FadingParams sr;
    FadingParams rr;
    FadingParams rd;
};

inline constexpr std::array<FullDuplexCase, 2> fullduplex_cases = {{
    {10, {1.8, 0.8}, {2.2, 0.7}, {2.1, 0.6}},
    {11, {1.9, 2.3}, {2.1, 2.8}, {2.2, 2.9}},
}};
inline constexpr std::array<double, 3> fullduplex_rr_db = {-10.0, -20.0, -30.0};
inline constexpr double fullduplex_hop_snr_db = 0.0;
inline constexpr double fullduplex_tau3 = 1.0;

/// PDF preset: α = {1.5, 1.1}, μ pairs below, both means 0 dB.
inline constexpr std::pair<double, double> pdf_preset_alpha = {1.5, 1.1};
inline constexpr std::array<std::pair<double, double>, 4> pdf_preset_mu = {{{0.6, 1.0}, {1.5, 2.5}, {3.5, 2.8}, {4.5, 0.8}}};

/// CDF preset: μ = {3.5, 2.8}, α pairs below, both means 0 dB.
inline constexpr std::pair<double, double> cdf_preset_mu = {3.5, 2.8};
inline constexpr std::array<std::pair<double, double>, 4> cdf_preset_alpha = {{{1.5, 1.1}, {2.0, 2.0}, {3.9, 1.3}, {0.8, 2.5}}};

}  // namespace alphamu::presets
