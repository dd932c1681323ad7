#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace coverlens {

enum class WindowKind { rectangular, hann };

struct FrameConfig {
    std::size_t frame_length = 2048;
    std::size_t hop_length = 512;
    WindowKind window = WindowKind::hann;
};

// floor((len - F) / H) + 1; requires len >= F.
std::size_t frame_count(std::size_t signal_length, const FrameConfig& cfg);

std::vector<double> make_window(const FrameConfig& cfg);

// Row j = x[j*H : j*H + F] element-multiplied by the window.
std::vector<std::vector<double>> frame_signal(std::span<const double> x, const FrameConfig& cfg);

// In-place complex FFT. Radix-2 for powers of two; even sizes split
// recursively; odd sizes fall back to the direct transform.
void fft_inplace(std::vector<std::complex<double>>& values);

// One-sided power spectrum: bins 0..F/2 of |DFT(frame)|^2.
std::vector<double> dft_magnitude_sq(std::span<const double> frame);

struct MelFilterbank {
    std::size_t num_filters = 0;
    std::size_t spectrum_bins = 0;  // F/2 + 1
    std::vector<double> weights;    // row-major num_filters x spectrum_bins
    double fmin_hz = 0.0;
    double fmax_hz = 0.0;

    std::span<const double> row(std::size_t m) const {
        return {weights.data() + m * spectrum_bins, spectrum_bins};
    }
};

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// M unit-peak triangles with M+2 points equally spaced on the mel scale
// between mel(fmin) and mel(fmax), sampled at bin centers bin * SR / F.
MelFilterbank build_mel_filterbank(std::size_t num_filters, std::size_t frame_length,
                                   std::uint32_t sample_rate_hz, double fmin_hz, double fmax_hz);

std::vector<double> apply_filterbank(std::span<const double> power, const MelFilterbank& bank);

// Per-entry ln(max(energy, floor_eps)).
std::vector<double> log_energies(std::span<const double> energies, double floor_eps);

// Orthonormal DCT-II truncated to num_coeffs entries.
std::vector<double> dct_ii(std::span<const double> values, std::size_t num_coeffs);

// Iterates windowed frames without materializing the full frame matrix.
// fn receives each windowed frame as std::span<const double>.
template <typename Fn>
void for_each_frame(std::span<const double> x, const FrameConfig& cfg, Fn&& fn) {
    const std::size_t count = frame_count(x.size(), cfg);
    const std::vector<double> window = make_window(cfg);
    std::vector<double> frame(cfg.frame_length);
    for (std::size_t j = 0; j < count; ++j) {
        const double* src = x.data() + j * cfg.hop_length;
        for (std::size_t n = 0; n < cfg.frame_length; ++n) frame[n] = src[n] * window[n];
        fn(std::span<const double>(frame));
    }
}

}  // namespace coverlens
