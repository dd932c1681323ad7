#include "core/resample.hpp"

#include <cmath>
#include <vector>

namespace coverlens {

namespace {

constexpr int kTapsPerPhase = 32;
constexpr int kHalfTaps = kTapsPerPhase / 2;
constexpr int kNumPhases = 512;
constexpr double kKaiserBeta = 8.0;
constexpr double kPi = 3.14159265358979323846;

// Zeroth-order modified Bessel function of the first kind (power series).
double bessel_i0(double x) {
    double sum = 1.0;
    double term = 1.0;
    const double half_x = x / 2.0;
    for (int k = 1; k < 64; ++k) {
        term *= (half_x / k) * (half_x / k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double kaiser(double t, double half_width) {
    const double u = t / half_width;
    if (u <= -1.0 || u >= 1.0) return 0.0;
    return bessel_i0(kKaiserBeta * std::sqrt(1.0 - u * u)) / bessel_i0(kKaiserBeta);
}

double sinc(double x) {
    if (std::fabs(x) < 1e-12) return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

// Filter table with kNumPhases + 1 rows so phase interpolation can read
// row p and row p + 1 without wrapping.
std::vector<double> build_phase_table(double cutoff) {
    std::vector<double> table(static_cast<std::size_t>(kNumPhases + 1) * kTapsPerPhase);
    for (int p = 0; p <= kNumPhases; ++p) {
        const double frac = static_cast<double>(p) / kNumPhases;
        double* row = table.data() + static_cast<std::size_t>(p) * kTapsPerPhase;
        double sum = 0.0;
        for (int j = 0; j < kTapsPerPhase; ++j) {
            const double t = (j - (kHalfTaps - 1)) - frac;
            const double w = cutoff * sinc(cutoff * t) * kaiser(t, kHalfTaps);
            row[j] = w;
            sum += w;
        }
        // Unity DC gain per phase removes ripple-induced level drift.
        if (sum != 0.0) {
            for (int j = 0; j < kTapsPerPhase; ++j) row[j] /= sum;
        }
    }
    return table;
}

}  // namespace

AudioClip resample(const AudioClip& clip, std::uint32_t target_rate_hz) {
    validate(clip);
    if (target_rate_hz == 0)
        raise(Status::invalid_argument, "target sample rate must be positive");
    if (target_rate_hz == clip.sample_rate_hz || clip.samples.empty()) {
        AudioClip out = clip;
        out.sample_rate_hz = target_rate_hz;
        return out;
    }

    const double ratio = static_cast<double>(target_rate_hz) / clip.sample_rate_hz;
    const double cutoff = std::min(1.0, ratio);  // anti-alias when downsampling
    const std::vector<double> table = build_phase_table(cutoff);

    const std::size_t in_len = clip.samples.size();
    const std::size_t out_len =
        static_cast<std::size_t>(std::llround(static_cast<double>(in_len) * ratio));

    AudioClip out;
    out.sample_rate_hz = target_rate_hz;
    out.samples.resize(out_len);

    const double step = 1.0 / ratio;
    for (std::size_t m = 0; m < out_len; ++m) {
        const double t = static_cast<double>(m) * step;
        const auto i0 = static_cast<std::ptrdiff_t>(std::floor(t));
        const double frac = t - static_cast<double>(i0);

        const double phase_pos = frac * kNumPhases;
        const int phase = static_cast<int>(phase_pos);
        const double blend = phase_pos - phase;
        const double* row0 = table.data() + static_cast<std::size_t>(phase) * kTapsPerPhase;
        const double* row1 = row0 + kTapsPerPhase;

        double acc = 0.0;
        for (int j = 0; j < kTapsPerPhase; ++j) {
            const std::ptrdiff_t idx = i0 + (j - (kHalfTaps - 1));
            if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(in_len)) continue;
            const double w = row0[j] + blend * (row1[j] - row0[j]);
            acc += clip.samples[static_cast<std::size_t>(idx)] * w;
        }
        out.samples[m] = acc;
    }
    return out;
}

}  // namespace coverlens
