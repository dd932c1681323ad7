#include "core/dsp.hpp"

#include <cmath>
#include <unordered_map>

namespace coverlens {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Bit-reversal permutation and twiddle factors for one power-of-two size.
struct FftPlan {
    std::vector<std::size_t> reversed;
    std::vector<Complex> twiddles;  // exp(-2*pi*i*k/n), k < n/2

    explicit FftPlan(std::size_t n) {
        reversed.resize(n);
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < n) ++bits;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
            reversed[i] = r;
        }
        twiddles.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
            twiddles[k] = Complex(std::cos(angle), std::sin(angle));
        }
    }
};

const FftPlan& plan_for(std::size_t n) {
    thread_local std::unordered_map<std::size_t, FftPlan> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, FftPlan(n)).first;
    return it->second;
}

void fft_pow2(std::vector<Complex>& a) {
    const std::size_t n = a.size();
    const FftPlan& plan = plan_for(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = plan.reversed[i];
        if (i < r) std::swap(a[i], a[r]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex w = plan.twiddles[k * stride];
                const Complex u = a[start + k];
                const Complex v = a[start + k + half] * w;
                a[start + k] = u + v;
                a[start + k + half] = u - v;
            }
        }
    }
}

std::vector<Complex> dft_direct(const std::vector<Complex>& a) {
    const std::size_t n = a.size();
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double angle = -kTwoPi * static_cast<double>(k) * static_cast<double>(m) /
                                 static_cast<double>(n);
            acc += a[m] * Complex(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

std::vector<Complex> fft_general(std::vector<Complex> a) {
    const std::size_t n = a.size();
    if (n <= 1) return a;
    if (is_power_of_two(n)) {
        fft_pow2(a);
        return a;
    }
    if (n % 2 != 0) return dft_direct(a);

    std::vector<Complex> even(n / 2), odd(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) {
        even[i] = a[2 * i];
        odd[i] = a[2 * i + 1];
    }
    even = fft_general(std::move(even));
    odd = fft_general(std::move(odd));
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double angle = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const Complex w(std::cos(angle), std::sin(angle));
        const Complex t = w * odd[k];
        a[k] = even[k] + t;
        a[k + n / 2] = even[k] - t;
    }
    return a;
}

}  // namespace

std::size_t frame_count(std::size_t signal_length, const FrameConfig& cfg) {
    if (cfg.frame_length == 0 || cfg.hop_length == 0 || cfg.hop_length > cfg.frame_length)
        raise(Status::invalid_argument, "frame config requires 0 < hop <= frame length");
    if (signal_length < cfg.frame_length)
        raise(Status::invalid_argument, "signal shorter than one frame");
    return (signal_length - cfg.frame_length) / cfg.hop_length + 1;
}

std::vector<double> make_window(const FrameConfig& cfg) {
    std::vector<double> window(cfg.frame_length, 1.0);
    if (cfg.window == WindowKind::hann) {
        for (std::size_t n = 0; n < cfg.frame_length; ++n)
            window[n] = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(n) /
                                             static_cast<double>(cfg.frame_length));
    }
    return window;
}

std::vector<std::vector<double>> frame_signal(std::span<const double> x, const FrameConfig& cfg) {
    std::vector<std::vector<double>> frames;
    frames.reserve(frame_count(x.size(), cfg));
    for_each_frame(x, cfg, [&](std::span<const double> frame) {
        frames.emplace_back(frame.begin(), frame.end());
    });
    return frames;
}

void fft_inplace(std::vector<Complex>& values) { values = fft_general(std::move(values)); }

std::vector<double> dft_magnitude_sq(std::span<const double> frame) {
    const std::size_t n = frame.size();
    if (n < 2) raise(Status::invalid_argument, "DFT frame must have at least 2 samples");
    std::vector<Complex> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = Complex(frame[i], 0.0);
    fft_inplace(a);
    std::vector<double> power(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) power[k] = std::norm(a[k]);
    return power;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

MelFilterbank build_mel_filterbank(std::size_t num_filters, std::size_t frame_length,
                                   std::uint32_t sample_rate_hz, double fmin_hz, double fmax_hz) {
    if (num_filters == 0) raise(Status::invalid_argument, "filterbank needs at least one filter");
    const double nyquist = sample_rate_hz / 2.0;
    if (fmin_hz < 0.0 || fmin_hz >= fmax_hz || fmax_hz > nyquist)
        raise(Status::invalid_argument, "filterbank frequency range must satisfy 0 <= fmin < fmax <= SR/2");

    MelFilterbank bank;
    bank.num_filters = num_filters;
    bank.spectrum_bins = frame_length / 2 + 1;
    bank.fmin_hz = fmin_hz;
    bank.fmax_hz = fmax_hz;
    bank.weights.assign(num_filters * bank.spectrum_bins, 0.0);

    const double mel_lo = hz_to_mel(fmin_hz);
    const double mel_hi = hz_to_mel(fmax_hz);
    std::vector<double> points(num_filters + 2);
    for (std::size_t p = 0; p < points.size(); ++p)
        points[p] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(p) /
                                           static_cast<double>(num_filters + 1));

    const double bin_hz = static_cast<double>(sample_rate_hz) / static_cast<double>(frame_length);
    for (std::size_t m = 0; m < num_filters; ++m) {
        const double left = points[m];
        const double center = points[m + 1];
        const double right = points[m + 2];
        double* row = bank.weights.data() + m * bank.spectrum_bins;
        for (std::size_t bin = 0; bin < bank.spectrum_bins; ++bin) {
            const double f = static_cast<double>(bin) * bin_hz;
            double w = 0.0;
            if (f > left && f < center && center > left) {
                w = (f - left) / (center - left);
            } else if (f >= center && f < right && right > center) {
                w = (right - f) / (right - center);
            }
            row[bin] = w;
        }
    }
    return bank;
}

std::vector<double> apply_filterbank(std::span<const double> power, const MelFilterbank& bank) {
    if (power.size() != bank.spectrum_bins)
        raise(Status::dimension, "power spectrum length does not match filterbank bins");
    std::vector<double> energies(bank.num_filters, 0.0);
    for (std::size_t m = 0; m < bank.num_filters; ++m) {
        const double* row = bank.weights.data() + m * bank.spectrum_bins;
        double acc = 0.0;
        for (std::size_t bin = 0; bin < bank.spectrum_bins; ++bin) acc += power[bin] * row[bin];
        energies[m] = acc;
    }
    return energies;
}

std::vector<double> log_energies(std::span<const double> energies, double floor_eps) {
    std::vector<double> out(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i)
        out[i] = std::log(std::max(energies[i], floor_eps));
    return out;
}

std::vector<double> dct_ii(std::span<const double> values, std::size_t num_coeffs) {
    const std::size_t m = values.size();
    if (m == 0) raise(Status::invalid_argument, "DCT input must be non-empty");
    if (num_coeffs > m) raise(Status::dimension, "requested more DCT coefficients than inputs");

    const double scale0 = std::sqrt(1.0 / static_cast<double>(m));
    const double scale = std::sqrt(2.0 / static_cast<double>(m));
    std::vector<double> out(num_coeffs, 0.0);
    for (std::size_t k = 0; k < num_coeffs; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            acc += values[i] * std::cos(kPi * static_cast<double>(k) *
                                        (2.0 * static_cast<double>(i) + 1.0) /
                                        (2.0 * static_cast<double>(m)));
        out[k] = (k == 0 ? scale0 : scale) * acc;
    }
    return out;
}

}  // namespace coverlens
