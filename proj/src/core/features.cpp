#include "core/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace coverlens {

namespace {

constexpr double kChromaMinHz = 20.0;
constexpr std::size_t kChromaClasses = 12;
constexpr std::size_t kContrastBands = 7;
// Band edges in Hz; the last band runs to SR/2.
constexpr std::array<double, kContrastBands> kContrastEdges = {0.0,    200.0,  400.0, 800.0,
                                                               1600.0, 3200.0, 6400.0};

int pitch_class_of(double freq_hz) {
    const double semitones = 12.0 * std::log2(freq_hz / 440.0);
    const long rounded = std::lround(semitones) + 9;
    return static_cast<int>(((rounded % 12) + 12) % 12);
}

std::vector<double> mean_over_frames(std::span<const double> segment, const FeatureConfig& cfg,
                                     std::size_t dim,
                                     const std::function<void(std::span<const double>, double*)>& per_frame) {
    std::vector<double> acc(dim, 0.0);
    std::vector<double> frame_out(dim);
    std::size_t frames = 0;
    for_each_frame(segment, cfg.frame, [&](std::span<const double> frame) {
        std::fill(frame_out.begin(), frame_out.end(), 0.0);
        per_frame(frame, frame_out.data());
        for (std::size_t i = 0; i < dim; ++i) acc[i] += frame_out[i];
        ++frames;
    });
    for (double& v : acc) v /= static_cast<double>(frames);
    return acc;
}

std::vector<double> side_feature(std::span<const double> segment, FeatureKind kind,
                                 const FeatureConfig& cfg, const MelFilterbank* bank) {
    switch (kind) {
        case FeatureKind::mfcc:
            return mfcc_segment(segment, cfg, *bank);
        case FeatureKind::chroma:
            return chroma_segment(segment, cfg);
        case FeatureKind::spectral_contrast:
            return spectral_contrast_segment(segment, cfg);
        case FeatureKind::temporal:
            return temporal_segment(segment, cfg.sample_rate_hz);
        default:
            raise(Status::invalid_argument, "baseline kind has no per-side feature");
    }
}

}  // namespace

const char* feature_kind_name(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::mfcc: return "mfcc";
        case FeatureKind::chroma: return "chroma";
        case FeatureKind::spectral_contrast: return "spectral_contrast";
        case FeatureKind::temporal: return "temporal";
        case FeatureKind::baseline_absdiff: return "baseline_absdiff";
    }
    return "unknown";
}

std::optional<FeatureKind> parse_feature_kind(const std::string& name) {
    if (name == "mfcc") return FeatureKind::mfcc;
    if (name == "chroma") return FeatureKind::chroma;
    if (name == "spectral_contrast") return FeatureKind::spectral_contrast;
    if (name == "temporal") return FeatureKind::temporal;
    if (name == "baseline_absdiff") return FeatureKind::baseline_absdiff;
    return std::nullopt;
}

std::size_t per_side_dim(FeatureKind kind, const FeatureConfig& cfg, const SegmentConfig& seg) {
    switch (kind) {
        case FeatureKind::mfcc: return cfg.num_mfcc;
        case FeatureKind::chroma: return kChromaClasses;
        case FeatureKind::spectral_contrast: return kContrastBands;
        case FeatureKind::temporal: return 2;
        case FeatureKind::baseline_absdiff: return seg.samples_per_segment();
    }
    return 0;
}

std::size_t pair_dim(FeatureKind kind, const FeatureConfig& cfg, const SegmentConfig& seg) {
    const std::size_t side = per_side_dim(kind, cfg, seg);
    return kind == FeatureKind::baseline_absdiff ? side : 2 * side;
}

std::vector<double> mfcc_segment(std::span<const double> segment, const FeatureConfig& cfg,
                                 const MelFilterbank& bank) {
    const std::size_t dim = cfg.num_mfcc;
    return mean_over_frames(segment, cfg, dim, [&](std::span<const double> frame, double* out) {
        const std::vector<double> power = dft_magnitude_sq(frame);
        const std::vector<double> energies = apply_filterbank(power, bank);
        const std::vector<double> logs = log_energies(energies, cfg.log_floor);
        const std::vector<double> coeffs = dct_ii(logs, dim);
        std::copy(coeffs.begin(), coeffs.end(), out);
    });
}

std::vector<double> chroma_segment(std::span<const double> segment, const FeatureConfig& cfg) {
    const double bin_hz = static_cast<double>(cfg.sample_rate_hz) /
                          static_cast<double>(cfg.frame.frame_length);
    return mean_over_frames(segment, cfg, kChromaClasses,
                            [&](std::span<const double> frame, double* out) {
        const std::vector<double> power = dft_magnitude_sq(frame);
        for (std::size_t bin = 0; bin < power.size(); ++bin) {
            const double f = static_cast<double>(bin) * bin_hz;
            if (f < kChromaMinHz) continue;
            out[pitch_class_of(f)] += std::sqrt(power[bin]);
        }
        const double peak = *std::max_element(out, out + kChromaClasses);
        if (peak > 0.0) {
            for (std::size_t c = 0; c < kChromaClasses; ++c) out[c] /= peak;
        }
    });
}

std::vector<double> spectral_contrast_segment(std::span<const double> segment,
                                              const FeatureConfig& cfg) {
    const double bin_hz = static_cast<double>(cfg.sample_rate_hz) /
                          static_cast<double>(cfg.frame.frame_length);
    const double nyquist = cfg.sample_rate_hz / 2.0;
    const double eps = cfg.log_floor;

    // Bin index ranges per band, fixed across frames.
    std::array<std::pair<std::size_t, std::size_t>, kContrastBands> bands;
    const std::size_t bins = cfg.frame.frame_length / 2 + 1;
    for (std::size_t b = 0; b < kContrastBands; ++b) {
        const double lo = kContrastEdges[b];
        const double hi = b + 1 < kContrastBands ? kContrastEdges[b + 1] : nyquist;
        std::size_t first = bins, last = bins;  // empty by default
        for (std::size_t bin = 0; bin < bins; ++bin) {
            const double f = static_cast<double>(bin) * bin_hz;
            const bool inside = b + 1 < kContrastBands ? (f >= lo && f < hi) : (f >= lo && f <= hi);
            if (inside) {
                if (first == bins) first = bin;
                last = bin + 1;
            }
        }
        bands[b] = {first == bins ? 0 : first, first == bins ? 0 : last};
    }

    std::vector<double> sorted;
    return mean_over_frames(segment, cfg, kContrastBands,
                            [&](std::span<const double> frame, double* out) {
        const std::vector<double> power = dft_magnitude_sq(frame);
        for (std::size_t b = 0; b < kContrastBands; ++b) {
            const auto [first, last] = bands[b];
            const std::size_t n = last - first;
            if (n == 0) {
                out[b] = 0.0;
                continue;
            }
            sorted.resize(n);
            for (std::size_t i = 0; i < n; ++i) sorted[i] = std::sqrt(power[first + i]);
            std::sort(sorted.begin(), sorted.end());
            const std::size_t k = std::max<std::size_t>(
                1, static_cast<std::size_t>(std::ceil(cfg.contrast_alpha * static_cast<double>(n))));
            double valley = 0.0, peak = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                valley += sorted[i];
                peak += sorted[n - 1 - i];
            }
            valley /= static_cast<double>(k);
            peak /= static_cast<double>(k);
            out[b] = std::log(peak + eps) - std::log(valley + eps);
        }
    });
}

std::vector<double> temporal_segment(std::span<const double> segment,
                                     std::uint32_t sample_rate_hz) {
    if (segment.empty()) raise(Status::empty, "temporal features need a non-empty segment");
    const std::size_t len = segment.size();

    double zcr = 0.0;
    if (len > 1) {
        std::size_t changes = 0;
        for (std::size_t i = 1; i < len; ++i) {
            const bool prev_nonneg = segment[i - 1] >= 0.0;
            const bool curr_nonneg = segment[i] >= 0.0;
            if (prev_nonneg != curr_nonneg) ++changes;
        }
        zcr = static_cast<double>(changes) / static_cast<double>(len - 1);
    }

    double weighted = 0.0, total = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        const double mag = std::fabs(segment[t]);
        weighted += static_cast<double>(t) * mag;
        total += mag;
    }
    const double centroid_s =
        total > 0.0 ? weighted / (static_cast<double>(sample_rate_hz) * total) : 0.0;
    return {zcr, centroid_s};
}

FeatureVector pair_feature(const SegmentPair& pair, FeatureKind kind, const FeatureConfig& cfg) {
    if (kind == FeatureKind::baseline_absdiff)
        raise(Status::invalid_argument, "pair_feature does not apply to the baseline kind");

    MelFilterbank bank;
    if (kind == FeatureKind::mfcc)
        bank = build_mel_filterbank(cfg.num_mel_filters, cfg.frame.frame_length,
                                    cfg.sample_rate_hz, cfg.mel_fmin_hz, cfg.resolved_fmax());

    FeatureVector fv;
    fv.kind = kind;
    fv.pair_id = pair.pair_id;
    fv.segment_index = pair.segment_index;
    fv.values = side_feature(pair.cover, kind, cfg, &bank);
    const std::vector<double> original = side_feature(pair.original, kind, cfg, &bank);
    fv.values.insert(fv.values.end(), original.begin(), original.end());
    return fv;
}

FeatureVector baseline_absdiff(const SegmentPair& pair) {
    if (pair.cover.size() != pair.original.size())
        raise(Status::dimension, "segment pair sides differ in length");
    FeatureVector fv;
    fv.kind = FeatureKind::baseline_absdiff;
    fv.pair_id = pair.pair_id;
    fv.segment_index = pair.segment_index;
    fv.values.resize(pair.cover.size());
    for (std::size_t i = 0; i < fv.values.size(); ++i)
        fv.values[i] = std::fabs(pair.cover[i] - pair.original[i]);
    return fv;
}

}  // namespace coverlens
