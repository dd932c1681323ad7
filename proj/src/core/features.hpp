#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/dsp.hpp"
#include "core/segmentation.hpp"

namespace coverlens {

enum class FeatureKind {
    mfcc,
    chroma,
    spectral_contrast,
    temporal,
    baseline_absdiff,
};

const char* feature_kind_name(FeatureKind kind);
std::optional<FeatureKind> parse_feature_kind(const std::string& name);

// Knobs shared by all feature maps. fmax_hz == 0 selects SR/2.
struct FeatureConfig {
    FrameConfig frame;
    std::uint32_t sample_rate_hz = 22050;
    std::size_t num_mel_filters = 40;
    std::size_t num_mfcc = 13;
    double mel_fmin_hz = 0.0;
    double mel_fmax_hz = 0.0;
    double contrast_alpha = 0.02;
    double log_floor = 1e-10;

    double resolved_fmax() const {
        return mel_fmax_hz > 0.0 ? mel_fmax_hz : sample_rate_hz / 2.0;
    }
};

struct FeatureVector {
    FeatureKind kind = FeatureKind::mfcc;
    std::vector<double> values;
    std::string pair_id;
    std::uint32_t segment_index = 1;
};

// Per-side feature dimension; the pair feature is twice this, except the
// baseline which works on one |cover - original| waveform.
std::size_t per_side_dim(FeatureKind kind, const FeatureConfig& cfg, const SegmentConfig& seg);
std::size_t pair_dim(FeatureKind kind, const FeatureConfig& cfg, const SegmentConfig& seg);

// Frame-averaged MFCCs: DCT of the log mel energies of each frame's one-sided
// power spectrum.
std::vector<double> mfcc_segment(std::span<const double> segment, const FeatureConfig& cfg,
                                 const MelFilterbank& bank);

// Frame-averaged 12-bin pitch-class profile. Each bin with center frequency
// f >= 20 Hz adds its magnitude to class (round(12*log2(f/440)) + 9) mod 12;
// every frame's profile is normalized by its maximum before averaging.
std::vector<double> chroma_segment(std::span<const double> segment, const FeatureConfig& cfg);

// Frame-averaged log peak-to-valley spread in 7 octave bands.
std::vector<double> spectral_contrast_segment(std::span<const double> segment,
                                              const FeatureConfig& cfg);

// [zero-crossing rate, temporal centroid in seconds].
std::vector<double> temporal_segment(std::span<const double> segment,
                                     std::uint32_t sample_rate_hz);

// concat(feature(cover), feature(original)); kind must not be the baseline.
FeatureVector pair_feature(const SegmentPair& pair, FeatureKind kind, const FeatureConfig& cfg);

// values[n] = |cover[n] - original[n]|.
FeatureVector baseline_absdiff(const SegmentPair& pair);

}  // namespace coverlens
