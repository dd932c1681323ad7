#include "core/segmentation.hpp"

#include <algorithm>

namespace coverlens {

namespace {

void check_config(const SegmentConfig& cfg) {
    if (cfg.segment_seconds <= 0.0 || cfg.sample_rate_hz == 0 || cfg.samples_per_segment() == 0)
        raise(Status::invalid_argument, "segment config must give a positive window length");
}

}  // namespace

std::vector<std::vector<double>> segment_signal(const AudioClip& clip, const SegmentConfig& cfg) {
    check_config(cfg);
    validate(clip);
    if (clip.sample_rate_hz != cfg.sample_rate_hz)
        raise(Status::invalid_argument, "clip sample rate does not match segment config; resample first");
    if (clip.samples.empty()) raise(Status::empty, "cannot segment an empty clip");

    const std::size_t window = cfg.samples_per_segment();
    const std::size_t len = clip.samples.size();
    const std::size_t count = (len + window - 1) / window;

    std::vector<std::vector<double>> segments;
    segments.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t begin = k * window;
        const std::size_t end = std::min(begin + window, len);
        std::vector<double> seg(window, 0.0);
        std::copy(clip.samples.begin() + static_cast<std::ptrdiff_t>(begin),
                  clip.samples.begin() + static_cast<std::ptrdiff_t>(end), seg.begin());
        segments.push_back(std::move(seg));
    }
    return segments;
}

std::vector<SegmentPair> pair_segments(const AudioClip& cover, const AudioClip& original,
                                       const SegmentConfig& cfg, const std::string& pair_id) {
    auto cover_segments = segment_signal(cover, cfg);
    auto original_segments = segment_signal(original, cfg);

    const std::size_t count = std::min(cover_segments.size(), original_segments.size());
    std::vector<SegmentPair> pairs;
    pairs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        SegmentPair pair;
        pair.pair_id = pair_id;
        pair.segment_index = static_cast<std::uint32_t>(k + 1);
        pair.cover = std::move(cover_segments[k]);
        pair.original = std::move(original_segments[k]);
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

}  // namespace coverlens
