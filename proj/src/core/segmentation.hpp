#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/audio.hpp"

namespace coverlens {

struct SegmentConfig {
    double segment_seconds = 30.0;
    std::uint32_t sample_rate_hz = 22050;

    std::size_t samples_per_segment() const {
        return static_cast<std::size_t>(std::llround(segment_seconds * sample_rate_hz));
    }
};

// Aligned fixed-length windows of one cover/original pair. Both vectors hold
// exactly samples_per_segment() entries; segment_index is 1-based.
struct SegmentPair {
    std::string pair_id;
    std::uint32_t segment_index = 1;
    std::vector<double> cover;
    std::vector<double> original;
};

// Cuts the clip into ceil(len / W) windows of W = samples_per_segment()
// samples; the final window is zero-padded at the tail.
std::vector<std::vector<double>> segment_signal(const AudioClip& clip, const SegmentConfig& cfg);

// Index-aligned pairs: segment k of the cover with segment k of the original,
// truncated to the shorter clip's segment count.
std::vector<SegmentPair> pair_segments(const AudioClip& cover, const AudioClip& original,
                                       const SegmentConfig& cfg, const std::string& pair_id);

}  // namespace coverlens
