#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace coverlens {

// Mono audio signal. Amplitudes are dimensionless with nominal range [-1, 1];
// ingestion guarantees a single channel.
struct AudioClip {
    std::vector<double> samples;
    std::uint32_t sample_rate_hz = 0;

    double duration_seconds() const {
        return sample_rate_hz == 0
                   ? 0.0
                   : static_cast<double>(samples.size()) / sample_rate_hz;
    }
};

inline void validate(const AudioClip& clip) {
    if (clip.sample_rate_hz == 0)
        raise(Status::invalid_argument, "audio clip sample rate must be positive");
    for (double s : clip.samples) {
        if (!std::isfinite(s))
            raise(Status::invalid_argument, "audio clip contains non-finite samples");
    }
}

}  // namespace coverlens
