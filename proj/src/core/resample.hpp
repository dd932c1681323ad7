#pragma once

#include "core/audio.hpp"

namespace coverlens {

// Windowed-sinc polyphase resampler (Kaiser window, beta = 8, 32 taps per
// phase). Output length is round(len * target / source); a pure tone below
// both Nyquist limits keeps its frequency within one FFT bin.
AudioClip resample(const AudioClip& clip, std::uint32_t target_rate_hz);

}  // namespace coverlens
