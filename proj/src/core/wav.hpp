#pragma once

#include <string>

#include "core/audio.hpp"

namespace coverlens {

enum class WavDepth {
    int16,    // clamps to [-1, 1], then rounds to the nearest step
    float32,  // lossless round-trip for float-representable samples
};

// Reads a RIFF/WAVE file. Supports PCM 8/16/24/32-bit integer and 32/64-bit
// float data, including the WAVE_FORMAT_EXTENSIBLE wrapping of either.
// Integer samples are normalized by 2^(bits-1); multichannel input is
// downmixed by the per-sample channel mean.
AudioClip read_wav(const std::string& path);

void write_wav(const AudioClip& clip, const std::string& path, WavDepth depth);

}  // namespace coverlens
