#include "core/wav.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace coverlens {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

struct FmtChunk {
    std::uint16_t format = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits_per_sample = 0;
};

double decode_sample(const unsigned char* p, std::uint16_t format, std::uint16_t bits) {
    if (format == kFormatFloat) {
        if (bits == 32) {
            float v;
            std::memcpy(&v, p, 4);
            return static_cast<double>(v);
        }
        double v;
        std::memcpy(&v, p, 8);
        return v;
    }
    switch (bits) {
        case 8:
            // 8-bit WAV is unsigned with midpoint 128.
            return (static_cast<int>(p[0]) - 128) / 128.0;
        case 16: {
            const std::int16_t v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
            return v / 32768.0;
        }
        case 24: {
            std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
            if (v & 0x800000) v |= ~0xFFFFFF;
            return v / 8388608.0;
        }
        default: {
            std::int32_t v;
            std::memcpy(&v, p, 4);
            return v / 2147483648.0;
        }
    }
}

void append_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void append_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

AudioClip read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Status::io, "cannot open WAV file: " + path);

    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t size = bytes.size();

    if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0)
        raise(Status::format, "malformed RIFF/WAVE header: " + path);

    FmtChunk fmt;
    bool have_fmt = false;
    const unsigned char* pcm = nullptr;
    std::size_t pcm_bytes = 0;

    std::size_t pos = 12;
    while (pos + 8 <= size) {
        const unsigned char* hdr = data + pos;
        const std::uint32_t chunk_size = read_u32(hdr + 4);
        const std::size_t body = pos + 8;
        if (body + chunk_size > size)
            raise(Status::format, "truncated chunk in WAV file: " + path);

        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (chunk_size < 16) raise(Status::format, "fmt chunk too small: " + path);
            fmt.format = read_u16(data + body);
            fmt.channels = read_u16(data + body + 2);
            fmt.sample_rate = read_u32(data + body + 4);
            fmt.bits_per_sample = read_u16(data + body + 14);
            if (fmt.format == kFormatExtensible) {
                // Sub-format GUID starts at offset 24 of the chunk; its first
                // two bytes carry the wrapped format tag.
                if (chunk_size < 26) raise(Status::format, "extensible fmt chunk too small: " + path);
                fmt.format = read_u16(data + body + 24);
            }
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            pcm = data + body;
            pcm_bytes = chunk_size;
        }
        pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
    }

    if (!have_fmt || pcm == nullptr)
        raise(Status::format, "missing fmt or data chunk: " + path);
    if (fmt.channels == 0 || fmt.sample_rate == 0)
        raise(Status::format, "invalid fmt chunk fields: " + path);

    const bool int_ok = fmt.format == kFormatPcm &&
                        (fmt.bits_per_sample == 8 || fmt.bits_per_sample == 16 ||
                         fmt.bits_per_sample == 24 || fmt.bits_per_sample == 32);
    const bool float_ok = fmt.format == kFormatFloat &&
                          (fmt.bits_per_sample == 32 || fmt.bits_per_sample == 64);
    if (!int_ok && !float_ok)
        raise(Status::unsupported, "unsupported WAV codec (format tag " +
                                       std::to_string(fmt.format) + ", " +
                                       std::to_string(fmt.bits_per_sample) + " bits): " + path);

    const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
    const std::size_t stride = bytes_per_sample * fmt.channels;
    const std::size_t frames = stride == 0 ? 0 : pcm_bytes / stride;

    AudioClip clip;
    clip.sample_rate_hz = fmt.sample_rate;
    clip.samples.resize(frames);
    const double inv_channels = fmt.channels > 0 ? 1.0 / fmt.channels : 0.0;
    for (std::size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < fmt.channels; ++c)
            acc += decode_sample(pcm + f * stride + c * bytes_per_sample, fmt.format,
                                 fmt.bits_per_sample);
        clip.samples[f] = acc * inv_channels;
    }
    return clip;
}

void write_wav(const AudioClip& clip, const std::string& path, WavDepth depth) {
    validate(clip);

    const std::uint16_t bits = depth == WavDepth::int16 ? 16 : 32;
    const std::uint16_t format = depth == WavDepth::int16 ? kFormatPcm : kFormatFloat;
    const std::uint32_t byte_rate = clip.sample_rate_hz * bits / 8;
    const std::uint32_t data_bytes = static_cast<std::uint32_t>(clip.samples.size() * bits / 8);

    std::string out;
    out.reserve(44 + data_bytes);
    out.append("RIFF");
    append_u32(out, 36 + data_bytes);
    out.append("WAVE");
    out.append("fmt ");
    append_u32(out, 16);
    append_u16(out, format);
    append_u16(out, 1);  // mono
    append_u32(out, clip.sample_rate_hz);
    append_u32(out, byte_rate);
    append_u16(out, static_cast<std::uint16_t>(bits / 8));
    append_u16(out, bits);
    out.append("data");
    append_u32(out, data_bytes);

    for (double s : clip.samples) {
        if (depth == WavDepth::int16) {
            const double clamped = std::clamp(s, -1.0, 1.0);
            const long q = std::lround(clamped * 32768.0);
            const std::int16_t v = static_cast<std::int16_t>(std::clamp<long>(q, -32768, 32767));
            append_u16(out, static_cast<std::uint16_t>(v));
        } else {
            const float v = static_cast<float>(s);
            std::uint32_t raw;
            std::memcpy(&raw, &v, 4);
            append_u32(out, raw);
        }
    }

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) raise(Status::io, "cannot open file for writing: " + path);
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) raise(Status::io, "write failed: " + path);
}

}  // namespace coverlens
