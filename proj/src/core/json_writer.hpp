#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <string>

namespace coverlens {

// 17 significant digits round-trips every IEEE 754 double, so re-runs with
// the same inputs produce byte-identical files. Non-finite values become
// null (JSON has no NaN/Inf literals).
inline std::string format_double(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(static_cast<char>(c));
                }
        }
    }
    return out;
}

// Append-only writer with caller-controlled key order.
class JsonWriter {
  public:
    JsonWriter& begin_object() { comma(); out_ += '{'; return *this; }
    JsonWriter& end_object() { out_ += '}'; return *this; }
    JsonWriter& begin_array() { comma(); out_ += '['; return *this; }
    JsonWriter& end_array() { out_ += ']'; return *this; }

    JsonWriter& key(const std::string& name) {
        comma();
        out_ += '"';
        out_ += json_escape(name);
        out_ += "\":";
        return *this;
    }

    JsonWriter& value(const std::string& v) { comma(); out_ += '"'; out_ += json_escape(v); out_ += '"'; return *this; }
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(double v) { comma(); out_ += format_double(v); return *this; }
    JsonWriter& value(std::uint64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(std::int64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(std::size_t v) { return value(static_cast<std::uint64_t>(v)); }
    JsonWriter& value(bool v) { comma(); out_ += v ? "true" : "false"; return *this; }

    JsonWriter& value(std::span<const double> values) {
        begin_array();
        for (double v : values) value(v);
        return end_array();
    }

    const std::string& str() const { return out_; }

  private:
    void comma() {
        if (out_.empty()) return;
        const char last = out_.back();
        if (last != '{' && last != '[' && last != ':') out_ += ',';
    }

    std::string out_;
};

}  // namespace coverlens
