#pragma once

#include <stdexcept>
#include <string>

namespace coverlens {

// Stable error categories; mirrored one-to-one by the C API status codes.
enum class Status {
    ok = 0,
    invalid_argument,
    io,           // missing/unreadable/unwritable file
    format,       // malformed file contents (RIFF header, CSV, JSON, ...)
    unsupported,  // recognized container, unsupported codec/variant
    empty,        // empty clip/manifest/list where data is required
    dimension,    // vector/matrix dimension mismatch
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const { return status_; }

  private:
    Status status_;
};

[[noreturn]] inline void raise(Status status, const std::string& message) {
    throw Error(status, message);
}

}  // namespace coverlens
