#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gmepw {

// Library-wide error carrying a stable machine-readable kind tag next to the
// human message. CLI front ends map kind() into diagnostics and exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, const std::string& kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

} // namespace gmepw
