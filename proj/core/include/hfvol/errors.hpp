#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfvol {

/// Library error carrying the subsystem that raised it and, for parse
/// failures, the 1-based input line.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0
                                 ? module + ": " + message + " (line " + std::to_string(line) + ")"
                                 : module + ": " + message),
          module_(std::move(module)),
          line_(line) {}

    const std::string& module() const noexcept { return module_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string module_;
    std::size_t line_;
};

[[noreturn]] inline void raise(const std::string& module, const std::string& message,
                               std::size_t line = 0) {
    throw Error(module, message, line);
}

}  // namespace hfvol
