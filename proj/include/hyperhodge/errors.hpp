#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperhodge {

// Every failure in the library carries a stable machine-readable name
// (e.g. "LengthMismatch") next to the human-readable message. The CLI
// surfaces the name verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name))
    {
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

} // namespace hyperhodge
