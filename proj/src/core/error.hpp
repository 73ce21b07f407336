#ifndef EDGECURRENT_CORE_ERROR_HPP
#define EDGECURRENT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edgecurrent {

enum class errc {
    invalid_argument,
    parse,    // malformed input file
    geometry, // invalid polygon or curve
    config,   // bad kernel size, margin, ...
    bounds,   // shape does not fit the grid
    io,       // file could not be read or written
    internal
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace edgecurrent

#endif
