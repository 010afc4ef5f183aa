#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffgraph
{

    /** Malformed textual input; carries the offset of the offending token. */
    class ParseError : public std::invalid_argument
    {
    private:
        std::size_t _position;

    public:
        ParseError(const std::string &message, std::size_t position)
            : std::invalid_argument(message + " (at offset " + std::to_string(position) + ")"),
              _position(position)
        {
        }

        std::size_t position() const noexcept { return _position; }
    };

    /** A configurable cap (element count, node budget, ...) was exceeded. */
    class ResourceLimitError : public std::runtime_error
    {
    public:
        explicit ResourceLimitError(const std::string &message) : std::runtime_error(message) {}
    };

    /** A lookup target is not a member of the enumerated group. */
    class NotInGroupError : public std::domain_error
    {
    public:
        explicit NotInGroupError(const std::string &message) : std::domain_error(message) {}
    };

} // namespace cliffgraph
