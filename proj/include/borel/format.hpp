#ifndef BOREL_FORMAT_HPP
#define BOREL_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace borel {

// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) return "?";
    return std::string(buf, res.ptr);
}

}  // namespace borel

#endif  // BOREL_FORMAT_HPP
