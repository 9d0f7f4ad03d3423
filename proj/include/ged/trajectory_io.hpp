#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ged/core.hpp"

namespace ged {

/// Malformed trajectory input. `line()` is 1-based, 0 when not tied to a line.
class TrajectoryParseError : public std::runtime_error {
public:
    TrajectoryParseError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One point per line, comma-separated decimal coordinates. Blank lines and
/// lines starting with '#' are skipped. The dimension is taken from the first
/// data row and every later row must match it.
PointSequence parse_points(std::istream& in, const std::string& source = "<input>");

/// Reads a trajectory file. Throws TrajectoryParseError (also for unreadable
/// or empty files).
PointSequence parse_points(const std::filesystem::path& path);

}  // namespace ged
