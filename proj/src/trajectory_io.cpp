#include "ged/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>
#include <vector>

namespace ged {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string format_message(const std::string& source, std::size_t line, const std::string& what) {
    if (line == 0)
        return source + ": " + what;
    return source + ":" + std::to_string(line) + ": " + what;
}

}  // namespace

TrajectoryParseError::TrajectoryParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(format_message(source, line, what)), line_(line) {}

PointSequence parse_points(std::istream& in, const std::string& source) {
    std::vector<double> coords;
    std::size_t dim = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#')
            continue;

        std::size_t arity = 0;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = body.find(',', pos);
            const std::string_view token = trim(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
            double value = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
                throw TrajectoryParseError(source, line_no, "not a number: '" + std::string(token) + "'");
            if (!std::isfinite(value))
                throw TrajectoryParseError(source, line_no, "coordinate is not finite: '" + std::string(token) + "'");
            coords.push_back(value);
            ++arity;
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }

        if (dim == 0)
            dim = arity;
        else if (arity != dim)
            throw TrajectoryParseError(source, line_no,
                                       "expected " + std::to_string(dim) + " coordinates, found " + std::to_string(arity));
    }
    if (dim == 0)
        throw TrajectoryParseError(source, 0, "no points found");
    return {dim, std::move(coords)};
}

PointSequence parse_points(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw TrajectoryParseError(path.string(), 0, "cannot open file");
    return parse_points(in, path.string());
}

}  // namespace ged
