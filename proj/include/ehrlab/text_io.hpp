#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace ehrlab::detail {

/// Lines with '#' comments stripped and blank lines dropped.
inline std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        lines.push_back(line);
    }
    return lines;
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    return in;
}

}  // namespace ehrlab::detail
