#include "apcover/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string>

namespace apcover {

NaturalSequence parse_sequence_text(std::istream& in) {
    std::vector<std::uint64_t> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Trim trailing CR and surrounding spaces.
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::uint64_t v = 0;
        const char* first = line.data() + start;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected a nonnegative integer");
        }
        if (!values.empty() && v <= values.back()) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": values must be strictly increasing");
        }
        values.push_back(v);
    }
    return NaturalSequence::from_sorted(std::move(values));
}

NaturalSequence read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_sequence_text(in);
}

void write_sequence_file(const std::filesystem::path& path,
                         const NaturalSequence& seq) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (std::uint64_t v : seq) out << v << '\n';
}

} // namespace apcover
