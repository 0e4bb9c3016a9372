#pragma once

// Plain-text sequence files: ASCII decimal integers, one per line, strictly
// increasing; lines starting with '#' are comments.

#include <filesystem>
#include <iosfwd>

#include "apcover/ap_core.hpp"

namespace apcover {

NaturalSequence parse_sequence_text(std::istream& in);

/// Throws std::runtime_error if the file cannot be read,
/// std::invalid_argument on malformed content.
NaturalSequence read_sequence_file(const std::filesystem::path& path);

void write_sequence_file(const std::filesystem::path& path,
                         const NaturalSequence& seq);

} // namespace apcover
