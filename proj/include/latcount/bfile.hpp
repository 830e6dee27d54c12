#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcount/closed_form.hpp"

namespace latcount {

struct BFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed OEIS-style b-file: strictly increasing indices, exact values.
struct BFile {
    std::vector<std::pair<long, BigInt>> entries;
};

/// Reads `index value` lines; '#' comments and blank lines are ignored.
/// Throws BFileError on malformed lines or non-increasing indices.
BFile parse_bfile(const std::string& path);

struct BFileMismatch {
    long index;
    BigInt file_value;
    BigInt computed_value;
};

/// Compares the file against the counting sequence: for each entry (i, v) the
/// computed value is bulk/surface at n = i - offset. Returns the first
/// mismatch, or nullopt on a full match.
std::optional<BFileMismatch> compare_bfile(const BFile& bfile, const LatticeSpec& spec,
                                           CountKind kind, long offset);

}  // namespace latcount
