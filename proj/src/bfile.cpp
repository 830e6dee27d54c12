#include "latcount/bfile.hpp"

#include <fstream>
#include <sstream>

namespace latcount {

BFile parse_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BFileError("cannot open b-file: " + path);
    BFile bf;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        if (!(ls >> idx_tok)) continue;  // blank
        if (!(ls >> val_tok) || (ls >> extra))
            throw BFileError(path + ":" + std::to_string(lineno) +
                             ": expected `index value` per line");
        long idx;
        try {
            size_t pos = 0;
            idx = std::stol(idx_tok, &pos);
            if (pos != idx_tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw BFileError(path + ":" + std::to_string(lineno) + ": bad index `" + idx_tok + "`");
        }
        BigInt val;
        if (mpz_set_str(val.get_mpz_t(), val_tok.c_str(), 10) != 0)
            throw BFileError(path + ":" + std::to_string(lineno) + ": bad value `" + val_tok + "`");
        if (!bf.entries.empty() && idx <= bf.entries.back().first)
            throw BFileError(path + ":" + std::to_string(lineno) +
                             ": indices must be strictly increasing");
        bf.entries.emplace_back(idx, val);
    }
    return bf;
}

std::optional<BFileMismatch> compare_bfile(const BFile& bfile, const LatticeSpec& spec,
                                           CountKind kind, long offset) {
    for (const auto& [idx, val] : bfile.entries) {
        long n = idx - offset;
        if (n < 0)
            return BFileMismatch{idx, val, BigInt(0)};
        BigInt computed = kind == CountKind::bulk ? bulk(spec, n) : surface(spec, n);
        if (computed != val) return BFileMismatch{idx, val, computed};
    }
    return std::nullopt;
}

}  // namespace latcount
