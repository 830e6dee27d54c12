#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "latcount/bfile.hpp"

using namespace latcount;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("latcount_bfile_test_" + std::to_string(reinterpret_cast<uintptr_t>(this)) + ".txt");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("parsing ignores comments and blank lines") {
    TempFile f("# D_2 bulk counts\n\n0 1\n1 5\n2 13\n\n# trailing comment\n3 25\n");
    BFile b = parse_bfile(f.path.string());
    REQUIRE(b.entries.size() == 4);
    CHECK(b.entries[0] == std::pair<long, BigInt>{0, 1});
    CHECK(b.entries[3] == std::pair<long, BigInt>{3, 25});
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_bfile(TempFile("0 1\nbogus line\n").path.string()), BFileError);
    CHECK_THROWS_AS(parse_bfile(TempFile("0 1\n1\n").path.string()), BFileError);
    CHECK_THROWS_AS(parse_bfile(TempFile("0 1\n1 5 9\n").path.string()), BFileError);
    CHECK_THROWS_AS(parse_bfile(TempFile("2 13\n1 5\n").path.string()), BFileError);
    CHECK_THROWS_AS(parse_bfile(TempFile("3 25\n3 25\n").path.string()), BFileError);
    CHECK_THROWS_AS(parse_bfile("/nonexistent/path/to/bfile.txt"), BFileError);
}

TEST_CASE("matching sequence passes") {
    TempFile f("0 1\n1 5\n2 13\n3 25\n4 41\n");
    BFile b = parse_bfile(f.path.string());
    CHECK(!compare_bfile(b, {Family::D, 2}, CountKind::bulk, 0).has_value());
}

TEST_CASE("corrupted value is pinpointed") {
    TempFile f("0 1\n1 5\n2 14\n3 25\n");
    BFile b = parse_bfile(f.path.string());
    auto mism = compare_bfile(b, {Family::D, 2}, CountKind::bulk, 0);
    REQUIRE(mism.has_value());
    CHECK(mism->index == 2);
    CHECK(mism->file_value == 14);
    CHECK(mism->computed_value == 13);
}

TEST_CASE("offset shifts the sequence") {
    // Indices 1..4 mapped to n = 0..3.
    TempFile f("1 1\n2 5\n3 13\n4 25\n");
    BFile b = parse_bfile(f.path.string());
    CHECK(!compare_bfile(b, {Family::D, 2}, CountKind::bulk, 1).has_value());
    CHECK(compare_bfile(b, {Family::D, 2}, CountKind::bulk, 0).has_value());
}

TEST_CASE("surface comparison") {
    TempFile f("0 1\n1 4\n2 8\n3 12\n4 16\n");
    BFile b = parse_bfile(f.path.string());
    CHECK(!compare_bfile(b, {Family::D, 2}, CountKind::surface, 0).has_value());
}
