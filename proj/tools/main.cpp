#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "latcount/bfile.hpp"
#include "latcount/closed_form.hpp"
#include "latcount/genfunc.hpp"
#include "latcount/oracle.hpp"
#include "latcount/verify.hpp"

using json = nlohmann::ordered_json;
using namespace latcount;

#ifndef LATCOUNT_DATA_DIR
#define LATCOUNT_DATA_DIR "data"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CountArgs {
    std::string family;
    int rank = 0;
    long n = 0;
    bool surface_kind = false;
    std::string method = "closed";
    std::string format = "plain";
    std::uint64_t budget = 1'000'000'000;
};

BigInt compute_count(const LatticeSpec& spec, long n, bool surface_kind,
                     const std::string& method, std::uint64_t budget) {
    if (method == "closed") return surface_kind ? surface(spec, n) : bulk(spec, n);
    if (method == "oracle") {
        OracleConfig cfg{spec, n, OracleMode::integer_points, budget};
        return surface_kind ? count_surface(cfg) : count_bulk_pspace(cfg);
    }
    if (method == "gf") {
        RationalGF gf = gf_bulk(spec);
        if (surface_kind) gf = gf_surface(gf);
        return gf_expand(gf, static_cast<int>(n) + 1).back();
    }
    throw CLI::ValidationError("--method", "unknown method: " + method);
}

int cmd_count(const CountArgs& a) {
    LatticeSpec spec{parse_family(a.family), a.rank};
    spec.validate();
    BigInt value = compute_count(spec, a.n, a.surface_kind, a.method, a.budget);
    if (a.format == "json") {
        json rec;
        rec["family"] = family_name(spec.family);
        rec["rank"] = spec.rank;
        rec["n"] = a.n;
        rec["kind"] = a.surface_kind ? "surface" : "bulk";
        rec["method"] = a.method;
        rec["count"] = value.get_str();
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kExitOk;
}

int min_rank(Family f) {
    switch (f) {
        case Family::A:
        case Family::Z: return 1;
        case Family::D:
        case Family::Dstar: return 2;
        case Family::E: return 6;
    }
    return 1;
}

struct TableArgs {
    std::string family;
    int rank_max = 8;
    long n_max = 8;
    bool surface_kind = false;
    std::string format = "csv";
};

int cmd_table(const TableArgs& a) {
    Family fam = parse_family(a.family);
    const int lo = min_rank(fam);
    const int hi = fam == Family::E ? std::min(a.rank_max, 8) : a.rank_max;
    if (hi < lo) throw CLI::ValidationError("--rank-max", "below the family's minimum rank");
    auto value = [&](int k, long n) {
        LatticeSpec spec{fam, k};
        return a.surface_kind ? surface(spec, n) : bulk(spec, n);
    };
    if (a.format == "json") {
        json out;
        out["family"] = family_name(fam);
        out["kind"] = a.surface_kind ? "surface" : "bulk";
        out["rows"] = json::array();
        for (int k = lo; k <= hi; ++k) {
            json row;
            row["rank"] = k;
            json vals = json::array();
            for (long n = 0; n <= a.n_max; ++n) vals.push_back(value(k, n).get_str());
            row["values"] = std::move(vals);
            out["rows"].push_back(std::move(row));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "k/n";
        for (long n = 0; n <= a.n_max; ++n) std::cout << "," << n;
        std::cout << "\n";
        for (int k = lo; k <= hi; ++k) {
            std::cout << k;
            for (long n = 0; n <= a.n_max; ++n) std::cout << "," << value(k, n).get_str();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct PolyArgs {
    std::string family;
    int rank = 0;
    bool surface_kind = false;
    std::string variable = "n";
};

int cmd_poly(const PolyArgs& a) {
    LatticeSpec spec{parse_family(a.family), a.rank};
    spec.validate();
    PolyVariable var = a.variable == "L" ? PolyVariable::L : PolyVariable::n;
    QuasiPolynomial qp = fit_quasipolynomial(
        spec, a.surface_kind ? CountKind::surface : CountKind::bulk, var);
    const std::string vname = var == PolyVariable::L ? "L" : "n";
    if (qp.period == 1) {
        std::cout << qp.components[0].to_string(vname) << "\n";
    } else {
        std::cout << "n even: " << qp.components[0].to_string(vname) << "\n";
        std::cout << "n odd:  " << qp.components[1].to_string(vname) << "\n";
    }
    if (a.surface_kind) std::cout << "(valid for n > 0; surface(0) = 1)\n";
    return kExitOk;
}

struct GfArgs {
    std::string family;
    int rank = 0;
    bool surface_kind = false;
};

int cmd_gf(const GfArgs& a) {
    LatticeSpec spec{parse_family(a.family), a.rank};
    spec.validate();
    RationalGF gf = gf_bulk(spec);
    if (a.surface_kind) gf = gf_surface(gf);
    std::cout << "numerator:";
    for (size_t i = 0; i < gf.numerator.size(); ++i)
        std::cout << (i ? "," : " ") << gf.numerator[i].get_str();
    std::cout << "\ndenominator:";
    if (gf.pow_one_plus_x > 0) {
        std::cout << " (1+x)";
        if (gf.pow_one_plus_x > 1) std::cout << "^" << gf.pow_one_plus_x;
    }
    if (gf.pow_one_minus_x > 0) {
        std::cout << " (1-x)";
        if (gf.pow_one_minus_x > 1) std::cout << "^" << gf.pow_one_minus_x;
    }
    if (gf.pow_one_plus_x == 0 && gf.pow_one_minus_x == 0) std::cout << " 1";
    std::cout << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    long n_max = 3;
    int k_max = 25;
    std::string format = "plain";
    std::string fixtures = std::string(LATCOUNT_DATA_DIR) + "/fixtures.txt";
    std::string errata = std::string(LATCOUNT_DATA_DIR) + "/errata.txt";
    std::uint64_t budget = 1'000'000'000;
};

void print_report_plain(const VerificationReport& rep) {
    size_t passed = 0, skipped = 0;
    for (const auto& c : rep.checks) {
        if (c.not_applicable) {
            ++skipped;
            continue;
        }
        if (c.pass) ++passed;
        if (c.known_erratum)
            std::cout << "  [KNOWN-ERRATUM] " << c.description << ": corrected value "
                      << c.expected << (c.pass ? " confirmed" : " NOT confirmed") << "\n";
        else if (!c.pass)
            std::cout << "  FAIL " << c.description << ": expected " << c.expected << ", got "
                      << c.actual << "\n";
    }
    std::cout << "suite " << rep.suite << ": " << passed << "/" << (rep.checks.size() - skipped)
              << " checks passed";
    if (skipped) std::cout << " (" << skipped << " not applicable)";
    std::cout << (rep.passed() ? "" : "  ** FAILURES **") << "\n";
}

json report_to_json(const VerificationReport& rep) {
    json out;
    out["suite"] = rep.suite;
    out["pass"] = rep.passed();
    out["checks"] = json::array();
    for (const auto& c : rep.checks) {
        json rec;
        rec["description"] = c.description;
        rec["expected"] = c.expected;
        rec["actual"] = c.actual;
        rec["pass"] = c.pass;
        if (c.known_erratum) rec["known_erratum"] = true;
        if (c.not_applicable) rec["not_applicable"] = true;
        out["checks"].push_back(std::move(rec));
    }
    return out;
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<VerificationReport> reports;
    if (a.suite == "tables" || a.suite == "all")
        reports.push_back(verify_tables(a.fixtures, a.errata));
    if (a.suite == "oracle" || a.suite == "all")
        reports.push_back(verify_oracle_equivalence(a.n_max, a.budget));
    if (a.suite == "recurrences" || a.suite == "all")
        reports.push_back(verify_polynomial_recurrence(8, 9, 40));
    if (a.suite == "conjectures" || a.suite == "all") {
        for (int col = 1; col <= 3; ++col)
            reports.push_back(verify_conjecture_bulk(col, a.k_max));
        reports.push_back(verify_conjecture_surface(a.k_max));
    }
    if (reports.empty()) throw CLI::ValidationError("--suite", "unknown suite: " + a.suite);

    bool all_pass = true;
    if (a.format == "json") {
        json out = json::array();
        for (const auto& rep : reports) {
            out.push_back(report_to_json(rep));
            all_pass = all_pass && rep.passed();
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& rep : reports) {
            print_report_plain(rep);
            all_pass = all_pass && rep.passed();
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

struct BFileArgs {
    std::string family;
    int rank = 0;
    bool surface_kind = false;
    std::string file;
    long offset = 0;
};

int cmd_bfile_check(const BFileArgs& a) {
    LatticeSpec spec{parse_family(a.family), a.rank};
    spec.validate();
    BFile bf = parse_bfile(a.file);
    auto mismatch = compare_bfile(bf, spec,
                                  a.surface_kind ? CountKind::surface : CountKind::bulk, a.offset);
    if (mismatch) {
        std::cout << "mismatch at index " << mismatch->index << ": file has "
                  << mismatch->file_value.get_str() << ", computed "
                  << mismatch->computed_value.get_str() << "\n";
        return kExitCheckFailed;
    }
    std::cout << "all " << bf.entries.size() << " entries match\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact point counts of root lattices inside hypercubes"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count lattice points for one (family, rank, n)");
    count->add_option("--family", count_args.family, "A, D, Dstar, E or Z")->required();
    count->add_option("--rank", count_args.rank)->required();
    count->add_option("--n", count_args.n)->required()->check(CLI::NonNegativeNumber);
    count->add_flag("--surface", count_args.surface_kind, "surface count instead of bulk");
    count->add_option("--method", count_args.method)
        ->check(CLI::IsMember({"closed", "oracle", "gf"}));
    count->add_option("--format", count_args.format)->check(CLI::IsMember({"plain", "json"}));
    count->add_option("--budget", count_args.budget, "oracle candidate budget");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Emit a rank x n grid of counts");
    table->add_option("--family", table_args.family)->required();
    table->add_option("--rank-max", table_args.rank_max)->required();
    table->add_option("--n-max", table_args.n_max)->required()->check(CLI::NonNegativeNumber);
    table->add_flag("--surface", table_args.surface_kind);
    table->add_option("--format", table_args.format)->check(CLI::IsMember({"csv", "json"}));

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "Print the exact counting (quasi-)polynomial");
    poly->add_option("--family", poly_args.family)->required();
    poly->add_option("--rank", poly_args.rank)->required();
    poly->add_flag("--surface", poly_args.surface_kind);
    poly->add_option("--variable", poly_args.variable)->check(CLI::IsMember({"n", "L"}));

    GfArgs gf_args;
    auto* gf = app.add_subcommand("gf", "Print the rational generating function");
    gf->add_option("--family", gf_args.family)->required();
    gf->add_option("--rank", gf_args.rank)->required();
    gf->add_flag("--surface", gf_args.surface_kind);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", verify_args.suite)
        ->check(CLI::IsMember({"tables", "oracle", "recurrences", "conjectures", "all"}));
    verify->add_option("--n-max", verify_args.n_max, "oracle suite n range")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k-max", verify_args.k_max, "conjecture suite rank limit");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"plain", "json"}));
    verify->add_option("--fixtures", verify_args.fixtures, "fixtures data file");
    verify->add_option("--errata", verify_args.errata, "errata data file");
    verify->add_option("--budget", verify_args.budget, "oracle candidate budget");

    BFileArgs bfile_args;
    auto* bfile = app.add_subcommand("bfile-check", "Compare a sequence against an OEIS b-file");
    bfile->add_option("--family", bfile_args.family)->required();
    bfile->add_option("--rank", bfile_args.rank)->required();
    bfile->add_flag("--surface", bfile_args.surface_kind);
    bfile->add_option("--file", bfile_args.file)->required();
    bfile->add_option("--offset", bfile_args.offset, "file index of the n=0 term");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return cmd_count(count_args);
        if (table->parsed()) return cmd_table(table_args);
        if (poly->parsed()) return cmd_poly(poly_args);
        if (gf->parsed()) return cmd_gf(gf_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (bfile->parsed()) return cmd_bfile_check(bfile_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
