#include "polarcg/cli.hpp"

#include <array>

#include "polarcg/coupling.hpp"
#include "polarcg/recoupling.hpp"
#include "polarcg/series.hpp"
#include "polarcg/table.hpp"
#include "polarcg/verify.hpp"

#include <CLI11.hpp>

namespace polarcg::cli {

using coupling::CGValue;

namespace {

void print_value(std::ostream& out, const CGValue& value, int decimal_digits) {
    out << exact::to_string(value.value()) << "\n";
    if (decimal_digits >= 0)
        out << exact::to_decimal_string(value.value(), decimal_digits) << "\n";
}

struct QuantumOption {
    std::string text;
    HalfInt parse() const { return half_int_from_string(text); }
};

std::vector<HalfInt> parse_list(const std::string& text, std::size_t expected,
                                const char* what) {
    std::vector<HalfInt> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(half_int_from_string(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() != expected)
        throw domain_error(std::string(what) + ": expected " + std::to_string(expected) +
                           " comma-separated values");
    return values;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact angular-momentum coupling coefficients via the oscillator polar basis"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    int decimal_digits = -1;
    app.add_option("--decimal", decimal_digits, "Also print a decimal approximation")
        ->expected(1);

    // cg
    auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan coefficient <j1 j2; m1 m2 | j3 m3>");
    QuantumOption cg_j1, cg_j2, cg_j3, cg_m1, cg_m2;
    cg_cmd->add_option("--j1", cg_j1.text)->required();
    cg_cmd->add_option("--j2", cg_j2.text)->required();
    cg_cmd->add_option("--j3", cg_j3.text)->required();
    cg_cmd->add_option("--m1", cg_m1.text)->required();
    cg_cmd->add_option("--m2", cg_m2.text)->required();

    // threej
    auto* threej_cmd = app.add_subcommand("threej", "Wigner 3j symbol");
    std::string threej_row, threej_m;
    threej_cmd->add_option("--row", threej_row, "j1,j2,j3")->required();
    threej_cmd->add_option("--m", threej_m, "m1,m2,m3")->required();

    // sixj
    auto* sixj_cmd = app.add_subcommand("sixj", "Wigner 6j symbol {a b c; d e f}");
    std::string sixj_top, sixj_bottom;
    sixj_cmd->add_option("--top", sixj_top, "a,b,c")->required();
    sixj_cmd->add_option("--bottom", sixj_bottom, "d,e,f")->required();

    // ninej
    auto* ninej_cmd = app.add_subcommand("ninej", "Wigner 9j symbol (three rows)");
    std::string ninej_rows[3];
    ninej_cmd->add_option("--row1", ninej_rows[0])->required();
    ninej_cmd->add_option("--row2", ninej_rows[1])->required();
    ninej_cmd->add_option("--row3", ninej_rows[2])->required();

    // passage
    auto* passage_cmd =
        app.add_subcommand("passage", "Passage matrix element <Phi Phi | Psi> via a basis map");
    QuantumOption p_j1, p_m1, p_j2, p_m2, p_j3;
    std::string route = "abs";
    std::string phase_convention = "calibrated";
    passage_cmd->add_option("--j1", p_j1.text)->required();
    passage_cmd->add_option("--m1", p_m1.text)->required();
    passage_cmd->add_option("--j2", p_j2.text)->required();
    passage_cmd->add_option("--m2", p_m2.text)->required();
    passage_cmd->add_option("--j3", p_j3.text)->required();
    passage_cmd->add_option("--route", route, "abs|signed");
    passage_cmd->add_option("--phase-convention", phase_convention, "printed|calibrated");

    // gf-expand
    auto* gf_cmd = app.add_subcommand("gf-expand", "Dump a generating-function expansion");
    std::string gf_which;
    long gf_degree = 6;
    QuantumOption gf_j3, gf_am1, gf_am2;
    std::string gf_side = "first";
    gf_cmd->add_option("--which", gf_which, "3j|cg|recoupling")->required();
    gf_cmd->add_option("--degree", gf_degree);
    gf_cmd->add_option("--j3", gf_j3.text);
    gf_cmd->add_option("--am1", gf_am1.text);
    gf_cmd->add_option("--am2", gf_am2.text);
    gf_cmd->add_option("--side", gf_side, "first|second");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    int verify_max_2j = 8;
    verify_cmd->add_option("suite", suite,
                           "pipelines|orthogonality|symmetry|gf|recoupling|reconcile")
        ->required();
    verify_cmd->add_option("--max-2j", verify_max_2j);

    // table
    auto* table_cmd = app.add_subcommand("table", "Sweep a j-range and emit a table");
    std::string table_what = "cg", table_format = "csv";
    int table_max_2j = 4;
    int table_threads = 1;
    table_cmd->add_option("--what", table_what, "cg|threej|sixj");
    table_cmd->add_option("--max-2j", table_max_2j);
    table_cmd->add_option("--format", table_format, "csv|json");
    table_cmd->add_option("--threads", table_threads);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cg_cmd->parsed()) {
            const basis::CGKey key = basis::CGKey::make(cg_j1.parse(), cg_j2.parse(),
                                                        cg_j3.parse(), cg_m1.parse(),
                                                        cg_m2.parse());
            print_value(out, coupling::cg_racah_oracle(key), decimal_digits);
            return 0;
        }
        if (threej_cmd->parsed()) {
            const auto row = parse_list(threej_row, 3, "--row");
            const auto ms = parse_list(threej_m, 3, "--m");
            print_value(out, coupling::threej(row[0], row[1], row[2], ms[0], ms[1], ms[2]),
                        decimal_digits);
            return 0;
        }
        if (sixj_cmd->parsed()) {
            const auto top = parse_list(sixj_top, 3, "--top");
            const auto bottom = parse_list(sixj_bottom, 3, "--bottom");
            print_value(out,
                        recoupling::sixj(top[0], top[1], top[2], bottom[0], bottom[1], bottom[2]),
                        decimal_digits);
            return 0;
        }
        if (ninej_cmd->parsed()) {
            std::array<std::array<HalfInt, 3>, 3> j;
            for (int r = 0; r < 3; ++r) {
                const auto row = parse_list(ninej_rows[r], 3, "--row");
                for (int c = 0; c < 3; ++c) j[r][c] = row[c];
            }
            print_value(out, recoupling::ninej(j), decimal_digits);
            return 0;
        }
        if (passage_cmd->parsed()) {
            coupling::Route route_value;
            if (route == "abs") {
                route_value = coupling::Route::abs;
            } else if (route == "signed") {
                route_value = coupling::Route::with_sign;
            } else {
                throw domain_error("passage: --route must be abs or signed");
            }
            coupling::PhaseConvention convention;
            if (phase_convention == "printed") {
                convention = coupling::PhaseConvention::printed;
            } else if (phase_convention == "calibrated") {
                convention = coupling::PhaseConvention::calibrated;
            } else {
                throw domain_error("passage: --phase-convention must be printed or calibrated");
            }
            print_value(out,
                        coupling::passage_element(p_j1.parse(), p_m1.parse(), p_j2.parse(),
                                                  p_m2.parse(), p_j3.parse(), route_value,
                                                  convention),
                        decimal_digits);
            return 0;
        }
        if (gf_cmd->parsed()) {
            if (gf_which == "3j") {
                out << series::build_3j_gf(gf_degree).to_json() << "\n";
            } else if (gf_which == "cg") {
                if (gf_j3.text.empty() || gf_am1.text.empty() || gf_am2.text.empty())
                    throw domain_error("gf-expand --which cg requires --j3, --am1, --am2");
                const auto expansion =
                    series::expand_cg_gf(gf_j3.parse(), gf_am1.parse(), gf_am2.parse(), gf_degree);
                out << "{\"gf\":\"cg\",\"j3\":\"" << gf_j3.text << "\",\"am1\":\"" << gf_am1.text
                    << "\",\"am2\":\"" << gf_am2.text << "\",\"terms\":[";
                bool first = true;
                for (const auto& [nn, value] : expansion.integral) {
                    if (!first) out << ",";
                    first = false;
                    out << "{\"n1\":" << nn.first << ",\"n\":" << nn.second << ",\"integral\":\""
                        << exact::rat_to_string(value) << "\",\"closed_form\":\""
                        << exact::rat_to_string(expansion.closed_form.at(nn))
                        << "\",\"printed_form\":\""
                        << exact::rat_to_string(expansion.printed_form.at(nn)) << "\"}";
                }
                out << "]}\n";
            } else if (gf_which == "recoupling") {
                const auto side =
                    (gf_side == "second") ? recoupling::Side::second : recoupling::Side::first;
                const auto form = recoupling::build_coupling_form(side, gf_degree);
                out << form.quadratic.to_json() << "\n";
            } else {
                throw domain_error("gf-expand: --which must be 3j, cg or recoupling");
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            const verify::VerifySuiteResult result = verify::run_suite(suite, verify_max_2j);
            out << verify::format_result(result);
            if (suite == "reconcile") return 0;
            return result.passed() && result.counts_consistent() ? 0 : 1;
        }
        if (table_cmd->parsed()) {
            out << table::emit_table(table_max_2j, table::what_from_string(table_what),
                                     table::format_from_string(table_format), table_threads);
            return 0;
        }
    } catch (const resource_error& e) {
        err << "resource budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace polarcg::cli
