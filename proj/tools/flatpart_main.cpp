// Command-line surface: compute triangles, enumerate and classify words,
// apply the bijections, expand the generating series, run the full
// verification battery, compare sources, and export OEIS b-files.
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 infeasible request, 3 resource limit, 4 I/O failure.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatpart/bijections.hpp"
#include "flatpart/enumerate.hpp"
#include "flatpart/errors.hpp"
#include "flatpart/io.hpp"
#include "flatpart/recurrences.hpp"
#include "flatpart/reference_tables.hpp"
#include "flatpart/report.hpp"
#include "flatpart/series.hpp"
#include "flatpart/verify.hpp"

namespace {

using namespace flatpart;

constexpr int kMaxRecurrenceN = 400;
constexpr int kMaxSeriesN = 120;
constexpr int kMaxPrintedFormulaN = 40;
constexpr int kMaxEnumerateN = 13;

// --output is resolved against FLATPART_OUTPUT_DIR when relative; empty
// means stdout.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(std::cout);
        if (!std::cout) throw IoError("failed writing to standard output");
        return;
    }
    std::filesystem::path target(path);
    if (target.is_relative()) {
        if (const char* dir = std::getenv("FLATPART_OUTPUT_DIR")) target = dir / target;
    }
    std::ofstream out(target);
    if (!out) throw IoError("cannot open " + target.string() + " for writing");
    write(out);
    out.flush();
    if (!out) throw IoError("failed writing to " + target.string());
}

void write_triangle(std::ostream& out, const CountTriangle& t, const std::string& format) {
    if (format == "csv") write_triangle_csv(out, t);
    else if (format == "jsonl") write_triangle_jsonl(out, t);
    else write_triangle_text(out, t);
}

void check_oracle_bound(int oracle_bound, bool force) {
    if (oracle_bound > kMaxOracleBound && !force)
        throw InfeasibleError("oracle bound " + std::to_string(oracle_bound) +
                              " exceeds the cap " + std::to_string(kMaxOracleBound) +
                              " (pass --force to insist)");
    if (oracle_bound > kMaxOracleBound)
        throw ResourceLimitError("oracle bound above the hard cap " +
                                 std::to_string(kMaxOracleBound));
}

std::string poly_text(const std::vector<Integer>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!first) out << " + ";
        if (coeffs[k] != 1) out << coeffs[k] << "*";
        out << "x";
        if (k > 1) out << "^" << k;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

struct TriangleArgs {
    std::string method = "two-term";
    int s = 1;
    int n_max = 6;
    int oracle_bound = kDefaultOracleBound;
    bool force = false;
    std::string format = "text";
    std::string output;
};

CountTriangle compute_triangle(const TriangleArgs& a) {
    check_oracle_bound(a.oracle_bound, a.force);
    const bool plain_method =
        a.method == "eq1" || a.method == "two-term" || a.method == "split";
    if (plain_method && a.s != 1)
        throw InfeasibleError("method " + a.method + " computes the unrefined triangle only; "
                              "use s-layered, brute or egf for s >= 2");

    if (plain_method) {
        if (a.n_max > kMaxRecurrenceN)
            throw ResourceLimitError("recurrence triangles capped at n = " +
                                     std::to_string(kMaxRecurrenceN));
        if (a.method == "eq1") return f_by_eq1(a.n_max);
        if (a.method == "split") return f_by_split(a.n_max);
        return f_by_two_term(a.n_max);
    }
    if (a.method == "brute") {
        if (a.n_max > a.oracle_bound && !a.force)
            throw InfeasibleError("brute enumeration of n = " + std::to_string(a.n_max) +
                                  " exceeds the oracle bound " + std::to_string(a.oracle_bound) +
                                  " (pass --force to use the partition-image generator)");
        return count_s_run_bruteforce(a.n_max, a.s, std::min(a.oracle_bound, kMaxOracleBound));
    }
    if (a.method == "egf") {
        if (a.n_max > kMaxSeriesN)
            throw ResourceLimitError("series extraction capped at n = " +
                                     std::to_string(kMaxSeriesN));
        if (a.s == 1)
            return triangle_from_polys(egf_run_distribution(a.n_max), 1, a.n_max, "egf", 1);
        return triangle_from_polys(egf_s_corrected(std::max(a.n_max - a.s, 0), a.s), a.s,
                                   a.n_max, "egf-corrected", a.s);
    }
    if (a.method == "s-layered") {
        if (a.n_max > kMaxRecurrenceN)
            throw ResourceLimitError("layered triangles capped at n = " +
                                     std::to_string(kMaxRecurrenceN));
        return f_s_layered(a.n_max, a.s);
    }
    if (a.method == "s-printed") {
        if (a.n_max > kMaxPrintedFormulaN)
            throw ResourceLimitError("printed-relation triangles capped at n = " +
                                     std::to_string(kMaxPrintedFormulaN));
        return f_s_paper_triangle(a.n_max, a.s);
    }
    throw InfeasibleError("unknown method " + a.method);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, recurrences, bijections and series for the run "
                 "distribution over flattened partitions"};
    app.require_subcommand(1);

    // triangle ------------------------------------------------------------
    auto triangle_args = std::make_shared<TriangleArgs>();
    CLI::App* triangle = app.add_subcommand("triangle", "compute a run-count triangle");
    triangle->add_option("--method", triangle_args->method)
        ->check(CLI::IsMember({"eq1", "two-term", "split", "brute", "egf", "s-layered",
                               "s-printed"}));
    triangle->add_option("--s", triangle_args->s)->check(CLI::Range(1, 16));
    triangle->add_option("--n-max", triangle_args->n_max)
        ->required()
        ->check(CLI::Range(1, 100000));
    triangle->add_option("--oracle-bound", triangle_args->oracle_bound)
        ->check(CLI::Range(1, 64));
    triangle->add_flag("--force", triangle_args->force);
    triangle->add_option("--format", triangle_args->format)
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    triangle->add_option("--output,-o", triangle_args->output);
    triangle->callback([triangle_args] {
        const CountTriangle t = compute_triangle(*triangle_args);
        with_output(triangle_args->output,
                    [&](std::ostream& out) { write_triangle(out, t, triangle_args->format); });
    });

    // enumerate -----------------------------------------------------------
    struct EnumArgs {
        std::string kind;
        int n = 0;
        std::string method = "filter";
        int oracle_bound = kDefaultOracleBound;
        bool force = false;
        std::string format = "text";
        std::string output;
    };
    auto enum_args = std::make_shared<EnumArgs>();
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list flattened partitions or set partitions");
    enumerate->add_option("--kind", enum_args->kind)
        ->required()
        ->check(CLI::IsMember({"flattened", "partitions"}));
    enumerate->add_option("--n", enum_args->n)->required()->check(CLI::Range(0, 100));
    enumerate->add_option("--method", enum_args->method)
        ->check(CLI::IsMember({"filter", "bijective"}));
    enumerate->add_option("--oracle-bound", enum_args->oracle_bound)->check(CLI::Range(1, 64));
    enumerate->add_flag("--force", enum_args->force);
    enumerate->add_option("--format", enum_args->format)
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    enumerate->add_option("--output,-o", enum_args->output);
    enumerate->callback([enum_args] {
        if (enum_args->n > kMaxEnumerateN)
            throw ResourceLimitError("enumeration capped at n = " +
                                     std::to_string(kMaxEnumerateN));
        check_oracle_bound(enum_args->oracle_bound, enum_args->force);
        std::vector<std::string> lines;
        if (enum_args->kind == "partitions") {
            if (enum_args->n < 0) throw InfeasibleError("partitions need n >= 0");
            for_each_set_partition(enum_args->n, [&](const SetPartition& p) {
                lines.push_back(format_partition(p));
            });
        } else {
            if (enum_args->n < 1) throw InfeasibleError("flattened words need n >= 1");
            const auto words =
                enum_args->method == "bijective"
                    ? gen_flattened_bijective(enum_args->n)
                    : gen_flattened_filter(enum_args->n, enum_args->oracle_bound,
                                           enum_args->force);
            for (const Permutation& w : words) lines.push_back(format_word(w));
        }
        with_output(enum_args->output, [&](std::ostream& out) {
            const std::string key = enum_args->kind == "partitions" ? "partition" : "word";
            if (enum_args->format == "csv") out << key << "\n";
            for (const std::string& line : lines) {
                if (enum_args->format == "jsonl") out << "{\"" << key << "\": \"" << line
                                                      << "\"}\n";
                else out << line << "\n";
            }
        });
    });

    // classify ------------------------------------------------------------
    struct ClassifyArgs {
        int n = 0;
        int k = 0;  // 0 = all
        std::string format = "text";
        std::string output;
    };
    auto classify_args = std::make_shared<ClassifyArgs>();
    CLI::App* classify = app.add_subcommand(
        "classify", "split the flattened words of [n] into the removal classes");
    classify->add_option("--n", classify_args->n)->required()->check(CLI::Range(2, 12));
    classify->add_option("--k", classify_args->k)->check(CLI::Range(1, 8));
    classify->add_option("--format", classify_args->format)
        ->check(CLI::IsMember({"text", "csv"}));
    classify->add_option("--output,-o", classify_args->output);
    classify->callback([classify_args] {
        std::vector<Permutation> words = gen_flattened_bijective(classify_args->n);
        std::sort(words.begin(), words.end());
        with_output(classify_args->output, [&](std::ostream& out) {
            if (classify_args->format == "csv") out << "word,runs,class,two_element_first_run\n";
            std::map<int, std::array<long long, 3>> counts;  // k -> K, L, C
            for (const Permutation& w : words) {
                const int k = run_count(w);
                if (classify_args->k != 0 && k != classify_args->k) continue;
                const FlattenedClass fc = classify_ckl(w);
                auto& c = counts[k];
                c[fc.kl == KLClass::K ? 0 : 1] += 1;
                if (fc.in_c) c[2] += 1;
                const char* kl = fc.kl == KLClass::K ? "K" : "L";
                if (classify_args->format == "csv")
                    out << format_word(w) << "," << k << "," << kl << ","
                        << (fc.in_c ? 1 : 0) << "\n";
                else
                    out << format_word(w) << " runs=" << k << " class=" << kl
                        << (fc.in_c ? " first-run-pair" : "") << "\n";
            }
            if (classify_args->format == "text")
                for (const auto& [k, c] : counts)
                    out << "summary n=" << classify_args->n << " k=" << k << ": K=" << c[0]
                        << " L=" << c[1] << " C=" << c[2] << "\n";
        });
    });

    // bijection -----------------------------------------------------------
    struct BijArgs {
        std::string map;
        std::string input;
        std::string output;
    };
    auto bij_args = std::make_shared<BijArgs>();
    CLI::App* bijection = app.add_subcommand("bijection", "apply one of the bijections");
    bijection->add_option("--map", bij_args->map)
        ->required()
        ->check(CLI::IsMember({"p2f", "f2p", "cl", "cl-inv"}));
    bijection->add_option("--input", bij_args->input)->required();
    bijection->add_option("--output,-o", bij_args->output);
    bijection->callback([bij_args] {
        std::string result;
        if (bij_args->map == "p2f")
            result = format_word(partition_to_flattened(parse_partition(bij_args->input)));
        else if (bij_args->map == "f2p")
            result = format_partition(flattened_to_partition(parse_word(bij_args->input)));
        else if (bij_args->map == "cl")
            result = format_word(cl_forward(parse_word(bij_args->input)));
        else
            result = format_word(cl_inverse(parse_word(bij_args->input)));
        with_output(bij_args->output, [&](std::ostream& out) { out << result << "\n"; });
    });

    // egf -----------------------------------------------------------------
    struct EgfArgs {
        int n_max = kDefaultEgfOrder;
        int s = 1;
        std::string variant = "run";
        std::string format = "text";
        std::string output;
    };
    auto egf_args = std::make_shared<EgfArgs>();
    CLI::App* egf = app.add_subcommand("egf", "expand the generating series");
    egf->add_option("--n-max", egf_args->n_max)->check(CLI::Range(1, kMaxSeriesN));
    egf->add_option("--s", egf_args->s)->check(CLI::Range(1, 8));
    egf->add_option("--variant", egf_args->variant)
        ->check(CLI::IsMember({"run", "s-corrected", "s-printed", "s-printed-direct"}));
    egf->add_option("--format", egf_args->format)
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    egf->add_option("--output,-o", egf_args->output);
    egf->callback([egf_args] {
        const int n_max = egf_args->n_max;
        const int s = egf_args->s;
        CountTriangle t;
        if (egf_args->variant == "run") {
            if (s != 1) throw InfeasibleError("variant run has no s parameter");
            t = triangle_from_polys(egf_run_distribution(n_max), 1, n_max, "egf", 1);
        } else if (egf_args->variant == "s-corrected") {
            t = triangle_from_polys(egf_s_corrected(std::max(n_max - s, 0), s), s, n_max,
                                    "egf-corrected", s);
        } else if (egf_args->variant == "s-printed") {
            t = triangle_from_polys(egf_s_as_printed(std::max(n_max - s, 0), s), s, n_max,
                                    "egf-printed-integrated", s);
        } else {
            t = triangle_from_polys(egf_s_as_printed_direct(std::max(n_max - s, 0), s), s,
                                    n_max, "egf-printed-direct", s);
        }
        with_output(egf_args->output, [&](std::ostream& out) {
            if (egf_args->format == "text") {
                for (int n : t.row_indices()) {
                    std::vector<Integer> coeffs(t.row_length(n) + 1);
                    for (int k = 1; k <= t.row_length(n); ++k) coeffs[k] = t.value(n, k);
                    out << n << ": " << poly_text(coeffs) << "\n";
                }
            } else {
                write_triangle(out, t, egf_args->format);
            }
        });
    });

    // verify ----------------------------------------------------------------
    struct VerifyArgs {
        bool quick = false;
        VerifyOptions opts;
        std::string output;
    };
    auto verify_args = std::make_shared<VerifyArgs>();
    CLI::App* verify = app.add_subcommand("verify", "run the full cross-validation battery");
    verify->add_flag("--quick", verify_args->quick, "small bounds (n <= 6)");
    // Out-of-range bounds surface as resource-limit errors (exit 3) from
    // the library, so the checks here are only elementary sanity.
    CLI::Option* o_tri = verify->add_option("--n-tri", verify_args->opts.n_tri)
                             ->check(CLI::Range(3, 1000));
    CLI::Option* o_brute = verify->add_option("--n-brute", verify_args->opts.n_brute)
                               ->check(CLI::Range(1, 1000));
    CLI::Option* o_bound = verify->add_option("--oracle-bound", verify_args->opts.oracle_bound)
                               ->check(CLI::Range(1, 1000));
    CLI::Option* o_bij = verify->add_option("--n-bij", verify_args->opts.n_bij)
                             ->check(CLI::Range(0, 1000));
    CLI::Option* o_ckl = verify->add_option("--n-ckl", verify_args->opts.n_ckl)
                             ->check(CLI::Range(2, 1000));
    CLI::Option* o_smax = verify->add_option("--s-max", verify_args->opts.s_max)
                              ->check(CLI::Range(2, 16));
    verify->add_option("--output,-o", verify_args->output);
    verify->callback([verify_args, o_tri, o_brute, o_bound, o_bij, o_ckl, o_smax] {
        VerifyOptions opts = verify_args->quick ? VerifyOptions::quick() : VerifyOptions{};
        if (o_tri->count()) opts.n_tri = verify_args->opts.n_tri;
        if (o_brute->count()) opts.n_brute = verify_args->opts.n_brute;
        if (o_bound->count()) opts.oracle_bound = verify_args->opts.oracle_bound;
        if (o_bij->count()) opts.n_bij = verify_args->opts.n_bij;
        if (o_ckl->count()) opts.n_ckl = verify_args->opts.n_ckl;
        if (o_smax->count()) opts.s_max = verify_args->opts.s_max;
        if (opts.n_bij + 1 > opts.n_tri || opts.n_ckl > opts.n_tri)
            throw InfeasibleError("n-tri must cover n-bij + 1 and n-ckl");
        VerifyResult result{};
        with_output(verify_args->output,
                    [&](std::ostream& out) { result = run_verify(opts, out); });
        if (!result.ok()) std::exit(1);
    });

    // report ----------------------------------------------------------------
    struct ReportArgs {
        std::vector<std::string> files;
        int s = 1;
        bool table1 = false, table2 = false, table3 = false;
        std::string format = "text";
        std::string output;
    };
    auto report_args = std::make_shared<ReportArgs>();
    CLI::App* report = app.add_subcommand(
        "report", "compare triangle files (csv/jsonl) and stored reference tables");
    report->add_option("files", report_args->files, "triangle files to compare");
    report->add_option("--s", report_args->s, "refinement level assumed for csv inputs")
        ->check(CLI::Range(1, 16));
    report->add_flag("--table1", report_args->table1, "include the stored run-count table");
    report->add_flag("--table2", report_args->table2, "include the stored two-start table");
    report->add_flag("--table3", report_args->table3, "include the stored three-start table");
    report->add_option("--format", report_args->format)
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    report->add_option("--output,-o", report_args->output);
    report->callback([report_args] {
        std::vector<TriangleSource> sources;
        for (const std::string& file : report_args->files) {
            std::ifstream in(file);
            if (!in) throw IoError("cannot open " + file);
            const std::string label = std::filesystem::path(file).stem().string();
            if (file.size() >= 6 && file.substr(file.size() - 6) == ".jsonl") {
                CountTriangle t = read_triangle_jsonl(in);
                sources.push_back({label, std::move(t)});
            } else {
                sources.push_back({label, read_triangle_csv(in, label, report_args->s)});
            }
        }
        if (report_args->table1) sources.push_back({"table1", reference_table1().values});
        if (report_args->table2) sources.push_back({"table2", reference_table2().values});
        if (report_args->table3) sources.push_back({"table3", reference_table3().values});
        if (sources.size() < 2)
            throw InfeasibleError("report needs at least two sources to compare");
        const DiscrepancyReport rep = discrepancy_report(sources);
        with_output(report_args->output, [&](std::ostream& out) {
            if (report_args->format == "csv") write_report_csv(out, rep);
            else if (report_args->format == "jsonl") write_report_jsonl(out, rep);
            else out << render_report_text(rep);
        });
    });

    // oeis-export -----------------------------------------------------------
    struct OeisArgs {
        std::string seq;
        int n_max = 10;
        std::string output;
    };
    auto oeis_args = std::make_shared<OeisArgs>();
    CLI::App* oeis = app.add_subcommand("oeis-export", "write a b-file");
    oeis->add_option("--seq", oeis_args->seq)
        ->required()
        ->check(CLI::IsMember({"A124324", "A000295", "triangle"}));
    oeis->add_option("--n-max", oeis_args->n_max)->required()->check(CLI::Range(0, 200));
    oeis->add_option("--output,-o", oeis_args->output);
    oeis->callback([oeis_args] {
        std::vector<Integer> values;
        long long start_index = 0;
        const int n_max = oeis_args->n_max;
        if (oeis_args->seq == "A000295") {
            // column k=2; T[n][2] = A000295(n-1), so the file starts at offset 0
            const CountTriangle t = n_max >= 1 ? f_by_two_term(n_max) : CountTriangle();
            for (int n = 1; n <= n_max; ++n) values.push_back(t.value(n, 2));
            start_index = 0;
        } else if (oeis_args->seq == "A124324") {
            // shifted triangle T[n+1][k+1] read by rows n = 0..n_max; row n
            // is exactly the trimmed row n+1 of the run-count triangle
            const CountTriangle t = f_by_two_term(n_max + 1);
            for (int n = 0; n <= n_max; ++n)
                for (int k = 1; k <= t.row_length(n + 1); ++k)
                    values.push_back(t.value(n + 1, k));
            start_index = 0;
        } else {
            // plain triangle read by rows, first cell indexed 1
            const CountTriangle t = n_max >= 1 ? f_by_two_term(n_max) : CountTriangle();
            for (int n = 1; n <= n_max; ++n)
                for (int k = 1; k <= t.row_length(n); ++k) values.push_back(t.value(n, k));
            start_index = 1;
        }
        with_output(oeis_args->output,
                    [&](std::ostream& out) { write_bfile(out, values, start_index); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
