// g2web: counting, kernel fitting and the word/diagram bijection from the shell.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "g2web/bijection.hpp"
#include "g2web/laurent.hpp"
#include "g2web/planar_map.hpp"
#include "g2web/walks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace g2web;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DominantWeight dominant(const std::string& text, const char* flag) {
    auto w = parse_weight(text);
    if (!w) throw UsageError(std::string(flag) + " expects a,b");
    auto d = DominantWeight::of(*w);
    if (!d) throw UsageError(std::string(flag) + " must be dominant");
    return *d;
}

// Writes to --out when given, else stdout.
void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

std::string diagram_list(const std::vector<Diagram>& ds) {
    std::ostringstream os;
    os << "count " << ds.size() << '\n';
    for (const auto& d : ds) os << '\n' << canonical_encoding(d);
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"G2 lattice walks and non-positive trivalent diagrams"};
    app.require_subcommand(1);

    int n = 0, max_n = 0, jobs = 1;
    std::string from = "0,0", to = "0,0", out, bfile, word, file;
    bool exhaustive = false;
    std::uint64_t sample = 0, seed = 0;

    auto* count = app.add_subcommand("count", "number of walks of length n");
    count->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--from", from);
    count->add_option("--to", to);

    auto* table = app.add_subcommand("table", "walk counts by endpoint");
    table->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--from", from);
    table->add_option("--out", out);

    auto* sequence = app.add_subcommand("sequence", "closed walk counts a(0..max) as a b-file");
    sequence->add_option("--max", max_n)->required()->check(CLI::NonNegativeNumber);
    sequence->add_option("--bfile", bfile);

    auto* recurrence = app.add_subcommand("recurrence", "check the three-term recurrence for a(n)");
    recurrence->add_option("--max", max_n)->required()->check(CLI::Range(3, 100000));

    auto* kfit = app.add_subcommand("kernel-fit", "fit a kernel polynomial to the walk counts");
    max_n = 14;
    kfit->add_option("--max", max_n, "last held-out length")->check(CLI::Range(9, 60));

    auto* kreport = app.add_subcommand("kernel-report", "compare the printed kernel with the fitted one");
    kreport->add_option("--max", max_n, "verification range")->check(CLI::Range(9, 60));
    kreport->add_option("--out", out);

    auto* w2d = app.add_subcommand("word2diagram", "diagram of a word");
    w2d->add_option("word", word, "step tokens, e.g. \"a b B A\"")->required();
    w2d->add_option("--out", out);

    auto* d2w = app.add_subcommand("diagram2word", "word of a triangular diagram file");
    d2w->add_option("file", file)->required();

    auto* rt = app.add_subcommand("roundtrip", "word -> diagram -> word over many words");
    rt->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    auto* ex_flag = rt->add_flag("--exhaustive", exhaustive);
    auto* sample_opt = rt->add_option("--sample", sample)->check(CLI::PositiveNumber);
    auto* seed_opt = rt->add_option("--seed", seed);
    rt->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    ex_flag->excludes(sample_opt);
    sample_opt->needs(seed_opt);

    auto* en = app.add_subcommand("enumerate-diagrams", "diagrams of the closed walks of length n");
    en->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    en->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    en->add_option("--out", out);

    auto* bf = app.add_subcommand("brute-force", "all non-positive diagrams with n boundary points");
    bf->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    bf->add_option("--out", out);

    auto* val = app.add_subcommand("validate", "check a diagram file");
    val->add_option("file", file)->required();

    auto* svg = app.add_subcommand("render-svg", "draw a diagram file");
    svg->add_option("file", file)->required();
    svg->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*count) {
            std::cout << count_walks(dominant(from, "--from"), n, dominant(to, "--to")).get_str() << '\n';
            return kOk;
        }
        if (*table) {
            std::ostringstream os;
            for (const auto& [mu, c] : count_table(dominant(from, "--from"), n))
                os << mu.a << ',' << mu.b << ' ' << c.get_str() << '\n';
            emit(out, os.str());
            return kOk;
        }
        if (*sequence) {
            const std::string body = format_bfile(closed_sequence(max_n));
            if (bfile.empty()) {
                std::cout << body;
            } else {
                write_text_file(bfile, body);
            }
            return kOk;
        }
        if (*recurrence) {
            auto r = check_recurrence(max_n);
            if (r.all_hold) {
                std::cout << "OK 3.." << max_n << '\n';
                return kOk;
            }
            const auto& row = r.rows[static_cast<std::size_t>(*r.first_failure - 3)];
            std::cout << "FAIL at n=" << row.n << ": " << row.lhs.get_str() << " != " << row.rhs.get_str() << '\n';
            return kFailed;
        }
        if (*kfit) {
            FitOptions opt;
            opt.verify_hi = max_n;
            auto fit = fit_kernel(opt);
            if (fit.status != FitStatus::exact_fit) {
                std::cout << "no-fit radius " << fit.radius << (fit.note.empty() ? "" : " (" + fit.note + ")") << '\n';
                return kFailed;
            }
            auto v = verify_kernel(fit, max_n);
            std::cout << "exact-fit shift " << fit.shift << " terms " << fit.kernel.size() << " verified to n=" << max_n
                      << (v.ok ? " OK" : " FAIL") << '\n'
                      << fit.kernel.to_report();
            return v.ok ? kOk : kFailed;
        }
        if (*kreport) {
            FitOptions opt;
            opt.verify_hi = max_n;
            emit(out, kernel_report(fit_kernel(opt), max_n));
            return kOk;
        }
        if (*w2d) {
            Word w;
            try {
                w = parse_word(word);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit(out, serialize(canonical_form(word_to_diagram(w).diagram)));
            return kOk;
        }
        if (*d2w) {
            const Diagram d = read_diagram_file(file);
            if (d.corners().size() != 3) throw UsageError(file + ": a triangular diagram needs three corners");
            try {
                std::cout << format_word(diagram_to_word(TriangularDiagram{d})) << '\n';
            } catch (const NotAStep& e) {
                std::cout << "not-a-step: " << e.what() << '\n';
                return kFailed;
            }
            return kOk;
        }
        if (*rt) {
            if (!exhaustive && sample == 0) throw UsageError("roundtrip needs --exhaustive or --sample with --seed");
            RoundtripOptions opt{exhaustive, sample, seed, jobs};
            auto r = roundtrip_report(n, opt);
            std::cout << r.passed << '/' << r.tested << (r.ok() ? " OK" : " FAIL") << '\n';
            for (const auto& f : r.failures) std::cout << "failure " << format_word(f.word) << ": " << f.reason << '\n';
            for (const auto& [u, v] : r.collisions)
                std::cout << "collision " << format_word(u) << " | " << format_word(v) << '\n';
            return r.ok() ? kOk : kFailed;
        }
        if (*en) {
            emit(out, diagram_list(closed_diagrams(n, jobs)));
            return kOk;
        }
        if (*bf) {
            emit(out, diagram_list(brute_force_diagrams(n)));
            return kOk;
        }
        if (*val) {
            const Diagram d = read_diagram_file(file);
            auto r = validate(d);
            const bool nonpos = is_nonpositive(d), iso = isoperimetric_check(d);
            std::cout << "structure " << (r.ok ? "ok" : "FAIL") << '\n';
            for (const auto& p : r.problems) std::cout << "  " << p << '\n';
            std::cout << "non-positive " << (nonpos ? "ok" : "FAIL") << '\n';
            std::cout << "isoperimetric " << (iso ? "ok" : "FAIL") << '\n';
            return r.ok && nonpos && iso ? kOk : kFailed;
        }
        if (*svg) {
            emit(out, render_svg(read_diagram_file(file)));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << file << ": " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
