#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 *     isqrt   N [--rule R] [--style S] [--trace] [--json]
 *     refine  N [--steps K] [--start floor|ceil] [--fibonacci-order]
 *     compare N [--steps K] [--start floor|ceil]
 *     scale   N [--pairs M] [--fibonacci-order]
 *     corpus  [run|list|diff|show|export] [--id ID] [--corpus-file F] [--export-corpus F]
 *
 * Exit status: 0 success, 1 verification or invariant failure, 2 usage error.
 */

#include "fibroot/corpus.hpp"
#include "fibroot/digitmethod.hpp"
#include "fibroot/exactnum.hpp"
#include "fibroot/rational.hpp"
#include "fibroot/refine.hpp"
#include "fibroot/tableau.hpp"
#include "fibroot/trace_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fibroot {

namespace cli_detail {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Natural radicand_arg(const std::string& text) {
    auto n = parse_natural(text);
    if (!n) throw UsageError("not a non-negative integer: '" + text + "'");
    return *n;
}

template <typename T, typename Range>
std::map<std::string, T> name_map(const Range& values, std::string_view (*name)(T)) {
    std::map<std::string, T> m;
    for (T v : values) m.emplace(std::string(name(v)), v);
    return m;
}

inline std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.resize(w, ' ');
    return s;
}

struct IsqrtArgs {
    std::string n;
    DigitRule rule = DigitRule::ExactLargest;
    TableauStyle style = TableauStyle::PracticaGeometrie;
    bool trace = false;
    bool json = false;
};

inline int cmd_isqrt(const IsqrtArgs& a, std::ostream& out, std::ostream& err) {
    const Natural n = radicand_arg(a.n);
    const FibonacciRun run = isqrt_fibonacci(n, a.rule, procedure_for(a.style));
    if (!run.result.consistent() || run.result != isqrt_oracle(n)) {
        err << "internal error: digit method disagrees with the reference root\n";
        return kFailed;
    }
    if (a.json) {
        out << to_json(make_export(run, a.style));
        return kOk;
    }
    out << "root " << run.result.root << " remainder " << run.result.remainder << "\n";
    if (a.trace) out << render_text(build_tableau(run.trace, a.style), true).text();
    return kOk;
}

struct RefineArgs {
    std::string n;
    std::size_t steps = 1;
    StartChoice start = StartChoice::Floor;
    bool fibonacci_order = false;
};

inline int cmd_refine(const RefineArgs& a, std::ostream& out) {
    const Natural n = radicand_arg(a.n);
    if (n == 0) throw UsageError("the root of 0 has no fractional part to refine");
    const MixedOrder order = a.fibonacci_order ? MixedOrder::FractionFirst : MixedOrder::Modern;
    const auto seq = refine_sequence(n, a.start, a.steps);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& s = seq[i];
        out << "step " << i + 1 << ": ";
        if (s.residual.is_zero() && s.correction.is_zero()) {
            out << to_mixed(s.approx, order) << " (exact)\n";
            continue;
        }
        if (i == 0) {
            out << to_mixed(s.approx, order);
        } else {
            out << to_mixed(seq[i - 1].approx, order) << (s.correction.sign() < 0 ? " - " : " + ")
                << s.correction.abs();
        }
        out << " = " << s.approx << ", residual " << s.residual << "\n";
    }
    return kOk;
}

struct CompareArgs {
    std::string n;
    std::size_t steps = 3;
    StartChoice start = StartChoice::Floor;
};

inline int cmd_compare(const CompareArgs& a, std::ostream& out) {
    const Natural n = radicand_arg(a.n);
    if (n < 2) throw UsageError("compare needs N >= 2");
    const auto seq = refine_sequence(n, a.start, a.steps);
    const Natural a0 = isqrt_oracle(n).root + (a.start == StartChoice::Ceil ? 1 : 0);
    std::vector<std::vector<std::string>> table{{"step", "fibonacci", "heron", "newton"}};
    Rational h(a0), x(a0);
    bool equal = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        h = heron_step(h, n);
        x = newton_step(x, n);
        equal = equal && seq[i].approx == h && h == x;
        table.push_back({std::to_string(i + 1), seq[i].approx.str(), h.str(), x.str()});
    }
    std::vector<std::size_t> w(4, 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < 4; ++c) w[c] = std::max(w[c], row[c].size());
    for (const auto& row : table) {
        std::string line;
        for (std::size_t c = 0; c < 4; ++c) line += (c ? "  " : "") + pad(row[c], c == 3 ? 0 : w[c]);
        out << line << "\n";
    }
    out << (equal ? "EQUAL" : "DIFFERENT") << "\n";
    return equal ? kOk : kFailed;
}

struct ScaleArgs {
    std::string n;
    unsigned pairs = 0;
    bool fibonacci_order = false;
};

inline int cmd_scale(const ScaleArgs& a, std::ostream& out) {
    const Natural n = radicand_arg(a.n);
    const ScaleResult s = scale_and_root(n, a.pairs);
    const MixedOrder order = a.fibonacci_order ? MixedOrder::FractionFirst : MixedOrder::Modern;
    out << "root " << s.scaled.root << " remainder " << s.scaled.remainder << "\n";
    out << "descaled " << join_terms(s.terms, order) << " = " << s.descaled << "\n";
    return kOk;
}

struct CorpusArgs {
    std::string action = "run";
    std::string id;
    std::string corpus_file;
    std::string export_file;
    bool action_given = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline int corpus_diff(const CorpusEntry& e, std::ostream& out, bool show_only) {
    bool ok = true;
    for (const auto& f : e.boards) {
        const Tableau actual = corpus_board(e, f);
        const std::string rendered = render_text(actual, true).text();
        out << e.id << " " << f.name << " (" << style_name(f.style) << ")";
        if (show_only) {
            out << "\n" << rendered;
            continue;
        }
        if (rendered == f.render) {
            out << ": render matches fixture\n";
        } else {
            ok = false;
            out << ": render differs from fixture\n--- fixture\n" << f.render << "--- actual\n" << rendered;
        }
        const auto d = diff_tableau(actual, parse_transcription(e.radicand, f.style, f.cells));
        if (d.empty()) {
            out << "  transcription: no discrepancies\n";
        } else {
            ok = false;
            for (const auto& x : d) out << "  transcription: " << describe(x) << "\n";
        }
        for (const auto& c : actual.cells)
            if (c.flag == CellFlag::Inserted)
                out << "  inserted: " << band_name(c.band) << " 10^" << c.column << " digit " << c.digits << " step "
                    << c.step << "\n";
        for (const auto& x : diff_tableau(without_inserted(actual), actual))
            out << "  manuscript board: " << describe(x) << "\n";
    }
    return ok ? kOk : kFailed;
}

inline int cmd_corpus(const CorpusArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.export_file.empty()) {
        std::ofstream f(a.export_file, std::ios::binary);
        if (!f) throw UsageError("cannot write " + a.export_file);
        f << export_corpus();
        if (!f) throw UsageError("cannot write " + a.export_file);
        if (!a.action_given) return kOk;
    }
    if (!a.id.empty() && !find_entry(a.id) && a.corpus_file.empty()) throw UsageError("unknown corpus id " + a.id);

    if (a.action == "export") {
        out << export_corpus();
        return kOk;
    }
    if (a.action == "diff" || a.action == "show") {
        int status = kOk;
        for (const auto& e : corpus())
            if (a.id.empty() || e.id == a.id) status = std::max(status, corpus_diff(e, out, a.action == "show"));
        return status;
    }

    std::vector<CorpusRecord> records;
    if (a.corpus_file.empty()) {
        for (const auto& e : corpus()) records.push_back(record_of(e));
    } else {
        try {
            records = parse_corpus(read_file(a.corpus_file));
        } catch (const std::invalid_argument& ex) {
            err << ex.what() << "\n";
            return kUsage;
        }
    }
    if (!a.id.empty()) {
        std::erase_if(records, [&](const CorpusRecord& r) { return r.id != a.id; });
        if (records.empty()) throw UsageError("unknown corpus id " + a.id);
    }

    if (a.action == "list") {
        for (const auto& r : records)
            out << r.id << "  " << source_name(r.source) << "  " << r.radicand << "  root " << r.root << " remainder "
                << r.remainder << "  " << r.figure_ref << "\n";
        return kOk;
    }

    std::vector<CheckLine> lines;
    if (a.id.empty()) {
        lines = run_corpus(records);
    } else {
        for (const auto& r : records) {
            lines.push_back(check_root(r));
            if (r.fraction) lines.push_back(check_fraction(r.id, r.radicand, *r.fraction));
        }
    }
    std::size_t failed = 0;
    for (const auto& l : lines) {
        out << l.text << "\n";
        failed += l.pass ? 0 : 1;
    }
    out << "passed " << lines.size() - failed << " of " << lines.size() << "\n";
    return failed == 0 ? kOk : kFailed;
}

}  // namespace cli_detail

/// Runs one command line. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Fibonacci's digit-by-digit square root: exact roots, boards and refinements", "fibroot"};
    app.require_subcommand(1);

    const auto rules = name_map<DigitRule>(kAllRules, rule_name);
    const auto styles = name_map<TableauStyle>(
        std::array{TableauStyle::LiberAbaci1202, TableauStyle::LiberAbaci1228, TableauStyle::PracticaGeometrie},
        style_name);
    const std::map<std::string, StartChoice> starts{{"floor", StartChoice::Floor}, {"ceil", StartChoice::Ceil}};

    IsqrtArgs ia;
    auto* isqrt_cmd = app.add_subcommand("isqrt", "integer root and remainder, optionally with the board");
    isqrt_cmd->add_option("N", ia.n, "radicand")->required();
    isqrt_cmd->add_option("--rule", ia.rule, "digit rule")->transform(CLI::CheckedTransformer(rules, CLI::ignore_case));
    isqrt_cmd->add_option("--style", ia.style, "board style")->transform(CLI::CheckedTransformer(styles));
    isqrt_cmd->add_flag("--trace", ia.trace, "print the board with step subscripts");
    isqrt_cmd->add_flag("--json", ia.json, "print the trace as JSON");

    RefineArgs ra;
    auto* refine_cmd = app.add_subcommand("refine", "fractional part by successive corrections");
    refine_cmd->add_option("N", ra.n, "radicand")->required();
    refine_cmd->add_option("--steps", ra.steps, "number of corrections")->check(CLI::Range(1, 64));
    refine_cmd->add_option("--start", ra.start, "integer start")->transform(CLI::CheckedTransformer(starts));
    refine_cmd->add_flag("--fibonacci-order", ra.fibonacci_order, "write fractions before the integer part");

    CompareArgs ca;
    auto* compare_cmd = app.add_subcommand("compare", "Fibonacci, Heron and Newton iterates side by side");
    compare_cmd->add_option("N", ca.n, "radicand")->required();
    compare_cmd->add_option("--steps", ca.steps, "number of iterates")->check(CLI::Range(1, 64));
    compare_cmd->add_option("--start", ca.start, "integer start")->transform(CLI::CheckedTransformer(starts));

    ScaleArgs sa;
    auto* scale_cmd = app.add_subcommand("scale", "root of N*10^(2m), divided back by 10^m");
    scale_cmd->add_option("N", sa.n, "radicand")->required();
    scale_cmd->add_option("--pairs", sa.pairs, "extra digit pairs m")->check(CLI::Range(0u, 1000u));
    scale_cmd->add_flag("--fibonacci-order", sa.fibonacci_order, "write fractions before the integer part");

    CorpusArgs co;
    auto* corpus_cmd = app.add_subcommand("corpus", "verify the worked examples");
    corpus_cmd->add_option("action", co.action, "run, list, diff, show or export")
        ->check(CLI::IsMember({"run", "list", "diff", "show", "export"}));
    corpus_cmd->add_option("--id", co.id, "restrict to one entry");
    corpus_cmd->add_option("--corpus-file", co.corpus_file, "read expected values from an export file");
    corpus_cmd->add_option("--export-corpus", co.export_file, "write the embedded corpus to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (isqrt_cmd->parsed()) return cmd_isqrt(ia, out, err);
        if (refine_cmd->parsed()) return cmd_refine(ra, out);
        if (compare_cmd->parsed()) return cmd_compare(ca, out);
        if (scale_cmd->parsed()) return cmd_scale(sa, out);
        if (corpus_cmd->parsed()) {
            co.action_given = corpus_cmd->count("action") > 0;
            return cmd_corpus(co, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

}  // namespace fibroot
