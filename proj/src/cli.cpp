#include "permpat/cli.hpp"

#include "permpat/folog.hpp"
#include "permpat/matcher.hpp"
#include "permpat/reduction.hpp"
#include "permpat/textio.hpp"
#include "permpat/verify.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace permpat::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents))
        throw IoError("cannot write '" + path + "'");
}

// Inline argument, or the contents of a file when it starts with '@'.
std::string inline_or_file(const std::string& arg)
{
    return !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
}

std::string format_positions(const Embedding& e)
{
    std::string s = "(";
    for (Index i = 0; i < e.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.positions()[i]);
    return s + ")";
}

std::uint64_t default_budget()
{
    const char* env = std::getenv("PERMPAT_BUDGET");
    if (!env || !*env)
        return kDefaultBruteForceBudget;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-')
        throw UsageError("PERMPAT_BUDGET must be a non-negative integer");
    return v;
}

// ---------------------------------------------------------------------------

struct MatchArgs {
    std::string pattern;
    std::string text;
    std::string syntax = "auto";
    std::string engine = "auto";
    bool count = false;
    bool all = false;
    std::optional<std::uint64_t> budget;
};

int cmd_match(const MatchArgs& a, std::ostream& out)
{
    static const std::map<std::string, PatternSyntax> syntaxes{
        {"auto", PatternSyntax::Auto},
        {"bracket", PatternSyntax::Bracket},
        {"dash", PatternSyntax::Dash}};
    const GeneralizedPattern p = parse_pattern(inline_or_file(a.pattern), syntaxes.at(a.syntax));
    const Permutation t = parse_permutation(inline_or_file(a.text));
    const MatchMode mode = a.count ? MatchMode::Count
                           : a.all ? MatchMode::EnumerateAll
                                   : MatchMode::Decide;

    if (a.engine == "fo") {
        if (mode != MatchMode::Decide)
            throw UsageError("--engine fo only decides; drop --count/--all");
        const auto r = fo::model_check(fo::encode_structure(t), fo::encode_formula(p));
        if (!r.satisfied) {
            out << "NO MATCH\n";
            return kNegative;
        }
        out << "MATCH " << format_positions(validate_embedding(r.witness)) << "\n";
        return kAffirmative;
    }

    const MatchRequest req{p, t, mode};
    MatchResult r;
    if (a.engine == "brute")
        r = match_bruteforce(req, a.budget.value_or(default_budget()));
    else if (a.engine == "backtrack")
        r = match_backtracking(req);
    else
        r = match_dispatch(req);

    switch (mode) {
    case MatchMode::Decide:
        if (r.found)
            out << "MATCH " << format_positions(*r.witness) << "\n";
        else
            out << "NO MATCH\n";
        break;
    case MatchMode::Count:
        out << r.count << "\n";
        break;
    case MatchMode::EnumerateAll:
        for (const Embedding& e : r.embeddings)
            out << format_positions(e) << "\n";
        break;
    }
    return r.found ? kAffirmative : kNegative;
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
    std::string graph;
    std::optional<long long> k;
    std::string output = "reduced";
    bool trace = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out)
{
    const std::string path = !a.graph.empty() && a.graph.front() == '@' ? a.graph.substr(1) : a.graph;
    const GraphInput in = parse_graph(read_file(path));

    long long k = 0;
    if (a.k)
        k = *a.k;
    else if (in.k)
        k = static_cast<long long>(*in.k);
    else
        throw UsageError("no k given (pass -k or add a 'k <k>' line to the graph file)");
    if (k < 1 || static_cast<Index>(k) > in.graph.vertex_count())
        throw UsageError("k must satisfy 1 <= k <= l (k=" + std::to_string(k) +
                         ", l=" + std::to_string(in.graph.vertex_count()) + ")");

    const ReductionTrace trace = reduce(in.graph, static_cast<Index>(k));
    write_file(a.output + ".pattern", serialize_pattern(trace.stage3.pattern) + "\n");
    write_file(a.output + ".text", serialize_permutation(trace.stage3.text) + "\n");
    if (a.trace)
        write_file(a.output + ".trace", format_trace(trace));
    out << "|P|=" << trace.stage3.pattern.size() << " |T|=" << trace.stage3.text.size() << "\n";
    return kAffirmative;
}

// ---------------------------------------------------------------------------

struct EncodeArgs {
    std::string pattern;
    std::string text;
    std::string output;
};

int cmd_encode_fo(const EncodeArgs& a, std::ostream& out)
{
    const GeneralizedPattern p = parse_pattern(inline_or_file(a.pattern));
    const Permutation t = parse_permutation(inline_or_file(a.text));
    const std::string doc = fo::export_instance(fo::encode_structure(t), fo::encode_formula(p)) + "\n";
    if (a.output.empty())
        out << doc;
    else
        write_file(a.output, doc);
    return kAffirmative;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    verify::Options opts;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (auto why = verify::check_options(a.opts); !why.empty())
        throw UsageError(why);

    std::vector<verify::Suite> suites;
    if (a.suite == "engines" || a.suite == "all")
        suites.push_back(verify::Suite::Engines);
    if (a.suite == "reduction" || a.suite == "all")
        suites.push_back(verify::Suite::Reduction);
    if (a.suite == "fo" || a.suite == "all")
        suites.push_back(verify::Suite::Fo);

    bool ok = true;
    for (verify::Suite s : suites) {
        const verify::Report r = verify::run(s, a.opts);
        out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.summary << "\n";
        if (!r.passed) {
            out << "counterexample:\n" << r.counterexample << "\n";
            ok = false;
        }
    }
    return ok ? kAffirmative : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized permutation pattern matching, the Independent Set reduction, "
                 "and its first-order encoding"};
    app.name("permpat");
    app.require_subcommand(1);

    MatchArgs match_args;
    auto* match = app.add_subcommand("match", "Decide, count or list matchings of a pattern");
    match->add_option("-p,--pattern", match_args.pattern, "Pattern, or @file")->required();
    match->add_option("-t,--text", match_args.text, "Text permutation, or @file")->required();
    auto* count_flag = match->add_flag("--count", match_args.count, "Print the number of matchings");
    match->add_flag("--all", match_args.all, "Print every matching")->excludes(count_flag);
    match->add_option("--engine", match_args.engine, "Decider")
        ->check(CLI::IsMember({"auto", "brute", "backtrack", "fo"}));
    match->add_option("--syntax", match_args.syntax, "Pattern syntax")
        ->check(CLI::IsMember({"auto", "bracket", "dash"}));
    match->add_option("--budget", match_args.budget,
                      "Candidate tuple limit for the brute engine (default 1e8, or PERMPAT_BUDGET)");

    ReduceArgs reduce_args;
    auto* red = app.add_subcommand("reduce", "Reduce an Independent Set instance to pattern matching");
    red->add_option("-g,--graph", reduce_args.graph, "Graph file")->required();
    red->add_option("-k", reduce_args.k, "Independent set size (overrides the file's k line)");
    red->add_option("-o,--output", reduce_args.output, "Output prefix");
    red->add_flag("--trace", reduce_args.trace, "Also write <prefix>.trace");

    EncodeArgs encode_args;
    auto* enc = app.add_subcommand("encode-fo", "Write the first-order model checking instance");
    enc->add_option("-p,--pattern", encode_args.pattern, "Pattern, or @file")->required();
    enc->add_option("-t,--text", encode_args.text, "Text permutation, or @file")->required();
    enc->add_option("-o,--output", encode_args.output, "Output file (default: stdout)");

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Run the cross-checking property suites");
    ver->add_option("--suite", verify_args.suite, "Suite")
        ->check(CLI::IsMember({"engines", "reduction", "fo", "all"}));
    ver->add_option("--max-n", verify_args.opts.max_n, "Largest exhaustive text length");
    ver->add_option("--max-k", verify_args.opts.max_k, "Largest pattern length / set size");
    ver->add_option("--max-l", verify_args.opts.max_l, "Largest graph order");
    ver->add_option("--samples", verify_args.opts.samples, "Random instances per suite");
    ver->add_option("--seed", verify_args.opts.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAffirmative : kUsage;
    }

    try {
        if (match->parsed())
            return cmd_match(match_args, out);
        if (red->parsed())
            return cmd_reduce(reduce_args, out);
        if (enc->parsed())
            return cmd_encode_fo(encode_args, out);
        if (ver->parsed())
            return cmd_verify(verify_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}

}  // namespace permpat::cli
