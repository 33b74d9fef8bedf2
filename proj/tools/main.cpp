#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsdiv/criteria.hpp"
#include "nsdiv/errors.hpp"
#include "nsdiv/intersection.hpp"
#include "nsdiv/io.hpp"
#include "nsdiv/search.hpp"

using namespace nsdiv;

namespace {

const auto kPositive = CLI::Range(1, std::numeric_limits<int>::max(), "POSITIVE");

struct Options {
    int dim = 0;
    int r = 0;
    std::string input;
    std::string inline_json;
    int bound = 3;
    std::optional<long> max_degree;
    std::vector<long> targets;
    std::optional<int> genus;
    std::string format = "text";
};

void add_input(CLI::App* cmd, Options& o) {
    auto* in = cmd->add_option("-i,--input", o.input, "period matrix or polarized-ns JSON file ('-' for stdin)");
    auto* js = cmd->add_option("--json", o.inline_json, "inline JSON document");
    in->excludes(js);
}

void add_search(CLI::App* cmd, Options& o) {
    cmd->add_option("-B,--bound", o.bound, "coordinate bound B for the box [-B, B]^rank")
        ->check(kPositive)
        ->capture_default_str();
    cmd->add_option("--max-degree", o.max_degree, "largest divisor degree d")->check(kPositive);
    cmd->add_option("--targets", o.targets, "explicit divisor degrees, e.g. 4,6")
        ->delimiter(',')
        ->check(kPositive);
}

Problem load(const Options& o) {
    if (!o.inline_json.empty()) return load_problem(o.inline_json);
    if (o.input.empty()) throw ParseError("no input: pass --input FILE or --json TEXT");
    return load_problem_file(o.input);
}

int run(const std::string& cmd, const Options& o) {
    const Format fmt = parse_format(o.format);
    if (cmd == "qform") {
        const auto q = q_symbolic(o.dim, o.r);
        std::cout << format_qform(o.dim, o.r, q, fmt);
        return 0;
    }
    Problem p = load(o);
    for (const auto& w : p.warnings) std::cerr << "warning: " << w << "\n";
    if (cmd == "ns") {
        std::cout << format_ns(p.pns, fmt);
        return 0;
    }
    const PolarizedContext ctx(p.n);
    if (cmd == "search" || cmd == "table") {
        const SearchQuery q{o.bound, o.max_degree, o.targets};
        const auto records = enumerate(ctx, p.pns, q);
        std::cout << (cmd == "table" ? format_table(p.pns, records, fmt) : format_records(p.pns, records, fmt));
        return 0;
    }
    if (cmd == "classify") {
        const auto report = classify(ctx, p.pns, o.bound);
        std::optional<std::vector<EllipticCover>> covers;
        if (o.genus) {
            std::optional<long> max_k;
            if (o.max_degree) max_k = *o.max_degree;
            covers = elliptic_covers(ctx, p.pns, *o.genus, o.bound, max_k);
        }
        std::cout << format_report(report, covers ? &*covers : nullptr, fmt);
        return 0;
    }
    throw ParseError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neron-Severi lattices, q_r forms and abelian divisors of principally polarized abelian varieties"};
    app.require_subcommand(1);
    Options o;

    auto* qform = app.add_subcommand("qform", "print q_r as a polynomial in the a_ij");
    qform->add_option("--dim", o.dim, "dimension n")->required()->check(CLI::Range(1, kMaxDimension));
    qform->add_option("--r", o.r, "degree r, 2 <= r <= n")->required()->check(kPositive);

    auto* ns = app.add_subcommand("ns", "compute NS(A) and a basis of NS(A,Theta)");
    add_input(ns, o);

    auto* search = app.add_subcommand("search", "enumerate primitive classes of abelian divisors");
    add_input(search, o);
    add_search(search, o);

    auto* table = app.add_subcommand("table", "divisor class, (Z.Theta^(n-1)) and (E.Theta) as a table");
    add_input(table, o);
    add_search(table, o);

    auto* classify_cmd = app.add_subcommand("classify", "decomposability and Jacobian criteria");
    add_input(classify_cmd, o);
    classify_cmd->add_option("-B,--bound", o.bound, "coordinate bound B")
        ->check(kPositive)
        ->capture_default_str();
    classify_cmd->add_option("--genus", o.genus, "also list minimal elliptic covers of a genus-g curve")
        ->check(kPositive);
    classify_cmd->add_option("--max-degree", o.max_degree, "largest elliptic cover degree k (with --genus)")
        ->check(kPositive);

    for (auto* c : {qform, ns, search, table, classify_cmd})
        c->add_option("--format", o.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
