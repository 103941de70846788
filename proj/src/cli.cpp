#include "colqsym/cli.hpp"

#include "colqsym/errors.hpp"
#include "colqsym/identities.hpp"
#include "colqsym/parallel.hpp"
#include "colqsym/text_io.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace colqsym {

namespace {

struct Options {
    std::string format = "json";
    unsigned jobs = 0;

    int n = 0;
    std::optional<int> r;
    std::string comp;
    std::string perm;
    bool conj_inverse = false;
    std::string basis;
    bool via_poly = false;
    bool dump_poly = false;
    std::vector<int> widths;

    std::string identity;
    std::optional<int> max_n;
    std::optional<int> max_r;
    bool timing = false;
};

std::string emit(const Json& j) { return dump(j) + "\n"; }

int enum_comps(const Options& o, std::ostream& out)
{
    if (o.n < 1 || !o.r || *o.r < 1)
        throw DomainError("enum-comps needs n >= 1 and r >= 1");
    const auto comps = enumerate_colored_compositions(o.n, *o.r);
    std::ostringstream os;
    if (o.format == "json") {
        Json items = Json::array();
        for (const auto& ce : comps)
            items.push_back(encode(ce));
        os << emit({{"n", o.n}, {"r", *o.r}, {"count", comps.size()}, {"items", std::move(items)}});
    } else {
        for (const auto& ce : comps)
            os << format(ce) << "\n";
    }
    out << os.str();
    return kExitOk;
}

int descent_class_cmd(const Options& o, std::ostream& out)
{
    const ColoredComposition ce = parse_colored_composition(o.comp, o.r);
    const auto members = o.conj_inverse ? conj_inverse_descent_class(ce) : descent_class(ce);
    std::ostringstream os;
    if (o.format == "json") {
        Json items = Json::array();
        for (const auto& a : members)
            items.push_back(encode(a));
        os << emit({{"comp", encode(ce)},
                    {"conj_inverse", o.conj_inverse},
                    {"count", members.size()},
                    {"members", std::move(items)}});
    } else {
        for (const auto& a : members)
            os << format(a) << "\n";
    }
    out << os.str();
    return kExitOk;
}

Widths ribbon_widths(const Options& o, const ColoredComposition& ce)
{
    if (o.widths.empty())
        return uniform_widths(ce.colors_count(), ce.size());
    if (static_cast<int>(o.widths.size()) != ce.colors_count())
        throw DimensionError("--widths needs one value per color");
    for (int w : o.widths)
        if (w < 1)
            throw DomainError("--widths values must be at least 1");
    return o.widths;
}

int ribbon_cmd(const Options& o, std::ostream& out)
{
    const ColoredComposition ce = parse_colored_composition(o.comp, o.r);
    if (o.via_poly && o.basis != "schur")
        throw DomainError("--via-poly applies only to --basis schur");
    const bool needs_poly = o.via_poly || o.dump_poly;
    std::optional<MultiAlphabetPolynomial> poly;
    if (needs_poly)
        poly = colored_ribbon(ce, ribbon_widths(o, ce));

    Json j;
    std::string table;
    if (o.basis == "schur") {
        const SchurExpansion e = o.via_poly ? expand_in_colored_schur(*poly, ce.size())
                                            : schur_expansion_by_tableau_count(ce);
        j = encode(e);
        table = format_table(e);
    } else if (o.basis == "h") {
        const HExpansion e = ribbon_h_expansion(ce);
        j = encode(e);
        table = format_table(e);
    } else {
        const FExpansion e = ribbon_f_expansion(ce);
        j = encode(e);
        table = format_table(e);
    }
    std::ostringstream os;
    if (o.format == "json") {
        if (o.dump_poly)
            j["polynomial"] = encode(*poly);
        os << emit(j);
    } else {
        os << table;
        if (o.dump_poly)
            os << "polynomial: " << poly->to_string() << "\n";
    }
    out << os.str();
    return kExitOk;
}

int rsk_cmd(const Options& o, std::ostream& out)
{
    const ColoredPermutation a = parse_colored_permutation(o.perm, o.r);
    const TableauPair pq = colored_rsk(a);
    std::ostringstream os;
    if (o.format == "json")
        os << emit(encode(pq));
    else
        os << "P\n" << format_table(pq.insertion) << "Q\n" << format_table(pq.recording);
    out << os.str();
    return kExitOk;
}

int tableau_of_cmd(const Options& o, std::ostream& out)
{
    const ColoredPermutation a = parse_colored_permutation(o.perm, o.r);
    const RPartiteTableau bq = colored_class_to_tableau(a);
    const ColoredSet sdes = rpartite_descent_set(bq);
    std::ostringstream os;
    if (o.format == "json") {
        os << emit({{"perm", encode(a)}, {"tableau", encode(bq)}, {"descent_set", encode(sdes)}});
    } else {
        os << format_table(bq) << "sDes " << format(sdes) << "\n";
    }
    out << os.str();
    return kExitOk;
}

int verify_cmd(const Options& o, std::ostream& out)
{
    const auto reports = run_identity(o.identity, o.max_n, o.max_r, o.jobs);
    bool passed = true;
    for (const auto& r : reports)
        passed = passed && r.passed();
    std::ostringstream os;
    if (o.format == "json")
        os << emit(encode_reports(reports));
    else
        os << format_report_table(reports, o.timing);
    out << os.str();
    return passed ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    o.jobs = default_jobs();

    CLI::App app{"Colored compositions, permutations, tableaux and ribbon Schur functions", "colqsym"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", o.jobs, "Worker threads (default: $COLQSYM_JOBS or hardware count)")
        ->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enum-comps", "List Comp(n, r)");
    enumerate->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);

    auto* descent = app.add_subcommand("descent-class", "Members of a colored descent class");
    descent->add_option("--comp", o.comp, "Colored composition, e.g. 2^0,2^1")->required();
    descent->add_option("--r", o.r)->check(CLI::PositiveNumber);
    descent->add_flag("--conj-inverse", o.conj_inverse, "Apply the conjugate inverse to every member");

    auto* ribbon = app.add_subcommand("ribbon", "Expand a colored ribbon Schur function");
    ribbon->add_option("--comp", o.comp)->required();
    ribbon->add_option("--r", o.r)->check(CLI::PositiveNumber);
    ribbon->add_option("--basis", o.basis)->required()->check(CLI::IsMember({"schur", "h", "f"}));
    ribbon->add_flag("--via-poly", o.via_poly, "Schur coefficients by polynomial peeling");
    ribbon->add_flag("--dump-poly", o.dump_poly, "Also print the ribbon polynomial");
    ribbon->add_option("--widths", o.widths, "Alphabet widths for the polynomial path")->delimiter(',');

    auto* rsk = app.add_subcommand("rsk", "Colored Robinson-Schensted pair");
    rsk->add_option("--perm", o.perm)->required();
    rsk->add_option("--r", o.r)->check(CLI::PositiveNumber);

    auto* tableau = app.add_subcommand("tableau-of", "r-partite tableau of a colored permutation");
    tableau->add_option("--perm", o.perm)->required();
    tableau->add_option("--r", o.r)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Exhaustive identity checks");
    std::vector<std::string> choices = identity_names();
    choices.push_back("all");
    verify->add_option("--identity", o.identity)->required()->check(CLI::IsMember(choices));
    verify->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
    verify->add_option("--max-r", o.max_r)->check(CLI::PositiveNumber);
    verify->add_flag("--timing", o.timing, "Show wall time per identity in table output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (enumerate->parsed())
            return enum_comps(o, out);
        if (descent->parsed())
            return descent_class_cmd(o, out);
        if (ribbon->parsed())
            return ribbon_cmd(o, out);
        if (rsk->parsed())
            return rsk_cmd(o, out);
        if (tableau->parsed())
            return tableau_of_cmd(o, out);
        return verify_cmd(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace colqsym
