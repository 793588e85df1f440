// Command-line front end: character tables, Hypothesis scans, admissibility
// tables, certified signatures and the regression suite.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prymtyurin/prymtyurin.hpp"

namespace pt = prymtyurin;

namespace
{

enum ExitCode
{
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kCapExceeded = 3,
};

struct RunConfig
{
    std::string group_spec;
    std::string subgroup_spec;
    std::string reps = "auto";
    std::string format = "text";
    std::size_t threads = 1;
    std::size_t order_cap = pt::PermGroup::kDefaultOrderCap;
    std::size_t index_cap = 0;  // 0: no limit
    std::size_t max_r = 2;
    std::size_t max_branch_points = 6;
    std::size_t node_budget = 200'000;
    std::size_t work_cap = 2'000'000;
    bool allow_mixed = false;
    std::string verify_case = "all";
    std::size_t p = 0;
};

// "auto", "deg:N" or "idx:i,j,...".
struct RepSelector
{
    enum class Kind
    {
        automatic,
        by_degree,
        by_index,
    } kind = Kind::automatic;
    std::int64_t degree = 0;
    std::vector<std::size_t> indices;
};

RepSelector parse_rep_selector(std::string const& text)
{
    RepSelector sel;
    if (text == "auto")
        return sel;
    auto number = [&](std::string const& s, std::size_t offset) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (std::exception const&) {
            throw pt::ParseError("expected a number in --reps", offset);
        }
        if (used != s.size())
            throw pt::ParseError("trailing characters in --reps", offset + used);
        return static_cast<std::size_t>(v);
    };
    if (text.rfind("deg:", 0) == 0) {
        sel.kind = RepSelector::Kind::by_degree;
        sel.degree = static_cast<std::int64_t>(number(text.substr(4), 4));
        return sel;
    }
    if (text.rfind("idx:", 0) == 0) {
        sel.kind = RepSelector::Kind::by_index;
        std::size_t pos = 4;
        while (pos <= text.size()) {
            std::size_t const end = std::min(text.find(',', pos), text.size());
            sel.indices.push_back(number(text.substr(pos, end - pos), pos));
            pos = end + 1;
        }
        return sel;
    }
    throw pt::ParseError("--reps must be auto, deg:N or idx:i,j", 0);
}

std::vector<pt::Subgroup> select_subgroups(pt::GroupContext const& ctx, RunConfig const& cfg, bool& partial)
{
    pt::PermGroup const& G = ctx.G();
    std::string const& s = cfg.subgroup_spec;
    if (s.rfind("order:", 0) == 0) {
        std::size_t used = 0;
        std::size_t order = 0;
        try {
            order = std::stoul(s.substr(6), &used);
        } catch (std::exception const&) {
            throw pt::ParseError("expected a subgroup order after 'order:'", 6);
        }
        if (order == 0 || G.order() % order != 0)
            throw pt::InvalidArgument("no subgroup of order " + std::to_string(order) + " can exist");
        auto classes = pt::subgroups_up_to_conjugacy(G, G.order() / order, cfg.work_cap);
        partial = classes.partial;
        std::vector<pt::Subgroup> out;
        for (auto& h : classes.representatives) {
            if (h.order() == order)
                out.push_back(std::move(h));
        }
        return out;
    }
    if (!s.empty())
        return {pt::parse_subgroup_spec(G, s)};
    auto classes = pt::subgroups_up_to_conjugacy(G, cfg.index_cap ? cfg.index_cap : std::size_t(-1), cfg.work_cap);
    partial = classes.partial;
    return classes.representatives;
}

// Hypothesis triples for the selected subgroups and representations.
std::vector<pt::TripleAnalysis> select_triples(pt::GroupContext const& ctx, RunConfig const& cfg, bool& partial)
{
    auto const subgroups = select_subgroups(ctx, cfg, partial);
    auto const sel = parse_rep_selector(cfg.reps);
    if (sel.kind == RepSelector::Kind::by_index) {
        std::vector<pt::TripleAnalysis> out;
        for (auto const& h : subgroups) {
            auto t = pt::analyze_triple(ctx, h, sel.indices);
            if (!t.hypothesis.pass) {
                std::cerr << "Hypothesis fails for |H|=" << h.order() << ":";
                for (auto const& f : t.hypothesis.failures)
                    std::cerr << " [" << f << "]";
                std::cerr << "\n";
                continue;
            }
            out.push_back(std::move(t));
        }
        return out;
    }
    pt::ScanBounds bounds;
    bounds.max_r = cfg.max_r;
    bounds.threads = cfg.threads;
    auto triples = pt::scan_subgroups(ctx, subgroups, bounds);
    if (sel.kind == RepSelector::Kind::by_degree) {
        std::erase_if(triples, [&](pt::TripleAnalysis const& t) { return t.id.n != sel.degree; });
    }
    return triples;
}

int cmd_table(RunConfig const& cfg)
{
    auto ctx = pt::make_context(cfg.group_spec, cfg.order_cap);
    std::cout << pt::render(pt::table_report(*ctx), pt::parse_output_format(cfg.format));
    return kOk;
}

int cmd_scan(RunConfig const& cfg)
{
    auto ctx = pt::make_context(cfg.group_spec, cfg.order_cap);
    pt::ScanBounds bounds;
    if (cfg.index_cap)
        bounds.index_cap = cfg.index_cap;
    bounds.max_r = cfg.max_r;
    bounds.threads = cfg.threads;
    bounds.work_cap = cfg.work_cap;
    auto const result = pt::scan(*ctx, bounds);
    if (result.partial)
        std::cerr << "warning: subgroup enumeration hit the work cap; results are partial\n";
    std::cout << pt::render(pt::scan_report(*ctx, result), pt::parse_output_format(cfg.format));
    return kOk;
}

int cmd_triples(RunConfig const& cfg, bool with_signatures)
{
    auto const format = pt::parse_output_format(cfg.format);
    auto ctx = pt::make_context(cfg.group_spec, cfg.order_cap);
    bool partial = false;
    auto const triples = select_triples(*ctx, cfg, partial);
    if (partial)
        std::cerr << "warning: subgroup enumeration hit the work cap; results are partial\n";
    std::vector<pt::TripleReport> reports;
    for (auto const& t : triples) {
        std::vector<pt::PrymReport> sigs;
        if (with_signatures) {
            pt::SearchBounds sb;
            sb.max_branch_points = cfg.max_branch_points;
            sb.node_budget = cfg.node_budget;
            sb.threads = cfg.threads;
            sb.allow_mixed = cfg.allow_mixed;
            for (auto& r : pt::search_signatures(*ctx, t, sb)) {
                if (r.certified() || cfg.allow_mixed)
                    sigs.push_back(std::move(r));
            }
        }
        reports.push_back(pt::triple_report(*ctx, t, sigs));
    }
    if (reports.empty())
        std::cerr << "note: no triple satisfies the Hypothesis for this selection\n";
    std::cout << pt::render(reports, format, with_signatures);
    return kOk;
}

int cmd_verify(RunConfig const& cfg)
{
    auto const format = pt::parse_output_format(cfg.format);
    auto const results = pt::run_regression_case(cfg.verify_case, cfg.p, cfg.threads);
    bool all = true;
    nlohmann::json doc = nlohmann::json::array();
    for (auto const& r : results) {
        all = all && r.pass();
        if (format == pt::OutputFormat::json) {
            nlohmann::json checks = nlohmann::json::array();
            for (auto const& c : r.checks)
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            doc.push_back({{"case", r.name}, {"pass", r.pass()}, {"checks", checks}});
        } else if (format == pt::OutputFormat::csv) {
            if (&r == &results.front())
                std::cout << "case,check,pass,detail\n";
            for (auto const& c : r.checks)
                std::cout << r.name << "," << c.name << "," << (c.pass ? "true" : "false") << ",\"" << c.detail
                          << "\"\n";
        } else {
            std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << "\n";
            for (auto const& c : r.checks)
                std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        }
    }
    if (format == pt::OutputFormat::json)
        std::cout << nlohmann::json{{"schema", pt::kSchemaVersion}, {"results", doc}}.dump(2) << "\n";
    return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hecke-algebra search for Prym-Tyurin varieties of Galois coverings"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.footer(std::string("CSV columns:\n  table:       ") + pt::kTableCsvColumns +
               "\n  scan:        " + pt::kScanCsvColumns + "\n  admissible:  " + pt::kAdmissibleCsvColumns +
               "\n  signatures:  " + pt::kSignatureCsvColumns +
               "\nExit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 resource cap.");

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", cfg.group_spec,
                        "group spec: sym(n), alt(n), dihedral(p), weylA(n), weylD(n), rot(G), product(G,K), "
                        "perm(deg;(1,2);...)")
            ->required();
        sub->add_option("--order-cap", cfg.order_cap, "abort when the group would exceed this order");
        sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", cfg.threads, "worker threads (results do not depend on it)")
            ->check(CLI::PositiveNumber);
    };
    auto add_triple = [&](CLI::App* sub) {
        add_group(sub);
        sub->add_option("--subgroup", cfg.subgroup_spec,
                        "\"gens:(1,2);(3,4,5)\" or \"order:N\"; omitted means every subgroup class");
        sub->add_option("--reps", cfg.reps, "auto, deg:N or idx:i,j (rational irreducible indices from `table`)");
        sub->add_option("--max-r", cfg.max_r, "largest tuple of representations tried")->check(CLI::PositiveNumber);
        sub->add_option("--index-cap", cfg.index_cap, "only subgroups of at most this index")
            ->check(CLI::PositiveNumber);
        sub->add_option("--work-cap", cfg.work_cap, "subgroup enumeration budget")->check(CLI::PositiveNumber);
    };

    auto* table = app.add_subcommand("table", "conjugacy classes, character table and rational irreducibles");
    add_group(table);

    auto* scan = app.add_subcommand("scan", "all triples satisfying the Hypothesis, with their exponents");
    add_group(scan);
    scan->add_option("--index-cap", cfg.index_cap, "only subgroups of at most this index")->check(CLI::PositiveNumber);
    scan->add_option("--max-r", cfg.max_r, "largest tuple of representations tried")->check(CLI::PositiveNumber);
    scan->add_option("--work-cap", cfg.work_cap, "subgroup enumeration budget")->check(CLI::PositiveNumber);

    auto* admissible = app.add_subcommand("admissible", "per-class fixed-point counts A for selected triples");
    add_triple(admissible);

    auto* signatures = app.add_subcommand("signatures", "admissibility table plus certified signatures");
    add_triple(signatures);
    signatures->add_option("--max-branch-points", cfg.max_branch_points, "largest signature size searched")
        ->check(CLI::PositiveNumber);
    signatures->add_option("--node-budget", cfg.node_budget, "backtracking budget per realizability search")
        ->check(CLI::PositiveNumber);
    signatures->add_flag("--allow-mixed", cfg.allow_mixed,
                         "also list signatures balancing positive and negative A (never certified)");

    auto* verify = app.add_subcommand("verify-paper", "run the regression suite");
    verify->add_option("--case", cfg.verify_case, "case name or 'all'")
        ->check(CLI::IsMember([] {
            auto names = pt::regression_case_names();
            names.push_back("all");
            return names;
        }()));
    verify->add_option("--p", cfg.p, "prime for prop5.3 (default: 3 and 5)");
    verify->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*table)
            return cmd_table(cfg);
        if (*scan)
            return cmd_scan(cfg);
        if (*admissible)
            return cmd_triples(cfg, false);
        if (*signatures)
            return cmd_triples(cfg, true);
        if (*verify) {
            if (cfg.p != 0 && (cfg.p < 3 || !pt::detail::is_prime_u64(cfg.p))) {
                std::cerr << "error: --p must be an odd prime\n";
                return kUsage;
            }
            return cmd_verify(cfg);
        }
    } catch (pt::ParseError const& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (pt::InvalidArgument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (pt::CapExceeded const& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kCapExceeded;
    } catch (pt::Error const& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
