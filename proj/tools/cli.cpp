#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "circnut/circulant.hpp"
#include "circnut/cyclotomic.hpp"
#include "circnut/json_io.hpp"
#include "circnut/numtheory.hpp"
#include "circnut/oracle.hpp"
#include "circnut/search.hpp"
#include "circnut/theory.hpp"

namespace circnut::cli {

namespace {

using json_io::json;

class UsageError : public std::runtime_error {
public:
    UsageError(std::string code, const std::string& msg) : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

GeneratorSet parse_set(const std::string& text) {
    try {
        return GeneratorSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("malformed_set", e.what());
    }
}

void print(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string table_header(std::uint64_t b) {
    const std::string mod = b < 10 ? std::to_string(b) : "{" + std::to_string(b) + "}";
    return "\\midrule $t \\bmod " + std::to_string(b) + "$ & $Q_{S_t}^{\\!\\bmod " + mod +
           "}(y) \\bmod{\\Phi_{" + std::to_string(b) + "}(y)}$ \\\\";
}

struct Options {
    std::uint64_t order = 0;
    std::string set;
    std::uint64_t t = 0;
    std::uint64_t b = 0;
    std::uint64_t p = 0;
    std::uint64_t x = 0;
    std::uint64_t d = 0;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    unsigned jobs = 1;
    std::string format;
    std::string resume_from;
    bool all = false;
    bool allow_large = false;
};

void cmd_nut_check(const Options& o, std::ostream& out) {
    const GeneratorSet s = parse_set(o.set);
    const NutVerdict v = is_nut(s, o.order);
    if (v.reason == NutReason::GeneratorTooLarge) {
        throw GeneratorTooLarge("generator " + std::to_string(s.max()) + " exceeds half the order " +
                                std::to_string(o.order));
    }
    print(out, json_io::nut_check(s, o.order, v, zero_multiplicity(s, o.order)));
}

void cmd_oracle(const Options& o, std::ostream& out) {
    const GeneratorSet s = parse_set(o.set);
    print(out, json_io::oracle_result(o.order, s, oracle::adjacency_kernel(o.order, s)));
}

std::vector<json> exhaust_rows(std::uint64_t n, std::uint64_t t, unsigned jobs) {
    const auto sets = oracle::enumerate_balanced(n, t);
    std::vector<json> rows(sets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < sets.size(); i = next++) {
            const auto k = oracle::adjacency_kernel(n, sets[i]);
            rows[i] = {{"set", json_io::generator_set(sets[i])},
                       {"nullity", k.nullity},
                       {"is_nut", k.nullity == 1 && k.full_support}};
        }
    };
    const unsigned width = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(sets.size())));
    if (width <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
    }
    return rows;
}

void cmd_exhaust(const Options& o, std::ostream& out) {
    if (o.order % 2 == 1) throw std::invalid_argument("exhaust: order must be even");
    print(out, json(exhaust_rows(o.order, o.t, o.jobs)));
}

void cmd_universal(const Options& o, std::ostream& out) {
    const GeneratorSet s = parse_set(o.set);
    print(out, json_io::universality(s, is_universal(s)));
}

void cmd_cyclotomic(const Options& o, std::ostream& out) { out << cyclotomic(o.b).to_string() << '\n'; }

void cmd_pstar_table(const Options& o, std::ostream& out) {
    const GeneratorSet s = parse_set(o.set);
    const auto rows = pstar_remainder_table(s);
    if (o.format == "latex") {
        out << "\\begin{tabular}{rl}\n\\toprule \n$b$ & $P^*(y) \\pmod{\\Phi_b(y)}$ \\\\ \n\\midrule\n";
        for (const auto& [b, r] : rows) out << b << " & $" << r.to_latex() << "$ \\\\\n";
        out << "\\bottomrule\n\\end{tabular}\n";
    } else {
        for (const auto& [b, r] : rows) out << b << ": " << r.to_string() << '\n';
    }
}

void cmd_appendix_table(const Options& o, std::ostream& out) {
    const auto rows = appendix_table(o.b);
    if (o.format == "latex") {
        out << "\\begin{longtable}{rl}\n\\toprule\n" << table_header(o.b) << "\n\\midrule\n";
        for (const auto& [r, p] : rows) out << r << " & $" << p.to_latex() << "$ \\\\\n";
        out << "\\bottomrule\n\\end{longtable}\n";
    } else {
        for (const auto& [r, p] : rows) out << r << ": " << p.to_string() << '\n';
    }
}

void cmd_claim1(const Options& o, std::ostream& out) {
    const auto e = theory::claim1_unique_remainder(o.t, o.p);
    print(out, {{"t", o.t}, {"p", o.p}, {"element", e ? json(*e) : json(nullptr)}});
}

void cmd_lemma7(const Options& o, std::ostream& out) {
    const bool holds = theory::lemma7_exhaustive(o.t, o.allow_large);
    print(out, {{"t", o.t}, {"order", 4 * o.t + 4}, {"holds", holds}});
}

void cmd_find_pt(const Options& o, std::ostream& out) {
    const auto c = search::find_pt(o.t);
    json j = {{"t", o.t}};
    j["p"] = c ? json(c->removed.front()) : json(nullptr);
    j["candidate"] = c ? json_io::candidate(*c) : json(nullptr);
    print(out, j);
}

void cmd_find_qr(const Options& o, std::ostream& out) {
    const auto found = search::find_qt_rt(o.t, o.all ? search::SearchMode::All : search::SearchMode::First);
    json pairs = json::array();
    for (const auto& c : found) pairs.push_back(json_io::candidate(c));
    print(out, {{"t", o.t}, {"mode", o.all ? "all" : "first"}, {"pairs", std::move(pairs)}});
}

// Last t such that every value in [from, t] appears in the NDJSON file.
std::optional<std::uint64_t> resume_point(const std::string& path, std::uint64_t from) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open resume file " + path);
    std::set<std::uint64_t> done;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("t")) break;  // truncated tail
        done.insert(j["t"].get<std::uint64_t>());
    }
    std::optional<std::uint64_t> last;
    for (std::uint64_t t = from; done.count(t); ++t) last = t;
    return last;
}

void cmd_scan(const Options& o, std::ostream& out) {
    std::uint64_t lo = o.from;
    if (!o.resume_from.empty()) {
        if (auto last = resume_point(o.resume_from, o.from)) lo = *last + 1;
        if (lo > o.to) return;
    }
    if (o.format == "ndjson") {
        search::scan_range(lo, o.to, o.jobs, [&](const search::ScanRecord& rec) {
            out << json_io::scan_record(rec).dump() << '\n' << std::flush;
        });
        return;
    }
    const auto records = search::scan_range(lo, o.to, o.jobs);
    if (o.format == "latex") {
        for (const auto& rec : records) out << search::latex_row(rec) << '\n';
        return;
    }
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(json_io::scan_record(rec));
    print(out, arr);
}

void cmd_totient_bound(const Options& o, std::ostream& out) {
    print(out, {{"d", o.d},
                {"totient_bounded", nt::totient_bounded(o.d)},
                {"eq7_bound_diagnostic", nt::eq7_bound(o.d)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certification of circulant nut graphs", "circnut"};
    app.require_subcommand(1);
    Options o;
    std::function<void(const Options&, std::ostream&)> handler;

    auto add = [&](const std::string& name, const std::string& desc, auto fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };
    const auto formats = CLI::IsMember({"text", "latex"});

    auto* nut = add("nut-check", "Nut verdict for Circ(n, S) via cyclotomic divisibility", cmd_nut_check);
    nut->add_option("--order", o.order, "Order n")->required();
    nut->add_option("--set", o.set, "Generator set, e.g. 1,2,4")->required();

    auto* orc = add("oracle", "Exact kernel of the adjacency matrix", cmd_oracle);
    orc->add_option("--order", o.order)->required();
    orc->add_option("--set", o.set)->required();

    auto* exh = add("exhaust", "Oracle verdicts for every balanced 2t-subset", cmd_exhaust);
    exh->add_option("--order", o.order)->required();
    exh->add_option("--t", o.t)->required()->check(CLI::PositiveNumber);
    exh->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

    auto* uni = add("universal", "Universality certificate for a generator set", cmd_universal);
    uni->add_option("--set", o.set)->required();

    auto* cyc = add("cyclotomic", "Print the b-th cyclotomic polynomial", cmd_cyclotomic);
    cyc->add_option("b", o.b)->required()->check(CLI::PositiveNumber);

    auto* pst = add("pstar-table", "Remainders of P* modulo Phi_b", cmd_pstar_table);
    pst->add_option("--set", o.set)->required();
    pst->add_option("--format", o.format)->check(formats)->default_val("text");

    auto* apx = add("appendix-table", "Remainders of folded Q_{S_t} modulo Phi_b for every t mod b",
                    cmd_appendix_table);
    apx->add_option("--b", o.b)->required();
    apx->add_option("--format", o.format)->check(formats)->default_val("text");

    auto* pred = app.add_subcommand("predicate", "Closed-form criteria");
    pred->require_subcommand(1);
    auto add_pred = [&](const std::string& name, auto fn) {
        CLI::App* sub = pred->add_subcommand(name);
        sub->callback([&handler, fn, name] {
            handler = [fn, name](const Options& opts, std::ostream& os) {
                json j = fn(opts);
                j["predicate"] = name;
                print(os, j);
            };
        });
        return sub;
    };
    auto* thm1 = add_pred("thm1", [](const Options& p) {
        return json{{"n", p.order}, {"d", p.d}, {"value", theory::theorem1_feasible(p.order, p.d)}};
    });
    thm1->add_option("--n", o.order)->required();
    thm1->add_option("--d", o.d)->required();
    auto* thm2 = add_pred("thm2", [](const Options& p) {
        return json{{"n", p.order}, {"d", p.d}, {"value", theory::theorem2_predicate(p.order, p.d)}};
    });
    thm2->add_option("--n", o.order)->required();
    thm2->add_option("--d", o.d)->required();
    auto* thm3 = add_pred("thm3", [](const Options& p) {
        return json{{"n", p.order}, {"x", p.x}, {"t", p.t}, {"value", theory::theorem3_predicate(p.order, p.x, p.t)}};
    });
    thm3->add_option("--n", o.order)->required();
    thm3->add_option("--x", o.x)->required();
    thm3->add_option("--t", o.t)->required();
    auto* l5 = add_pred("lemma5", [](const Options& p) {
        return json{{"t", p.t}, {"n", p.order}, {"value", theory::lemma5_predicate(p.t, p.order)}};
    });
    l5->add_option("--t", o.t)->required();
    l5->add_option("--n", o.order)->required();
    auto* thm6 = add_pred("thm6", [](const Options& p) {
        return json{{"t", p.t}, {"value", theory::theorem6_applicable(p.t)}};
    });
    thm6->add_option("--t", o.t)->required();

    auto* c1 = add("claim1", "Smallest exponent of Q_{S_t} with a unique residue mod p", cmd_claim1);
    c1->add_option("--t", o.t)->required();
    c1->add_option("--p", o.p)->required();

    auto* l7 = add("lemma7", "Exhaustive order-(4t+4) check for even t", cmd_lemma7);
    l7->add_option("--t", o.t)->required();
    l7->add_flag("--allow-large", o.allow_large, "Lift the t <= 6 guard");

    auto* fpt = add("find-pt", "Smallest odd p with {1..2t+1}\\{p} universal", cmd_find_pt);
    fpt->add_option("--t", o.t)->required();

    auto* fqr = add("find-qr", "Pairs q<r with {1..2t+2}\\{q,r} universal", cmd_find_qr);
    fqr->add_option("--t", o.t)->required();
    fqr->add_flag("--all", o.all, "List every pair instead of the first");

    auto* scan = add("scan", "Universal generator sets for a range of t", cmd_scan);
    scan->add_option("--from", o.from)->required();
    scan->add_option("--to", o.to)->required();
    scan->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    scan->add_option("--format", o.format)->check(CLI::IsMember({"json", "latex", "ndjson"}))->default_val("json");
    scan->add_option("--resume-from", o.resume_from, "NDJSON output of an interrupted scan");

    auto* tb = add("totient-bound", "Every b >= 3 with phi(b) <= d (plus the eq7 diagnostic)", cmd_totient_bound);
    tb->add_option("--d", o.d)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("circnut");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        print(out, json_io::error("usage", e.what()));
        return 2;
    }

    try {
        handler(o, out);
        return 0;
    } catch (const UsageError& e) {
        print(out, json_io::error(e.code(), e.what()));
        return 2;
    } catch (const GeneratorTooLarge& e) {
        print(out, json_io::error("generator_too_large", e.what()));
    } catch (const oracle::OracleCapExceeded& e) {
        print(out, json_io::error("oracle_cap_exceeded", e.what()));
    } catch (const std::invalid_argument& e) {
        print(out, json_io::error("precondition", e.what()));
    } catch (const std::domain_error& e) {
        print(out, json_io::error("precondition", e.what()));
    }
    return 1;
}

}  // namespace circnut::cli
