// Command-line front end: every operation as a reproducible, seeded
// experiment with machine-readable reports.

#include "igr/igr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using igr::json;

struct Output {
    std::string path;  // empty = stdout
    std::string format = "json";

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw igr::input_error("cannot open output file '" + path + "'");
        out << text;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw igr::input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Several commands accept a file holding one or more graphs in the core
// format, back to back.
std::vector<igr::Graph> read_graphs(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<igr::Graph> graphs;
    while (in.peek() != std::char_traits<char>::eof()) {
        if (in.peek() == '\n') {
            in.get();
            continue;
        }
        graphs.push_back(igr::parse_graph(in));
    }
    if (graphs.empty()) throw igr::input_error("no graphs in '" + path + "'");
    return graphs;
}

std::string text_lines(const json& report, const std::string& prefix = "") {
    std::string out;
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            out += text_lines(value, prefix + key + ".");
        } else {
            out += prefix + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        }
    }
    return out;
}

// Canonical report envelope. JSON keys are emitted sorted, so replaying
// a command with identical arguments yields byte-identical output.
void emit(const Output& out, const std::string& command, const json& params, const json& report) {
    const json envelope{{"version", igr::version}, {"command", command}, {"params", params}, {"report", report}};
    if (out.format == "json") {
        out.write(envelope.dump(2) + "\n");
    } else if (out.format == "text") {
        out.write(text_lines(envelope));
    } else {
        throw igr::input_error("format '" + out.format + "' is not available for this command");
    }
}

igr::PoolMode parse_pool_mode(const std::string& name) {
    if (name == "all" || name == "allBipartite") return igr::PoolMode::all_bipartite;
    if (name == "good" || name == "goodLowerBound") return igr::PoolMode::good_lower_bound;
    throw igr::input_error("unknown pool mode '" + name + "' (use all|good)");
}

json ledger_json(const igr::CertificateLedger& led) { return igr::to_json(led); }

std::string ledger_csv(const std::vector<igr::CertificateLedger>& ledgers) {
    std::string out = "n,u,k,pool_mode,pool_edges,pool_size_lower,lhs_log2_num,lhs_log2_den,rhs_log2_num,rhs_log2_den,verdict\n";
    for (const auto& led : ledgers) {
        out += std::to_string(led.n) + "," + std::to_string(led.u) + "," + std::to_string(led.k) + "," +
               igr::pool_mode_name(led.pool_mode) + "," + std::to_string(led.pool_edges) + "," +
               led.pool_size_lower.get_str() + "," + led.lhs_log2.get_num().get_str() + "," +
               led.lhs_log2.get_den().get_str() + "," + led.rhs_log2.get_num().get_str() + "," +
               led.rhs_log2.get_den().get_str() + "," + (led.verdict ? "true" : "false") + "\n";
    }
    return out;
}

std::string family_file(const igr::FamilyReport& report) {
    std::ostringstream out;
    out << "FAMILY " << report.delta << ' ' << report.seed << '\n';
    for (const auto& entry : report.entries) {
        out << "N " << entry.n << ' ' << entry.members.size() << '\n';
        for (const auto& g : entry.members) out << igr::serialize(g);
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"implicit graph representations: labeling schemes, universal graphs, degeneracy lemmas, counting certificates"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the report to this file instead of stdout");
    app.add_option("--format", out.format, "report format: json|text (csv for sweeps)")->default_val("json");

    // Common parameter slots; each subcommand binds the ones it uses.
    std::string in_path, in_path2, labels_path, scheme_name, pool_name = "all", n_list_str, family_out;
    std::uint64_t seed = 0;
    int n = 0, u = 0, c = 1, cap = 1, n_max = 4, u_max = 4;
    long long m = 0, k = 1, trials = 1, attempts = 1, budget = 10'000'000, family_cap = 16;
    double eps = 0.75, eps_prime = 0.5, delta = 0.2, u_exp = 0.3;
    long prec = 64;
    bool raw = false;

    auto* sample = app.add_subcommand("sample-bipartite", "sample a uniform member of B(n,m)");
    sample->add_option("--n", n)->required();
    sample->add_option("--m", m)->required();
    sample->add_option("--seed", seed)->required();
    sample->add_flag("--raw", raw, "emit only the graph file, bit-exact");

    auto* degen = app.add_subcommand("degeneracy", "peeling order and exact degeneracy");
    degen->add_option("--in", in_path)->required();

    auto* findbad = app.add_subcommand("find-bad", "exact search for a small min-degree-c induced subgraph");
    findbad->add_option("--in", in_path)->required();
    findbad->add_option("--c", c)->required();
    findbad->add_option("--cap", cap)->required();
    findbad->add_option("--budget", budget);

    auto* good = app.add_subcommand("is-good", "goodness test for a bipartite graph");
    good->add_option("--in", in_path)->required();
    good->add_option("--eps", eps)->required();
    good->add_option("--eps-prime", eps_prime)->required();
    good->add_option("--budget", budget);

    auto* lemma = app.add_subcommand("lemma21", "Monte Carlo bad-subgraph frequency vs the exact union bound");
    lemma->add_option("--n", n)->required();
    lemma->add_option("--m", m)->required();
    lemma->add_option("--c", c)->required();
    lemma->add_option("--cap", cap)->required();
    lemma->add_option("--trials", trials)->required();
    lemma->add_option("--seed", seed)->required();
    lemma->add_option("--budget", budget);

    auto* label = app.add_subcommand("label", "produce an adjacency labeling");
    label->add_option("--in", in_path)->required();
    label->add_option("--scheme", scheme_name, "forest | degenerate:k | row")->required();
    label->add_flag("--raw", raw, "emit only the labeling file");

    auto* verify = app.add_subcommand("verify-label", "check a labeling against a graph");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--labels", labels_path)->required();

    auto* buildu = app.add_subcommand("build-universal", "expand a scheme into its universal carrier");
    buildu->add_option("--scheme", scheme_name)->required();
    buildu->add_option("--n", n)->required();
    buildu->add_flag("--raw", raw, "emit only the carrier graph file");

    auto* embed = app.add_subcommand("embed", "exact induced-embedding search F into U");
    embed->add_option("--f", in_path)->required();
    embed->add_option("--u", in_path2)->required();

    auto* minu = app.add_subcommand("min-universal", "smallest carrier size representing a family");
    minu->add_option("--in", in_path, "file with the family members, concatenated")->required();
    minu->add_option("--umax", u_max)->required();

    auto* countrep = app.add_subcommand("count-representable", "count n-vertex graphs embeddable into U");
    countrep->add_option("--in", in_path)->required();
    countrep->add_option("--n", n)->required();

    auto* countdeg = app.add_subcommand("count-degenerate", "count labeled c-degenerate graphs on n vertices");
    countdeg->add_option("--n", n)->required();
    countdeg->add_option("--c", c)->required();

    auto* closure = app.add_subcommand("closure-speed", "labeled speed of the hereditary closure of seeds");
    closure->add_option("--in", in_path, "file with the seed graphs, concatenated")->required();
    closure->add_option("--nmax", n_max)->required();
    closure->add_option("--c", c);

    auto* ledgercmd = app.add_subcommand("ledger", "exact counting-certificate ledger at (n,u,k)");
    ledgercmd->add_option("--n", n)->required();
    ledgercmd->add_option("--u", u)->required();
    ledgercmd->add_option("--k", k)->required();
    ledgercmd->add_option("--eps", eps)->required();
    ledgercmd->add_option("--eps-prime", eps_prime);
    ledgercmd->add_option("--pool", pool_name, "all | good");
    ledgercmd->add_option("--prec", prec);

    auto* sweep = app.add_subcommand("ledger-sweep", "grid sweep for verdict-true ledgers");
    sweep->add_option("--n-max", n_max)->required();
    sweep->add_option("--u-exp", u_exp);
    sweep->add_option("--eps", eps)->required();
    sweep->add_option("--eps-prime", eps_prime);
    sweep->add_option("--pool", pool_name, "all | good");
    sweep->add_option("--prec", prec);

    auto* searchcmd = app.add_subcommand("search-counterexample", "seeded search for a non-representable collection");
    searchcmd->add_option("--n", n)->required();
    searchcmd->add_option("--u", u)->required();
    searchcmd->add_option("--k", k)->required();
    searchcmd->add_option("--seed", seed)->required();
    searchcmd->add_option("--attempts", attempts)->required();

    auto* family = app.add_subcommand("build-family", "sample and goodness-filter a family slice per n");
    family->add_option("--n-list", n_list_str, "comma-separated even sizes, e.g. 4,8,16")->required();
    family->add_option("--delta", delta)->required();
    family->add_option("--seed", seed)->required();
    family->add_option("--cap", family_cap)->required();
    family->add_option("--budget", budget);
    family->add_option("--family-out", family_out, "also write the family file here");

    // Let --out/--format appear after the subcommand name too.
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);

        if (*sample) {
            const auto g = igr::sample_bipartite(n, m, seed);
            if (raw) {
                out.write(igr::serialize(g));
                return 0;
            }
            emit(out, "sample-bipartite", {{"n", n}, {"m", m}, {"seed", seed}}, {{"graph", igr::serialize(g)}});
        } else if (*degen) {
            const auto g = igr::parse_graph(read_file(in_path));
            emit(out, "degeneracy", {{"in", in_path}}, igr::to_json(igr::peel_ordering(g)));
        } else if (*findbad) {
            const auto g = igr::parse_graph(read_file(in_path));
            const auto r = igr::find_bad_subgraph(g, {c, cap, budget});
            emit(out, "find-bad", {{"in", in_path}, {"c", c}, {"cap", cap}, {"budget", budget}}, igr::to_json(r));
        } else if (*good) {
            const auto g = igr::parse_bipartite(read_file(in_path));
            const auto r = igr::is_good(g, eps, eps_prime, budget);
            emit(out, "is-good", {{"in", in_path}, {"eps", eps}, {"eps_prime", eps_prime}, {"budget", budget}},
                 igr::to_json(r));
        } else if (*lemma) {
            const auto r = igr::monte_carlo_lemma21(n, m, c, cap, trials, seed, budget);
            emit(out, "lemma21",
                 {{"n", n}, {"m", m}, {"c", c}, {"cap", cap}, {"trials", trials}, {"seed", seed}, {"budget", budget}},
                 igr::to_json(r));
        } else if (*label) {
            const auto g = igr::parse_graph(read_file(in_path));
            const auto lab = igr::labels_for(igr::SchemeId::parse(scheme_name), g);
            if (raw) {
                out.write(igr::serialize(lab));
                return 0;
            }
            emit(out, "label", {{"in", in_path}, {"scheme", scheme_name}},
                 {{"width", lab.width}, {"labeling", igr::serialize(lab)}});
        } else if (*verify) {
            const auto g = igr::parse_graph(read_file(in_path));
            const auto lab = igr::parse_labeling(read_file(labels_path));
            emit(out, "verify-label", {{"in", in_path}, {"labels", labels_path}},
                 {{"ok", igr::verify_labeling(g, lab)}});
        } else if (*buildu) {
            const auto ug = igr::universal_from_scheme(igr::SchemeId::parse(scheme_name), n);
            if (raw) {
                out.write(igr::serialize(ug.carrier));
                return 0;
            }
            emit(out, "build-universal", {{"scheme", scheme_name}, {"n", n}},
                 {{"u", ug.carrier.size()}, {"provenance", ug.provenance}, {"graph", igr::serialize(ug.carrier)}});
        } else if (*embed) {
            const auto f = igr::parse_graph(read_file(in_path));
            const auto ug = igr::parse_graph(read_file(in_path2));
            const auto emb = igr::find_induced_embedding(f, ug);
            json pairs = json::array();
            if (emb)
                for (int v = 1; v <= f.size(); ++v)
                    pairs.push_back(std::to_string(v) + " -> " + std::to_string((*emb)(v)));
            emit(out, "embed", {{"f", in_path}, {"u", in_path2}}, {{"found", emb.has_value()}, {"map", pairs}});
        } else if (*minu) {
            const auto fam = read_graphs(in_path);
            const auto r = igr::min_universal_size(fam, u_max);
            emit(out, "min-universal", {{"in", in_path}, {"umax", u_max}},
                 {{"found", r.has_value()}, {"size", r ? json(*r) : json(nullptr)}});
        } else if (*countrep) {
            const auto ug = igr::parse_graph(read_file(in_path));
            emit(out, "count-representable", {{"in", in_path}, {"n", n}},
                 {{"count", igr::count_representable(ug, n)}, {"u", ug.size()}});
        } else if (*countdeg) {
            emit(out, "count-degenerate", {{"n", n}, {"c", c}}, {{"count", igr::count_degenerate(n, c)}});
        } else if (*closure) {
            const auto seeds = read_graphs(in_path);
            emit(out, "closure-speed", {{"in", in_path}, {"nmax", n_max}, {"c", c}},
                 igr::to_json(igr::closure_speed(seeds, n_max, c)));
        } else if (*ledgercmd) {
            const auto led = igr::ledger(n, u, k, eps, eps_prime, parse_pool_mode(pool_name),
                                         static_cast<mpfr_prec_t>(prec));
            emit(out, "ledger",
                 {{"n", n}, {"u", u}, {"k", k}, {"eps", eps}, {"eps_prime", eps_prime}, {"pool", pool_name}, {"prec", prec}},
                 ledger_json(led));
        } else if (*sweep) {
            const auto ledgers = igr::ledger_sweep(n_max, u_exp, eps, eps_prime, parse_pool_mode(pool_name),
                                                   static_cast<mpfr_prec_t>(prec));
            if (out.format == "csv") {
                out.write(ledger_csv(ledgers));
            } else {
                json rows = json::array();
                long long verdict_true = 0;
                for (const auto& led : ledgers) {
                    rows.push_back(ledger_json(led));
                    if (led.verdict) ++verdict_true;
                }
                emit(out, "ledger-sweep",
                     {{"n_max", n_max}, {"u_exp", u_exp}, {"eps", eps}, {"eps_prime", eps_prime}, {"pool", pool_name}, {"prec", prec}},
                     {{"ledgers", rows}, {"verdict_true_count", verdict_true}});
            }
        } else if (*searchcmd) {
            const auto r = igr::search_counterexample_exhaustive(n, u, k, seed, attempts);
            json collection = json::array();
            if (r.collection)
                for (const auto& g : *r.collection) collection.push_back(igr::serialize(g));
            emit(out, "search-counterexample",
                 {{"n", n}, {"u", u}, {"k", k}, {"seed", seed}, {"attempts", attempts}},
                 {{"found", r.collection.has_value()}, {"attempts_used", r.attempts_used}, {"collection", collection}});
        } else if (*family) {
            std::vector<int> n_list;
            std::istringstream ns(n_list_str);
            std::string item;
            while (std::getline(ns, item, ',')) n_list.push_back(std::stoi(item));
            const auto report = igr::build_family(n_list, delta, seed, family_cap, budget);
            if (!family_out.empty()) {
                std::ofstream f(family_out, std::ios::binary);
                if (!f) throw igr::input_error("cannot open family output '" + family_out + "'");
                f << family_file(report);
            }
            emit(out, "build-family",
                 {{"n_list", n_list_str}, {"delta", delta}, {"seed", seed}, {"cap", family_cap}, {"budget", budget}},
                 igr::to_json(report));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const igr::cap_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
