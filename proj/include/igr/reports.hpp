#pragma once

#include "igr/certificate.hpp"
#include "igr/degeneracy.hpp"
#include "igr/graph.hpp"

#include <json.hpp>

#include <string>

namespace igr {

using json = nlohmann::json;

// Lemma-check report: flat key/value record; the exact union bound is
// carried as decimal numerator/denominator strings.
inline json to_json(const Lemma21Report& r) {
    return json{
        {"n", r.n},
        {"m", r.m},
        {"c", r.min_degree},
        {"size_cap", r.size_cap},
        {"seed", r.seed},
        {"trials", r.trials},
        {"bad_count", r.bad_count},
        {"bad_frequency", r.bad_frequency()},
        {"unknown_count", r.unknown_count},
        {"union_bound_num", r.union_bound.get_num().get_str()},
        {"union_bound_den", r.union_bound.get_den().get_str()},
    };
}

inline json to_json(const CertificateLedger& led) {
    return json{
        {"n", led.n},
        {"u", led.u},
        {"k", led.k},
        {"eps", led.eps},
        {"eps_prime", led.eps_prime},
        {"pool_mode", pool_mode_name(led.pool_mode)},
        {"pool_edges", led.pool_edges},
        {"pool_size_lower", led.pool_size_lower.get_str()},
        {"lhs_log2_num", led.lhs_log2.get_num().get_str()},
        {"lhs_log2_den", led.lhs_log2.get_den().get_str()},
        {"rhs_log2_num", led.rhs_log2.get_num().get_str()},
        {"rhs_log2_den", led.rhs_log2.get_den().get_str()},
        {"prec", led.prec},
        {"verdict", led.verdict},
    };
}

inline json to_json(const DegeneracyCertificate& cert) {
    return json{
        {"order", cert.order},
        {"forward_degree", cert.forward_degree},
        {"degeneracy", cert.degeneracy},
    };
}

inline json to_json(const ClosureSpeedReport& r) {
    json counts = json::array();
    for (int i = 0; i < r.n_max; ++i)
        counts.push_back(json{{"n", i + 1},
                              {"count", r.counts[static_cast<std::size_t>(i)].get_str()},
                              {"factorial_bound", r.factorial_bound[static_cast<std::size_t>(i)].get_str()}});
    return json{{"n_max", r.n_max}, {"c", r.c}, {"per_n", counts}};
}

inline json to_json(const FamilyReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json members = json::array();
        for (const auto& g : e.members) members.push_back(serialize(g));
        entries.push_back(json{
            {"n", e.n},
            {"pool_edges", e.pool_edges},
            {"k_formula", e.k_formula.get_str()},
            {"k_capped", e.k_capped},
            {"sampled", e.sampled},
            {"accepted", static_cast<long long>(e.members.size())},
            {"budget_exceeded", e.budget_exceeded},
            {"acceptance_rate", e.sampled == 0 ? 0.0 : static_cast<double>(e.members.size()) / static_cast<double>(e.sampled)},
            {"members", members},
        });
    }
    return json{{"delta", r.delta}, {"eps", r.eps}, {"eps_prime", r.eps_prime},
                {"seed", r.seed},   {"cap", r.cap}, {"entries", entries}};
}

inline std::string search_kind_name(SearchKind k) {
    switch (k) {
        case SearchKind::found: return "found";
        case SearchKind::none: return "none";
        case SearchKind::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

inline json to_json(const BadSubgraphResult& r) {
    return json{
        {"result", search_kind_name(r.kind)},
        {"witness", r.witness},
        {"expansions", r.expansions},
    };
}

inline json to_json(const GoodnessResult& r) {
    return json{
        {"verdict", r.good() ? "good" : (r.kind == SearchKind::found ? "bad" : "budget_exceeded")},
        {"witness", r.witness},
        {"c", r.params.min_degree},
        {"size_cap", r.params.size_cap},
        {"expansions", r.expansions},
    };
}

} // namespace igr
