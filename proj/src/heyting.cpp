#include "divitopos/heyting.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace divitopos {

Div implies(const DivisorLattice& lattice, Div k, Div n) {
    (void)lattice.index_of(k);
    (void)lattice.index_of(n);
    // lcm over all qualifying t, accumulated in one pass
    Div acc = 1;
    for (Div t : lattice.elements())
        if (n % std::gcd(t, k) == 0) acc = std::lcm(acc, t);
    return acc;
}

Div neg(const DivisorLattice& lattice, Div n) {
    return implies(lattice, n, 1);
}

bool HeytingReport::all_pass() const {
    for (const auto& [name, res] : law_results)
        if (!res.pass) return false;
    return true;
}

std::string HeytingReport::to_json() const {
    nlohmann::json j;
    j["modulus"] = modulus;
    for (const auto& [name, res] : law_results) {
        nlohmann::json entry;
        entry["pass"] = res.pass;
        if (res.counterexample) entry["counterexample"] = *res.counterexample;
        j["laws"][name] = entry;
    }
    return j.dump();
}

namespace {
std::string witness(std::initializer_list<Div> vals) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (Div v : vals) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}
}  // namespace

HeytingReport check_negation_laws(const DivisorLattice& lattice) {
    HeytingReport report;
    report.modulus = lattice.modulus();
    const auto& elems = lattice.elements();

    auto& laws = report.law_results;
    laws["adjunction"] = {};
    laws["dnn_intro"] = {};
    laws["antitone"] = {};
    laws["triple_neg"] = {};
    laws["dnn_meet"] = {};

    auto fail = [&](const std::string& law, const std::string& cex) {
        if (laws[law].pass) laws[law] = {false, cex};
    };

    std::map<Div, Div> neg_of;
    for (Div n : elems) neg_of[n] = neg(lattice, n);
    auto dnn = [&](Div n) { return neg_of[neg_of[n]]; };

    for (Div k : elems)
        for (Div n : elems) {
            Div imp = implies(lattice, k, n);
            for (Div t : elems)
                if ((imp % t == 0) != (n % std::gcd(t, k) == 0))
                    fail("adjunction", witness({t, k, n}));
        }

    for (Div n : elems) {
        if (dnn(n) % n != 0) fail("dnn_intro", witness({n}));
        if (neg_of[n] != neg_of[dnn(n)]) fail("triple_neg", witness({n}));
        for (Div k : elems) {
            if (k % n == 0 && neg_of[n] % neg_of[k] != 0) fail("antitone", witness({n, k}));
            Div g = std::gcd(n, k);
            if (dnn(g) != std::gcd(dnn(n), dnn(k))) fail("dnn_meet", witness({n, k}));
        }
    }
    return report;
}

bool is_boolean(const DivisorLattice& lattice) {
    for (Div n : lattice.elements())
        if (neg(lattice, neg(lattice, n)) != n) return false;
    return true;
}

}  // namespace divitopos
