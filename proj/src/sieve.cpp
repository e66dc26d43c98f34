#include "divitopos/sieve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace divitopos {

bool Sieve::contains(Div k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

bool Sieve::operator<(const Sieve& other) const {
    if (base != other.base) return base < other.base;
    return members < other.members;
}

Sieve make_sieve(const DivisorLattice& lattice, Div base, std::vector<Div> members) {
    (void)lattice.index_of(base);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Div k : members) {
        if (base % k != 0)
            throw std::invalid_argument("sieve member " + std::to_string(k) +
                                        " does not divide base " + std::to_string(base));
        for (Div t : divisors(k))
            if (!std::binary_search(members.begin(), members.end(), t))
                throw std::invalid_argument("sieve on " + std::to_string(base) +
                                            " is not down-closed: " + std::to_string(t) +
                                            " divides member " + std::to_string(k) +
                                            " but is missing");
    }
    return Sieve{base, std::move(members)};
}

Sieve maximal_sieve(const DivisorLattice& lattice, Div n) {
    return Sieve{n, lattice.down_set(n)};
}

Sieve pullback_sieve(const DivisorLattice& lattice, const Sieve& sieve, Div k) {
    if (!lattice.leq(k, sieve.base))
        throw std::domain_error("pullback target " + std::to_string(k) +
                                " is not below sieve base " + std::to_string(sieve.base));
    std::vector<Div> out;
    for (Div m : sieve.members)
        if (k % m == 0) out.push_back(m);
    return Sieve{k, std::move(out)};
}

std::vector<Sieve> enumerate_sieves(const DivisorLattice& lattice, Div n) {
    (void)lattice.index_of(n);
    std::vector<Div> divs = divisors(n);
    std::vector<Sieve> out;
    std::vector<Div> current;
    // divisors ascending: including divs[i] requires all its divisors, already decided
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == divs.size()) {
            out.push_back(Sieve{n, current});
            return;
        }
        self(self, i + 1);
        Div d = divs[i];
        bool closed = true;
        for (Div t : divs) {
            if (t >= d) break;
            if (d % t == 0 && !std::binary_search(current.begin(), current.end(), t)) {
                closed = false;
                break;
            }
        }
        if (closed) {
            current.push_back(d);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_dense_below(const DivisorLattice& lattice, const Sieve& d, Div n) {
    if (d.base != n) throw std::domain_error("is_dense_below: sieve base mismatch");
    for (Div m : divisors(n)) {
        bool hit = false;
        for (Div k : d.members)
            if (m % k == 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    (void)lattice;
    return true;
}

const std::vector<Sieve>& Topology::at(Div n) const {
    static const std::vector<Sieve> empty;
    auto it = covers.find(n);
    return it == covers.end() ? empty : it->second;
}

bool Topology::admits(Div n, const Sieve& sieve) const {
    const auto& list = at(n);
    return std::binary_search(list.begin(), list.end(), sieve);
}

Topology build_topology(const DivisorLattice& lattice, const std::string& name) {
    Topology topology;
    topology.name = name;
    topology.modulus = lattice.modulus();
    for (Div n : lattice.elements()) {
        std::vector<Sieve> list;
        if (name == "trivial") {
            list.push_back(maximal_sieve(lattice, n));
        } else if (name == "discrete") {
            list = enumerate_sieves(lattice, n);
        } else if (name == "atomic") {
            for (Sieve& s : enumerate_sieves(lattice, n))
                if (!s.empty()) list.push_back(std::move(s));
        } else if (name == "dense") {
            for (Sieve& s : enumerate_sieves(lattice, n))
                if (is_dense_below(lattice, s, n)) list.push_back(std::move(s));
        } else {
            throw std::invalid_argument("unknown topology name: " + name);
        }
        std::sort(list.begin(), list.end());
        topology.covers[n] = std::move(list);
    }
    return topology;
}

std::string AxiomReport::to_json() const {
    nlohmann::json j;
    j["maximal_ok"] = maximal_ok;
    j["stability_ok"] = stability_ok;
    j["transitivity_ok"] = transitivity_ok;
    if (counterexample) j["counterexample"] = *counterexample;
    return j.dump();
}

namespace {
std::string describe(const Sieve& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.members.size(); ++i)
        os << (i ? "," : "") << s.members[i];
    os << "} on " << s.base;
    return os.str();
}
}  // namespace

AxiomReport check_topology_axioms(const DivisorLattice& lattice, const Topology& topology) {
    AxiomReport report;
    auto fail = [&](bool AxiomReport::* flag, const std::string& cex) {
        if (report.*flag) {
            report.*flag = false;
            if (!report.counterexample) report.counterexample = cex;
        }
    };

    for (Div n : lattice.elements()) {
        const Sieve maximal = maximal_sieve(lattice, n);
        if (!topology.admits(n, maximal))
            fail(&AxiomReport::maximal_ok, "maximal sieve missing at n=" + std::to_string(n));

        for (const Sieve& s : topology.at(n))
            for (Div k : lattice.down_set(n))
                if (!topology.admits(k, pullback_sieve(lattice, s, k)))
                    fail(&AxiomReport::stability_ok,
                         "pullback of " + describe(s) + " to " + std::to_string(k) +
                             " is not a cover");

        const std::vector<Sieve> all = enumerate_sieves(lattice, n);
        for (const Sieve& s : topology.at(n))
            for (const Sieve& r : all) {
                bool locally_covering = true;
                for (Div k : s.members)
                    if (!topology.admits(k, pullback_sieve(lattice, r, k))) {
                        locally_covering = false;
                        break;
                    }
                if (locally_covering && !topology.admits(n, r))
                    fail(&AxiomReport::transitivity_ok,
                         describe(r) + " covers locally along " + describe(s) +
                             " but is not in J(" + std::to_string(n) + ")");
            }
    }
    return report;
}

std::string topology_to_json(const Topology& topology) {
    nlohmann::json j;
    j["modulus"] = topology.modulus;
    j["name"] = topology.name;
    nlohmann::json covers = nlohmann::json::object();
    for (const auto& [n, list] : topology.covers) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Sieve& s : list) arr.push_back(s.members);
        covers[std::to_string(n)] = arr;
    }
    j["covers"] = covers;
    return j.dump();
}

Topology topology_from_json(const DivisorLattice& lattice, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Topology topology;
    topology.modulus = j.at("modulus").get<Div>();
    if (topology.modulus != lattice.modulus())
        throw std::invalid_argument("topology modulus does not match lattice");
    topology.name = j.value("name", "custom");
    for (const auto& [key, arr] : j.at("covers").items()) {
        Div n = std::stoll(key);
        std::vector<Sieve> list;
        for (const auto& members : arr)
            list.push_back(make_sieve(lattice, n, members.get<std::vector<Div>>()));
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        topology.covers[n] = std::move(list);
    }
    return topology;
}

}  // namespace divitopos
