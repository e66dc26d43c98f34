#include "divitopos/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace divitopos {

Permutation build_permutation(const DivisorLattice& lattice) {
    Permutation perm;
    int point = 0;
    for (Div d : lattice.elements()) {
        std::vector<int> cycle;
        for (Div i = 0; i < d; ++i) cycle.push_back(point++);
        perm.cycles.push_back(cycle);
    }
    perm.next.resize(point);
    for (const auto& cycle : perm.cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            perm.next[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return perm;
}

std::set<int> periodic_points(const Permutation& perm, Div n) {
    if (n < 1) throw std::domain_error("periodic_points: n must be positive");
    std::set<int> out;
    for (const auto& cycle : perm.cycles)
        if (n % static_cast<Div>(cycle.size()) == 0) out.insert(cycle.begin(), cycle.end());
    return out;
}

Rational make_rational(Div num, Div den) {
    if (den < 1) throw std::domain_error("make_rational: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    Div g = std::gcd(num, den);
    if (num == 0) return Rational{0, 1};
    return Rational{num / g, den / g};
}

Rational add_mod1(const Rational& a, const Rational& b) {
    Div den = std::lcm(a.den, b.den);
    return make_rational(a.num * (den / a.den) + b.num * (den / b.den), den);
}

std::set<Rational> roots_of_unity(Div n) {
    if (n < 1) throw std::domain_error("roots_of_unity: n must be positive");
    std::set<Rational> out;
    for (Div j = 0; j < n; ++j) out.insert(make_rational(j, n));
    return out;
}

std::set<Rational> solution_space_basis(Div n) { return roots_of_unity(n); }

bool derivative_power_fixes(const Rational& rotation, Div iterations) {
    return (iterations * rotation.num) % rotation.den == 0;
}

IndexedFamily build_family(const DivisorLattice& lattice, FamilyKind kind) {
    IndexedFamily family;
    family.kind = kind;
    family.modulus = lattice.modulus();
    if (kind == FamilyKind::periodic_points) {
        Permutation perm = build_permutation(lattice);
        for (Div n : lattice.elements()) {
            std::set<std::string> points;
            for (int p : periodic_points(perm, n)) points.insert("x" + std::to_string(p));
            family.carrier[n] = std::move(points);
        }
    } else {
        for (Div n : lattice.elements()) {
            std::set<std::string> labels;
            for (const Rational& r : roots_of_unity(n))
                labels.insert(kind == FamilyKind::root_groups ? r.str() : "exp(" + r.str() + ")");
            family.carrier[n] = std::move(labels);
        }
    }
    return family;
}

bool family_includes(const IndexedFamily& family, Div k, Div n) {
    const auto& small = family.carrier.at(k);
    const auto& big = family.carrier.at(n);
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string PosetIsoReport::to_json() const {
    nlohmann::json j;
    j["order_match"] = order_match;
    j["meet_match"] = meet_match;
    j["join_match"] = join_match;
    if (counterexample) j["counterexample"] = *counterexample;
    return j.dump();
}

PosetIsoReport check_poset_iso(const DivisorLattice& lattice, const IndexedFamily& family) {
    PosetIsoReport report;
    auto fail = [&](bool PosetIsoReport::* flag, const std::string& cex) {
        if (report.*flag) {
            report.*flag = false;
            if (!report.counterexample) report.counterexample = cex;
        }
    };
    for (Div n : lattice.elements())
        if (!family.carrier.count(n)) {
            fail(&PosetIsoReport::order_match, "missing carrier at " + std::to_string(n));
            return report;
        }

    const auto& elems = lattice.elements();
    for (Div k : elems)
        for (Div n : elems)
            if (family_includes(family, k, n) != (n % k == 0))
                fail(&PosetIsoReport::order_match,
                     "(" + std::to_string(k) + "," + std::to_string(n) + ")");

    for (Div m : elems)
        for (Div n : elems) {
            const auto& cm = family.carrier.at(m);
            const auto& cn = family.carrier.at(n);
            std::set<std::string> intersection;
            std::set_intersection(cm.begin(), cm.end(), cn.begin(), cn.end(),
                                  std::inserter(intersection, intersection.begin()));
            if (intersection != family.carrier.at(std::gcd(m, n)))
                fail(&PosetIsoReport::meet_match,
                     "(" + std::to_string(m) + "," + std::to_string(n) + ")");

            // least carrier containing both
            Div lcm = std::lcm(m, n);
            const auto& cl = family.carrier.at(lcm);
            auto contains_both = [&](const std::set<std::string>& c) {
                return std::includes(c.begin(), c.end(), cm.begin(), cm.end()) &&
                       std::includes(c.begin(), c.end(), cn.begin(), cn.end());
            };
            bool least = contains_both(cl);
            for (Div d : elems)
                if (least && contains_both(family.carrier.at(d)) &&
                    !std::includes(family.carrier.at(d).begin(), family.carrier.at(d).end(),
                                   cl.begin(), cl.end()))
                    least = false;
            if (!least)
                fail(&PosetIsoReport::join_match,
                     "(" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    return report;
}

std::pair<Topology, AxiomReport> transport_topology(const DivisorLattice& lattice,
                                                    const Topology& topology,
                                                    const IndexedFamily& family) {
    if (!check_poset_iso(lattice, family).all_ok())
        throw std::domain_error("transport_topology: family is not isomorphic to the lattice");
    // the identification n <-> carrier(n) is a bijection on indices, so the
    // transported covers keep the same index sets
    Topology transported = topology;
    transported.name = "transported:" + topology.name;
    AxiomReport report = check_topology_axioms(lattice, transported);
    return {std::move(transported), std::move(report)};
}

std::string family_to_json(const IndexedFamily& family) {
    nlohmann::json j;
    j["modulus"] = family.modulus;
    switch (family.kind) {
        case FamilyKind::periodic_points: j["kind"] = "periodic_points"; break;
        case FamilyKind::root_groups: j["kind"] = "root_groups"; break;
        case FamilyKind::solution_spaces: j["kind"] = "solution_spaces"; break;
    }
    nlohmann::json carrier = nlohmann::json::object();
    for (const auto& [n, labels] : family.carrier)
        carrier[std::to_string(n)] = std::vector<std::string>(labels.begin(), labels.end());
    j["carrier"] = carrier;
    return j.dump();
}

}  // namespace divitopos
