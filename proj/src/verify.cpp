#include "divitopos/verify.hpp"

#include <numeric>
#include <sstream>

#include "divitopos/equiv.hpp"
#include "divitopos/heyting.hpp"
#include "divitopos/omega.hpp"
#include "divitopos/presheaf.hpp"
#include "divitopos/sieve.hpp"
#include "json.hpp"

namespace divitopos {

namespace {

SuiteResult heyting_adjunction_suite() {
    SuiteResult r{"heyting-adjunction-360", true, ""};
    DivisorLattice lattice(360);
    const auto& elems = lattice.elements();
    std::map<std::pair<Div, Div>, Div> imp;
    for (Div k : elems)
        for (Div n : elems) imp[{k, n}] = implies(lattice, k, n);
    long long triples = 0;
    for (Div t : elems)
        for (Div k : elems)
            for (Div n : elems) {
                ++triples;
                if ((imp[{k, n}] % t == 0) != (n % std::gcd(t, k) == 0)) {
                    r.pass = false;
                    r.detail = "adjunction fails at (t,k,n)=(" + std::to_string(t) + "," +
                               std::to_string(k) + "," + std::to_string(n) + ")";
                    return r;
                }
            }
    r.detail = std::to_string(triples) + " triples checked";
    return r;
}

SuiteResult negation_laws_suite() {
    SuiteResult r{"negation-laws-12-30-360", true, ""};
    for (Div modulus : {12, 30, 360}) {
        DivisorLattice lattice(modulus);
        HeytingReport report = check_negation_laws(lattice);
        if (!report.all_pass()) {
            r.pass = false;
            r.detail = "N=" + std::to_string(modulus) + ": " + report.to_json();
            return r;
        }
    }
    r.detail = "laws (i)-(iv) plus adjunction hold exhaustively";
    return r;
}

SuiteResult boolean_squarefree_suite() {
    SuiteResult r{"boolean-iff-squarefree-1..1000", true, ""};
    for (Div modulus = 1; modulus <= 1000; ++modulus) {
        DivisorLattice lattice(modulus);
        if (is_boolean(lattice) != is_squarefree(modulus)) {
            r.pass = false;
            r.detail = "mismatch at N=" + std::to_string(modulus);
            return r;
        }
    }
    r.detail = "1000 moduli checked";
    return r;
}

SuiteResult topology_axioms_suite() {
    SuiteResult r{"topology-axioms-12-36-60", true, ""};
    for (Div modulus : {12, 36, 60}) {
        DivisorLattice lattice(modulus);
        Topology atomic = build_topology(lattice, "atomic");
        Topology dense = build_topology(lattice, "dense");
        for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
            Topology topology = name == "atomic"  ? atomic
                                : name == "dense" ? dense
                                                  : build_topology(lattice, name);
            AxiomReport report = check_topology_axioms(lattice, topology);
            if (!report.all_ok()) {
                r.pass = false;
                r.detail = name + " on D_" + std::to_string(modulus) + ": " + report.to_json();
                return r;
            }
        }
        for (Div n : lattice.elements())
            if (dense.at(n) != atomic.at(n)) {
                r.pass = false;
                r.detail = "dense != atomic at n=" + std::to_string(n) + " in D_" +
                           std::to_string(modulus);
                return r;
            }
    }
    r.detail = "all four built-ins pass; dense = atomic objectwise";
    return r;
}

// independent oracle: filter every subset of the divisors for down-closure
std::size_t subset_filter_sieve_count(Div n) {
    std::vector<Div> divs = divisors(n);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << divs.size()); ++mask) {
        bool down_closed = true;
        for (std::size_t i = 0; i < divs.size() && down_closed; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            for (std::size_t t = 0; t < divs.size(); ++t)
                if (divs[i] % divs[t] == 0 && !(mask & (std::size_t{1} << t))) {
                    down_closed = false;
                    break;
                }
        }
        if (down_closed) ++count;
    }
    return count;
}

SuiteResult sieve_count_suite() {
    SuiteResult r{"sieve-count-12", true, ""};
    DivisorLattice lattice(12);
    std::size_t enumerated = enumerate_sieves(lattice, 12).size();
    std::size_t oracle = subset_filter_sieve_count(12);
    if (enumerated != 10 || oracle != 10) {
        r.pass = false;
        r.detail = "enumerated=" + std::to_string(enumerated) +
                   " oracle=" + std::to_string(oracle) + " expected 10";
    } else {
        r.detail = "10 sieves on 12, oracle agrees";
    }
    return r;
}

SuiteResult trivial_sheaves_suite() {
    SuiteResult r{"trivial-topology-sheaves", true, ""};
    DivisorLattice lattice(12);
    Topology trivial = build_topology(lattice, "trivial");
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Presheaf f = random_presheaf(lattice, seed, 3);
        if (validate_presheaf(lattice, f)) {
            r.pass = false;
            r.detail = "fixture seed " + std::to_string(seed) + " is not functorial";
            return r;
        }
        if (!is_sheaf(lattice, f, trivial).is_sheaf) {
            r.pass = false;
            r.detail = "fixture seed " + std::to_string(seed) + " is not a trivial-sheaf";
            return r;
        }
    }
    r.detail = "20 seeded functorial fixtures are trivial-topology sheaves";
    return r;
}

SuiteResult discrete_collapse_suite() {
    SuiteResult r{"discrete-topology-collapse", true, ""};
    DivisorLattice lattice(12);
    Topology discrete = build_topology(lattice, "discrete");
    auto check = [&](const Presheaf& f, const std::string& which) {
        bool all_singleton = true;
        for (Div n : lattice.elements())
            if (f.at(n).size() != 1) all_singleton = false;
        if (is_sheaf(lattice, f, discrete).is_sheaf != all_singleton) {
            r.pass = false;
            r.detail = which + ": sheaf verdict disagrees with singleton test";
            return false;
        }
        return true;
    };
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        if (!check(random_presheaf(lattice, seed, 3), "seed " + std::to_string(seed))) return r;
    for (std::uint64_t seed = 100; seed < 105; ++seed)
        if (!check(random_presheaf(lattice, seed, 1), "singleton seed " + std::to_string(seed)))
            return r;
    r.detail = "verdict = all-singletons over 25 fixtures";
    return r;
}

SuiteResult omega_classifier_suite() {
    SuiteResult r{"omega-sheafhood-and-classification", true, ""};
    for (Div modulus : {12, 30}) {
        DivisorLattice lattice(modulus);
        for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
            Topology topology = build_topology(lattice, name);
            OmegaSheaf omega = build_omega(lattice, topology);
            if (auto violation = validate_presheaf(lattice, omega.underlying)) {
                r.pass = false;
                r.detail = "Omega(" + name + ", N=" + std::to_string(modulus) +
                           ") is not functorial: " + *violation;
                return r;
            }
            if (!is_sheaf(lattice, omega.underlying, topology).is_sheaf) {
                r.pass = false;
                r.detail = "Omega(" + name + ", N=" + std::to_string(modulus) +
                           ") is not a sheaf";
                return r;
            }
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                Presheaf f = random_sheaf(lattice, name, seed, 3);
                ClassifierReport report =
                    verify_classifier(lattice, f, topology, 2, seed * 977 + 13);
                if (!report.ok) {
                    r.pass = false;
                    r.detail = name + " N=" + std::to_string(modulus) + " seed " +
                               std::to_string(seed) + ": " + report.failure;
                    return r;
                }
            }
        }
    }
    r.detail = "Omega is a sheaf and classifies 10 seeded subobjects per site";
    return r;
}

SuiteResult equivalences_suite() {
    SuiteResult r{"equivalences-12", true, ""};
    DivisorLattice lattice(12);
    for (FamilyKind kind :
         {FamilyKind::periodic_points, FamilyKind::root_groups, FamilyKind::solution_spaces}) {
        IndexedFamily family = build_family(lattice, kind);
        PosetIsoReport report = check_poset_iso(lattice, family);
        if (!report.all_ok()) {
            r.pass = false;
            r.detail = family_to_json(family) + ": " + report.to_json();
            return r;
        }
        for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
            auto [transported, axioms] =
                transport_topology(lattice, build_topology(lattice, name), family);
            if (!axioms.all_ok()) {
                r.pass = false;
                r.detail = "transported " + name + " fails axioms: " + axioms.to_json();
                return r;
            }
        }
    }
    // R_4 cap R_6 = R_2, directly on the root groups
    auto r4 = roots_of_unity(4), r6 = roots_of_unity(6), r2 = roots_of_unity(2);
    std::set<Rational> cap;
    for (const Rational& x : r4)
        if (r6.count(x)) cap.insert(x);
    if (cap != r2) {
        r.pass = false;
        r.detail = "R_4 intersect R_6 != R_2";
        return r;
    }
    r.detail = "all three families isomorphic to D_12; topologies transport";
    return r;
}

}  // namespace

std::vector<SuiteResult> run_verification_suites() {
    return {
        heyting_adjunction_suite(), negation_laws_suite(),  boolean_squarefree_suite(),
        topology_axioms_suite(),    sieve_count_suite(),    trivial_sheaves_suite(),
        discrete_collapse_suite(),  omega_classifier_suite(), equivalences_suite(),
    };
}

std::vector<SuiteResult> run_module_invariants(Div modulus) {
    std::vector<SuiteResult> out;
    DivisorLattice lattice(modulus);
    const auto& elems = lattice.elements();

    {
        SuiteResult r{"partial-order", true, ""};
        for (Div a : elems)
            for (Div b : elems) {
                if (lattice.leq(a, b) && lattice.leq(b, a) && a != b) r.pass = false;
                for (Div c : elems)
                    if (lattice.leq(a, b) && lattice.leq(b, c) && !lattice.leq(a, c))
                        r.pass = false;
            }
        for (Div a : elems)
            if (!lattice.leq(a, a)) r.pass = false;
        out.push_back(r);
    }
    {
        SuiteResult r{"meet-join-bounds", true, ""};
        for (Div a : elems)
            for (Div b : elems) {
                Div m = lattice.meet(a, b), j = lattice.join(a, b);
                if (!lattice.leq(m, a) || !lattice.leq(m, b)) r.pass = false;
                if (!lattice.leq(a, j) || !lattice.leq(b, j)) r.pass = false;
                for (Div c : elems) {
                    if (lattice.leq(c, a) && lattice.leq(c, b) && !lattice.leq(c, m))
                        r.pass = false;
                    if (lattice.leq(a, c) && lattice.leq(b, c) && !lattice.leq(j, c))
                        r.pass = false;
                }
            }
        out.push_back(r);
    }
    out.push_back({"distributivity", lattice.check_distributive(), ""});
    {
        DualOrderView dual(lattice);
        SuiteResult r{"dual-order", true, ""};
        for (Div a : elems)
            for (Div b : elems)
                if (dual.leq(a, b) != lattice.leq(b, a)) r.pass = false;
        out.push_back(r);
    }
    out.push_back({"negation-laws", check_negation_laws(lattice).all_pass(), ""});
    out.push_back(
        {"boolean-iff-squarefree", is_boolean(lattice) == is_squarefree(modulus), ""});
    for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
        Topology topology = build_topology(lattice, name);
        out.push_back({"topology-axioms-" + name,
                       check_topology_axioms(lattice, topology).all_ok(), ""});
    }
    return out;
}

bool all_pass(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string suites_to_json(const std::vector<SuiteResult>& results) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json entry;
        entry["suite"] = r.name;
        entry["pass"] = r.pass;
        if (!r.detail.empty()) entry["detail"] = r.detail;
        j.push_back(entry);
    }
    return j.dump(2);
}

}  // namespace divitopos
