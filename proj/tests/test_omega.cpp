#include "doctest.h"

#include <stdexcept>

#include <set>

#include "divitopos/omega.hpp"

using namespace divitopos;

namespace {

// all subpresheaves of f, by brute-force filter over selection patterns
std::vector<Subpresheaf> all_subpresheaves(const DivisorLattice& lattice, const Presheaf& f) {
    std::vector<Div> objects = lattice.elements();
    std::vector<std::pair<Div, Label>> slots;
    for (Div n : objects)
        for (const Label& x : f.at(n)) slots.emplace_back(n, x);

    std::vector<Subpresheaf> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        Subpresheaf a;
        for (Div n : objects) a.selection[n] = {};
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (std::size_t{1} << i)) a.selection[slots[i].first].insert(slots[i].second);
        try {
            validate_subpresheaf(lattice, f, a);
            out.push_back(std::move(a));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("is_closed_sieve") {
    DivisorLattice d12(12);
    Topology trivial = build_topology(d12, "trivial");
    for (Div n : d12.elements()) {
        CHECK(is_closed_sieve(d12, trivial, maximal_sieve(d12, n)));
        // under the trivial topology every sieve is closed
        for (const Sieve& s : enumerate_sieves(d12, n)) CHECK(is_closed_sieve(d12, trivial, s));
    }
    DivisorLattice d4(4);
    Topology atomic = build_topology(d4, "atomic");
    CHECK_FALSE(is_closed_sieve(d4, atomic, make_sieve(d4, 4, {1})));
}

TEST_CASE("build_omega sizes") {
    DivisorLattice d4(4);
    Topology trivial = build_topology(d4, "trivial");
    OmegaSheaf omega_tri = build_omega(d4, trivial);
    CHECK(omega_tri.sieves.at(4).size() == 4);
    // trivial topology: |Omega(n)| equals the number of sieves on n
    DivisorLattice d12(12);
    OmegaSheaf omega12 = build_omega(d12, build_topology(d12, "trivial"));
    for (Div n : d12.elements())
        CHECK(omega12.sieves.at(n).size() == enumerate_sieves(d12, n).size());

    OmegaSheaf omega_dis = build_omega(d12, build_topology(d12, "discrete"));
    for (Div n : d12.elements()) CHECK(omega_dis.sieves.at(n).size() == 1);
}

TEST_CASE("omega restriction is pullback") {
    DivisorLattice d12(12);
    OmegaSheaf omega = build_omega(d12, build_topology(d12, "trivial"));
    Sieve s = make_sieve(d12, 12, {1, 2, 3, 6});
    Label restricted = omega.underlying.restrict_to(4, 12, omega.label_of(s));
    CHECK(omega.sieve_of(4, restricted).members == std::vector<Div>{1, 2});
}

TEST_CASE("omega is a functorial sheaf for every built-in topology") {
    for (Div modulus : {4, 12}) {
        DivisorLattice lattice(modulus);
        for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
            Topology topology = build_topology(lattice, name);
            OmegaSheaf omega = build_omega(lattice, topology);
            CHECK_FALSE(validate_presheaf(lattice, omega.underlying).has_value());
            CHECK(is_sheaf(lattice, omega.underlying, topology).is_sheaf);
            for (Div n : lattice.elements())
                CHECK_NOTHROW(omega.label_of(maximal_sieve(lattice, n)));
        }
    }
}

TEST_CASE("true arrow and naturality") {
    DivisorLattice d12(12);
    OmegaSheaf omega = build_omega(d12, build_topology(d12, "trivial"));
    auto truth = true_arrow(omega);
    CHECK(omega.sieve_of(12, truth.at(12)).members == d12.elements());
    CHECK(omega.sieve_of(1, truth.at(1)).members == std::vector<Div>{1});
    for (Div n : d12.elements())
        for (Div k : d12.down_set(n))
            CHECK(omega.underlying.restrict_to(k, n, truth.at(n)) == truth.at(k));
}

TEST_CASE("char_map on the constant two-point presheaf") {
    DivisorLattice d4(4);
    Presheaf f = constant_presheaf(d4, {"a", "b"});

    Subpresheaf whole;
    for (Div n : d4.elements()) whole.selection[n] = {"a", "b"};
    auto chi_whole = char_map(d4, f, whole);
    for (Div n : d4.elements())
        for (const Label& x : f.at(n)) CHECK(chi_whole.at(n).at(x).members == divisors(n));

    Subpresheaf a_part;
    for (Div n : d4.elements()) a_part.selection[n] = {"a"};
    auto chi = char_map(d4, f, a_part);
    CHECK(chi.at(4).at("a").members == std::vector<Div>{1, 2, 4});
    CHECK(chi.at(4).at("b").members.empty());

    Subpresheaf none;
    for (Div n : d4.elements()) none.selection[n] = {};
    auto chi_none = char_map(d4, f, none);
    for (Div n : d4.elements())
        for (const Label& x : f.at(n)) CHECK(chi_none.at(n).at(x).members.empty());
}

TEST_CASE("char_map outputs are always down-closed") {
    DivisorLattice d12(12);
    Presheaf f = random_presheaf(d12, 5, 3);
    Subpresheaf a;
    for (Div n : d12.elements()) a.selection[n] = {};
    // seed one element at the top and propagate down to get a valid selection
    const Label& x = f.at(12).front();
    for (Div k : d12.elements()) a.selection[k].insert(f.restrict_to(k, 12, x));
    auto chi = char_map(d12, f, a);
    for (Div n : d12.elements())
        for (const Label& y : f.at(n))
            CHECK_NOTHROW(make_sieve(d12, n, chi.at(n).at(y).members));
}

TEST_CASE("validate_subpresheaf rejects selections not closed under restriction") {
    DivisorLattice d4(4);
    Presheaf y4 = representable_presheaf(d4, 4);
    Subpresheaf bad;
    bad.selection[4] = {"*"};
    bad.selection[2] = {};
    bad.selection[1] = {};
    CHECK_THROWS_AS(validate_subpresheaf(d4, y4, bad), std::invalid_argument);
}

TEST_CASE("classification is a bijection on a desk-scale fixture") {
    DivisorLattice d4(4);
    Presheaf f = constant_presheaf(d4, {"a", "b"});
    Topology trivial = build_topology(d4, "trivial");
    OmegaSheaf omega = build_omega(d4, trivial);

    auto subs = all_subpresheaves(d4, f);
    auto nats = enumerate_nat_trans(d4, f, omega);
    CHECK(subs.size() == nats.size());

    // chi is injective on subpresheaves and lands in the natural maps
    std::set<NatTransToOmega> images;
    for (const Subpresheaf& a : subs) {
        auto chi = char_map(d4, f, a);
        NatTransToOmega labels;
        for (const auto& [n, comp] : chi)
            for (const auto& [x, s] : comp) labels[n][x] = sieve_label(s);
        CHECK(std::find(nats.begin(), nats.end(), labels) != nats.end());
        images.insert(labels);
    }
    CHECK(images.size() == subs.size());
}

TEST_CASE("verify_classifier on built-in topologies") {
    DivisorLattice d12(12);
    for (const std::string& name : {"trivial", "discrete", "atomic", "dense"}) {
        Topology topology = build_topology(d12, name);
        Presheaf f = random_sheaf(d12, name, 2, 2);
        ClassifierReport report = verify_classifier(d12, f, topology, 3, 99);
        CHECK(report.ok);
        CHECK(report.trials_run == 3);
    }
    // all-singleton sheaf admits the uniqueness enumeration
    Presheaf point = constant_presheaf(d12, {"x"});
    ClassifierReport r = verify_classifier(d12, point, build_topology(d12, "trivial"), 2, 7);
    CHECK(r.ok);
    CHECK(r.uniqueness_checked);
}

TEST_CASE("a corrupted characteristic map is rejected") {
    DivisorLattice d4(4);
    Presheaf f = constant_presheaf(d4, {"a", "b"});
    Subpresheaf a_part;
    for (Div n : d4.elements()) a_part.selection[n] = {"a"};
    auto chi = char_map(d4, f, a_part);
    // swap one output sieve: the pullback-of-true property must now fail
    chi.at(4).at("b") = chi.at(4).at("a");
    std::set<Label> pulled;
    for (const Label& x : f.at(4))
        if (chi.at(4).at(x).members == divisors(4)) pulled.insert(x);
    CHECK(pulled != a_part.selection.at(4));
}

TEST_CASE("principal reading of omega is smaller than the closed-sieve one") {
    DivisorLattice d12(12);
    Topology trivial = build_topology(d12, "trivial");
    OmegaSheaf principal = build_omega_principal(d12, trivial);
    OmegaSheaf closed = build_omega(d12, trivial);
    // on 12 there are 10 sieves but only 6 principal ones, one per divisor
    CHECK(principal.sieves.at(12).size() == 6);
    CHECK(closed.sieves.at(12).size() == 10);
}
