#include "doctest.h"

#include <stdexcept>

#include <set>

#include "divitopos/sieve.hpp"

using namespace divitopos;

namespace {

// independent oracle: filter all subsets of the divisors for down-closure
std::set<std::vector<Div>> subset_filter_sieves(Div n) {
    std::vector<Div> divs = divisors(n);
    std::set<std::vector<Div>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << divs.size()); ++mask) {
        std::vector<Div> members;
        for (std::size_t i = 0; i < divs.size(); ++i)
            if (mask & (std::size_t{1} << i)) members.push_back(divs[i]);
        bool closed = true;
        for (Div k : members)
            for (Div t : divs)
                if (k % t == 0 &&
                    std::find(members.begin(), members.end(), t) == members.end())
                    closed = false;
        if (closed) out.insert(members);
    }
    return out;
}

}  // namespace

TEST_CASE("make_sieve validation") {
    DivisorLattice d12(12);
    CHECK(make_sieve(d12, 4, {1, 2}).members == std::vector<Div>{1, 2});
    CHECK_THROWS_AS(make_sieve(d12, 4, {2, 4}), std::invalid_argument);
    CHECK(make_sieve(d12, 12, {}).empty());
    CHECK_THROWS_AS(make_sieve(d12, 4, {3}), std::invalid_argument);
}

TEST_CASE("pullback_sieve") {
    DivisorLattice d12(12);
    Sieve s = make_sieve(d12, 12, {1, 2, 3, 6});
    CHECK(pullback_sieve(d12, s, 4).members == std::vector<Div>{1, 2});
    for (Div n : d12.elements())
        for (Div k : d12.down_set(n))
            CHECK(pullback_sieve(d12, maximal_sieve(d12, n), k) == maximal_sieve(d12, k));
    Sieve empty = make_sieve(d12, 12, {});
    CHECK(pullback_sieve(d12, empty, 6).empty());
    CHECK_THROWS_AS(pullback_sieve(d12, s, 8), std::domain_error);
}

TEST_CASE("pullback output is down-closed") {
    DivisorLattice d60(60);
    for (Div n : d60.elements())
        for (const Sieve& s : enumerate_sieves(d60, n))
            for (Div k : d60.down_set(n)) {
                Sieve p = pullback_sieve(d60, s, k);
                CHECK_NOTHROW(make_sieve(d60, k, p.members));
            }
}

TEST_CASE("enumerate_sieves against the subset-filter oracle") {
    DivisorLattice d12(12);
    CHECK(enumerate_sieves(d12, 4).size() == 4);
    CHECK(enumerate_sieves(d12, 3).size() == 3);
    CHECK(enumerate_sieves(d12, 12).size() == 10);
    for (Div modulus : {12, 36}) {
        DivisorLattice lattice(modulus);
        for (Div n : lattice.elements()) {
            std::set<std::vector<Div>> got;
            for (const Sieve& s : enumerate_sieves(lattice, n)) got.insert(s.members);
            CHECK(got == subset_filter_sieves(n));
        }
    }
}

TEST_CASE("built-in topologies") {
    DivisorLattice d12(12);
    Topology trivial = build_topology(d12, "trivial");
    CHECK(trivial.at(12).size() == 1);
    CHECK(trivial.at(12)[0].members.size() == 6);
    CHECK(build_topology(d12, "discrete").at(4).size() == 4);
    Topology atomic = build_topology(d12, "atomic");
    Topology dense = build_topology(d12, "dense");
    for (Div n : d12.elements()) CHECK(atomic.at(n) == dense.at(n));
    CHECK_THROWS_AS(build_topology(d12, "bogus"), std::invalid_argument);
}

TEST_CASE("topology inclusions trivial <= dense <= discrete") {
    DivisorLattice d36(36);
    Topology trivial = build_topology(d36, "trivial");
    Topology dense = build_topology(d36, "dense");
    Topology discrete = build_topology(d36, "discrete");
    for (Div n : d36.elements()) {
        for (const Sieve& s : trivial.at(n)) CHECK(dense.admits(n, s));
        for (const Sieve& s : dense.at(n)) CHECK(discrete.admits(n, s));
    }
}

TEST_CASE("is_dense_below") {
    DivisorLattice d12(12);
    CHECK(is_dense_below(d12, make_sieve(d12, 12, {1}), 12));
    CHECK_FALSE(is_dense_below(d12, make_sieve(d12, 12, {}), 12));
    CHECK(is_dense_below(d12, make_sieve(d12, 12, {1, 2, 4}), 12));
}

TEST_CASE("axiom checker passes the built-ins") {
    for (Div modulus : {1, 12, 36}) {
        DivisorLattice lattice(modulus);
        for (const std::string& name : {"trivial", "discrete", "atomic", "dense"})
            CHECK(check_topology_axioms(lattice, build_topology(lattice, name)).all_ok());
    }
}

TEST_CASE("axiom checker catches violations") {
    DivisorLattice d12(12);

    // drop the maximal sieve at 12
    Topology no_max = build_topology(d12, "trivial");
    no_max.covers[12].clear();
    AxiomReport r1 = check_topology_axioms(d12, no_max);
    CHECK_FALSE(r1.maximal_ok);

    // add the empty sieve at 12 only: its pullbacks are not covers below
    Topology unstable = build_topology(d12, "trivial");
    unstable.covers[12].insert(unstable.covers[12].begin(), make_sieve(d12, 12, {}));
    AxiomReport r2 = check_topology_axioms(d12, unstable);
    CHECK_FALSE(r2.stability_ok);
    CHECK(r2.counterexample.has_value());
}

TEST_CASE("topology json round trip") {
    DivisorLattice d12(12);
    Topology dense = build_topology(d12, "dense");
    Topology back = topology_from_json(d12, topology_to_json(dense));
    CHECK(back.covers == dense.covers);
    CHECK_THROWS(topology_from_json(d12, "{\"modulus\":12,\"covers\":{\"4\":[[2,4]]}}"));
}
