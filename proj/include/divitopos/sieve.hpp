#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divitopos/lattice.hpp"

namespace divitopos {

/// A down-closed set of divisors of a base element. Members sorted ascending.
struct Sieve {
    Div base = 1;
    std::vector<Div> members;

    bool contains(Div k) const;
    bool empty() const { return members.empty(); }

    friend bool operator==(const Sieve&, const Sieve&) = default;
    bool operator<(const Sieve& other) const;
};

/// Validates down-closure; throws std::invalid_argument naming the offending pair.
Sieve make_sieve(const DivisorLattice& lattice, Div base, std::vector<Div> members);

/// The maximal sieve on n: all divisors of n.
Sieve maximal_sieve(const DivisorLattice& lattice, Div n);

/// S restricted below k: members of S that divide k, as a sieve on k.
Sieve pullback_sieve(const DivisorLattice& lattice, const Sieve& sieve, Div k);

/// All sieves on n, i.e. all down-closed subsets of the divisors of n.
std::vector<Sieve> enumerate_sieves(const DivisorLattice& lattice, Div n);

/// True iff every divisor of n has some member of d below it.
bool is_dense_below(const DivisorLattice& lattice, const Sieve& d, Div n);

/**
 * A Grothendieck topology on D_N: each divisor n gets its set of covering
 * sieves. Built-ins: trivial (maximal sieve only), discrete (all sieves),
 * atomic (all nonempty sieves), dense (sieves dense below n). Custom
 * assignments come from JSON and are validated sieve-by-sieve.
 */
struct Topology {
    std::string name;
    Div modulus = 1;
    std::map<Div, std::vector<Sieve>> covers;  // each list sorted, no duplicates

    const std::vector<Sieve>& at(Div n) const;
    bool admits(Div n, const Sieve& sieve) const;
};

Topology build_topology(const DivisorLattice& lattice, const std::string& name);

struct AxiomReport {
    bool maximal_ok = true;
    bool stability_ok = true;
    bool transitivity_ok = true;
    std::optional<std::string> counterexample;

    bool all_ok() const { return maximal_ok && stability_ok && transitivity_ok; }
    std::string to_json() const;
};

/// Exhaustive check of the maximal / stability / transitivity axioms.
AxiomReport check_topology_axioms(const DivisorLattice& lattice, const Topology& topology);

std::string topology_to_json(const Topology& topology);
Topology topology_from_json(const DivisorLattice& lattice, const std::string& text);

}  // namespace divitopos
