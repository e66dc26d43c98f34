#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divitopos/lattice.hpp"
#include "divitopos/sieve.hpp"

namespace divitopos {

using Label = std::string;

/**
 * A finite presheaf on D_N: a finite set of labels per divisor and a
 * restriction map for every divisibility pair. Restrictions at (n, n) are
 * implicit identities; stored maps cover the strict pairs k | n, k < n.
 */
struct Presheaf {
    Div modulus = 1;
    std::map<Div, std::vector<Label>> values;
    std::map<std::pair<Div, Div>, std::map<Label, Label>> restrictions;

    const std::vector<Label>& at(Div n) const;
    /// Applies restriction (k, n) to a label of values(n); identity when k == n.
    Label restrict_to(Div k, Div n, const Label& label) const;
};

/// nullopt when F satisfies the functor laws; otherwise a description of the
/// first violation (missing map, stray label, or a broken composition chain).
std::optional<std::string> validate_presheaf(const DivisorLattice& lattice, const Presheaf& f);

/// One element of F(k) per member k of a covering sieve, compatible under restriction.
struct MatchingFamily {
    Sieve cover;
    std::map<Div, Label> assignment;
};

/// All matching families for the cover; for the empty sieve exactly one, empty.
std::vector<MatchingFamily> matching_families(const DivisorLattice& lattice, const Presheaf& f,
                                              const Sieve& cover);

/// All a in F(n) restricting to the family on every member of its cover.
std::vector<Label> amalgamations(const DivisorLattice& lattice, const Presheaf& f,
                                 const MatchingFamily& family);

struct SheafWitness {
    Div object = 1;
    Sieve cover;
    MatchingFamily family;
    std::size_t amalgamation_count = 0;
};

struct SheafVerdict {
    bool is_sheaf = true;
    std::optional<SheafWitness> witness;
    std::string to_json() const;
};

/// Every matching family for every cover of the topology must amalgamate uniquely.
SheafVerdict is_sheaf(const DivisorLattice& lattice, const Presheaf& f, const Topology& topology);

Presheaf constant_presheaf(const DivisorLattice& lattice, const std::vector<Label>& labels);

/// The representable presheaf of m: a singleton at n when n | m, empty otherwise.
Presheaf representable_presheaf(const DivisorLattice& lattice, Div m);

/**
 * Deterministic seeded presheaf fixture with value sets of size <= max_size.
 * Built as a product over the prime-exponent chains of N, with random maps
 * on chain edges and general restrictions obtained by composition, so the
 * functor laws hold by construction.
 */
Presheaf random_presheaf(const DivisorLattice& lattice, std::uint64_t seed, int max_size);

/**
 * Deterministic seeded fixture that is a sheaf for the named built-in
 * topology: any presheaf for trivial, all-singleton for discrete, and a
 * presheaf with bijective restrictions for atomic/dense.
 */
Presheaf random_sheaf(const DivisorLattice& lattice, const std::string& topology_name,
                      std::uint64_t seed, int max_size);

std::string presheaf_to_json(const Presheaf& f);
Presheaf presheaf_from_json(const DivisorLattice& lattice, const std::string& text);

}  // namespace divitopos
