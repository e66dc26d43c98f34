#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "divitopos/presheaf.hpp"

namespace divitopos {

/// A sieve S on n is J-closed when every k whose pullback of S covers k
/// already belongs to S.
bool is_closed_sieve(const DivisorLattice& lattice, const Topology& topology, const Sieve& sieve);

/**
 * The subobject classifier as a presheaf: Omega(n) is the set of J-closed
 * sieves on n, restriction is sieve pullback. Labels in the underlying
 * presheaf are canonical member-list strings, aligned with `sieves`.
 */
struct OmegaSheaf {
    Topology topology;
    Presheaf underlying;
    std::map<Div, std::vector<Sieve>> sieves;

    const Sieve& sieve_of(Div n, const Label& label) const;
    Label label_of(const Sieve& sieve) const;
};

/// Canonical label for a sieve, e.g. "{1,2,4}".
Label sieve_label(const Sieve& sieve);

OmegaSheaf build_omega(const DivisorLattice& lattice, const Topology& topology);

/// The literal principal-sieve reading: Omega(n) = principal sieves on n.
/// Kept for comparison; it does not classify subobjects in general.
OmegaSheaf build_omega_principal(const DivisorLattice& lattice, const Topology& topology);

/// Component at each n of true: 1 -> Omega, the label of the maximal sieve.
std::map<Div, Label> true_arrow(const OmegaSheaf& omega);

/// A selection of labels per object, closed under restriction.
struct Subpresheaf {
    std::map<Div, std::set<Label>> selection;
};

/// Throws std::invalid_argument if the selection is not closed under restriction.
void validate_subpresheaf(const DivisorLattice& lattice, const Presheaf& f, const Subpresheaf& a);

/// Characteristic sieves: at n, x maps to { k | n : restriction(k,n)(x) in A(k) }.
/// Always a sieve; J-closed when A is a J-closed subobject.
std::map<Div, std::map<Label, Sieve>> char_map(const DivisorLattice& lattice, const Presheaf& f,
                                               const Subpresheaf& a);

/// J-closure of a subpresheaf: x joins when its characteristic sieve is a J-cover.
Subpresheaf close_subpresheaf(const DivisorLattice& lattice, const Presheaf& f,
                              const Subpresheaf& a, const Topology& topology);

/// Natural transformations F -> Omega, as label maps per object.
using NatTransToOmega = std::map<Div, std::map<Label, Label>>;

/// All natural transformations F -> Omega, by backtracking with naturality
/// pruning. Intended for desk-scale fixtures.
std::vector<NatTransToOmega> enumerate_nat_trans(const DivisorLattice& lattice, const Presheaf& f,
                                                 const OmegaSheaf& omega);

struct ClassifierReport {
    bool ok = true;
    std::string failure;
    int trials_run = 0;
    bool uniqueness_checked = false;
    std::string to_json() const;
};

/**
 * Samples seeded subpresheaves of a J-sheaf F, J-closes them, and checks:
 * (a) the characteristic map is natural, (b) the selection is exactly the
 * pullback of true, (c) the characteristic map is the unique natural map
 * with property (b), the last by exhaustive enumeration whenever the raw
 * candidate count stays under enum_bound.
 */
ClassifierReport verify_classifier(const DivisorLattice& lattice, const Presheaf& f,
                                   const Topology& topology, int trials, std::uint64_t seed,
                                   double enum_bound = 1e6);

}  // namespace divitopos
