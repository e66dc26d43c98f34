#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "divitopos/lattice.hpp"
#include "divitopos/sieve.hpp"

namespace divitopos {

/// A permutation of {0, ..., size-1} stored as its successor function.
struct Permutation {
    std::vector<int> next;
    std::vector<std::vector<int>> cycles;

    int size() const { return static_cast<int>(next.size()); }
};

/// One cycle of length d for each divisor d of N, laid out deterministically
/// in ascending cycle length; ground size is the divisor sum of N.
Permutation build_permutation(const DivisorLattice& lattice);

/// Fixed points of the n-th iterate: the union of cycles whose length divides n.
std::set<int> periodic_points(const Permutation& perm, Div n);

/// Exact rotation number in [0, 1): num/den in lowest terms, den >= 1.
struct Rational {
    Div num = 0;
    Div den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& other) const { return num * other.den < other.num * den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// num/den reduced modulo 1.
Rational make_rational(Div num, Div den);
Rational add_mod1(const Rational& a, const Rational& b);

/// The group of n-th roots of unity as rotation numbers {j/n mod 1}.
std::set<Rational> roots_of_unity(Div n);

/// Frequency basis of the solution space of the n-fold derivative fixed-point
/// equation: one label per n-th root of unity.
std::set<Rational> solution_space_basis(Div n);

/// Whether `iterations` applications of the derivative fix the basis label
/// with rotation number `rotation`, i.e. iterations * rotation is an integer.
bool derivative_power_fixes(const Rational& rotation, Div iterations);

enum class FamilyKind { periodic_points, root_groups, solution_spaces };

/// Concrete divisor-indexed sets; inclusion is extensional set inclusion.
struct IndexedFamily {
    FamilyKind kind = FamilyKind::periodic_points;
    Div modulus = 1;
    std::map<Div, std::set<std::string>> carrier;
};

IndexedFamily build_family(const DivisorLattice& lattice, FamilyKind kind);

/// carrier(k) as a subset of carrier(n), computed extensionally.
bool family_includes(const IndexedFamily& family, Div k, Div n);

struct PosetIsoReport {
    bool order_match = true;
    bool meet_match = true;
    bool join_match = true;
    std::optional<std::string> counterexample;

    bool all_ok() const { return order_match && meet_match && join_match; }
    std::string to_json() const;
};

/// Inclusion must coincide with divisibility; carriers of gcd must be
/// intersections, and the carrier of lcm the least member containing both.
PosetIsoReport check_poset_iso(const DivisorLattice& lattice, const IndexedFamily& family);

/// Transports a topology across the index identification n <-> carrier(n) and
/// re-verifies the covering axioms on the transported side.
std::pair<Topology, AxiomReport> transport_topology(const DivisorLattice& lattice,
                                                    const Topology& topology,
                                                    const IndexedFamily& family);

std::string family_to_json(const IndexedFamily& family);

}  // namespace divitopos
