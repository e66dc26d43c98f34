#pragma once

#include <map>
#include <optional>
#include <string>

#include "divitopos/lattice.hpp"

namespace divitopos {

/**
 * Heyting implication k => n inside D_N: the lcm of all divisors t of N
 * with gcd(t, k) | n. The adjunction t | (k => n) iff gcd(t, k) | n
 * characterizes it.
 */
Div implies(const DivisorLattice& lattice, Div k, Div n);

/// Pseudo-complement: neg(n) = implies(n, 1), the largest divisor of N coprime to n.
Div neg(const DivisorLattice& lattice, Div n);

struct LawResult {
    bool pass = true;
    std::optional<std::string> counterexample;
};

/// Per-law verdicts for the heyting law battery; failures carry a witness tuple.
struct HeytingReport {
    Div modulus = 1;
    std::map<std::string, LawResult> law_results;

    bool all_pass() const;
    std::string to_json() const;
};

/**
 * Exhaustive verification over all divisors n, k of N of:
 *   adjunction  t | (k=>n) iff gcd(t,k) | n       (all triples)
 *   dnn_intro   n | neg(neg(n))
 *   antitone    n | k implies neg(k) | neg(n)
 *   triple_neg  neg(n) = neg(neg(neg(n)))
 *   dnn_meet    neg(neg(gcd(n,k))) = gcd(neg(neg(n)), neg(neg(k)))
 */
HeytingReport check_negation_laws(const DivisorLattice& lattice);

/// True iff neg(neg(n)) = n for every divisor n of N; holds iff N is squarefree.
bool is_boolean(const DivisorLattice& lattice);

}  // namespace divitopos
