#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace divitopos {

/// Divisors are plain integers; the lattice order is divisibility.
using Div = long long;

/// All divisors of n, ascending. Trial division, adequate for n <= 10^9.
std::vector<Div> divisors(Div n);

/// True iff no prime square divides n.
bool is_squarefree(Div n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Div, int>> factorize(Div n);

/**
 * The finite divisor lattice D_N: all divisors of a modulus N ordered by
 * divisibility. Bottom is 1, top is N. Meet is gcd, join is lcm, and both
 * stay inside the lattice, so D_N is a finite distributive lattice.
 *
 * Immutable after construction; every query is a pure function.
 */
class DivisorLattice {
public:
    explicit DivisorLattice(Div modulus);

    Div modulus() const { return modulus_; }
    const std::vector<Div>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(Div k) const;
    /// Index of k in elements(); throws std::domain_error if k is not an element.
    std::size_t index_of(Div k) const;

    /// k <= n in the divisibility order, i.e. k | n. Both must be elements.
    bool leq(Div k, Div n) const;

    Div meet(Div m, Div n) const;  // gcd
    Div join(Div m, Div n) const;  // lcm

    /// All divisors of n (the principal down-set / maximal sieve on n).
    std::vector<Div> down_set(Div n) const;
    /// All multiples of n that divide N.
    std::vector<Div> up_set(Div n) const;
    /// Union of down_set(m) over m in gens; down-closed by construction.
    std::vector<Div> down_closure(const std::vector<Div>& gens) const;

    /// Hasse diagram: pairs (k, n) with k | n and n/k prime.
    std::vector<std::pair<Div, Div>> covering_edges() const;

    /// Exhaustive gcd/lcm distributivity check over all element triples.
    bool check_distributive() const;

    std::string to_json() const;
    std::string to_dot() const;

private:
    void require_element(Div k) const;

    Div modulus_;
    std::vector<Div> elements_;
    // order_matrix_[i][j] == true iff elements_[i] divides elements_[j]
    std::vector<std::vector<bool>> order_matrix_;
};

/// The multiplicative order: a <= b iff b divides a. Same carrier, order reversed.
class DualOrderView {
public:
    explicit DualOrderView(const DivisorLattice& base) : base_(&base) {}

    const DivisorLattice& base() const { return *base_; }
    bool leq(Div a, Div b) const { return base_->leq(b, a); }

private:
    const DivisorLattice* base_;
};

}  // namespace divitopos
