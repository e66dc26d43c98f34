#include "doctest.h"

#include <stdexcept>

#include <numeric>

#include "divitopos/heyting.hpp"

using namespace divitopos;

namespace {

// independent oracle: implication as a max-search instead of lcm accumulation
Div implies_oracle(const DivisorLattice& lattice, Div k, Div n) {
    Div best = 1;
    for (Div t : lattice.elements())
        if (n % std::gcd(t, k) == 0 && t > best) best = t;
    return best;
}

}  // namespace

TEST_CASE("implies on hand-checked values") {
    DivisorLattice d12(12);
    // qualifying t for (2 => 3) are {1,3}
    CHECK(implies(d12, 2, 3) == 3);
    // qualifying t for (4 => 6) are {1,2,3,6}
    CHECK(implies(d12, 4, 6) == 6);
    for (Div k : d12.elements())
        for (Div n : d12.elements())
            if (n % k == 0) CHECK(implies(d12, k, n) == 12);
}

TEST_CASE("implies agrees with the max-search oracle") {
    for (Div modulus : {12, 30, 360}) {
        DivisorLattice lattice(modulus);
        for (Div k : lattice.elements())
            for (Div n : lattice.elements())
                CHECK(implies(lattice, k, n) == implies_oracle(lattice, k, n));
    }
}

TEST_CASE("adjunction holds for all triples") {
    for (Div modulus : {12, 30}) {
        DivisorLattice lattice(modulus);
        for (Div t : lattice.elements())
            for (Div k : lattice.elements())
                for (Div n : lattice.elements())
                    CHECK((implies(lattice, k, n) % t == 0) == (n % std::gcd(t, k) == 0));
    }
}

TEST_CASE("negation") {
    DivisorLattice d12(12);
    CHECK(neg(d12, 2) == 3);
    CHECK(neg(d12, 1) == 12);
    DivisorLattice d30(30);
    CHECK(neg(d30, 2) == 15);
    for (Div n : d12.elements()) CHECK(std::gcd(n, neg(d12, n)) == 1);
}

TEST_CASE("negation law battery") {
    for (Div modulus : {1, 12, 360}) {
        HeytingReport report = check_negation_laws(DivisorLattice(modulus));
        CHECK(report.all_pass());
        CHECK(report.law_results.size() == 5);
    }
}

TEST_CASE("is_boolean") {
    CHECK(is_boolean(DivisorLattice(30)));
    CHECK(is_boolean(DivisorLattice(1)));
    DivisorLattice d12(12);
    CHECK_FALSE(is_boolean(d12));
    // the witness: double negation moves 2 to 4
    CHECK(neg(d12, neg(d12, 2)) == 4);
}

TEST_CASE("boolean iff squarefree up to 200") {
    for (Div n = 1; n <= 200; ++n)
        CHECK(is_boolean(DivisorLattice(n)) == is_squarefree(n));
}

TEST_CASE("report json carries counterexamples") {
    HeytingReport report;
    report.modulus = 12;
    report.law_results["dnn_intro"] = {false, "(2)"};
    std::string json = report.to_json();
    CHECK(json.find("\"pass\":false") != std::string::npos);
    CHECK(json.find("(2)") != std::string::npos);
}
