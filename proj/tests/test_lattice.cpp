#include "doctest.h"

#include <stdexcept>

#include <numeric>
#include <set>

#include "divitopos/lattice.hpp"

using namespace divitopos;

namespace {

// independent oracle: trial division without the small/large split
std::vector<Div> divisor_oracle(Div n) {
    std::vector<Div> out;
    for (Div d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<Div>{1});
    CHECK(divisors(12) == std::vector<Div>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(360).size() == divisor_oracle(360).size());
    CHECK(divisors(360).size() == 24);
    CHECK(divisors(360) == divisor_oracle(360));
    CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("leq is the divisibility order") {
    DivisorLattice d12(12);
    CHECK(d12.leq(3, 6));
    CHECK_FALSE(d12.leq(4, 6));
    for (Div n : d12.elements()) CHECK(d12.leq(1, n));
    CHECK_THROWS_AS(d12.leq(5, 6), std::domain_error);
}

TEST_CASE("partial order laws hold exhaustively") {
    for (Div modulus : {1, 12, 30, 360}) {
        DivisorLattice lattice(modulus);
        const auto& e = lattice.elements();
        for (Div a : e) {
            CHECK(lattice.leq(a, a));
            for (Div b : e) {
                if (lattice.leq(a, b) && lattice.leq(b, a)) CHECK(a == b);
                for (Div c : e)
                    if (lattice.leq(a, b) && lattice.leq(b, c)) CHECK(lattice.leq(a, c));
            }
        }
    }
}

TEST_CASE("meet and join are glb and lub") {
    DivisorLattice d12(12);
    CHECK(d12.meet(4, 6) == 2);
    CHECK(d12.join(4, 6) == 12);
    for (Div n : d12.elements()) {
        CHECK(d12.meet(n, n) == n);
        CHECK(d12.join(n, n) == n);
    }
    DivisorLattice d30(30);
    CHECK(d30.meet(5, 6) == 1);
    CHECK(d30.join(5, 6) == 30);

    for (Div modulus : {12, 30, 60}) {
        DivisorLattice lattice(modulus);
        const auto& e = lattice.elements();
        for (Div a : e)
            for (Div b : e) {
                Div m = lattice.meet(a, b), j = lattice.join(a, b);
                CHECK(lattice.contains(m));
                CHECK(lattice.contains(j));
                for (Div c : e) {
                    if (lattice.leq(c, a) && lattice.leq(c, b)) CHECK(lattice.leq(c, m));
                    if (lattice.leq(a, c) && lattice.leq(b, c)) CHECK(lattice.leq(j, c));
                }
            }
    }
}

TEST_CASE("down and up sets") {
    DivisorLattice d12(12);
    CHECK(d12.down_set(4) == std::vector<Div>{1, 2, 4});
    CHECK(d12.up_set(4) == std::vector<Div>{4, 12});
    CHECK(d12.down_set(12) == d12.elements());

    // closure properties
    for (Div n : d12.elements()) {
        auto down = d12.down_set(n);
        for (Div k : down)
            for (Div t : d12.elements())
                if (d12.leq(t, k))
                    CHECK(std::find(down.begin(), down.end(), t) != down.end());
        auto up = d12.up_set(n);
        for (Div k : up)
            for (Div t : d12.elements())
                if (d12.leq(k, t)) CHECK(std::find(up.begin(), up.end(), t) != up.end());
    }
}

TEST_CASE("down_closure") {
    DivisorLattice d12(12);
    CHECK(d12.down_closure({4, 6}) == std::vector<Div>{1, 2, 3, 4, 6});
    CHECK(d12.down_closure({}) == std::vector<Div>{});
    CHECK(d12.down_closure({12}) == d12.elements());
}

TEST_CASE("covering_edges") {
    DivisorLattice d4(4);
    CHECK(d4.covering_edges() ==
          std::vector<std::pair<Div, Div>>{{1, 2}, {2, 4}});
    CHECK(DivisorLattice(12).covering_edges().size() == 7);
    CHECK(DivisorLattice(7).covering_edges() ==
          std::vector<std::pair<Div, Div>>{{1, 7}});
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1));
}

TEST_CASE("distributivity") {
    CHECK(DivisorLattice(12).check_distributive());
    CHECK(DivisorLattice(1).check_distributive());
    CHECK(DivisorLattice(360).check_distributive());
}

TEST_CASE("dual order view") {
    DivisorLattice d12(12);
    DualOrderView dual(d12);
    for (Div a : d12.elements())
        for (Div b : d12.elements()) CHECK(dual.leq(a, b) == d12.leq(b, a));
}

TEST_CASE("json and dot output") {
    DivisorLattice d4(4);
    std::string json = d4.to_json();
    CHECK(json.find("\"modulus\":4") != std::string::npos);
    CHECK(json.find("\"hasse\"") != std::string::npos);
    std::string dot = d4.to_dot();
    CHECK(dot.find("n2 -> n4") != std::string::npos);
}
