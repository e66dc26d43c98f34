#include "divitopos/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace divitopos {

std::vector<Div> divisors(Div n) {
    if (n < 1) throw std::domain_error("divisors: n must be positive");
    std::vector<Div> small, large;
    for (Div d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<Div, int>> factorize(Div n) {
    if (n < 1) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<Div, int>> out;
    for (Div p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(Div n) {
    if (n < 1) throw std::domain_error("is_squarefree: n must be positive");
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

DivisorLattice::DivisorLattice(Div modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::domain_error("DivisorLattice: modulus must be positive");
    elements_ = divisors(modulus);
    const std::size_t m = elements_.size();
    order_matrix_.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            order_matrix_[i][j] = (elements_[j] % elements_[i] == 0);
}

bool DivisorLattice::contains(Div k) const {
    return std::binary_search(elements_.begin(), elements_.end(), k);
}

std::size_t DivisorLattice::index_of(Div k) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), k);
    if (it == elements_.end() || *it != k)
        throw std::domain_error("element " + std::to_string(k) + " is not a divisor of " +
                                std::to_string(modulus_));
    return static_cast<std::size_t>(it - elements_.begin());
}

void DivisorLattice::require_element(Div k) const { (void)index_of(k); }

bool DivisorLattice::leq(Div k, Div n) const {
    return order_matrix_[index_of(k)][index_of(n)];
}

Div DivisorLattice::meet(Div m, Div n) const {
    require_element(m);
    require_element(n);
    return std::gcd(m, n);
}

Div DivisorLattice::join(Div m, Div n) const {
    require_element(m);
    require_element(n);
    return std::lcm(m, n);
}

std::vector<Div> DivisorLattice::down_set(Div n) const {
    require_element(n);
    std::vector<Div> out;
    for (Div k : elements_)
        if (n % k == 0) out.push_back(k);
    return out;
}

std::vector<Div> DivisorLattice::up_set(Div n) const {
    require_element(n);
    std::vector<Div> out;
    for (Div k : elements_)
        if (k % n == 0) out.push_back(k);
    return out;
}

std::vector<Div> DivisorLattice::down_closure(const std::vector<Div>& gens) const {
    std::vector<Div> out;
    for (Div k : elements_) {
        for (Div m : gens) {
            require_element(m);
            if (m % k == 0) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

std::vector<std::pair<Div, Div>> DivisorLattice::covering_edges() const {
    std::vector<std::pair<Div, Div>> out;
    for (Div k : elements_)
        for (Div n : elements_) {
            if (k >= n || n % k != 0) continue;
            Div q = n / k;
            if (factorize(q).size() == 1 && factorize(q)[0].second == 1)
                out.emplace_back(k, n);
        }
    return out;
}

bool DivisorLattice::check_distributive() const {
    for (Div a : elements_)
        for (Div b : elements_)
            for (Div c : elements_)
                if (std::gcd(a, std::lcm(b, c)) !=
                    std::lcm<Div, Div>(std::gcd(a, b), std::gcd(a, c)))
                    return false;
    return true;
}

std::string DivisorLattice::to_json() const {
    nlohmann::json j;
    j["modulus"] = modulus_;
    j["elements"] = elements_;
    nlohmann::json hasse = nlohmann::json::array();
    for (auto [k, n] : covering_edges()) hasse.push_back({k, n});
    j["hasse"] = hasse;
    return j.dump();
}

namespace {
// number of prime factors with multiplicity, used as the DOT rank
int big_omega(Div n) {
    int total = 0;
    for (auto [p, e] : factorize(n)) total += e;
    return total;
}
}  // namespace

std::string DivisorLattice::to_dot() const {
    std::ostringstream os;
    os << "digraph D" << modulus_ << " {\n  rankdir=BT;\n";
    for (Div n : elements_) os << "  n" << n << " [label=\"" << n << "\"];\n";
    int max_rank = big_omega(modulus_);
    for (int r = 0; r <= max_rank; ++r) {
        std::vector<Div> level;
        for (Div n : elements_)
            if (big_omega(n) == r) level.push_back(n);
        if (level.empty()) continue;
        os << "  { rank=same;";
        for (Div n : level) os << " n" << n << ";";
        os << " }\n";
    }
    for (auto [k, n] : covering_edges()) os << "  n" << k << " -> n" << n << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace divitopos
