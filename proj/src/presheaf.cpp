#include "divitopos/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace divitopos {

const std::vector<Label>& Presheaf::at(Div n) const {
    auto it = values.find(n);
    if (it == values.end())
        throw std::domain_error("presheaf has no value set at " + std::to_string(n));
    return it->second;
}

Label Presheaf::restrict_to(Div k, Div n, const Label& label) const {
    if (k == n) return label;
    auto it = restrictions.find({k, n});
    if (it == restrictions.end())
        throw std::domain_error("presheaf has no restriction map for (" + std::to_string(k) +
                                "," + std::to_string(n) + ")");
    auto jt = it->second.find(label);
    if (jt == it->second.end())
        throw std::domain_error("restriction (" + std::to_string(k) + "," + std::to_string(n) +
                                ") undefined on label " + label);
    return jt->second;
}

std::optional<std::string> validate_presheaf(const DivisorLattice& lattice, const Presheaf& f) {
    for (Div n : lattice.elements())
        if (!f.values.count(n)) return "missing value set at " + std::to_string(n);

    for (Div n : lattice.elements()) {
        const auto& vn = f.at(n);
        if (vn.empty()) continue;
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            auto it = f.restrictions.find({k, n});
            if (it == f.restrictions.end())
                return "missing restriction map (" + std::to_string(k) + "," +
                       std::to_string(n) + ")";
            const auto& vk = f.at(k);
            for (const Label& x : vn) {
                auto jt = it->second.find(x);
                if (jt == it->second.end())
                    return "restriction (" + std::to_string(k) + "," + std::to_string(n) +
                           ") undefined on " + x;
                if (std::find(vk.begin(), vk.end(), jt->second) == vk.end())
                    return "restriction (" + std::to_string(k) + "," + std::to_string(n) +
                           ") maps " + x + " outside values(" + std::to_string(k) + ")";
            }
        }
    }

    // composition law over all chains k | m | n of distinct elements
    for (Div n : lattice.elements())
        for (Div m : lattice.down_set(n)) {
            if (m == n) continue;
            for (Div k : lattice.down_set(m)) {
                if (k == m) continue;
                for (const Label& x : f.at(n))
                    if (f.restrict_to(k, m, f.restrict_to(m, n, x)) != f.restrict_to(k, n, x))
                        return "composition fails on chain (" + std::to_string(k) + "," +
                               std::to_string(m) + "," + std::to_string(n) + ") at " + x;
            }
        }
    return std::nullopt;
}

std::vector<MatchingFamily> matching_families(const DivisorLattice& lattice, const Presheaf& f,
                                              const Sieve& cover) {
    // members descending, so every multiple of k inside the cover is decided
    // before k and forces its value
    std::vector<Div> order(cover.members.rbegin(), cover.members.rend());
    std::vector<MatchingFamily> out;
    std::map<Div, Label> assignment;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            out.push_back(MatchingFamily{cover, assignment});
            return;
        }
        Div k = order[i];
        std::optional<Label> forced;
        bool consistent = true;
        for (const auto& [m, am] : assignment) {
            if (m % k != 0) continue;
            Label want = f.restrict_to(k, m, am);
            if (!forced)
                forced = want;
            else if (*forced != want) {
                consistent = false;
                break;
            }
        }
        if (!consistent) return;
        if (forced) {
            assignment[k] = *forced;
            self(self, i + 1);
            assignment.erase(k);
        } else {
            for (const Label& x : f.at(k)) {
                assignment[k] = x;
                self(self, i + 1);
                assignment.erase(k);
            }
        }
    };
    rec(rec, 0);
    (void)lattice;
    return out;
}

std::vector<Label> amalgamations(const DivisorLattice& lattice, const Presheaf& f,
                                 const MatchingFamily& family) {
    (void)lattice;
    Div n = family.cover.base;
    std::vector<Label> out;
    for (const Label& a : f.at(n)) {
        bool ok = true;
        for (Div k : family.cover.members)
            if (f.restrict_to(k, n, a) != family.assignment.at(k)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(a);
    }
    return out;
}

std::string SheafVerdict::to_json() const {
    nlohmann::json j;
    j["is_sheaf"] = is_sheaf;
    if (witness) {
        nlohmann::json w;
        w["object"] = witness->object;
        w["cover"] = witness->cover.members;
        nlohmann::json fam = nlohmann::json::object();
        for (const auto& [k, v] : witness->family.assignment) fam[std::to_string(k)] = v;
        w["family"] = fam;
        w["amalgamation_count"] = witness->amalgamation_count;
        j["witness"] = w;
    }
    return j.dump();
}

SheafVerdict is_sheaf(const DivisorLattice& lattice, const Presheaf& f,
                      const Topology& topology) {
    for (Div n : lattice.elements())
        for (const Sieve& cover : topology.at(n))
            for (const MatchingFamily& family : matching_families(lattice, f, cover)) {
                auto amals = amalgamations(lattice, f, family);
                if (amals.size() != 1)
                    return SheafVerdict{false,
                                        SheafWitness{n, cover, family, amals.size()}};
            }
    return SheafVerdict{};
}

Presheaf constant_presheaf(const DivisorLattice& lattice, const std::vector<Label>& labels) {
    Presheaf f;
    f.modulus = lattice.modulus();
    for (Div n : lattice.elements()) f.values[n] = labels;
    for (Div n : lattice.elements())
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            std::map<Label, Label> identity;
            for (const Label& x : labels) identity[x] = x;
            f.restrictions[{k, n}] = std::move(identity);
        }
    return f;
}

Presheaf representable_presheaf(const DivisorLattice& lattice, Div m) {
    (void)lattice.index_of(m);
    Presheaf f;
    f.modulus = lattice.modulus();
    for (Div n : lattice.elements())
        f.values[n] = (m % n == 0) ? std::vector<Label>{"*"} : std::vector<Label>{};
    for (Div n : lattice.elements()) {
        if (m % n != 0) continue;
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            f.restrictions[{k, n}] = {{"*", "*"}};
        }
    }
    return f;
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(gen() % k); }
};

// Per-prime chain of value-set sizes and downward edge maps; the presheaf is
// the componentwise product, so any two restriction paths agree.
struct ChainData {
    Div prime;
    std::vector<std::size_t> sizes;               // index = exponent level
    std::vector<std::vector<std::size_t>> edges;  // edges[j] : level j -> level j-1
};

Presheaf product_presheaf(const DivisorLattice& lattice, const std::vector<ChainData>& chains) {
    auto exponents = [&](Div n) {
        std::vector<int> e;
        for (const ChainData& c : chains) {
            int v = 0;
            while (n % c.prime == 0) { n /= c.prime; ++v; }
            e.push_back(v);
        }
        return e;
    };
    auto set_size = [&](const std::vector<int>& e) {
        std::size_t s = 1;
        for (std::size_t i = 0; i < chains.size(); ++i) s *= chains[i].sizes[e[i]];
        return s;
    };
    auto label_of = [&](const std::vector<std::size_t>& tuple) {
        Label l = "v";
        for (std::size_t i = 0; i < tuple.size(); ++i)
            l += (i ? "_" : "") + std::to_string(tuple[i]);
        if (tuple.empty()) l += "0";
        return l;
    };
    auto unrank = [&](std::size_t rank, const std::vector<int>& e) {
        std::vector<std::size_t> tuple(chains.size());
        for (std::size_t i = chains.size(); i-- > 0;) {
            std::size_t s = chains[i].sizes[e[i]];
            tuple[i] = rank % s;
            rank /= s;
        }
        return tuple;
    };
    auto chain_descend = [&](std::size_t idx, int from, int to, std::size_t x) {
        for (int j = from; j > to; --j) x = chains[idx].edges[j][x];
        return x;
    };

    Presheaf f;
    f.modulus = lattice.modulus();
    for (Div n : lattice.elements()) {
        auto e = exponents(n);
        std::vector<Label> labels;
        for (std::size_t r = 0; r < set_size(e); ++r) labels.push_back(label_of(unrank(r, e)));
        f.values[n] = std::move(labels);
    }
    for (Div n : lattice.elements()) {
        auto en = exponents(n);
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            auto ek = exponents(k);
            std::map<Label, Label> map;
            for (std::size_t r = 0; r < set_size(en); ++r) {
                auto tuple = unrank(r, en);
                for (std::size_t i = 0; i < chains.size(); ++i)
                    tuple[i] = chain_descend(i, en[i], ek[i], tuple[i]);
                map[label_of(unrank(r, en))] = label_of(tuple);
            }
            f.restrictions[{k, n}] = std::move(map);
        }
    }
    return f;
}

std::vector<ChainData> make_chains(const DivisorLattice& lattice, Rng& rng, int max_size,
                                   bool bijective) {
    std::vector<ChainData> chains;
    std::size_t budget = static_cast<std::size_t>(max_size);
    for (auto [p, e] : factorize(lattice.modulus())) {
        ChainData c;
        c.prime = p;
        if (bijective) {
            std::size_t s = 1 + rng.below(budget);
            c.sizes.assign(e + 1, s);
            budget = std::max<std::size_t>(1, budget / s);
        } else {
            std::size_t biggest = 1;
            for (int j = 0; j <= e; ++j) {
                std::size_t s = 1 + rng.below(budget);
                c.sizes.push_back(s);
                biggest = std::max(biggest, s);
            }
            budget = std::max<std::size_t>(1, budget / biggest);
        }
        c.edges.resize(e + 1);
        for (int j = 1; j <= e; ++j) {
            std::vector<std::size_t> edge(c.sizes[j]);
            if (bijective) {
                std::iota(edge.begin(), edge.end(), std::size_t{0});
                for (std::size_t i = edge.size(); i > 1; --i)
                    std::swap(edge[i - 1], edge[rng.below(i)]);
            } else {
                for (auto& target : edge) target = rng.below(c.sizes[j - 1]);
            }
            c.edges[j] = std::move(edge);
        }
        chains.push_back(std::move(c));
    }
    return chains;
}

}  // namespace

Presheaf random_presheaf(const DivisorLattice& lattice, std::uint64_t seed, int max_size) {
    if (max_size < 1) throw std::invalid_argument("random_presheaf: max_size must be >= 1");
    Rng rng(seed);
    if (lattice.modulus() == 1) {
        std::vector<Label> labels;
        std::size_t s = 1 + rng.below(static_cast<std::size_t>(max_size));
        for (std::size_t i = 0; i < s; ++i) labels.push_back("v" + std::to_string(i));
        Presheaf f;
        f.modulus = 1;
        f.values[1] = labels;
        return f;
    }
    return product_presheaf(lattice, make_chains(lattice, rng, max_size, false));
}

Presheaf random_sheaf(const DivisorLattice& lattice, const std::string& topology_name,
                      std::uint64_t seed, int max_size) {
    if (topology_name == "trivial") return random_presheaf(lattice, seed, max_size);
    if (topology_name == "discrete") return random_presheaf(lattice, seed, 1);
    if (topology_name == "atomic" || topology_name == "dense") {
        Rng rng(seed);
        if (lattice.modulus() == 1) return random_presheaf(lattice, seed, max_size);
        return product_presheaf(lattice, make_chains(lattice, rng, max_size, true));
    }
    throw std::invalid_argument("random_sheaf: unknown topology " + topology_name);
}

std::string presheaf_to_json(const Presheaf& f) {
    nlohmann::json j;
    j["modulus"] = f.modulus;
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [n, labels] : f.values) values[std::to_string(n)] = labels;
    j["values"] = values;
    nlohmann::json restrictions = nlohmann::json::object();
    for (const auto& [pair, map] : f.restrictions) {
        nlohmann::json m = nlohmann::json::object();
        for (const auto& [from, to] : map) m[from] = to;
        restrictions[std::to_string(pair.first) + "|" + std::to_string(pair.second)] = m;
    }
    j["restrictions"] = restrictions;
    return j.dump();
}

Presheaf presheaf_from_json(const DivisorLattice& lattice, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Presheaf f;
    f.modulus = j.at("modulus").get<Div>();
    if (f.modulus != lattice.modulus())
        throw std::invalid_argument("presheaf modulus does not match lattice");
    for (const auto& [key, labels] : j.at("values").items())
        f.values[std::stoll(key)] = labels.get<std::vector<Label>>();
    const nlohmann::json restrictions = j.value("restrictions", nlohmann::json::object());
    for (const auto& [key, map] : restrictions.items()) {
        auto bar = key.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("restriction key must look like \"k|n\": " + key);
        Div k = std::stoll(key.substr(0, bar));
        Div n = std::stoll(key.substr(bar + 1));
        std::map<Label, Label> m;
        for (const auto& [from, to] : map.items()) m[from] = to.get<Label>();
        f.restrictions[{k, n}] = std::move(m);
    }
    return f;
}

}  // namespace divitopos
