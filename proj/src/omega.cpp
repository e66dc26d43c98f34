#include "divitopos/omega.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace divitopos {

bool is_closed_sieve(const DivisorLattice& lattice, const Topology& topology,
                     const Sieve& sieve) {
    for (Div k : lattice.down_set(sieve.base))
        if (topology.admits(k, pullback_sieve(lattice, sieve, k)) && !sieve.contains(k))
            return false;
    return true;
}

Label sieve_label(const Sieve& sieve) {
    Label l = "{";
    for (std::size_t i = 0; i < sieve.members.size(); ++i)
        l += (i ? "," : "") + std::to_string(sieve.members[i]);
    return l + "}";
}

const Sieve& OmegaSheaf::sieve_of(Div n, const Label& label) const {
    const auto& list = sieves.at(n);
    for (const Sieve& s : list)
        if (sieve_label(s) == label) return s;
    throw std::domain_error("no sieve with label " + label + " at " + std::to_string(n));
}

Label OmegaSheaf::label_of(const Sieve& sieve) const {
    const auto& list = sieves.at(sieve.base);
    if (!std::binary_search(list.begin(), list.end(), sieve))
        throw std::domain_error("sieve " + sieve_label(sieve) + " is not an element of Omega(" +
                                std::to_string(sieve.base) + ")");
    return sieve_label(sieve);
}

namespace {

OmegaSheaf assemble_omega(const DivisorLattice& lattice, const Topology& topology,
                          std::map<Div, std::vector<Sieve>> sieves) {
    OmegaSheaf omega;
    omega.topology = topology;
    omega.sieves = std::move(sieves);
    omega.underlying.modulus = lattice.modulus();
    for (Div n : lattice.elements()) {
        std::vector<Label> labels;
        for (const Sieve& s : omega.sieves.at(n)) labels.push_back(sieve_label(s));
        omega.underlying.values[n] = std::move(labels);
    }
    for (Div n : lattice.elements())
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            std::map<Label, Label> map;
            for (const Sieve& s : omega.sieves.at(n))
                map[sieve_label(s)] = sieve_label(pullback_sieve(lattice, s, k));
            omega.underlying.restrictions[{k, n}] = std::move(map);
        }
    return omega;
}

}  // namespace

OmegaSheaf build_omega(const DivisorLattice& lattice, const Topology& topology) {
    std::map<Div, std::vector<Sieve>> sieves;
    for (Div n : lattice.elements()) {
        std::vector<Sieve> closed;
        for (Sieve& s : enumerate_sieves(lattice, n))
            if (is_closed_sieve(lattice, topology, s)) closed.push_back(std::move(s));
        std::sort(closed.begin(), closed.end());
        sieves[n] = std::move(closed);
    }
    return assemble_omega(lattice, topology, std::move(sieves));
}

OmegaSheaf build_omega_principal(const DivisorLattice& lattice, const Topology& topology) {
    std::map<Div, std::vector<Sieve>> sieves;
    for (Div n : lattice.elements()) {
        std::vector<Sieve> list;
        for (Div k : lattice.down_set(n)) list.push_back(Sieve{n, divisors(k)});
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        sieves[n] = std::move(list);
    }
    return assemble_omega(lattice, topology, std::move(sieves));
}

std::map<Div, Label> true_arrow(const OmegaSheaf& omega) {
    std::map<Div, Label> components;
    for (const auto& [n, list] : omega.sieves) {
        Sieve maximal{n, divisors(n)};
        components[n] = omega.label_of(maximal);
    }
    return components;
}

void validate_subpresheaf(const DivisorLattice& lattice, const Presheaf& f,
                          const Subpresheaf& a) {
    for (const auto& [n, chosen] : a.selection) {
        const auto& vn = f.at(n);
        for (const Label& x : chosen) {
            if (std::find(vn.begin(), vn.end(), x) == vn.end())
                throw std::invalid_argument("subpresheaf label " + x + " is not in values(" +
                                            std::to_string(n) + ")");
            for (Div k : lattice.down_set(n)) {
                if (k == n) continue;
                Label below = f.restrict_to(k, n, x);
                auto it = a.selection.find(k);
                if (it == a.selection.end() || !it->second.count(below))
                    throw std::invalid_argument(
                        "subpresheaf not closed under restriction: " + x + " at " +
                        std::to_string(n) + " restricts to " + below + " outside selection(" +
                        std::to_string(k) + ")");
            }
        }
    }
}

std::map<Div, std::map<Label, Sieve>> char_map(const DivisorLattice& lattice, const Presheaf& f,
                                               const Subpresheaf& a) {
    validate_subpresheaf(lattice, f, a);
    std::map<Div, std::map<Label, Sieve>> chi;
    for (Div n : lattice.elements()) {
        for (const Label& x : f.at(n)) {
            std::vector<Div> members;
            for (Div k : lattice.down_set(n)) {
                auto it = a.selection.find(k);
                if (it != a.selection.end() && it->second.count(f.restrict_to(k, n, x)))
                    members.push_back(k);
            }
            chi[n][x] = Sieve{n, std::move(members)};
        }
    }
    return chi;
}

Subpresheaf close_subpresheaf(const DivisorLattice& lattice, const Presheaf& f,
                              const Subpresheaf& a, const Topology& topology) {
    auto chi = char_map(lattice, f, a);
    Subpresheaf closed;
    for (Div n : lattice.elements()) {
        std::set<Label> chosen;
        for (const Label& x : f.at(n))
            if (topology.admits(n, chi.at(n).at(x))) chosen.insert(x);
        closed.selection[n] = std::move(chosen);
    }
    return closed;
}

std::vector<NatTransToOmega> enumerate_nat_trans(const DivisorLattice& lattice, const Presheaf& f,
                                                 const OmegaSheaf& omega) {
    const auto& objects = lattice.elements();
    std::vector<NatTransToOmega> out;
    NatTransToOmega partial;

    auto admissible = [&](Div n, const Label& x, const Sieve& candidate) {
        for (Div k : lattice.down_set(n)) {
            if (k == n) continue;
            const Sieve& below = omega.sieve_of(k, partial.at(k).at(f.restrict_to(k, n, x)));
            if (pullback_sieve(lattice, candidate, k) != below) return false;
        }
        return true;
    };

    auto rec_obj = [&](auto&& self, std::size_t oi) -> void {
        if (oi == objects.size()) {
            out.push_back(partial);
            return;
        }
        Div n = objects[oi];
        const auto& labels = f.at(n);
        partial[n] = {};
        auto rec_elem = [&](auto&& inner, std::size_t ei) -> void {
            if (ei == labels.size()) {
                self(self, oi + 1);
                return;
            }
            const Label& x = labels[ei];
            for (const Sieve& candidate : omega.sieves.at(n)) {
                if (!admissible(n, x, candidate)) continue;
                partial[n][x] = sieve_label(candidate);
                inner(inner, ei + 1);
                partial[n].erase(x);
            }
        };
        rec_elem(rec_elem, 0);
        partial.erase(n);
    };
    rec_obj(rec_obj, 0);
    return out;
}

std::string ClassifierReport::to_json() const {
    nlohmann::json j;
    j["ok"] = ok;
    if (!ok) j["failure"] = failure;
    j["trials_run"] = trials_run;
    j["uniqueness_checked"] = uniqueness_checked;
    return j.dump();
}

ClassifierReport verify_classifier(const DivisorLattice& lattice, const Presheaf& f,
                                   const Topology& topology, int trials, std::uint64_t seed,
                                   double enum_bound) {
    ClassifierReport report;
    OmegaSheaf omega = build_omega(lattice, topology);
    std::mt19937_64 rng(seed);

    double candidates = 1.0;
    for (Div n : lattice.elements())
        candidates *= std::pow(static_cast<double>(omega.sieves.at(n).size()),
                               static_cast<double>(f.at(n).size()));
    const bool can_enumerate = candidates <= enum_bound;

    for (int trial = 0; trial < trials; ++trial) {
        // random subset, closed under restriction by downward propagation
        Subpresheaf a;
        for (Div n : lattice.elements()) a.selection[n] = {};
        for (Div n : lattice.elements())
            for (const Label& x : f.at(n))
                if (rng() % 2 == 0)
                    for (Div k : lattice.down_set(n))
                        a.selection[k].insert(f.restrict_to(k, n, x));
        a = close_subpresheaf(lattice, f, a, topology);
        validate_subpresheaf(lattice, f, a);

        auto chi = char_map(lattice, f, a);

        auto fail = [&](const std::string& what) {
            report.ok = false;
            report.failure = "trial " + std::to_string(trial) + ": " + what;
        };

        // characteristic sieves must land in Omega (J-closed)
        for (Div n : lattice.elements())
            for (const Label& x : f.at(n))
                if (!is_closed_sieve(lattice, topology, chi.at(n).at(x))) {
                    fail("characteristic sieve of " + x + " at " + std::to_string(n) +
                         " is not J-closed");
                    return report;
                }

        // (a) naturality
        for (Div n : lattice.elements())
            for (Div k : lattice.down_set(n)) {
                if (k == n) continue;
                for (const Label& x : f.at(n))
                    if (pullback_sieve(lattice, chi.at(n).at(x), k) !=
                        chi.at(k).at(f.restrict_to(k, n, x))) {
                        fail("naturality fails at (" + std::to_string(k) + "," +
                             std::to_string(n) + ") on " + x);
                        return report;
                    }
            }

        // (b) A is the pullback of true along chi
        for (Div n : lattice.elements()) {
            std::set<Label> pulled;
            for (const Label& x : f.at(n))
                if (chi.at(n).at(x).members == divisors(n)) pulled.insert(x);
            if (pulled != a.selection.at(n)) {
                fail("selection at " + std::to_string(n) + " is not the pullback of true");
                return report;
            }
        }

        // (c) uniqueness among all natural transformations, when tractable
        if (can_enumerate) {
            NatTransToOmega chi_labels;
            for (const auto& [n, comp] : chi)
                for (const auto& [x, s] : comp) chi_labels[n][x] = sieve_label(s);
            std::size_t matching = 0;
            bool found_chi = false;
            for (const NatTransToOmega& eta : enumerate_nat_trans(lattice, f, omega)) {
                bool classifies_a = true;
                for (Div n : lattice.elements()) {
                    std::set<Label> pulled;
                    for (const Label& x : f.at(n))
                        if (omega.sieve_of(n, eta.at(n).at(x)).members == divisors(n))
                            pulled.insert(x);
                    if (pulled != a.selection.at(n)) {
                        classifies_a = false;
                        break;
                    }
                }
                if (classifies_a) {
                    ++matching;
                    if (eta == chi_labels) found_chi = true;
                }
            }
            if (matching != 1 || !found_chi) {
                fail("uniqueness fails: " + std::to_string(matching) +
                     " natural maps classify the subobject");
                return report;
            }
            report.uniqueness_checked = true;
        }
        ++report.trials_run;
    }
    return report;
}

}  // namespace divitopos
