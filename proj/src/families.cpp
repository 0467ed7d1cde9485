#include "specjoin/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "specjoin/errors.hpp"

namespace specjoin::families {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

JoinedUnionSpec star_of(Component center, std::vector<Component> leaves) {
    JoinedUnionSpec spec{make_star(leaves.size() + 1), {}};
    spec.components.reserve(leaves.size() + 1);
    spec.components.push_back(std::move(center));
    for (auto& c : leaves) spec.components.push_back(std::move(c));
    return spec;
}

Spectrum engine(const JoinedUnionSpec& spec) { return structural_spectrum(spec).retagged(Source::closed_form); }

double cycle_eigenvalue(std::size_t k, std::size_t m) {
    return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

void add(PrintedForm& f, double value, long long multiplicity) {
    if (multiplicity > 0) f.values.push_back({value, static_cast<std::size_t>(multiplicity)});
}

}  // namespace

JoinedUnionSpec multipartite_spec(std::span<const std::size_t> part_orders) {
    require(part_orders.size() >= 2, "multipartite: need at least 2 parts");
    JoinedUnionSpec spec{make_complete(part_orders.size()), {}};
    for (auto n : part_orders) {
        require(n >= 1, "multipartite: part orders must be >= 1");
        spec.components.push_back(Component::empty(n));
    }
    return spec;
}

JoinedUnionSpec equal_multipartite_spec(std::size_t parts, std::size_t part_order) {
    require(parts >= 2 && part_order >= 1, "equal_multipartite: need p >= 2 and t >= 1");
    const std::vector<std::size_t> orders(parts, part_order);
    return multipartite_spec(orders);
}

JoinedUnionSpec join_spec(const Component& g1, const Component& g2) { return {make_complete(2), {g1, g2}}; }

JoinedUnionSpec complete_bipartite_spec(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete_bipartite: need a, b >= 1");
    return join_spec(Component::empty(a), Component::empty(b));
}

JoinedUnionSpec complete_split_spec(std::size_t clique, std::size_t order) {
    require(clique >= 1 && order > clique, "complete_split: need 1 <= w < n");
    return join_spec(Component::complete(clique), Component::empty(order - clique));
}

JoinedUnionSpec cone_spec(std::size_t cycle_order, std::size_t apexes) {
    require(cycle_order >= 3 && apexes >= 1, "cone: need a >= 3 and b >= 1");
    return join_spec(Component::cycle(cycle_order), Component::empty(apexes));
}

JoinedUnionSpec wheel_spec(std::size_t order) {
    require(order >= 4, "wheel: need n >= 4");
    return join_spec(Component::cycle(order - 1), Component::complete(1));
}

JoinedUnionSpec friendship_spec(std::size_t triangles) {
    require(triangles >= 1, "friendship: need n >= 1");
    return star_of(Component::complete(1), std::vector<Component>(triangles, Component::complete(2)));
}

JoinedUnionSpec firefly_spec(std::size_t singles, std::size_t total) {
    require(total >= 1 && singles <= total, "firefly: need n >= 1 and 0 <= p <= n");
    std::vector<Component> leaves(singles, Component::complete(1));
    leaves.insert(leaves.end(), total - singles, Component::complete(2));
    return star_of(Component::complete(1), std::move(leaves));
}

JoinedUnionSpec multistep_wheel_spec(std::size_t cycles, std::size_t cycle_order) {
    require(cycles >= 1 && cycle_order >= 3, "multistep_wheel: need a >= 1 and b >= 3");
    return star_of(Component::complete(1), std::vector<Component>(cycles, Component::cycle(cycle_order)));
}

Spectrum multipartite_spectrum(std::span<const std::size_t> part_orders) {
    return engine(multipartite_spec(part_orders));
}
Spectrum equal_multipartite_spectrum(std::size_t parts, std::size_t part_order) {
    return engine(equal_multipartite_spec(parts, part_order));
}
Spectrum join_two_regular(const Component& g1, const Component& g2) { return engine(join_spec(g1, g2)); }
Spectrum join_two_regular(std::size_t n1, std::size_t r1, std::vector<double> lambda1, std::size_t n2,
                          std::size_t r2, std::vector<double> lambda2) {
    require(lambda1.size() == n1 && lambda2.size() == n2, "join_two_regular: eigenvalue lists must match the orders");
    return join_two_regular(Component::from_spectrum(r1, std::move(lambda1)),
                            Component::from_spectrum(r2, std::move(lambda2)));
}
Spectrum complete_bipartite(std::size_t a, std::size_t b) { return engine(complete_bipartite_spec(a, b)); }
Spectrum complete_split(std::size_t clique, std::size_t order) { return engine(complete_split_spec(clique, order)); }
Spectrum cone(std::size_t cycle_order, std::size_t apexes) { return engine(cone_spec(cycle_order, apexes)); }
Spectrum wheel(std::size_t order) { return engine(wheel_spec(order)); }
Spectrum friendship(std::size_t triangles) { return engine(friendship_spec(triangles)); }
Spectrum firefly(std::size_t singles, std::size_t total) { return engine(firefly_spec(singles, total)); }
Spectrum multistep_wheel(std::size_t cycles, std::size_t cycle_order) {
    return engine(multistep_wheel_spec(cycles, cycle_order));
}

std::size_t PrintedForm::printed_total() const {
    std::size_t t = 0;
    for (const auto& v : values) t += v.multiplicity;
    return t;
}

PrintedForm printed_complete_bipartite(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete_bipartite: need a, b >= 1");
    PrintedForm f{"complete_bipartite", "{0, 1^[a+b-2], 2}", {}, a + b};
    add(f, 0.0, 1);
    add(f, 1.0, static_cast<long long>(a + b) - 2);
    add(f, 2.0, 1);
    return f;
}

PrintedForm printed_equal_multipartite(std::size_t parts, std::size_t part_order) {
    require(parts >= 2 && part_order >= 1, "equal_multipartite: need p >= 2 and t >= 1");
    const auto p = static_cast<double>(parts);
    PrintedForm f{"equal_multipartite", "{0, 1^[N-p], (p/(p-1))^[p-1]}", {}, parts * part_order};
    add(f, 0.0, 1);
    add(f, 1.0, static_cast<long long>(parts * part_order - parts));
    add(f, p / (p - 1.0), static_cast<long long>(parts) - 1);
    return f;
}

PrintedForm printed_complete_split(std::size_t clique, std::size_t order) {
    require(clique >= 1 && order > clique, "complete_split: need 1 <= w < n");
    const auto n = static_cast<double>(order), w = static_cast<double>(clique);
    PrintedForm f{"complete_split", "{0, (n/(n-1))^[w-1], (2n-w+1)/(n-1)}", {}, order};
    add(f, 0.0, 1);
    add(f, n / (n - 1.0), static_cast<long long>(clique) - 1);
    add(f, (2.0 * n - w + 1.0) / (n - 1.0), 1);
    return f;
}

PrintedForm printed_cone(std::size_t cycle_order, std::size_t apexes) {
    require(cycle_order >= 3 && apexes >= 1, "cone: need a >= 3 and b >= 1");
    const auto b = static_cast<double>(apexes);
    // The printed cosine argument uses "n"; read as the cycle order a.
    PrintedForm f{"cone", "{1 - 2cos(2*pi*k/n)/(2+b) : k=2..n-1} + {0, (2b+2)/(b+2)}", {}, cycle_order + apexes};
    for (std::size_t k = 2; k + 1 <= cycle_order; ++k) add(f, 1.0 - cycle_eigenvalue(k, cycle_order) / (2.0 + b), 1);
    add(f, 0.0, 1);
    add(f, (2.0 * b + 2.0) / (b + 2.0), 1);
    return f;
}

PrintedForm printed_wheel(std::size_t order) {
    require(order >= 4, "wheel: need n >= 4");
    // The printed cosine argument uses "m"; read as the rim order n-1.
    PrintedForm f{"wheel", "{1 - (1/3)2cos(2*pi*k/m) : k=2..n-2} + {0, 4/3}", {}, order};
    for (std::size_t k = 2; k + 2 <= order; ++k) add(f, 1.0 - cycle_eigenvalue(k, order - 1) / 3.0, 1);
    add(f, 0.0, 1);
    add(f, 4.0 / 3.0, 1);
    return f;
}

PrintedForm printed_friendship(std::size_t triangles) {
    require(triangles >= 1, "friendship: need n >= 1");
    const auto n = static_cast<long long>(triangles);
    PrintedForm f{"friendship", "{0, (1/2)^[n-1], (3/2)^[n+1]}", {}, 2 * triangles + 1};
    add(f, 0.0, 1);
    add(f, 0.5, n - 1);
    add(f, 1.5, n + 1);
    return f;
}

PrintedForm printed_firefly(std::size_t singles, std::size_t total) {
    require(singles >= 1 && singles < total, "firefly printed form: need 1 <= p <= n-1");
    const auto n = static_cast<double>(total), p = static_cast<double>(singles);
    const auto nn = static_cast<long long>(total), pp = static_cast<long long>(singles);
    PrintedForm f{"firefly",
                  "{0, (1/2)^[n-p-1], 1^[p-1], (3/2)^[n-p], (5sqrt(2n-p) +- sqrt(2n+7p))/(4sqrt(2n-p))}",
                  {},
                  2 * total - singles + 1};
    add(f, 0.0, 1);
    add(f, 0.5, nn - pp - 1);
    add(f, 1.0, pp - 1);
    add(f, 1.5, nn - pp);
    const double s = std::sqrt(2.0 * n - p), t = std::sqrt(2.0 * n + 7.0 * p);
    add(f, (5.0 * s - t) / (4.0 * s), 1);
    add(f, (5.0 * s + t) / (4.0 * s), 1);
    return f;
}

PrintedForm printed_multistep_wheel(std::size_t cycles, std::size_t cycle_order) {
    require(cycles >= 1 && cycle_order >= 3, "multistep_wheel: need a >= 1 and b >= 3");
    // Statement values plus the (1/3)^[a-1] block stated in the accompanying argument.
    PrintedForm f{"multistep_wheel", "{0, 4/3} + {1 - (2/3)cos(2*pi*k/b) : k=2..b} + {(1/3)^[a-1]}", {},
                  cycles * cycle_order + 1};
    add(f, 0.0, 1);
    add(f, 4.0 / 3.0, 1);
    for (std::size_t k = 2; k <= cycle_order; ++k) add(f, 1.0 - cycle_eigenvalue(k, cycle_order) / 3.0, 1);
    add(f, 1.0 / 3.0, static_cast<long long>(cycles) - 1);
    return f;
}

PrintedDiscrepancy compare_printed(const PrintedForm& printed, const Spectrum& reference, double tol) {
    PrintedDiscrepancy d;
    d.printed_total = printed.printed_total();
    d.reference_total = reference.total();
    const auto ref = reference.values();
    std::vector<bool> used(ref.size(), false);
    for (const auto& pv : printed.values) {
        double nearest = std::numeric_limits<double>::infinity();
        for (double r : ref) nearest = std::min(nearest, std::abs(r - pv.value));
        d.value_deviation = std::max(d.value_deviation, nearest);
        for (std::size_t k = 0; k < pv.multiplicity; ++k) {
            std::size_t best = ref.size();
            double best_gap = tol;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                if (used[i]) continue;
                const double gap = std::abs(ref[i] - pv.value);
                if (gap <= best_gap) {
                    best_gap = gap;
                    best = i;
                }
            }
            if (best == ref.size()) {
                ++d.unmatched_printed;
            } else {
                used[best] = true;
            }
        }
    }
    d.unmatched = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
    return d;
}

FamilyDescriptor FamilyDescriptor::parse(const std::string& text) {
    FamilyDescriptor d;
    const auto colon = text.find(':');
    d.name = text.substr(0, colon);
    if (d.name.empty()) throw InvalidArgument("family descriptor '" + text + "' has no name");
    if (colon == std::string::npos) return d;
    std::stringstream rest(text.substr(colon + 1));
    std::string token;
    while (std::getline(rest, token, ',')) {
        if (token.empty()) throw InvalidArgument("family descriptor '" + text + "' has an empty parameter");
        if (d.name == "join") {
            d.components.push_back(token);
            continue;
        }
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw InvalidArgument("family descriptor '" + text + "': parameter '" + token + "' is not a non-negative integer");
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw InvalidArgument("family descriptor '" + text + "': parameter '" + token + "' is out of range");
        d.params.push_back(value);
    }
    return d;
}

std::string FamilyDescriptor::to_string() const {
    std::string out = name;
    char sep = ':';
    for (auto p : params) {
        out += sep + std::to_string(p);
        sep = ',';
    }
    for (const auto& c : components) {
        out += sep + c;
        sep = ',';
    }
    return out;
}

Component parse_component_token(const std::string& token) {
    if (token.size() < 2 || !std::all_of(token.begin() + 1, token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidArgument("component token '" + token + "' must look like K5, E3 or C6");
    std::size_t m = 0;
    const auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), m);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw InvalidArgument("component token '" + token + "' has an out-of-range order");
    switch (token[0]) {
        case 'K': return Component::complete(m);
        case 'E': return Component::empty(m);
        case 'C': return Component::cycle(m);
        default: throw InvalidArgument("component token '" + token + "': kind must be K, E or C");
    }
}

namespace {

void arity(const FamilyDescriptor& d, std::size_t expected) {
    if (d.params.size() != expected)
        throw InvalidArgument("family '" + d.name + "' takes " + std::to_string(expected) + " parameter(s), got " +
                              std::to_string(d.params.size()));
}

}  // namespace

JoinedUnionSpec family_spec(const FamilyDescriptor& d) {
    const auto& p = d.params;
    if (d.name == "multipartite") return multipartite_spec(p);
    if (d.name == "equal_multipartite") return arity(d, 2), equal_multipartite_spec(p[0], p[1]);
    if (d.name == "complete_bipartite") return arity(d, 2), complete_bipartite_spec(p[0], p[1]);
    if (d.name == "complete_split") return arity(d, 2), complete_split_spec(p[0], p[1]);
    if (d.name == "cone") return arity(d, 2), cone_spec(p[0], p[1]);
    if (d.name == "wheel") return arity(d, 1), wheel_spec(p[0]);
    if (d.name == "friendship") return arity(d, 1), friendship_spec(p[0]);
    if (d.name == "firefly") return arity(d, 2), firefly_spec(p[0], p[1]);
    if (d.name == "multistep_wheel") return arity(d, 2), multistep_wheel_spec(p[0], p[1]);
    if (d.name == "join") {
        if (d.components.size() != 2) throw InvalidArgument("family 'join' takes exactly two components");
        return join_spec(parse_component_token(d.components[0]), parse_component_token(d.components[1]));
    }
    throw InvalidArgument("unknown family '" + d.name + "'");
}

bool family_has_printed(const std::string& name) {
    return name == "equal_multipartite" || name == "complete_bipartite" || name == "complete_split" ||
           name == "cone" || name == "wheel" || name == "friendship" || name == "firefly" || name == "multistep_wheel";
}

PrintedForm family_printed(const FamilyDescriptor& d) {
    const auto& p = d.params;
    if (d.name == "equal_multipartite") return arity(d, 2), printed_equal_multipartite(p[0], p[1]);
    if (d.name == "complete_bipartite") return arity(d, 2), printed_complete_bipartite(p[0], p[1]);
    if (d.name == "complete_split") return arity(d, 2), printed_complete_split(p[0], p[1]);
    if (d.name == "cone") return arity(d, 2), printed_cone(p[0], p[1]);
    if (d.name == "wheel") return arity(d, 1), printed_wheel(p[0]);
    if (d.name == "friendship") return arity(d, 1), printed_friendship(p[0]);
    if (d.name == "firefly") return arity(d, 2), printed_firefly(p[0], p[1]);
    if (d.name == "multistep_wheel") return arity(d, 2), printed_multistep_wheel(p[0], p[1]);
    throw InvalidArgument("family '" + d.name + "' has no printed closed form");
}

std::string family_grammar_help() {
    return "Family descriptors: name:param1,param2,...\n"
           "  multipartite:n1,n2,...      complete multipartite K_{n1,...,np}\n"
           "  equal_multipartite:p,t      K_{t,...,t} with p parts\n"
           "  complete_bipartite:a,b      K_{a,b}\n"
           "  complete_split:w,n          K_w join complement(K_{n-w})\n"
           "  cone:a,b                    C_a join complement(K_b)\n"
           "  wheel:n                     C_{n-1} join K_1\n"
           "  friendship:n                n triangles sharing a vertex\n"
           "  firefly:p,n                 K_{1,n}[K_1, p x K_1, (n-p) x K_2]\n"
           "  multistep_wheel:a,b         K_1 join a copies of C_b\n"
           "  join:X,Y                    join of two components, X/Y in {Km, Em, Cm}\n";
}

}  // namespace specjoin::families
