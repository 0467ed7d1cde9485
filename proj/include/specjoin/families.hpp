#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specjoin/joined_union.hpp"
#include "specjoin/spectra.hpp"

namespace specjoin::families {

// Each family is described by a JoinedUnionSpec; its spectrum is always the
// general structural engine applied to that spec, retagged closed_form.

JoinedUnionSpec multipartite_spec(std::span<const std::size_t> part_orders);
JoinedUnionSpec equal_multipartite_spec(std::size_t parts, std::size_t part_order);
JoinedUnionSpec join_spec(const Component& g1, const Component& g2);
JoinedUnionSpec complete_bipartite_spec(std::size_t a, std::size_t b);
JoinedUnionSpec complete_split_spec(std::size_t clique, std::size_t order);
JoinedUnionSpec cone_spec(std::size_t cycle_order, std::size_t apexes);
JoinedUnionSpec wheel_spec(std::size_t order);
JoinedUnionSpec friendship_spec(std::size_t triangles);
JoinedUnionSpec firefly_spec(std::size_t singles, std::size_t total);
JoinedUnionSpec multistep_wheel_spec(std::size_t cycles, std::size_t cycle_order);

Spectrum multipartite_spectrum(std::span<const std::size_t> part_orders);
Spectrum equal_multipartite_spectrum(std::size_t parts, std::size_t part_order);
Spectrum join_two_regular(const Component& g1, const Component& g2);
/// Join of two regular graphs given only by order, regularity and adjacency eigenvalues.
Spectrum join_two_regular(std::size_t n1, std::size_t r1, std::vector<double> lambda1, std::size_t n2,
                          std::size_t r2, std::vector<double> lambda2);
Spectrum complete_bipartite(std::size_t a, std::size_t b);
/// CS_{w, n-w} = K_w ▽ complement(K_{n-w}).
Spectrum complete_split(std::size_t clique, std::size_t order);
/// C_a ▽ complement(K_b).
Spectrum cone(std::size_t cycle_order, std::size_t apexes);
/// W_n = C_{n-1} ▽ K_1.
Spectrum wheel(std::size_t order);
/// F_n = K_{1,n}[K_1, K_2, ..., K_2].
Spectrum friendship(std::size_t triangles);
/// F_{p,n-p} = K_{1,n}[K_1, p x K_1, (n-p) x K_2].
Spectrum firefly(std::size_t singles, std::size_t total);
/// W_{a,b} = K_{1,a}[K_1, a x C_b].
Spectrum multistep_wheel(std::size_t cycles, std::size_t cycle_order);

/// A spectrum claim transcribed literally from the published family formulas.
struct PrintedValue {
    double value;
    std::size_t multiplicity;
};

struct PrintedForm {
    std::string family;
    std::string formula;  // the printed expression, for reports
    std::vector<PrintedValue> values;
    std::size_t graph_order;  // order of the graph the claim is about

    std::size_t printed_total() const;
};

PrintedForm printed_complete_bipartite(std::size_t a, std::size_t b);
PrintedForm printed_equal_multipartite(std::size_t parts, std::size_t part_order);
PrintedForm printed_complete_split(std::size_t clique, std::size_t order);
PrintedForm printed_cone(std::size_t cycle_order, std::size_t apexes);
PrintedForm printed_wheel(std::size_t order);
PrintedForm printed_friendship(std::size_t triangles);
PrintedForm printed_firefly(std::size_t singles, std::size_t total);
PrintedForm printed_multistep_wheel(std::size_t cycles, std::size_t cycle_order);

/// How a printed claim measures up against a reference spectrum.
///
/// value_deviation: largest distance from a printed value to the nearest
/// reference eigenvalue. unmatched: reference eigenvalues left over after
/// greedily matching printed values (with multiplicity) within `tol`.
struct PrintedDiscrepancy {
    double value_deviation = 0.0;
    std::size_t unmatched = 0;
    std::size_t unmatched_printed = 0;
    std::size_t printed_total = 0;
    std::size_t reference_total = 0;

    bool agrees() const { return unmatched == 0 && unmatched_printed == 0 && printed_total == reference_total; }
};

PrintedDiscrepancy compare_printed(const PrintedForm& printed, const Spectrum& reference,
                                   double tol = kGroupTolerance);

/// Family descriptor `name:param1,param2,...`, e.g. `firefly:2,7`.
struct FamilyDescriptor {
    std::string name;
    std::vector<std::size_t> params;
    std::vector<std::string> components;  // for `join:K3,C5`

    static FamilyDescriptor parse(const std::string& text);
    std::string to_string() const;
};

JoinedUnionSpec family_spec(const FamilyDescriptor& d);
/// Printed form when the family has one; throws InvalidArgument otherwise.
PrintedForm family_printed(const FamilyDescriptor& d);
bool family_has_printed(const std::string& name);

/// Help text describing the descriptor grammar.
std::string family_grammar_help();

/// `K5`, `E3`, `C6` component tokens.
Component parse_component_token(const std::string& token);

}  // namespace specjoin::families
