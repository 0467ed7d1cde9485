#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specjoin/spectra.hpp"

namespace specjoin::doc {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kSignificantDigits = 12;

std::string_view tool_version();

enum class Method { structural, oracle, both };

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

struct GraphDescriptor {
    std::string kind;  // "power", "family" or "edges"
    std::string text;  // n, family descriptor, or edge-list path

    bool operator==(const GraphDescriptor&) const = default;
};

struct Tolerances {
    double grouping = kGroupTolerance;
    double comparison = kCompareTolerance;
    int significant_digits = kSignificantDigits;

    bool operator==(const Tolerances&) const = default;
};

struct SpectrumDocument {
    int schema = kSchemaVersion;
    std::string tool_version;
    GraphDescriptor graph;
    std::size_t order = 0;
    Method method = Method::both;
    std::vector<SpectrumPair> eigenvalues;
    std::optional<double> deviation;  // structural vs oracle, only for Method::both
    Tolerances tolerances;
    std::optional<std::string> timestamp;

    bool operator==(const SpectrumDocument&) const = default;
};

/// Rounds to `digits` significant digits; magnitudes below 10^-digits become 0.
double round_significant(double v, int digits = kSignificantDigits);

/// Groups `spectrum` for presentation and rounds the grouped values.
SpectrumDocument make_document(GraphDescriptor graph, Method method, const Spectrum& spectrum,
                               std::optional<double> deviation, double comparison_tol);

/// Throws InvalidArgument when multiplicities do not sum to the order or the
/// deviation field does not match the method.
void check_invariants(const SpectrumDocument& doc);

std::string to_json(const SpectrumDocument& doc);
/// Throws ParseError on malformed input or a different schema version.
SpectrumDocument from_json(std::string_view text);

std::string to_table(const SpectrumDocument& doc);
std::string to_csv(const SpectrumDocument& doc);

}  // namespace specjoin::doc
