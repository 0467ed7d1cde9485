#include "specjoin/document.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "specjoin/errors.hpp"

namespace specjoin::doc {

using json = nlohmann::ordered_json;

std::string_view tool_version() { return "1.0.0"; }

std::string_view to_string(Method m) {
    switch (m) {
        case Method::structural: return "structural";
        case Method::oracle: return "oracle";
        case Method::both: return "both";
    }
    return "unknown";
}

Method method_from_string(std::string_view name) {
    if (name == "structural") return Method::structural;
    if (name == "oracle") return Method::oracle;
    if (name == "both") return Method::both;
    throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

double round_significant(double v, int digits) {
    if (!std::isfinite(v)) return v;
    if (std::abs(v) < std::pow(10.0, -digits)) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

SpectrumDocument make_document(GraphDescriptor graph, Method method, const Spectrum& spectrum,
                               std::optional<double> deviation, double comparison_tol) {
    SpectrumDocument doc;
    doc.tool_version = std::string(tool_version());
    doc.graph = std::move(graph);
    doc.order = spectrum.total();
    doc.method = method;
    doc.eigenvalues = spectrum.grouped(doc.tolerances.grouping);
    for (auto& pair : doc.eigenvalues) pair.value = round_significant(pair.value, doc.tolerances.significant_digits);
    doc.deviation = deviation;
    doc.tolerances.comparison = comparison_tol;
    check_invariants(doc);
    return doc;
}

void check_invariants(const SpectrumDocument& doc) {
    const auto total = std::accumulate(doc.eigenvalues.begin(), doc.eigenvalues.end(), std::size_t{0},
                                       [](std::size_t acc, const SpectrumPair& p) { return acc + p.multiplicity; });
    if (total != doc.order)
        throw InvalidArgument("document: multiplicities sum to " + std::to_string(total) + ", order is " +
                              std::to_string(doc.order));
    if (doc.deviation.has_value() != (doc.method == Method::both))
        throw InvalidArgument("document: deviation must be present exactly when method is both");
}

std::string to_json(const SpectrumDocument& doc) {
    json j;
    j["schema"] = doc.schema;
    j["tool_version"] = doc.tool_version;
    j["graph"] = {{"kind", doc.graph.kind}, {"descriptor", doc.graph.text}};
    j["order"] = doc.order;
    j["method"] = std::string(to_string(doc.method));
    json rows = json::array();
    for (const auto& p : doc.eigenvalues)
        rows.push_back({{"value", p.value}, {"multiplicity", p.multiplicity}, {"source", std::string(to_string(p.source))}});
    j["eigenvalues"] = std::move(rows);
    if (doc.deviation) j["deviations"] = {{"structural_vs_oracle", *doc.deviation}};
    j["tolerances"] = {{"grouping", doc.tolerances.grouping},
                       {"comparison", doc.tolerances.comparison},
                       {"significant_digits", doc.tolerances.significant_digits}};
    if (doc.timestamp) j["timestamp"] = *doc.timestamp;
    return j.dump(2) + "\n";
}

SpectrumDocument from_json(std::string_view text) {
    try {
        const auto j = json::parse(text);
        SpectrumDocument doc;
        doc.schema = j.at("schema").get<int>();
        if (doc.schema != kSchemaVersion)
            throw ParseError("document: unsupported schema " + std::to_string(doc.schema));
        doc.tool_version = j.at("tool_version").get<std::string>();
        doc.graph.kind = j.at("graph").at("kind").get<std::string>();
        doc.graph.text = j.at("graph").at("descriptor").get<std::string>();
        doc.order = j.at("order").get<std::size_t>();
        doc.method = method_from_string(j.at("method").get<std::string>());
        for (const auto& row : j.at("eigenvalues"))
            doc.eigenvalues.push_back({row.at("value").get<double>(), row.at("multiplicity").get<std::size_t>(),
                                       source_from_string(row.at("source").get<std::string>())});
        if (j.contains("deviations")) doc.deviation = j.at("deviations").at("structural_vs_oracle").get<double>();
        const auto& t = j.at("tolerances");
        doc.tolerances = {t.at("grouping").get<double>(), t.at("comparison").get<double>(),
                          t.at("significant_digits").get<int>()};
        if (j.contains("timestamp")) doc.timestamp = j.at("timestamp").get<std::string>();
        check_invariants(doc);
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

namespace {

std::string format_value(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace

std::string to_table(const SpectrumDocument& doc) {
    std::ostringstream out;
    out << "# graph: " << doc.graph.kind << " " << doc.graph.text << "\n";
    out << "# order: " << doc.order << "  method: " << to_string(doc.method) << "\n";
    if (doc.deviation) out << "# deviation: " << format_value(*doc.deviation, 3) << "\n";
    if (doc.timestamp) out << "# timestamp: " << *doc.timestamp << "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%-20s %12s  %s\n", "value", "multiplicity", "source");
    out << line;
    for (const auto& p : doc.eigenvalues) {
        std::snprintf(line, sizeof line, "%-20s %12zu  %s\n", format_value(p.value, doc.tolerances.significant_digits).c_str(),
                      p.multiplicity, std::string(to_string(p.source)).c_str());
        out << line;
    }
    return out.str();
}

std::string to_csv(const SpectrumDocument& doc) {
    std::ostringstream out;
    out << "value,multiplicity,source\n";
    for (const auto& p : doc.eigenvalues)
        out << format_value(p.value, doc.tolerances.significant_digits) << "," << p.multiplicity << ","
            << to_string(p.source) << "\n";
    return out.str();
}

}  // namespace specjoin::doc
