#include "specjoin/joined_union.hpp"

#include <algorithm>
#include <cmath>

#include "specjoin/errors.hpp"

namespace specjoin {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Component Component::complete(std::size_t m) {
    if (m < 1) throw InvalidArgument("complete component needs order >= 1");
    return {m, m - 1, ClosedForm{ClosedFormKind::complete, m}};
}

Component Component::empty(std::size_t m) {
    if (m < 1) throw InvalidArgument("empty component needs order >= 1");
    return {m, 0, ClosedForm{ClosedFormKind::empty, m}};
}

Component Component::cycle(std::size_t m) {
    if (m < 3) throw InvalidArgument("cycle component needs order >= 3");
    return {m, 2, ClosedForm{ClosedFormKind::cycle, m}};
}

Component Component::from_graph(Graph g) {
    const auto r = is_regular(g);
    if (!r) throw NonRegularComponent("NonRegularComponent: graph of order " + std::to_string(g.order()) +
                                      " is not regular");
    const auto n = g.order();
    return {n, *r, std::move(g)};
}

Component Component::from_spectrum(std::size_t regularity, std::vector<double> eigenvalues) {
    const auto n = eigenvalues.size();
    return {n, regularity, ExplicitSpectrum{std::move(eigenvalues)}};
}

std::string Component::label() const {
    return std::visit(overloaded{
                          [&](const ClosedForm& f) {
                              const char* prefix = f.kind == ClosedFormKind::complete ? "K"
                                                   : f.kind == ClosedFormKind::empty  ? "E"
                                                                                      : "C";
                              return prefix + std::to_string(f.order);
                          },
                          [&](const Graph&) {
                              return "G(" + std::to_string(order) + "," + std::to_string(regularity) + ")";
                          },
                          [&](const ExplicitSpectrum&) {
                              return "S(" + std::to_string(order) + "," + std::to_string(regularity) + ")";
                          },
                      },
                      source);
}

Spectrum Component::adjacency_spectrum() const {
    return std::visit(overloaded{
                          [](const ClosedForm& f) { return adjacency_spectrum_closed(f); },
                          [](const Graph& g) {
                              const auto values = eigenvalues_symmetric(adjacency_matrix(g));
                              return Spectrum(values, Source::oracle);
                          },
                          [](const ExplicitSpectrum& s) {
                              return Spectrum(s.adjacency_eigenvalues, Source::closed_form);
                          },
                      },
                      source);
}

Graph Component::materialize() const {
    return std::visit(overloaded{
                          [](const ClosedForm& f) { return f.graph(); },
                          [](const Graph& g) { return g; },
                          [&](const ExplicitSpectrum&) -> Graph {
                              throw InvalidArgument("component " + label() +
                                                    " is given by its spectrum only and cannot be materialized");
                          },
                      },
                      source);
}

std::size_t JoinedUnionSpec::order() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.order;
    return n;
}

std::vector<std::size_t> alphas(const JoinedUnionSpec& spec) {
    if (spec.components.size() != spec.outer.order())
        throw InvalidArgument("joined union: " + std::to_string(spec.components.size()) + " components for outer order " +
                              std::to_string(spec.outer.order()));
    std::vector<std::size_t> out(spec.outer.order(), 0);
    for (Vertex i = 0; i < spec.outer.order(); ++i)
        for (Vertex j : spec.outer.neighbors(i)) out[i] += spec.components[j].order;
    return out;
}

void JoinedUnionSpec::validate() const {
    const auto alpha = alphas(*this);
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (c.order < 1) throw InvalidArgument("component " + std::to_string(i) + " has order 0");
        if (c.regularity + 1 > c.order)
            throw InvalidArgument("component " + std::to_string(i) + ": regularity exceeds order - 1");
        if (const auto* g = std::get_if<Graph>(&c.source)) {
            const auto r = is_regular(*g);
            if (!r || *r != c.regularity || g->order() != c.order)
                throw NonRegularComponent("NonRegularComponent: component " + std::to_string(i) +
                                          " is not " + std::to_string(c.regularity) + "-regular");
        } else if (const auto* s = std::get_if<ExplicitSpectrum>(&c.source)) {
            const auto& ev = s->adjacency_eigenvalues;
            if (ev.size() != c.order)
                throw InvalidArgument("component " + std::to_string(i) + ": spectrum size differs from order");
            if (std::abs(*std::max_element(ev.begin(), ev.end()) - static_cast<double>(c.regularity)) > 1e-9)
                throw NonRegularComponent("NonRegularComponent: component " + std::to_string(i) +
                                          " spectrum does not have the regularity as its largest eigenvalue");
        } else {
            const auto& f = std::get<ClosedForm>(c.source);
            if (f.order != c.order || f.regularity() != c.regularity)
                throw InvalidArgument("component " + std::to_string(i) + ": descriptor disagrees with its closed form");
        }
        if (c.regularity + alpha[i] == 0) {
            std::size_t first = 0;
            for (std::size_t k = 0; k < i; ++k) first += components[k].order;
            throw IsolatedVertex(first);
        }
    }
}

SymMatrix QuotientMatrix::symmetrized() const {
    std::vector<double> s(order * order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            s[i * order + j] = i == j ? entries[i * order + i]
                                      : entries[i * order + j] *
                                            std::sqrt(static_cast<double>(block_sizes[i]) /
                                                      static_cast<double>(block_sizes[j]));
    // Rounding in the two sqrt paths leaves asymmetry at the ulp level; average it out.
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j) {
            const double avg = 0.5 * (s[i * order + j] + s[j * order + i]);
            s[i * order + j] = s[j * order + i] = avg;
        }
    return SymMatrix(order, std::move(s));
}

QuotientMatrix quotient_matrix(const JoinedUnionSpec& spec) {
    spec.validate();
    const auto alpha = alphas(spec);
    const std::size_t n = spec.outer.order();
    QuotientMatrix q;
    q.order = n;
    q.entries.assign(n * n, 0.0);
    q.block_sizes.resize(n);
    std::vector<double> degree(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.block_sizes[i] = spec.components[i].order;
        degree[i] = static_cast<double>(spec.components[i].regularity + alpha[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        q.entries[i * n + i] = static_cast<double>(alpha[i]) / degree[i];
        for (Vertex j : spec.outer.neighbors(static_cast<Vertex>(i)))
            q.entries[i * n + j] = -static_cast<double>(q.block_sizes[j]) / std::sqrt(degree[i] * degree[j]);
    }
    return q;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) { return eigenvalues_symmetric(q.symmetrized()); }

Spectrum block_spectrum(const JoinedUnionSpec& spec) {
    spec.validate();
    const auto alpha = alphas(spec);
    std::vector<Eigenvalue> out;
    out.reserve(spec.order());
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& c = spec.components[i];
        auto adj = c.adjacency_spectrum().values();
        // Drop one copy of the Perron eigenvalue r_i (the largest).
        adj.pop_back();
        const double degree = static_cast<double>(c.regularity + alpha[i]);
        for (double lambda : adj) out.push_back({1.0 - lambda / degree, Source::structural});
    }
    return Spectrum(std::move(out));
}

Spectrum structural_spectrum(const JoinedUnionSpec& spec) {
    const auto blocks = block_spectrum(spec);
    const auto quotient = quotient_eigenvalues(quotient_matrix(spec));
    return blocks.merged(Spectrum(quotient, Source::quotient));
}

Graph materialize(const JoinedUnionSpec& spec) {
    spec.validate();
    std::vector<Graph> parts;
    parts.reserve(spec.components.size());
    for (const auto& c : spec.components) parts.push_back(c.materialize());
    return joined_union(spec.outer, parts);
}

JoinedUnionSpec single_component_spec(const Graph& g) {
    return {make_complete(1), {Component::from_graph(g)}};
}

}  // namespace specjoin
