#include "specjoin/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "specjoin/errors.hpp"
#include "specjoin/kernels.hpp"

namespace specjoin {

SymMatrix::SymMatrix(std::size_t order, std::vector<double> entries) : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_)
        throw InvalidArgument("SymMatrix: expected " + std::to_string(order_ * order_) + " entries");
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = i + 1; j < order_; ++j)
            if (std::abs(entries_[i * order_ + j] - entries_[j * order_ + i]) > kSymmetryTolerance)
                throw InvalidArgument("SymMatrix: not symmetric at (" + std::to_string(i) + "," + std::to_string(j) +
                                      ")");
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += entries_[i * order_ + i];
    return t;
}

std::string_view to_string(Source s) {
    switch (s) {
        case Source::structural: return "structural";
        case Source::quotient: return "quotient";
        case Source::closed_form: return "closed_form";
        case Source::oracle: return "oracle";
        case Source::mixed: return "mixed";
    }
    return "unknown";
}

Source source_from_string(std::string_view name) {
    for (auto s : {Source::structural, Source::quotient, Source::closed_form, Source::oracle, Source::mixed})
        if (to_string(s) == name) return s;
    throw ParseError("unknown eigenvalue source '" + std::string(name) + "'");
}

Spectrum::Spectrum(std::vector<Eigenvalue> values) : values_(std::move(values)) {
    std::stable_sort(values_.begin(), values_.end(),
                     [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
}

Spectrum::Spectrum(std::span<const double> values, Source source) {
    values_.reserve(values.size());
    for (double v : values) values_.push_back({v, source});
    std::stable_sort(values_.begin(), values_.end(),
                     [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
}

std::vector<double> Spectrum::values() const {
    std::vector<double> out;
    out.reserve(values_.size());
    for (const auto& e : values_) out.push_back(e.value);
    return out;
}

double Spectrum::min() const {
    if (values_.empty()) throw InvalidArgument("Spectrum::min on empty spectrum");
    return values_.front().value;
}

double Spectrum::max() const {
    if (values_.empty()) throw InvalidArgument("Spectrum::max on empty spectrum");
    return values_.back().value;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (const auto& e : values_) s += e.value;
    return s;
}

std::size_t Spectrum::count_near(double x, double tol) const {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [&](const Eigenvalue& e) { return std::abs(e.value - x) <= tol; }));
}

std::vector<SpectrumPair> Spectrum::grouped(double tol) const {
    std::vector<SpectrumPair> out;
    double sum = 0.0;
    for (const auto& e : values_) {
        if (!out.empty() && std::abs(e.value - out.back().value) <= tol) {
            auto& g = out.back();
            sum += e.value;
            ++g.multiplicity;
            g.value = sum / static_cast<double>(g.multiplicity);
            if (g.source != e.source) g.source = Source::mixed;
        } else {
            out.push_back({e.value, 1, e.source});
            sum = e.value;
        }
    }
    return out;
}

Spectrum Spectrum::retagged(Source source) const {
    auto copy = values_;
    for (auto& e : copy) e.source = source;
    return Spectrum(std::move(copy));
}

Spectrum Spectrum::merged(const Spectrum& other) const {
    auto all = values_;
    all.insert(all.end(), other.values_.begin(), other.values_.end());
    return Spectrum(std::move(all));
}

SymMatrix normalized_laplacian(const Graph& g) { return kernels::normalized_laplacian_parallel(g); }

SymMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<double> a(n * n, 0.0);
    for (auto [u, v] : g.edges()) {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    return SymMatrix(n, std::move(a));
}

JacobiResult jacobi_eigenvalues(const SymMatrix& m, int max_sweeps) {
    const std::size_t n = m.order();
    if (n == 0) throw InvalidArgument("eigenvalues_symmetric: empty matrix");
    std::vector<double> a(m.data().begin(), m.data().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    // Only the upper triangle (i <= j) is read or written.
    auto norms = [&] {
        double off = 0.0, on = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            on += at(i, i) * at(i, i);
            const double* row = &a[i * n];
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * row[j] * row[j];
        }
        return std::pair{std::sqrt(off), std::sqrt(on)};
    };

    int sweep = 0;
    auto [off, on] = norms();
    while (off >= 1e-12 * (on + 1.0)) {
        if (sweep == max_sweeps)
            throw NoConvergence("Jacobi did not converge in " + std::to_string(max_sweeps) +
                                " sweeps (off-diagonal norm " + std::to_string(off) + ")");
        ++sweep;
        // Threshold pass for the first sweeps: rotations below it are deferred.
        const double threshold = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            double* row_p = &a[p * n];
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = row_p[q];
                if (apq == 0.0 || std::abs(apq) < threshold) continue;
                const double app = at(p, p), aqq = at(q, q);
                const double g100 = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(app) + g100 == std::abs(app) && std::abs(aqq) + g100 == std::abs(aqq)) {
                    row_p[q] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                auto rotate = [&](double& g, double& h) {
                    const double gv = g, hv = h;
                    g = gv - s * (hv + gv * tau);
                    h = hv + s * (gv - hv * tau);
                };

                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                row_p[q] = 0.0;
                for (std::size_t k = 0; k < p; ++k) rotate(a[k * n + p], a[k * n + q]);
                for (std::size_t k = p + 1; k < q; ++k) rotate(row_p[k], a[k * n + q]);
                double* row_q = &a[q * n];
                for (std::size_t k = q + 1; k < n; ++k) rotate(row_p[k], row_q[k]);
            }
        }
        std::tie(off, on) = norms();
    }

    JacobiResult result{std::vector<double>(n), sweep, off};
    for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = at(i, i);
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
    return result;
}

std::vector<double> eigenvalues_symmetric(const SymMatrix& m) { return jacobi_eigenvalues(m).eigenvalues; }

std::string_view to_string(ClosedFormKind k) {
    switch (k) {
        case ClosedFormKind::complete: return "complete";
        case ClosedFormKind::empty: return "empty";
        case ClosedFormKind::cycle: return "cycle";
    }
    return "unknown";
}

std::size_t ClosedForm::regularity() const {
    switch (kind) {
        case ClosedFormKind::complete: return order - 1;
        case ClosedFormKind::empty: return 0;
        case ClosedFormKind::cycle: return 2;
    }
    throw InvalidArgument("unsupported closed-form kind");
}

Graph ClosedForm::graph() const {
    switch (kind) {
        case ClosedFormKind::complete: return make_complete(order);
        case ClosedFormKind::empty: return make_empty(order);
        case ClosedFormKind::cycle: return make_cycle(order);
    }
    throw InvalidArgument("unsupported closed-form kind");
}

Spectrum adjacency_spectrum_closed(const ClosedForm& form) {
    const std::size_t m = form.order;
    std::vector<double> values;
    switch (form.kind) {
        case ClosedFormKind::complete:
            if (m < 1) throw InvalidArgument("complete graph needs m >= 1");
            values.assign(m - 1, -1.0);
            values.push_back(static_cast<double>(m - 1));
            break;
        case ClosedFormKind::empty:
            if (m < 1) throw InvalidArgument("empty graph needs m >= 1");
            values.assign(m, 0.0);
            break;
        case ClosedFormKind::cycle: {
            if (m < 3) throw InvalidArgument("cycle needs m >= 3");
            for (std::size_t k = 1; k <= m; ++k) {
                // Snap cosine coincidences (cos(x) = cos(2*pi - x)) to one value so
                // equal eigenvalues are bitwise equal.
                const std::size_t j = std::min(k % m, m - k % m);
                values.push_back(j == 0 ? 2.0 : 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                                                static_cast<double>(m)));
            }
            break;
        }
        default: throw InvalidArgument("unsupported closed-form kind");
    }
    return Spectrum(values, Source::closed_form);
}

std::vector<SpectrumPair> group_multiplicities(std::span<const double> sorted, double tol, Source source) {
    return Spectrum(sorted, source).grouped(tol);
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.total() != b.total())
        throw TotalMismatch("compare_spectra: totals differ (" + std::to_string(a.total()) + " vs " +
                            std::to_string(b.total()) + ")");
    double dev = 0.0;
    for (std::size_t i = 0; i < a.total(); ++i)
        dev = std::max(dev, std::abs(a.entries()[i].value - b.entries()[i].value));
    return {dev, dev <= tol};
}

Spectrum oracle_spectrum(const Graph& g) {
    const auto values = eigenvalues_symmetric(normalized_laplacian(g));
    return Spectrum(values, Source::oracle);
}

}  // namespace specjoin
