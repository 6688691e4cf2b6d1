#include "poad/approx.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "poad/error.hpp"

namespace poad::approx {

void validate(const EmbeddingScheme& scheme) {
    if (scheme.kind == EmbeddingKind::AnchorProfile && scheme.anchors.empty())
        throw Error(ErrorKind::InvalidEmbedding, "anchor-profile embedding needs at least one anchor");
}

std::vector<double> embed(const concepts::Concept& c, const EmbeddingScheme& scheme) {
    validate(scheme);
    const auto text = concepts::serialize_concept(c);
    if (scheme.kind == EmbeddingKind::ComplexityScalar) return {static_cast<double>(infodist::khat(text))};
    std::vector<double> profile;
    profile.reserve(scheme.anchors.size());
    for (const auto& anchor : scheme.anchors)
        profile.push_back(static_cast<double>(infodist::mu(text, concepts::serialize_concept(anchor))));
    return profile;
}

void validate(const ProblemSpec& spec) {
    validate(spec.embedding);
    if (spec.basis.empty()) throw Error(ErrorKind::InvalidProblem, "the basis is empty");
    if (spec.targets.size() != spec.contexts.size())
        throw Error(ErrorKind::InvalidProblem, std::to_string(spec.targets.size()) + " targets for " +
                                                   std::to_string(spec.contexts.size()) + " contexts");
    if (spec.contexts.size() < spec.basis.size())
        throw Error(ErrorKind::InvalidProblem, "fewer contexts than basis patterns");
}

LinearSystem assemble(const ProblemSpec& spec) {
    validate(spec);
    const std::size_t dim = spec.embedding.dimension();
    const std::size_t m = spec.contexts.size();
    const std::size_t n = spec.basis.size();
    LinearSystem sys{Matrix(m * dim, n), std::vector<double>(m * dim, 0.0), dim};
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto column = embed(funcspace::apply(spec.basis[i], spec.contexts[j]), spec.embedding);
            for (std::size_t d = 0; d < dim; ++d) sys.lhs(j * dim + d, i) = column[d];
        }
        const auto target = embed(spec.targets[j], spec.embedding);
        for (std::size_t d = 0; d < dim; ++d) sys.rhs[j * dim + d] = target[d];
    }
    return sys;
}

bool gaussian_solve(Matrix a, std::vector<double> b, std::vector<double>& x, double pivot_tolerance) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
        if (std::abs(a(pivot, k)) < pivot_tolerance) return false;
        if (pivot != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = a(r, k) / a(k, k);
            if (factor == 0.0) continue;
            for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
            b[r] -= factor * b[k];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
        x[k] = acc / a(k, k);
    }
    return true;
}

std::vector<double> ridge_least_squares(const Matrix& a, std::span<const double> b, double ridge) {
    const std::size_t n = a.cols();
    Matrix normal(n, n);
    std::vector<double> rhs(n, 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] += a(r, i) * b[r];
            for (std::size_t j = 0; j < n; ++j) normal(i, j) += a(r, i) * a(r, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) normal(i, i) += ridge;
    std::vector<double> x;
    // The ridge makes the matrix positive definite, so only a zero pivot
    // from underflow can stop elimination here.
    if (!gaussian_solve(std::move(normal), std::move(rhs), x, 0.0)) x.assign(n, 0.0);
    return x;
}

std::vector<double> residuals(const LinearSystem& sys, std::span<const double> coefficients) {
    const std::size_t per = sys.rows_per_context;
    std::vector<double> out(sys.lhs.rows() / per, 0.0);
    for (std::size_t r = 0; r < sys.lhs.rows(); ++r) {
        double acc = -sys.rhs[r];
        const auto row = sys.lhs.row(r);
        for (std::size_t i = 0; i < row.size(); ++i) acc += coefficients[i] * row[i];
        out[r / per] = std::max(out[r / per], std::abs(acc));
    }
    return out;
}

double minimax_residual(const LinearSystem& sys, std::span<const double> coefficients) {
    if (coefficients.size() != sys.lhs.cols())
        throw Error(ErrorKind::ShapeMismatch, "coefficient count differs from basis size");
    const auto r = residuals(sys, coefficients);
    return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

double minimax_residual(const ProblemSpec& spec, std::span<const double> coefficients) {
    return minimax_residual(assemble(spec), coefficients);
}

namespace {

void check_exact_shape(const LinearSystem& sys) {
    const auto& a = sys.lhs;
    if (a.rows() != a.cols())
        throw Error(ErrorKind::ShapeMismatch, "exactly determined path needs as many equations (" +
                                                  std::to_string(a.rows()) + ") as basis patterns (" +
                                                  std::to_string(a.cols()) + ")");
    for (std::size_t c = 0; c < a.cols(); ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < a.rows() && zero; ++r) zero = a(r, c) == 0.0;
        if (zero) throw Error(ErrorKind::DegenerateBasis, "basis column " + std::to_string(c) + " is all zero");
    }
}

void finish(const LinearSystem& sys, ApproximationResult& result) {
    result.residuals = residuals(sys, result.coefficients);
    result.minimax = result.residuals.empty() ? 0.0 : *std::max_element(result.residuals.begin(), result.residuals.end());
}

}  // namespace

ApproximationResult solve_direct(const LinearSystem& sys) {
    check_exact_shape(sys);
    ApproximationResult result;
    if (!gaussian_solve(sys.lhs, sys.rhs, result.coefficients)) {
        result.rank_deficient = true;
        result.coefficients = ridge_least_squares(sys.lhs, sys.rhs, kFallbackRidge);
    }
    finish(sys, result);
    return result;
}

ApproximationResult solve_direct(const ProblemSpec& spec) { return solve_direct(assemble(spec)); }

ApproximationResult solve_iterative(const LinearSystem& sys) {
    check_exact_shape(sys);
    const std::size_t n = sys.lhs.cols();
    // Upper-triangular R and z with R^T R = ridge I + sum a a^T and R x = z.
    Matrix r(n, n);
    std::vector<double> z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = std::sqrt(kRecursiveRidge);

    auto back_substitute = [&] {
        std::vector<double> x(n, 0.0);
        for (std::size_t k = n; k-- > 0;) {
            double acc = z[k];
            for (std::size_t c = k + 1; c < n; ++c) acc -= r(k, c) * x[c];
            x[k] = acc / r(k, k);
        }
        return x;
    };

    ApproximationResult result;
    std::vector<double> row(n);
    for (std::size_t first = 0; first < sys.lhs.rows(); first += sys.rows_per_context) {
        for (std::size_t eq = first; eq < first + sys.rows_per_context; ++eq) {
            const auto src = sys.lhs.row(eq);
            std::copy(src.begin(), src.end(), row.begin());
            double rhs = sys.rhs[eq];
            for (std::size_t k = 0; k < n; ++k) {
                if (row[k] == 0.0) continue;
                const double h = std::hypot(r(k, k), row[k]);
                const double c = r(k, k) / h;
                const double s = row[k] / h;
                for (std::size_t j = k; j < n; ++j) {
                    const double top = r(k, j);
                    r(k, j) = c * top + s * row[j];
                    row[j] = -s * top + c * row[j];
                }
                const double ztop = z[k];
                z[k] = c * ztop + s * rhs;
                rhs = -s * ztop + c * rhs;
            }
        }
        result.steps.push_back(back_substitute());
    }
    result.coefficients = result.steps.empty() ? std::vector<double>(n, 0.0) : result.steps.back();
    finish(sys, result);
    return result;
}

ApproximationResult solve_iterative(const ProblemSpec& spec) { return solve_iterative(assemble(spec)); }

CouplingReport coupling_report(std::span<const funcspace::PatternFunction> solution,
                               const funcspace::ContextCorpus& corpus, double threshold) {
    if (solution.size() < 2) throw Error(ErrorKind::TooFewPatterns, "coupling needs at least two patterns");
    if (corpus.empty()) throw Error(ErrorKind::EmptyCorpus, "the context corpus has no records");
    const std::size_t n = solution.size();
    std::vector<infodist::Bytes> joined(n);
    std::vector<double> own(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& out : funcspace::outputs(solution[i], corpus)) joined[i] += out;
        own[i] = std::max(static_cast<double>(infodist::khat(joined[i])), 1.0);
    }

    CouplingReport report;
    report.threshold = threshold;
    report.matrix.assign(n, std::vector<double>(n, 1.0));
    report.shared_participants.assign(n, std::vector<std::size_t>(n, 0));
    report.independent = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& pi = solution[i].graph().participants;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t shared = 0;
            for (const auto& [name, m] : pi)
                if (solution[j].graph().participants.contains(name)) ++shared;
            report.shared_participants[i][j] = shared;
            if (i == j) continue;
            const double cond = static_cast<double>(infodist::khat_cond(joined[i], joined[j]));
            const double coupling = std::clamp(1.0 - cond / own[i], 0.0, 1.0);
            report.matrix[i][j] = coupling;
            if (coupling > threshold || shared != 0) report.independent = false;
        }
    }
    return report;
}

}  // namespace poad::approx
