#pragma once

// Best approximation of a target solution by a weighted composition of basis
// patterns, sampled at finitely many contexts, plus the coupling diagnostic
// used to judge whether solution patterns are mutually independent.
//
// Pattern outputs are concepts, so every output is first embedded as a short
// real vector. The approximation problem then becomes the linear system
//     sum_i alpha_i * embed(p_i(x_j)) = embed(S(x_j))    for every context j,
// with the largest per-context residual as the objective.

#include <cstddef>
#include <span>
#include <vector>

#include "poad/concepts.hpp"
#include "poad/funcspace.hpp"

namespace poad::approx {

enum class EmbeddingKind { ComplexityScalar, AnchorProfile };

struct EmbeddingScheme {
    EmbeddingKind kind = EmbeddingKind::ComplexityScalar;
    std::vector<concepts::Concept> anchors;

    std::size_t dimension() const noexcept {
        return kind == EmbeddingKind::ComplexityScalar ? 1 : anchors.size();
    }
};

/// Throws InvalidEmbedding for an anchor profile without anchors.
void validate(const EmbeddingScheme& scheme);

/// complexity-scalar: [khat(serialize(c))]
/// anchor-profile:    [mu(serialize(c), serialize(a_k)) for each anchor]
std::vector<double> embed(const concepts::Concept& c, const EmbeddingScheme& scheme);

struct ProblemSpec {
    std::vector<funcspace::PatternFunction> basis;
    funcspace::ContextCorpus contexts;
    std::vector<concepts::Concept> targets;
    EmbeddingScheme embedding;
};

/// Throws InvalidProblem (shape invariants) or InvalidEmbedding.
void validate(const ProblemSpec& spec);

/// Dense row-major matrix, just enough for small systems.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Embedded system. Rows are grouped by context; each context owns
/// rows_per_context consecutive rows.
struct LinearSystem {
    Matrix lhs;
    std::vector<double> rhs;
    std::size_t rows_per_context = 1;
};

LinearSystem assemble(const ProblemSpec& spec);

struct ApproximationResult {
    std::vector<double> coefficients;
    std::vector<double> residuals;  ///< per context: max |row residual|
    double minimax = 0.0;
    bool rank_deficient = false;
    /// Iterative solver only: coefficients after each processed context.
    std::vector<std::vector<double>> steps;
};

inline constexpr double kPivotTolerance = 1e-12;
inline constexpr double kFallbackRidge = 1e-10;
inline constexpr double kRecursiveRidge = 1e-8;

/// Solves lhs * x = rhs by Gaussian elimination with partial pivoting.
/// Returns false (leaving x unspecified) when a pivot falls below tolerance.
bool gaussian_solve(Matrix lhs, std::vector<double> rhs, std::vector<double>& x,
                    double pivot_tolerance = kPivotTolerance);

/// Ridge-regularized normal equations (A^T A + ridge I) x = A^T b.
std::vector<double> ridge_least_squares(const Matrix& lhs, std::span<const double> rhs, double ridge);

/// Per-context residuals of a coefficient vector.
std::vector<double> residuals(const LinearSystem& sys, std::span<const double> coefficients);
double minimax_residual(const LinearSystem& sys, std::span<const double> coefficients);
double minimax_residual(const ProblemSpec& spec, std::span<const double> coefficients);

/// Exactly determined path. Throws ShapeMismatch (non-square), DegenerateBasis
/// (all-zero column). Near-singular systems set rank_deficient and fall back
/// to ridge least squares.
ApproximationResult solve_direct(const LinearSystem& sys);
ApproximationResult solve_direct(const ProblemSpec& spec);

/// Recursive least squares, one context at a time, started from a
/// kRecursiveRidge * I information matrix. Kept in square-root information
/// form (Givens updates of a triangular factor). Same errors as solve_direct.
ApproximationResult solve_iterative(const LinearSystem& sys);
ApproximationResult solve_iterative(const ProblemSpec& spec);

inline constexpr double kDefaultCouplingThreshold = 0.15;

struct CouplingReport {
    std::vector<std::vector<double>> matrix;
    std::vector<std::vector<std::size_t>> shared_participants;
    bool independent = false;
    double threshold = kDefaultCouplingThreshold;
};

/// coupling(i, j) = 1 - khat_cond(X_i, X_j) / max(khat(X_i), 1), clamped to
/// [0, 1], where X_i is the concatenated serialized output of pattern i over
/// the corpus. Independent iff every off-diagonal coupling is at most the
/// threshold and no two patterns share a participant name.
/// Throws TooFewPatterns, EmptyCorpus.
CouplingReport coupling_report(std::span<const funcspace::PatternFunction> solution,
                               const funcspace::ContextCorpus& corpus,
                               double threshold = kDefaultCouplingThreshold);

}  // namespace poad::approx
