#pragma once

#include "ccshell/matrix.hpp"

#include <optional>
#include <vector>

namespace ccs {

/// U * M * V = D with U, V invertible over the ring and the nonzero
/// diagonal entries of D forming a divisibility chain. The inverses of the
/// transforms are kept as well.
struct SNFDecomposition {
    DenseMatrix U;
    DenseMatrix D;
    DenseMatrix V;
    DenseMatrix U_inv;
    DenseMatrix V_inv;
    std::size_t rank = 0;

    Vector diagonal() const;
};

SNFDecomposition smith_normal_form(const SparseMatrix& m);

/// Nonzero diagonal entries of the Smith form (no transforms computed).
Vector invariant_factors(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Basis of ker M taken from the columns of V at zero diagonal positions.
/// Over Z the span is saturated.
std::vector<Vector> kernel_basis(const SparseMatrix& m);

struct SpanWitness {
    Scalar lead;  // nonzero; lead * v = M * x
    Vector x;
};

struct QuotientSolution {
    Scalar c;
    Vector x;
};

/// Solves systems against one fixed matrix, reusing a single factorization.
class SpanSolver {
public:
    explicit SpanSolver(const SparseMatrix& m);

    /// Some x with M x = v over the ring.
    std::optional<Vector> solve(const Vector& v) const;
    /// Some nonzero a and x with a v = M x (denominators cleared).
    std::optional<SpanWitness> solve_rational(const Vector& v) const;

    const SNFDecomposition& decomposition() const { return snf_; }

private:
    Ring ring_;
    SNFDecomposition snf_;
};

std::optional<Vector> lattice_membership(const SparseMatrix& m, const Vector& v);
std::optional<SpanWitness> rational_span_membership(const SparseMatrix& m, const Vector& v);

/// Finds c and x with M x = c v + r where r is supported on kill_rows.
/// v must be a standard basis column. With unit_required the coefficient c
/// is a unit, otherwise any nonzero c is accepted.
std::optional<QuotientSolution> solve_in_quotient(const SparseMatrix& m, const Vector& v,
                                                  const std::vector<std::size_t>& kill_rows,
                                                  bool unit_required);

}  // namespace ccs
