#pragma once

#include <span>
#include <vector>

namespace sllg {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Compressed sparse row matrix. Built once from triplets (duplicates are
/// summed), immutable afterwards.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_ptr;  // size rows+1
    std::vector<int> col;      // size nnz, column indices sorted per row
    std::vector<double> val;   // size nnz
    bool symmetric = false;

    static SparseMatrix from_triplets(int rows, int cols,
                                      std::vector<Triplet> triplets,
                                      bool symmetric = false);

    int nnz() const { return static_cast<int>(val.size()); }

    void matvec(std::span<const double> x, std::span<double> y) const;

    /// x^T A y (dimensions must match).
    double bilinear(std::span<const double> x, std::span<const double> y) const;

    std::vector<double> diagonal() const;
};

struct SolveReport {
    int iterations = 0;
    double residual = 0.0;  // relative, ||b - Ax|| / ||b||
    bool converged = false;
    bool dense_fallback = false;
};

/// Jacobi-preconditioned BiCGSTAB for the nonsymmetric step systems.
/// x is both the initial guess and the result. Returns a report; does not
/// throw on non-convergence (callers decide on fallback policy).
SolveReport bicgstab(const SparseMatrix& A, std::span<const double> b,
                     std::span<double> x, double rel_tol, int max_iter);

/// Dense LU with partial pivoting; used as the small-system fallback and as
/// a reference path in tests. Throws on singular matrices.
void dense_solve(const SparseMatrix& A, std::span<const double> b,
                 std::span<double> x);

}  // namespace sllg
