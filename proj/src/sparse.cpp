#include "sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sllg {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<Triplet> triplets,
                                         bool symmetric) {
    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.symmetric = symmetric;

    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    m.row_ptr.assign(rows + 1, 0);
    m.col.reserve(triplets.size());
    m.val.reserve(triplets.size());

    for (std::size_t i = 0; i < triplets.size();) {
        const int r = triplets[i].row;
        const int c = triplets[i].col;
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::invalid_argument("sparse: triplet index out of range");
        double sum = 0.0;
        while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
            sum += triplets[i].value;
            ++i;
        }
        m.col.push_back(c);
        m.val.push_back(sum);
        m.row_ptr[r + 1] = static_cast<int>(m.col.size());
    }
    for (int r = 0; r < rows; ++r)
        m.row_ptr[r + 1] = std::max(m.row_ptr[r + 1], m.row_ptr[r]);
    return m;
}

void SparseMatrix::matvec(std::span<const double> x, std::span<double> y) const {
    for (int r = 0; r < rows; ++r) {
        double s = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += val[k] * x[col[k]];
        y[r] = s;
    }
}

double SparseMatrix::bilinear(std::span<const double> x, std::span<const double> y) const {
    double s = 0.0;
    for (int r = 0; r < rows; ++r) {
        double row = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) row += val[k] * y[col[k]];
        s += x[r] * row;
    }
    return s;
}

std::vector<double> SparseMatrix::diagonal() const {
    std::vector<double> d(rows, 0.0);
    for (int r = 0; r < rows; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            if (col[k] == r) d[r] = val[k];
    return d;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

SolveReport bicgstab(const SparseMatrix& A, std::span<const double> b,
                     std::span<double> x, double rel_tol, int max_iter) {
    const int n = A.rows;
    SolveReport rep;

    const double bnorm = norm(b);
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        rep.converged = true;
        return rep;
    }

    // Jacobi preconditioner; the step systems always have positive diagonal.
    std::vector<double> inv_diag = A.diagonal();
    for (double& d : inv_diag) d = (d != 0.0) ? 1.0 / d : 1.0;

    std::vector<double> r(n), r0(n), p(n, 0.0), v(n, 0.0), s(n), t(n);
    std::vector<double> phat(n), shat(n);

    A.matvec(x, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    r0 = r;

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    const double tol_abs = rel_tol * bnorm;
    const double breakdown = 1e-300;

    for (int it = 1; it <= max_iter; ++it) {
        rep.iterations = it;
        const double rho_new = dot(r0, r);
        if (std::abs(rho_new) < breakdown) break;
        const double beta = (rho_new / rho) * (alpha / omega);
        rho = rho_new;
        for (int i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        for (int i = 0; i < n; ++i) phat[i] = inv_diag[i] * p[i];
        A.matvec(phat, v);
        const double r0v = dot(r0, v);
        if (std::abs(r0v) < breakdown) break;
        alpha = rho / r0v;
        for (int i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
        if (norm(s) <= tol_abs) {
            for (int i = 0; i < n; ++i) x[i] += alpha * phat[i];
        } else {
            for (int i = 0; i < n; ++i) shat[i] = inv_diag[i] * s[i];
            A.matvec(shat, t);
            const double tt = dot(t, t);
            if (tt < breakdown) break;
            omega = dot(t, s) / tt;
            for (int i = 0; i < n; ++i) x[i] += alpha * phat[i] + omega * shat[i];
            for (int i = 0; i < n; ++i) r[i] = s[i] - omega * t[i];
        }
        // True residual check; the recurrence drifts over long runs.
        A.matvec(x, t);
        for (int i = 0; i < n; ++i) t[i] = b[i] - t[i];
        rep.residual = norm(t) / bnorm;
        if (rep.residual <= rel_tol) {
            rep.converged = true;
            return rep;
        }
        r = t;  // restart the recurrence from the true residual
    }
    return rep;
}

void dense_solve(const SparseMatrix& A, std::span<const double> b,
                 std::span<double> x) {
    const int n = A.rows;
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r)
        for (int k = A.row_ptr[r]; k < A.row_ptr[r + 1]; ++k)
            m[static_cast<std::size_t>(r) * n + A.col[k]] = A.val[k];

    std::vector<double> rhs(b.begin(), b.end());
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;

    for (int c = 0; c < n; ++c) {
        int best = c;
        double best_abs = std::abs(m[static_cast<std::size_t>(c) * n + c]);
        for (int r = c + 1; r < n; ++r) {
            const double a = std::abs(m[static_cast<std::size_t>(r) * n + c]);
            if (a > best_abs) { best = r; best_abs = a; }
        }
        if (best_abs == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        if (best != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(c) * n + j],
                          m[static_cast<std::size_t>(best) * n + j]);
            std::swap(rhs[c], rhs[best]);
        }
        const double pivot = m[static_cast<std::size_t>(c) * n + c];
        for (int r = c + 1; r < n; ++r) {
            const double f = m[static_cast<std::size_t>(r) * n + c] / pivot;
            if (f == 0.0) continue;
            m[static_cast<std::size_t>(r) * n + c] = 0.0;
            for (int j = c + 1; j < n; ++j)
                m[static_cast<std::size_t>(r) * n + j] -= f * m[static_cast<std::size_t>(c) * n + j];
            rhs[r] -= f * rhs[c];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int j = r + 1; j < n; ++j) s -= m[static_cast<std::size_t>(r) * n + j] * x[j];
        x[r] = s / m[static_cast<std::size_t>(r) * n + r];
    }
}

}  // namespace sllg
