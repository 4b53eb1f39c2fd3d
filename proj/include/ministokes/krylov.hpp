#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ministokes {

/// Square sparse matrix, compressed rows, column indices strictly increasing
/// within each row.
struct SparseMatrix {
    int n = 0;
    std::vector<int> row_ptr;  // size n+1
    std::vector<int> col;
    std::vector<double> val;

    std::size_t nnz() const { return col.size(); }

    void multiply(const double* x, double* y) const {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
            y[i] = s;
        }
    }

    std::vector<double> multiply(const std::vector<double>& x) const {
        std::vector<double> y(n);
        multiply(x.data(), y.data());
        return y;
    }
};

struct Triplet {
    int row, col;
    double value;
};

/// Deterministic CSR from a triplet list; duplicates accumulate, exact zeros
/// created by accumulation are kept only if `keep_zeros`.
inline SparseMatrix csr_from_triplets(int n, std::vector<Triplet> triplets,
                                      bool keep_zeros = false) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    SparseMatrix m;
    m.n = n;
    m.row_ptr.assign(n + 1, 0);
    m.col.reserve(triplets.size());
    m.val.reserve(triplets.size());
    std::size_t i = 0;
    for (int r = 0; r < n; ++r) {
        while (i < triplets.size() && triplets[i].row == r) {
            const int c = triplets[i].col;
            double v = 0.0;
            while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
                v += triplets[i++].value;
            if (v != 0.0 || keep_zeros) {
                m.col.push_back(c);
                m.val.push_back(v);
            }
        }
        m.row_ptr[r + 1] = static_cast<int>(m.col.size());
    }
    return m;
}

/// `n nnz` header, then 0-based `row col value` lines.
inline void write_coordinate(const SparseMatrix& m, std::ostream& os) {
    os << m.n << ' ' << m.nnz() << '\n';
    char buf[96];
    for (int i = 0; i < m.n; ++i)
        for (int k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) {
            std::snprintf(buf, sizeof(buf), "%d %d %.16e\n", i, m.col[k], m.val[k]);
            os << buf;
        }
}

inline SparseMatrix read_coordinate(std::istream& is) {
    int n = 0;
    std::size_t nnz = 0;
    if (!(is >> n >> nnz)) throw std::runtime_error("coordinate matrix: bad header");
    std::vector<Triplet> trip(nnz);
    for (std::size_t k = 0; k < nnz; ++k)
        if (!(is >> trip[k].row >> trip[k].col >> trip[k].value))
            throw std::runtime_error("coordinate matrix: bad entry " + std::to_string(k));
    return csr_from_triplets(n, std::move(trip), true);
}

inline void write_vector(const std::vector<double>& v, std::ostream& os) {
    os << v.size() << '\n';
    char buf[48];
    for (double x : v) {
        std::snprintf(buf, sizeof(buf), "%.16e\n", x);
        os << buf;
    }
}

inline std::vector<double> read_vector(std::istream& is) {
    std::size_t n = 0;
    if (!(is >> n)) throw std::runtime_error("vector: bad header");
    std::vector<double> v(n);
    for (auto& x : v)
        if (!(is >> x)) throw std::runtime_error("vector: bad entry");
    return v;
}

/// Incomplete LU factors: L unit-diagonal (strict lower part stored), U
/// upper triangular including the diagonal.
struct IluFactors {
    SparseMatrix lower;
    SparseMatrix upper;
    double drop_tol = 0.0;
    bool ok = false;
    std::string message;

    /// z = U^-1 L^-1 r (two triangular solves).
    void apply(const double* r, double* z) const {
        const int n = lower.n;
        for (int i = 0; i < n; ++i) {
            double s = r[i];
            for (int k = lower.row_ptr[i]; k < lower.row_ptr[i + 1]; ++k)
                s -= lower.val[k] * z[lower.col[k]];
            z[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = z[i];
            const int begin = upper.row_ptr[i], end = upper.row_ptr[i + 1];
            for (int k = begin + 1; k < end; ++k) s -= upper.val[k] * z[upper.col[k]];
            z[i] = s / upper.val[begin];  // diagonal is first entry of the U row
        }
    }
};

/// Threshold ILU: while eliminating row i, entries with magnitude below
/// drop_tol times the 2-norm of the original row are discarded; diagonal
/// entries are never dropped. drop_tol = 0 gives the exact LU when no
/// pivoting is needed.
inline IluFactors ilu_factorize(const SparseMatrix& a, double drop_tol = 1e-4) {
    const int n = a.n;
    IluFactors f;
    f.drop_tol = drop_tol;
    f.lower.n = f.upper.n = n;
    f.lower.row_ptr.assign(1, 0);
    f.upper.row_ptr.assign(1, 0);

    // U rows are needed by later eliminations; keep per-row views into the
    // growing arrays via upper.row_ptr.
    std::vector<double> work(n, 0.0);
    std::vector<char> occupied(n, 0);  // 0 absent, 1 original entry, 2 fill
    std::set<int> lower_pending;       // columns < i awaiting elimination
    std::vector<int> lower_done;       // surviving L columns, ascending
    std::vector<int> upper_cols;       // columns >= i present (unsorted)

    auto clear_row = [&](int i) {
        for (int j : lower_done) {
            occupied[j] = 0;
            work[j] = 0.0;
        }
        for (int j : upper_cols) {
            occupied[j] = 0;
            work[j] = 0.0;
        }
        occupied[i] = 0;
        work[i] = 0.0;
    };

    for (int i = 0; i < n; ++i) {
        lower_pending.clear();
        lower_done.clear();
        upper_cols.clear();
        double row_norm2 = 0.0;
        for (int k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
            const int j = a.col[k];
            const double v = a.val[k];
            row_norm2 += v * v;
            work[j] = v;
            occupied[j] = 1;
            if (j < i) lower_pending.insert(j);
            else if (j > i) upper_cols.push_back(j);
        }
        if (!occupied[i]) {  // structural diagonal, never dropped
            work[i] = 0.0;
            occupied[i] = 1;
        }
        const double row_norm = std::sqrt(row_norm2);
        const double tau = drop_tol * row_norm;

        // pivots must be consumed in ascending column order so that fill
        // created at columns between k and i is eliminated too
        while (!lower_pending.empty()) {
            const int k = *lower_pending.begin();
            lower_pending.erase(lower_pending.begin());
            const int urow = f.upper.row_ptr[k];
            const double factor = work[k] / f.upper.val[urow];
            if (std::abs(factor) < tau) {
                work[k] = 0.0;
                occupied[k] = 0;
                continue;
            }
            work[k] = factor;
            lower_done.push_back(k);
            for (int kk = urow + 1; kk < f.upper.row_ptr[k + 1]; ++kk) {
                const int j = f.upper.col[kk];
                const double upd = factor * f.upper.val[kk];
                if (!occupied[j]) {
                    if (std::abs(upd) < tau && j != i) continue;  // drop fill at birth
                    occupied[j] = 2;
                    work[j] = -upd;
                    if (j < i) lower_pending.insert(j);
                    else if (j > i) upper_cols.push_back(j);
                } else {
                    work[j] -= upd;
                }
            }
        }

        const double pivot = work[i];
        if (std::abs(pivot) < 1e-14 * row_norm) {
            f.ok = false;
            f.message = "near-zero pivot at row " + std::to_string(i);
            clear_row(i);
            return f;
        }

        for (int j : lower_done) {  // already ascending (set consumed in order)
            f.lower.col.push_back(j);
            f.lower.val.push_back(work[j]);
        }
        std::sort(upper_cols.begin(), upper_cols.end());
        // U row: diagonal first, then ascending columns; fill entries below
        // the threshold are discarded, original entries are kept
        f.upper.col.push_back(i);
        f.upper.val.push_back(pivot);
        for (int j : upper_cols)
            if (occupied[j] == 1 || std::abs(work[j]) >= tau) {
                f.upper.col.push_back(j);
                f.upper.val.push_back(work[j]);
            }
        clear_row(i);
        f.lower.row_ptr.push_back(static_cast<int>(f.lower.col.size()));
        f.upper.row_ptr.push_back(static_cast<int>(f.upper.col.size()));
    }
    f.ok = true;
    return f;
}

struct SolveStats {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
    std::vector<double> precond_residuals;  // per-iteration estimates
};

namespace detail {

inline double dense_dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double dense_norm(const std::vector<double>& a) { return std::sqrt(dense_dot(a, a)); }

}  // namespace detail

/// Unrestarted GMRES with optional left ILU preconditioning, zero initial
/// guess, modified Gram-Schmidt, Givens rotations. Convergence is judged on
/// the unpreconditioned residual ||b - Ax|| / ||b||. Deterministic.
inline std::pair<std::vector<double>, SolveStats> gmres(const SparseMatrix& a,
                                                        const std::vector<double>& b,
                                                        const IluFactors* precond,
                                                        double rtol = 1e-9,
                                                        int max_iter = 500) {
    const int n = a.n;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("gmres: size mismatch");
    if (max_iter < 1) throw std::invalid_argument("gmres: max_iter must be >= 1");
    if (precond && !precond->ok) {
        std::cerr << "warning: ILU factorization failed (" << precond->message
                  << "); solving unpreconditioned\n";
        precond = nullptr;
    }

    SolveStats stats;
    std::vector<double> x(n, 0.0);
    const double bnorm = detail::dense_norm(b);
    if (bnorm == 0.0) {
        stats.converged = true;
        return {x, stats};
    }

    auto apply_m = [&](const std::vector<double>& r, std::vector<double>& z) {
        if (precond) precond->apply(r.data(), z.data());
        else z = r;
    };

    std::vector<double> r0(n);
    apply_m(b, r0);  // x0 = 0
    const double beta = detail::dense_norm(r0);
    if (beta == 0.0) {
        stats.converged = true;
        return {x, stats};
    }

    std::vector<std::vector<double>> basis;
    basis.push_back(r0);
    for (double& v : basis[0]) v /= beta;

    std::vector<std::vector<double>> h_cols;  // Hessenberg columns (rotated)
    std::vector<double> cs, sn, g;
    g.push_back(beta);

    std::vector<double> w(n), aw(n);
    double inner_target = rtol * beta;

    auto form_solution = [&](int k) {
        // back-substitute the k x k triangular system
        std::vector<double> y(k);
        for (int i = k - 1; i >= 0; --i) {
            double s = g[i];
            for (int j = i + 1; j < k; ++j) s -= h_cols[j][i] * y[j];
            y[i] = s / h_cols[i][i];
        }
        std::vector<double> sol(n, 0.0);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) sol[i] += y[j] * basis[j][i];
        return sol;
    };
    auto true_residual = [&](const std::vector<double>& sol) {
        a.multiply(sol.data(), aw.data());
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = b[i] - aw[i];
            s += d * d;
        }
        return std::sqrt(s) / bnorm;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        a.multiply(basis[iter].data(), aw.data());
        apply_m(aw, w);

        std::vector<double> hj(iter + 2, 0.0);
        for (int i = 0; i <= iter; ++i) {
            hj[i] = detail::dense_dot(w, basis[i]);
            for (int k = 0; k < n; ++k) w[k] -= hj[i] * basis[i][k];
        }
        hj[iter + 1] = detail::dense_norm(w);
        const bool breakdown = hj[iter + 1] < 1e-14 * beta;

        for (int i = 0; i < iter; ++i) {
            const double t = cs[i] * hj[i] + sn[i] * hj[i + 1];
            hj[i + 1] = -sn[i] * hj[i] + cs[i] * hj[i + 1];
            hj[i] = t;
        }
        const double denom = std::hypot(hj[iter], hj[iter + 1]);
        cs.push_back(denom == 0.0 ? 1.0 : hj[iter] / denom);
        sn.push_back(denom == 0.0 ? 0.0 : hj[iter + 1] / denom);
        hj[iter] = denom;
        hj[iter + 1] = 0.0;
        g.push_back(-sn[iter] * g[iter]);
        g[iter] = cs[iter] * g[iter];
        h_cols.push_back(hj);

        const double est = std::abs(g[iter + 1]);
        stats.precond_residuals.push_back(est);
        stats.iterations = iter + 1;

        if (est <= inner_target || breakdown || iter + 1 == max_iter) {
            x = form_solution(iter + 1);
            stats.relative_residual = true_residual(x);
            if (stats.relative_residual <= rtol || breakdown) {
                stats.converged = stats.relative_residual <= rtol;
                return {x, stats};
            }
            if (iter + 1 == max_iter) break;
            inner_target *= 0.1;  // preconditioned estimate was optimistic
        }

        if (!breakdown) {
            basis.push_back(w);
            for (double& v : basis.back()) v /= hj[iter + 1];
        } else {
            break;
        }
    }

    x = form_solution(static_cast<int>(h_cols.size()));
    stats.relative_residual = true_residual(x);
    stats.converged = stats.relative_residual <= rtol;
    return {x, stats};
}

}  // namespace ministokes
