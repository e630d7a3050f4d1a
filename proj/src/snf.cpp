#include "addcomb/snf.hpp"

#include <algorithm>
#include <utility>

#include "addcomb/errors.hpp"

namespace addcomb {

IntMat identity_matrix(std::size_t n) {
    IntMat I(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    std::size_t m = A.size();
    std::size_t k = m ? A[0].size() : 0;
    std::size_t n = B.empty() ? 0 : B[0].size();
    IntMat C(m, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

namespace {

struct Snf {
    IntMat D, U, V;
    std::size_t m, n;

    void swap_rows(std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(V[i][a], V[i][b]);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& q) {  // row dst += q*src
        for (std::size_t j = 0; j < n; ++j) D[dst][j] += q * D[src][j];
        for (std::size_t j = 0; j < m; ++j) U[dst][j] += q * U[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < m; ++i) D[i][dst] += q * D[i][src];
        for (std::size_t i = 0; i < n; ++i) V[i][dst] += q * V[i][src];
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) D[r][j] = -D[r][j];
        for (std::size_t j = 0; j < m; ++j) U[r][j] = -U[r][j];
    }

    // Smallest nonzero |entry| in the submatrix with corner (t, t).
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D[i][j] == 0) continue;
                Integer a = ::abs(D[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void reduce(std::size_t t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            if (D[t][t] < 0) negate_row(t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (D[i][t] != 0) dirty = true;  // nonzero remainder, smaller than pivot
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (D[t][j] != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot clears its row and column; enforce divisibility of the
            // remaining block by folding a bad entry into column t.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
                        add_col(t, j, 1);
                        fixed = false;
                    }
            if (fixed) return;
        }
    }
};

}  // namespace

SmithForm smith_normal_form(IntMat M) {
    std::size_t m = M.size();
    std::size_t n = m ? M[0].size() : 0;
    for (const auto& row : M)
        if (row.size() != n) throw PreconditionError("smith_normal_form: ragged matrix");

    Snf s{std::move(M), identity_matrix(m), identity_matrix(n), m, n};
    for (std::size_t t = 0; t < std::min(m, n); ++t) s.reduce(t);

    SmithForm out;
    out.U = std::move(s.U);
    out.D = std::move(s.D);
    out.V = std::move(s.V);
    out.rows = m;
    out.cols = n;
    return out;
}

bool lattice_contains(const SmithForm& snf, const std::vector<Integer>& e) {
    if (e.size() != snf.rows) throw PreconditionError("lattice_contains: size mismatch");
    // M z = e  <=>  D y = U e with y = V^-1 z ranging over all of Z^n.
    std::vector<Integer> ue(snf.rows, 0);
    for (std::size_t i = 0; i < snf.rows; ++i)
        for (std::size_t j = 0; j < snf.rows; ++j) ue[i] += snf.U[i][j] * e[j];
    std::size_t diag = std::min(snf.rows, snf.cols);
    for (std::size_t i = 0; i < snf.rows; ++i) {
        if (i < diag && snf.D[i][i] != 0) {
            if (!mpz_divisible_p(ue[i].get_mpz_t(), snf.D[i][i].get_mpz_t())) return false;
        } else if (ue[i] != 0) {
            return false;
        }
    }
    return true;
}

bool lattice_contains(const IntMat& M, const std::vector<Integer>& e) {
    return lattice_contains(smith_normal_form(M), e);
}

}  // namespace addcomb
