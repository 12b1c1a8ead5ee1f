#include "eucalc/hnf.hpp"

#include <utility>

namespace eucalc {

namespace {

// r_i <- u*r_i + v*r_j, r_j <- -b/g*r_i + a/g*r_j, the 2x2 unimodular step of
// the extended Euclid elimination
void gcd_rows(IntMatrix& m, IntMatrix& u, int i, int j, int col) {
    Int a = m[i][col], b = m[j][col];
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int a_div = a / g, b_div = b / g;
    auto combine = [&](IntMatrix& mat) {
        const std::size_t w = mat[i].size();
        for (std::size_t c = 0; c < w; ++c) {
            Int ri = s * mat[i][c] + t * mat[j][c];
            Int rj = -b_div * mat[i][c] + a_div * mat[j][c];
            mat[i][c] = std::move(ri);
            mat[j][c] = std::move(rj);
        }
    };
    combine(m);
    combine(u);
}

void add_multiple(IntMatrix& m, IntMatrix& u, int dst, int src, const Int& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += k * m[src][c];
    for (std::size_t c = 0; c < u[dst].size(); ++c) u[dst][c] += k * u[src][c];
}

void negate_row(IntMatrix& m, IntMatrix& u, int i) {
    for (auto& v : m[i]) v = -v;
    for (auto& v : u[i]) v = -v;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& generators) {
    const int rows = static_cast<int>(generators.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(generators[0].size());
    IntMatrix m = generators;
    IntMatrix u(rows, std::vector<Int>(rows, Int(0)));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;

    int pivot_row = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        // clear the column below pivot_row with gcd steps
        int nonzero = -1;
        for (int r = pivot_row; r < rows; ++r)
            if (m[r][col] != 0) {
                nonzero = r;
                break;
            }
        if (nonzero == -1) continue;
        std::swap(m[pivot_row], m[nonzero]);
        std::swap(u[pivot_row], u[nonzero]);
        for (int r = pivot_row + 1; r < rows; ++r)
            if (m[r][col] != 0) gcd_rows(m, u, pivot_row, r, col);
        if (m[pivot_row][col] < 0) negate_row(m, u, pivot_row);
        // canonical residues above the pivot
        for (int r = 0; r < pivot_row; ++r)
            add_multiple(m, u, r, pivot_row, -floor_div(m[r][col], m[pivot_row][col]));
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    HermiteForm out;
    out.pivot_cols = std::move(pivot_cols);
    out.basis.assign(m.begin(), m.begin() + pivot_row);
    out.transform.assign(u.begin(), u.begin() + pivot_row);
    return out;
}

MembershipResult lattice_membership(const HermiteForm& hnf, int n_generators,
                                    const std::vector<Int>& target) {
    const int r = static_cast<int>(hnf.basis.size());
    std::vector<Int> residual = target;
    std::vector<Int> y(r, Int(0));

    MembershipResult out;
    for (int i = 0; i < r; ++i) {
        int col = hnf.pivot_cols[i];
        const Int& pivot = hnf.basis[i][col];
        if (residual[col] % pivot != 0) {
            out.obstruction = LatticeObstruction{col, residual[col], pivot};
            return out;
        }
        y[i] = residual[col] / pivot;
        if (y[i] != 0)
            for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= y[i] * hnf.basis[i][c];
    }
    for (std::size_t c = 0; c < residual.size(); ++c) {
        if (residual[c] != 0) {
            out.obstruction = LatticeObstruction{static_cast<int>(c), residual[c], Int(0)};
            return out;
        }
    }

    std::vector<Int> coeffs(n_generators, Int(0));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < n_generators; ++k) coeffs[k] += y[i] * hnf.transform[i][k];
    out.member = true;
    out.solution = LatticeSolution{std::move(coeffs)};
    return out;
}

}  // namespace eucalc
