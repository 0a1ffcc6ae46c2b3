#include "wpl/matfq.hpp"

#include <algorithm>
#include <numeric>

namespace wpl {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int inv_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DomainError("division by zero mod p");
    int result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = static_cast<int>(static_cast<std::int64_t>(result) * base % p);
        base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
        e >>= 1;
    }
    return result;
}

MatFq MatFq::identity(int n) {
    MatFq I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool MatFq::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

MatFq mat_mul(const MatFq& A, const MatFq& B, int p) {
    if (A.cols != B.rows) throw DomainError("matrix size mismatch");
    MatFq C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int l = 0; l < A.cols; ++l) {
            const int aij = A.at(i, l);
            if (aij == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = static_cast<int>((C.at(i, j) + static_cast<std::int64_t>(aij) * B.at(l, j)) % p);
        }
    return C;
}

MatFq mat_vstack(const MatFq& A, const MatFq& B) {
    if (A.cols != B.cols && A.rows != 0 && B.rows != 0) throw DomainError("vstack width mismatch");
    MatFq C(A.rows + B.rows, A.rows ? A.cols : B.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
    return C;
}

std::vector<int> rref(MatFq& M, int p) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int piv = -1;
        for (int r = row; r < M.rows; ++r)
            if (M.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(row, c));
        const int s = inv_mod(M.at(row, col), p);
        for (int c = 0; c < M.cols; ++c)
            M.at(row, c) = static_cast<int>(static_cast<std::int64_t>(M.at(row, c)) * s % p);
        for (int r = 0; r < M.rows; ++r) {
            if (r == row || M.at(r, col) == 0) continue;
            const int f = M.at(r, col);
            for (int c = 0; c < M.cols; ++c)
                M.at(r, c) = static_cast<int>(((M.at(r, c) - static_cast<std::int64_t>(f) * M.at(row, c)) % p + p) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(MatFq M, int p) { return static_cast<int>(rref(M, p).size()); }

MatFq nullspace(const MatFq& M, int p) {
    MatFq R = M;
    const std::vector<int> pivots = rref(R, p);
    std::vector<char> is_pivot(static_cast<size_t>(M.cols), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    MatFq N(static_cast<int>(free_cols.size()), M.cols);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        N.at(static_cast<int>(f), free_cols[f]) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            const int v = R.at(static_cast<int>(r), free_cols[f]);
            N.at(static_cast<int>(f), pivots[r]) = (p - v) % p;
        }
    }
    return N;
}

bool in_rowspace(const MatFq& basis, const std::vector<int>& pivots, const int* v, int p) {
    std::vector<int> tmp(v, v + basis.cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        const int f = tmp[static_cast<size_t>(pivots[r])];
        if (f == 0) continue;
        for (int c = 0; c < basis.cols; ++c)
            tmp[static_cast<size_t>(c)] =
                static_cast<int>(((tmp[static_cast<size_t>(c)] - static_cast<std::int64_t>(f) * basis.at(static_cast<int>(r), c)) % p + p) % p);
    }
    return std::all_of(tmp.begin(), tmp.end(), [](int x) { return x == 0; });
}

bool rows_in_rowspace(const MatFq& basis, const std::vector<int>& pivots, const MatFq& W, int p) {
    for (int r = 0; r < W.rows; ++r)
        if (!in_rowspace(basis, pivots, &W.a[static_cast<size_t>(r) * W.cols], p)) return false;
    return true;
}

MatFq preimage_basis(const MatFq& A, const MatFq& U, int p) {
    // x is in the preimage iff Ax reduces to zero against a basis of U
    MatFq B = U;
    const std::vector<int> pivots = rref(B, p);
    const int dimU = static_cast<int>(pivots.size());
    // residue map: F^cols(U) -> F^cols(U), v -> v reduced by B; kernel of
    // residue(A e_j) over j gives the preimage.
    MatFq R(A.rows, A.cols);  // rows index target coords after reduction
    // build matrix whose columns are residues of A's columns
    for (int j = 0; j < A.cols; ++j) {
        std::vector<int> col(static_cast<size_t>(A.rows));
        for (int i = 0; i < A.rows; ++i) col[static_cast<size_t>(i)] = A.at(i, j);
        // reduce col against B rows
        for (int r = 0; r < dimU; ++r) {
            const int f = col[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
            if (f == 0) continue;
            for (int c = 0; c < B.cols; ++c)
                col[static_cast<size_t>(c)] =
                    static_cast<int>(((col[static_cast<size_t>(c)] - static_cast<std::int64_t>(f) * B.at(r, c)) % p + p) % p);
        }
        for (int i = 0; i < A.rows; ++i) R.at(i, j) = col[static_cast<size_t>(i)];
    }
    return nullspace(R, p);
}

namespace {

// Enumerate RREF matrices of shape k x dim with the given pivot columns.
void enumerate_rref(int dim, int p, std::vector<int>& pivots,
                    const std::function<void(const MatFq&)>& fn) {
    const int k = static_cast<int>(pivots.size());
    std::vector<char> is_pivot(static_cast<size_t>(dim), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::pair<int, int>> free_slots;  // (row, col)
    for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<size_t>(r)] + 1; c < dim; ++c)
            if (!is_pivot[static_cast<size_t>(c)]) free_slots.emplace_back(r, c);

    MatFq M(k, dim);
    for (int r = 0; r < k; ++r) M.at(r, pivots[static_cast<size_t>(r)]) = 1;
    const size_t nf = free_slots.size();
    std::vector<int> counter(nf, 0);
    for (;;) {
        fn(M);
        size_t t = 0;
        while (t < nf) {
            auto [r, c] = free_slots[t];
            if (++counter[t] < p) {
                M.at(r, c) = counter[t];
                break;
            }
            counter[t] = 0;
            M.at(r, c) = 0;
            ++t;
        }
        if (t == nf) break;
    }
}

void pivot_combos(int dim, int k, int start, std::vector<int>& cur, int p,
                  const std::function<void(const MatFq&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        enumerate_rref(dim, p, cur, fn);
        return;
    }
    for (int c = start; c < dim; ++c) {
        cur.push_back(c);
        pivot_combos(dim, k, c + 1, cur, p, fn);
        cur.pop_back();
    }
}

} // namespace

void for_each_subspace(int dim, int p, const std::function<void(const MatFq&)>& fn) {
    for (int k = 0; k <= dim; ++k) {
        std::vector<int> cur;
        pivot_combos(dim, k, 0, cur, p, fn);
    }
}

std::int64_t gaussian_binomial(int n, int k, std::int64_t q) {
    if (k < 0 || k > n) return 0;
    // Pascal recurrence [n,k] = q^k [n-1,k] + [n-1,k-1]; division free
    std::vector<std::vector<std::int64_t>> g(static_cast<size_t>(n) + 1,
                                             std::vector<std::int64_t>(static_cast<size_t>(k) + 1, 0));
    for (int i = 0; i <= n; ++i) g[static_cast<size_t>(i)][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) {
            std::int64_t qj = 1;
            for (int e = 0; e < j; ++e) qj *= q;
            g[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                qj * g[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] +
                g[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
        }
    return g[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

std::int64_t subspace_count(int n, std::int64_t q) {
    std::int64_t total = 0;
    for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
    return total;
}

} // namespace wpl
