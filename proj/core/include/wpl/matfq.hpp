#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wpl/errors.hpp"

namespace wpl {

bool is_prime(std::int64_t n);
int inv_mod(int a, int p);

// Dense matrix over the prime field F_p, row major. Sizes stay tiny (module
// dimensions of small tube objects), so no attempt at anything clever.
struct MatFq {
    int rows = 0, cols = 0;
    std::vector<int> a;

    MatFq() = default;
    MatFq(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static MatFq identity(int n);
    bool is_zero() const;
    friend bool operator==(const MatFq&, const MatFq&) = default;
};

MatFq mat_mul(const MatFq& A, const MatFq& B, int p);
MatFq mat_vstack(const MatFq& A, const MatFq& B);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(MatFq& M, int p);
int rank(MatFq M, int p);
// Basis of the right kernel {x : Mx = 0}, rows of the result.
MatFq nullspace(const MatFq& M, int p);

// Row span membership/containment against an RREF basis.
bool in_rowspace(const MatFq& basis, const std::vector<int>& pivots, const int* v, int p);
bool rows_in_rowspace(const MatFq& basis, const std::vector<int>& pivots, const MatFq& W, int p);

// Basis (rows) of the preimage {x : Ax in rowspace(U)}; U given by any
// spanning rows.
MatFq preimage_basis(const MatFq& A, const MatFq& U, int p);

// Visit every subspace of F_p^dim, presented as an RREF basis matrix
// (0 x dim for the zero space). Deterministic order.
void for_each_subspace(int dim, int p, const std::function<void(const MatFq&)>& fn);

// Gaussian binomial [n choose k]_q and the total subspace count.
std::int64_t gaussian_binomial(int n, int k, std::int64_t q);
std::int64_t subspace_count(int n, std::int64_t q);

} // namespace wpl
