// Bit matrices over GF(2): the linear map of multiplication by a fixed field
// element and its LUP decomposition, which the synthesizer turns into CNOTs.

#pragma once

#include <cstdint>
#include <vector>

#include "qmul/gf2poly.hpp"

namespace qmul {

// Square bit matrix, row-major, 64 entries per word.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::size_t n);
    static Gf2Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t i, std::size_t j);
    std::size_t offdiag_weight() const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t wpr_ = 0;  // words per row
    std::vector<std::uint64_t> bits_;
};

// gamma = P^-1 * L * U with L and U unit-diagonal. p_inv encodes the
// permutation as an index list: (P^-1 v)[i] = v[p_inv[i]].
struct LupDecomposition {
    Gf2Matrix lower;
    Gf2Matrix upper;
    std::vector<std::uint32_t> p_inv;
};

// Matrix of g -> f*g in GF(2)[x]/m(x): column j holds the coefficients of
// x^j * f(x) mod m(x). Invertible whenever m is irreducible and f != 0.
Gf2Matrix constmult_matrix(const Polynomial& f, const Modulus& m);

// Column-major Gaussian elimination with a fixed pivot rule: at column j the
// pivot is the smallest row index i >= j holding a 1. Deterministic; throws
// on singular input.
LupDecomposition lup_decompose(const Gf2Matrix& gamma);

Polynomial matvec(const Gf2Matrix& g, const Polynomial& v);

}  // namespace qmul
