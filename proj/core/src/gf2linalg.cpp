#include "qmul/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qmul {

Gf2Matrix::Gf2Matrix(std::size_t n) : n_(n), wpr_((n + 63) / 64), bits_(n * wpr_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool Gf2Matrix::at(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t& w = bits_[i * wpr_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (value) w |= mask;
    else w &= ~mask;
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

void Gf2Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(bits_[i * wpr_ + w], bits_[j * wpr_ + w]);
}

std::size_t Gf2Matrix::offdiag_weight() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t w = 0; w < wpr_; ++w) count += std::popcount(bits_[i * wpr_ + w]);
        if (at(i, i)) --count;
    }
    return count;
}

Gf2Matrix constmult_matrix(const Polynomial& f, const Modulus& m) {
    if (f.is_zero()) throw std::invalid_argument("singular map: constant factor is zero");
    const std::size_t n = m.degree();
    if (*f.degree() >= n)
        throw std::invalid_argument("constant factor degree not below modulus degree");
    Gf2Matrix gamma(n);
    Polynomial col = f;  // x^j * f mod m, column by column
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            if (col.coeff(i)) gamma.set(i, j, true);
        col = poly_mod(col.shifted(1), m);
    }
    return gamma;
}

LupDecomposition lup_decompose(const Gf2Matrix& gamma) {
    const std::size_t n = gamma.size();
    Gf2Matrix upper = gamma;
    Gf2Matrix lower(n);  // strictly lower part during elimination; diagonal set at the end
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);

    for (std::size_t j = 0; j < n; ++j) {
        std::size_t pivot = n;
        for (std::size_t i = j; i < n; ++i) {
            if (upper.at(i, j)) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) throw std::invalid_argument("lup_decompose: singular matrix");
        if (pivot != j) {
            upper.swap_rows(pivot, j);
            // Accumulated multipliers sit strictly left of column j, so a full
            // row swap of the lower factor is safe here.
            lower.swap_rows(pivot, j);
            std::swap(perm[pivot], perm[j]);
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            if (upper.at(i, j)) {
                lower.set(i, j, true);
                upper.xor_row(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) lower.set(i, i, true);

    // perm maps row position -> original row; p_inv is its inverse so that
    // (P^-1 v)[i] = v[p_inv[i]] recomposes gamma = P^-1 L U.
    std::vector<std::uint32_t> p_inv(n);
    for (std::size_t i = 0; i < n; ++i) p_inv[perm[i]] = static_cast<std::uint32_t>(i);
    return LupDecomposition{std::move(lower), std::move(upper), std::move(p_inv)};
}

Polynomial matvec(const Gf2Matrix& g, const Polynomial& v) {
    const std::size_t n = g.size();
    if (const auto d = v.degree(); d && *d >= n)
        throw std::invalid_argument("matvec: vector longer than matrix dimension");
    Polynomial out;
    for (std::size_t i = 0; i < n; ++i) {
        bool bit = false;
        for (std::size_t j = 0; j < n; ++j) bit ^= g.at(i, j) && v.coeff(j);
        if (bit) out.set_coeff(i, true);
    }
    return out;
}

}  // namespace qmul
