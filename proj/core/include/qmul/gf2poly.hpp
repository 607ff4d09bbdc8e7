// Dense GF(2)[x] polynomial arithmetic and binary field (GF(2^n)) operations.
// This is the classical reference arithmetic that circuit outputs are checked
// against, so it deliberately shares no code with the circuit builders.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmul {

// Thrown for malformed textual inputs (modulus lists, hex polynomials, netlists).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bit i of the backing words is the coefficient of x^i. The word vector is
// kept normalized (no trailing zero words), so operator== is coefficient-wise
// equality and the zero polynomial is the empty vector.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial one();
    static Polynomial x_pow(std::size_t e);
    static Polynomial from_exponents(std::span<const unsigned> exponents);
    static Polynomial from_words(std::vector<std::uint64_t> words);
    static Polynomial from_hex(std::string_view text);

    bool is_zero() const { return words_.empty(); }
    // Degree of the zero polynomial is represented as nullopt, never -1.
    std::optional<std::size_t> degree() const;
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool value);
    std::size_t weight() const;

    std::span<const std::uint64_t> words() const { return words_; }

    Polynomial& operator^=(const Polynomial& rhs);
    friend Polynomial operator^(Polynomial lhs, const Polynomial& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const Polynomial&) const = default;

    // Multiplication by x^k.
    Polynomial shifted(std::size_t k) const;

    // Hex text, most significant digit first; the last digit holds x^0..x^3.
    std::string to_hex() const;

private:
    void normalize();
    std::vector<std::uint64_t> words_;
};

// Irreducible modulus m(x) given as the descending list of exponents of its
// nonzero terms, e.g. "163,7,6,3,0". The list must start at the degree, end
// at 0 (a constant term is required for reversible modular shifts) and have
// at least three entries.
class Modulus {
public:
    explicit Modulus(std::vector<unsigned> exponents);
    static Modulus parse(std::string_view text);

    unsigned degree() const { return exponents_.front(); }
    unsigned weight() const { return static_cast<unsigned>(exponents_.size()); }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    const Polynomial& poly() const { return poly_; }
    std::string to_string() const;

    bool operator==(const Modulus&) const = default;

private:
    std::vector<unsigned> exponents_;
    Polynomial poly_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Modulus& m);

// Remainder of a modulo an arbitrary nonzero polynomial b.
Polynomial poly_rem(Polynomial a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Field operations in GF(2)[x]/m(x); operands must have degree below m's.
Polynomial field_mul(const Polynomial& a, const Polynomial& b, const Modulus& m);
Polynomial field_inv(const Polynomial& a, const Modulus& m);

// Rabin test: x^(2^n) == x mod m plus subfield-order checks for each maximal
// proper divisor of n.
bool is_irreducible(const Modulus& m);

// Exponent-list polynomial operand ("2,0" is 1 + x^2); strictly descending.
Polynomial parse_exponent_poly(std::string_view text);

}  // namespace qmul
