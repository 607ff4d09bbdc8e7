#include "qmul/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace qmul {

namespace {

constexpr std::size_t kWordBits = 64;

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(shift % kWordBits);
    const std::size_t need = src.size() + word_shift + (bit_shift ? 1 : 0);
    if (dst.size() < need) dst.resize(need, 0);
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + word_shift] ^= (src[i] << bit_shift) | carry;
        carry = src[i] >> (kWordBits - bit_shift);
    }
    dst[src.size() + word_shift] ^= carry;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Polynomial Polynomial::one() { return x_pow(0); }

Polynomial Polynomial::x_pow(std::size_t e) {
    Polynomial p;
    p.set_coeff(e, true);
    return p;
}

Polynomial Polynomial::from_exponents(std::span<const unsigned> exponents) {
    Polynomial p;
    for (unsigned e : exponents) p.set_coeff(e, true);
    return p;
}

Polynomial Polynomial::from_words(std::vector<std::uint64_t> words) {
    Polynomial p;
    p.words_ = std::move(words);
    p.normalize();
    return p;
}

std::optional<std::size_t> Polynomial::degree() const {
    if (words_.empty()) return std::nullopt;
    const std::size_t top = words_.size() - 1;
    return top * kWordBits + (kWordBits - 1 - std::countl_zero(words_[top]));
}

bool Polynomial::coeff(std::size_t i) const {
    const std::size_t w = i / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % kWordBits)) & 1;
}

void Polynomial::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / kWordBits;
    if (value) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % kWordBits);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t{1} << (i % kWordBits));
        normalize();
    }
}

std::size_t Polynomial::weight() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

Polynomial& Polynomial::operator^=(const Polynomial& rhs) {
    if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    normalize();
    return *this;
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<std::uint64_t> out;
    xor_shifted(out, words_, k);
    return from_words(std::move(out));
}

void Polynomial::normalize() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string Polynomial::to_hex() const {
    if (is_zero()) return "0";
    const std::size_t nibbles = *degree() / 4 + 1;
    std::string out(nibbles, '0');
    for (std::size_t i = 0; i < nibbles; ++i) {
        const std::size_t w = i / 16;
        const unsigned v = static_cast<unsigned>((words_[w] >> ((i % 16) * 4)) & 0xf);
        out[nibbles - 1 - i] = "0123456789abcdef"[v];
    }
    return out;
}

Polynomial Polynomial::from_hex(std::string_view text) {
    if (text.empty()) throw ParseError("empty hex polynomial");
    Polynomial p;
    std::size_t pos = 0;
    for (auto it = text.rbegin(); it != text.rend(); ++it, pos += 4) {
        const char c = *it;
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
        else throw ParseError(std::string("invalid hex digit '") + c + "'");
        for (unsigned b = 0; b < 4; ++b)
            if ((v >> b) & 1) p.set_coeff(pos + b, true);
    }
    return p;
}

Modulus::Modulus(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.size() < 3)
        throw std::invalid_argument("modulus must have weight >= 3");
    for (std::size_t i = 1; i < exponents_.size(); ++i)
        if (exponents_[i] >= exponents_[i - 1])
            throw std::invalid_argument("modulus exponents must be strictly descending");
    if (exponents_.back() != 0)
        throw std::invalid_argument("modulus must have a constant term (final exponent 0)");
    poly_ = Polynomial::from_exponents(exponents_);
}

Modulus Modulus::parse(std::string_view text) {
    std::vector<unsigned> exps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view tok = text.substr(start, comma - start);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("modulus: invalid exponent '" + std::string(tok) + "'");
        exps.push_back(value);
        start = comma + 1;
        if (comma == text.size()) break;
    }
    try {
        return Modulus(std::move(exps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("modulus: ") + e.what());
    }
}

std::string Modulus::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ',';
        os << exponents_[i];
    }
    return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint64_t> out;
    const auto aw = a.words();
    for (std::size_t wi = 0; wi < aw.size(); ++wi) {
        std::uint64_t w = aw[wi];
        while (w) {
            const unsigned bit = std::countr_zero(w);
            w &= w - 1;
            xor_shifted(out, b.words(), wi * 64 + bit);
        }
    }
    return Polynomial::from_words(std::move(out));
}

Polynomial poly_rem(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("remainder by zero polynomial");
    const std::size_t db = *b.degree();
    while (!a.is_zero() && *a.degree() >= db) {
        a ^= b.shifted(*a.degree() - db);
    }
    return a;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial poly_mod(const Polynomial& a, const Modulus& m) { return poly_rem(a, m.poly()); }

Polynomial field_mul(const Polynomial& a, const Polynomial& b, const Modulus& m) {
    const auto da = a.degree(), db = b.degree();
    if ((da && *da >= m.degree()) || (db && *db >= m.degree()))
        throw std::invalid_argument("field_mul operand degree not below modulus degree");
    return poly_mod(poly_mul(a, b), m);
}

Polynomial field_inv(const Polynomial& a, const Modulus& m) {
    if (a.is_zero()) throw std::invalid_argument("no inverse: zero element");
    if (*a.degree() >= m.degree())
        throw std::invalid_argument("field_inv operand degree not below modulus degree");
    // Extended Euclid, maintaining s_i * a == r_i (mod m).
    Polynomial r0 = m.poly(), r1 = a;
    Polynomial s0, s1 = Polynomial::one();
    while (!r1.is_zero()) {
        const std::size_t d1 = *r1.degree();
        Polynomial q;
        while (!r0.is_zero() && *r0.degree() >= d1) {
            const std::size_t shift = *r0.degree() - d1;
            q.set_coeff(shift, true);
            r0 ^= r1.shifted(shift);
        }
        std::swap(r0, r1);
        Polynomial next = s0 ^ poly_mul(q, s1);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r0 != Polynomial::one())
        throw std::invalid_argument("no inverse: element shares a factor with the modulus");
    return poly_mod(s0, m);
}

bool is_irreducible(const Modulus& m) {
    const unsigned n = m.degree();
    const Polynomial x = Polynomial::x_pow(1);
    Polynomial t = x;
    for (unsigned i = 0; i < n; ++i) t = poly_mod(poly_mul(t, t), m);
    if (t != x) return false;
    for (unsigned p : prime_factors(n)) {
        Polynomial u = x;
        for (unsigned i = 0; i < n / p; ++i) u = poly_mod(poly_mul(u, u), m);
        if (poly_gcd(u ^ x, m.poly()) != Polynomial::one()) return false;
    }
    return true;
}

Polynomial parse_exponent_poly(std::string_view text) {
    std::vector<unsigned> exps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view tok = text.substr(start, comma - start);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("polynomial: invalid exponent '" + std::string(tok) + "'");
        exps.push_back(value);
        start = comma + 1;
        if (comma == text.size()) break;
    }
    for (std::size_t i = 1; i < exps.size(); ++i)
        if (exps[i] >= exps[i - 1])
            throw ParseError("polynomial: exponents must be strictly descending");
    return Polynomial::from_exponents(exps);
}

}  // namespace qmul
