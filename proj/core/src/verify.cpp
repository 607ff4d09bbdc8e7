#include "qmul/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmul {

namespace {

Polynomial poly_from_u64(std::uint64_t v) {
    return Polynomial::from_words({v});
}

void record(VerifyOutcome& out, bool ok, const std::string& detail) {
    ++out.trials;
    if (!ok && out.failures++ == 0) out.counterexample = detail;
}

void require_exhaustible(std::uint32_t bits_per_operand, std::uint32_t limit) {
    if (bits_per_operand > limit)
        throw std::invalid_argument("exhaustive verification limited to " +
                                    std::to_string(limit) + " bits per operand");
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t bits) {
    std::vector<std::uint64_t> words((bits + 63) / 64);
    for (auto& w : words) w = rng();
    if (bits % 64 != 0 && !words.empty())
        words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    return Polynomial::from_words(std::move(words));
}

void write_poly_bits(std::vector<std::uint8_t>& state, std::uint32_t offset, std::uint32_t width,
                     const Polynomial& p) {
    for (std::uint32_t i = 0; i < width; ++i) state[offset + i] = p.coeff(i) ? 1 : 0;
}

Polynomial read_poly_bits(std::span<const std::uint8_t> state, std::uint32_t offset,
                          std::uint32_t width) {
    Polynomial p;
    for (std::uint32_t i = 0; i < width; ++i)
        if (state[offset + i]) p.set_coeff(i, true);
    return p;
}

VerifyOutcome verify_add(std::uint32_t degree, VerifyMode mode, std::uint64_t trials,
                         std::uint64_t seed) {
    const std::uint32_t width = degree + 1;
    const Circuit circ = synth_add(degree);
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(circ.qubits(), 0);
    const auto check = [&](const Polynomial& a, const Polynomial& b) {
        write_poly_bits(state, 0, width, a);
        write_poly_bits(state, width, width, b);
        const auto res = circ.simulate(state);
        const bool ok = read_poly_bits(res, 0, width) == a &&
                        read_poly_bits(res, width, width) == (a ^ b);
        record(out, ok, "a=" + a.to_hex() + " b=" + b.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        require_exhaustible(width, 12);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << width); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << width); ++b)
                check(poly_from_u64(a), poly_from_u64(b));
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Polynomial a = random_polynomial(rng, width);
            const Polynomial b = random_polynomial(rng, width);
            check(a, b);
        }
    }
    return out;
}

VerifyOutcome verify_modshift(const Modulus& m, VerifyMode mode, std::uint64_t trials,
                              std::uint64_t seed) {
    const std::uint32_t n = m.degree();
    const Circuit circ = synth_modshift(m);
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(n, 0);
    const auto check = [&](const Polynomial& g) {
        write_poly_bits(state, 0, n, g);
        const auto res = circ.simulate(state);
        const Polynomial want = poly_mod(g.shifted(1), m);
        const Polynomial got = read_poly_bits(res, 0, n);
        record(out, got == want,
               "g=" + g.to_hex() + ": got " + got.to_hex() + ", want " + want.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        require_exhaustible(n, 20);
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) check(poly_from_u64(g));
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) check(random_polynomial(rng, n));
    }
    return out;
}

VerifyOutcome verify_constmult(const Polynomial& f, const Modulus& m, VerifyMode mode,
                               std::uint64_t trials, std::uint64_t seed) {
    const std::uint32_t n = m.degree();
    const Circuit circ = synth_constmult(f, m);
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(n, 0);
    const auto check = [&](const Polynomial& g) {
        write_poly_bits(state, 0, n, g);
        const auto res = circ.simulate(state);
        const Polynomial want = field_mul(f, g, m);
        const Polynomial got = read_poly_bits(res, 0, n);
        record(out, got == want,
               "g=" + g.to_hex() + ": got " + got.to_hex() + ", want " + want.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        require_exhaustible(n, 20);
        for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) check(poly_from_u64(g));
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) check(random_polynomial(rng, n));
    }
    return out;
}

VerifyOutcome verify_schoolbook(std::uint32_t n, const std::optional<Modulus>& m, VerifyMode mode,
                                std::uint64_t trials, std::uint64_t seed) {
    const Circuit circ = m ? synth_schoolbook(n, *m) : synth_schoolbook(n);
    const std::uint32_t c_width = m ? n : 2 * n - 1;
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(circ.qubits(), 0);
    const auto check = [&](const Polynomial& f, const Polynomial& g, const Polynomial& h) {
        std::fill(state.begin(), state.end(), 0);
        write_poly_bits(state, 0, n, f);
        write_poly_bits(state, n, n, g);
        write_poly_bits(state, 2 * n, c_width, h);
        const auto res = circ.simulate(state);
        const Polynomial want = m ? field_mul(f, g, *m) : (h ^ poly_mul(f, g));
        const Polynomial got = read_poly_bits(res, 2 * n, c_width);
        const bool ok = got == want && read_poly_bits(res, 0, n) == f &&
                        read_poly_bits(res, n, n) == g;
        record(out, ok,
               "f=" + f.to_hex() + " g=" + g.to_hex() + " h=" + h.to_hex() + ": got " +
                   got.to_hex() + ", want " + want.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        require_exhaustible(n, 12);
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
            for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g)
                check(poly_from_u64(f), poly_from_u64(g), Polynomial{});
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Polynomial f = random_polynomial(rng, n);
            const Polynomial g = random_polynomial(rng, n);
            // The modular variant is specified for an all-zero accumulator.
            const Polynomial h = m ? Polynomial{} : random_polynomial(rng, c_width);
            check(f, g, h);
        }
    }
    return out;
}

VerifyOutcome verify_kmult(std::uint32_t n, VerifyMode mode, std::uint64_t trials,
                           std::uint64_t seed) {
    const Circuit circ = synth_kmult(n);
    const std::uint32_t c_width = 2 * n - 1;
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(circ.qubits(), 0);
    const auto check = [&](const Polynomial& f, const Polynomial& g, const Polynomial& h) {
        write_poly_bits(state, 0, n, f);
        write_poly_bits(state, n, n, g);
        write_poly_bits(state, 2 * n, c_width, h);
        const auto res = circ.simulate(state);
        const Polynomial want = h ^ poly_mul(f, g);
        const Polynomial got = read_poly_bits(res, 2 * n, c_width);
        const bool ok = got == want && read_poly_bits(res, 0, n) == f &&
                        read_poly_bits(res, n, n) == g;
        record(out, ok,
               "f=" + f.to_hex() + " g=" + g.to_hex() + " h=" + h.to_hex() + ": got " +
                   got.to_hex() + ", want " + want.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        // Full sweep over the whole register, accumulator included.
        require_exhaustible(n, 6);
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
            for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g)
                for (std::uint64_t h = 0; h < (std::uint64_t{1} << c_width); ++h)
                    check(poly_from_u64(f), poly_from_u64(g), poly_from_u64(h));
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Polynomial f = random_polynomial(rng, n);
            const Polynomial g = random_polynomial(rng, n);
            const Polynomial h = random_polynomial(rng, c_width);
            check(f, g, h);
        }
    }
    return out;
}

VerifyOutcome verify_modmult(const Modulus& m, VerifyMode mode, std::uint64_t trials,
                             std::uint64_t seed) {
    const std::uint32_t n = m.degree();
    const Circuit circ = synth_modmult(m);
    VerifyOutcome out{mode, 0, 0, {}};
    std::vector<std::uint8_t> state(circ.qubits(), 0);
    const auto check = [&](const Polynomial& f, const Polynomial& g) {
        std::fill(state.begin(), state.end(), 0);
        write_poly_bits(state, 0, n, f);
        write_poly_bits(state, n, n, g);
        const auto res = circ.simulate(state);
        const Polynomial want = field_mul(f, g, m);
        const Polynomial got = read_poly_bits(res, 2 * n, n);
        const bool ok = got == want && read_poly_bits(res, 0, n) == f &&
                        read_poly_bits(res, n, n) == g;
        record(out, ok,
               "f=" + f.to_hex() + " g=" + g.to_hex() + ": got " + got.to_hex() + ", want " +
                   want.to_hex());
    };
    if (mode == VerifyMode::Exhaustive) {
        require_exhaustible(n, 12);
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
            for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g)
                check(poly_from_u64(f), poly_from_u64(g));
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Polynomial f = random_polynomial(rng, n);
            const Polynomial g = random_polynomial(rng, n);
            check(f, g);
        }
    }
    return out;
}

}  // namespace qmul
