#include "qmul/synth.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qmul {

namespace {

std::uint32_t split_point(std::uint32_t n) { return (n + 1) / 2; }

std::uint32_t high_slice(std::uint32_t k, std::uint32_t n) {
    return 2 * n - 1 > k ? 2 * n - 1 - k : 0;
}

void kmult_rec(Circuit& c, std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t co,
               const SynthOptions& opts);

// Appends C += (1+x^k) * f * g for f in A[a..a+n), g in B[b..b+n) and the
// accumulator in C[co..co+k+2n-1). Folding the middle slice into the low one
// around a single product placed at offset k lands both fg and x^k*fg.
void mult1x_rec(Circuit& c, std::uint32_t k, std::uint32_t n, std::uint32_t a, std::uint32_t b,
                std::uint32_t co, const SynthOptions& opts) {
    if (n == 1) {
        c.append(Gate::cnot(co + k, co));
        c.append(Gate::toffoli(a, b, co + k));
        c.append(Gate::cnot(co + k, co));
        return;
    }
    const std::uint32_t ell = high_slice(k, n);
    for (std::uint32_t i = 0; i < ell; ++i) c.append(Gate::cnot(co + 2 * k + i, co + k + i));
    for (std::uint32_t i = 0; i < k; ++i) c.append(Gate::cnot(co + k + i, co + i));
    kmult_rec(c, n, a, b, co + k, opts);
    for (std::uint32_t i = 0; i < k; ++i) c.append(Gate::cnot(co + k + i, co + i));
    for (std::uint32_t i = 0; i < ell; ++i) c.append(Gate::cnot(co + 2 * k + i, co + k + i));
}

// Appends C += f * g with the accumulator in C[co..co+2n-1). A and B are
// bit-identical before and after: the two unsplitting passes undo the two
// splitting passes around the middle product.
void kmult_rec(Circuit& c, std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t co,
               const SynthOptions& opts) {
    if (n == 1) {
        c.append(Gate::toffoli(a, b, co));
        return;
    }
    if (opts.schoolbook_cutoff != 0 && n <= opts.schoolbook_cutoff) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                c.append(Gate::toffoli(a + i, b + j, co + i + j));
        return;
    }
    const std::uint32_t k = split_point(n);
    mult1x_rec(c, k, k, a, b, co, opts);
    mult1x_rec(c, k, n - k, a + k, b + k, co + k, opts);
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(a + k + i, a + i));
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(b + k + i, b + i));
    kmult_rec(c, k, a, b, co + k, opts);
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(b + k + i, b + i));
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(a + k + i, a + i));
}

struct ConstmultPlan {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> gates;  // (control, target)
    std::vector<std::uint32_t> p_inv;
};

ConstmultPlan constmult_plan(const Polynomial& f, const Modulus& m) {
    LupDecomposition lup = lup_decompose(constmult_matrix(f, m));
    const std::size_t n = lup.upper.size();
    ConstmultPlan plan;
    // Upper factor first, top row first; then lower factor, bottom row up.
    // That ordering resolves control/target conflicts: a row accumulates its
    // own value before any later row reads it.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lup.upper.at(i, j))
                plan.gates.emplace_back(static_cast<std::uint32_t>(j),
                                        static_cast<std::uint32_t>(i));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i; j-- > 0;)
            if (lup.lower.at(i, j))
                plan.gates.emplace_back(static_cast<std::uint32_t>(j),
                                        static_cast<std::uint32_t>(i));
    plan.p_inv = std::move(lup.p_inv);
    return plan;
}

}  // namespace

RegisterLayout RegisterLayout::for_modmult(std::uint32_t n) {
    RegisterLayout lay;
    lay.n = n;
    lay.k = split_point(n);
    lay.ell = high_slice(lay.k, n);
    lay.a_off = 0;
    lay.b_off = n;
    lay.c_off = 2 * n;
    lay.c_size = n;
    return lay;
}

RegisterLayout RegisterLayout::for_kmult(std::uint32_t n) {
    RegisterLayout lay;
    lay.n = n;
    lay.k = n > 1 ? split_point(n) : 0;
    lay.ell = n > 1 ? high_slice(lay.k, n) : 1;
    lay.a_off = 0;
    lay.b_off = n;
    lay.c_off = 2 * n;
    lay.c_size = 2 * n - 1;
    return lay;
}

RegisterLayout RegisterLayout::for_mult1x(std::uint32_t k, std::uint32_t n) {
    RegisterLayout lay;
    lay.n = n;
    lay.k = k;
    lay.ell = high_slice(k, n);
    lay.a_off = 0;
    lay.b_off = n;
    lay.c_off = 2 * n;
    lay.c_size = k + 2 * n - 1;
    return lay;
}

Circuit synth_add(std::uint32_t degree) {
    const std::uint32_t width = degree + 1;
    Circuit c(2 * width);
    for (std::uint32_t i = 0; i < width; ++i) c.append(Gate::cnot(i, width + i));
    return c;
}

void emit_modshift(Circuit& c, const Modulus& m, std::uint32_t offset, bool inverse) {
    const std::uint32_t n = m.degree();
    const auto& exps = m.exponents();
    std::vector<std::uint32_t> sigma = identity_perm(c.qubits());
    if (!inverse) {
        // Cyclic relabel: the coefficient of x^i moves to slot i+1 mod n, then
        // the new constant-term wire reduces the overflow through m's middle
        // terms.
        for (std::uint32_t j = 0; j < n; ++j) sigma[offset + j] = offset + (j + n - 1) % n;
        c.relabel(sigma);
        for (std::size_t t = 1; t + 1 < exps.size(); ++t)
            c.append(Gate::cnot(offset, offset + exps[t]));
    } else {
        for (std::size_t t = exps.size() - 1; t-- > 1;)
            c.append(Gate::cnot(offset, offset + exps[t]));
        for (std::uint32_t j = 0; j < n; ++j) sigma[offset + j] = offset + (j + 1) % n;
        c.relabel(sigma);
    }
}

Circuit synth_modshift(const Modulus& m) {
    Circuit c(m.degree());
    emit_modshift(c, m, 0);
    return c;
}

void emit_constmult(Circuit& c, const Polynomial& f, const Modulus& m, std::uint32_t offset,
                    bool inverse) {
    const std::uint32_t n = m.degree();
    const ConstmultPlan plan = constmult_plan(f, m);

    std::vector<std::uint32_t> sigma = identity_perm(c.qubits());
    if (!inverse) {
        for (const auto& [ctrl, tgt] : plan.gates)
            c.append(Gate::cnot(offset + ctrl, offset + tgt));
        for (std::uint32_t i = 0; i < n; ++i) sigma[offset + i] = offset + plan.p_inv[i];
        c.relabel(sigma);
    } else {
        const std::vector<std::uint32_t> p = inverse_perm(plan.p_inv);
        for (std::uint32_t i = 0; i < n; ++i) sigma[offset + i] = offset + p[i];
        c.relabel(sigma);
        for (auto it = plan.gates.rbegin(); it != plan.gates.rend(); ++it)
            c.append(Gate::cnot(offset + it->first, offset + it->second));
    }
}

Circuit synth_constmult(const Polynomial& f, const Modulus& m) {
    Circuit c(m.degree());
    emit_constmult(c, f, m, 0);
    return c;
}

Circuit synth_schoolbook(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("schoolbook requires n >= 1");
    Circuit c(2 * n + 2 * n - 1);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            c.append(Gate::toffoli(i, n + j, 2 * n + i + j));
    return c;
}

Circuit synth_schoolbook(std::uint32_t n, const Modulus& m) {
    if (n < 1) throw std::invalid_argument("schoolbook requires n >= 1");
    if (m.degree() != n)
        throw std::invalid_argument("schoolbook: modulus degree must equal operand size");
    Circuit c(3 * n);
    // Horner order: accumulate the top coefficient block of f first, then
    // shift the accumulator and fold in the next block. The shifts multiply
    // the whole accumulator by x, so C ends as x^(n-1)*C_in + f*g mod m;
    // starting from an all-zero C this is the field product.
    for (std::uint32_t i = n; i-- > 0;) {
        if (i != n - 1) emit_modshift(c, m, 2 * n);
        for (std::uint32_t j = 0; j < n; ++j)
            c.append(Gate::toffoli(i, n + j, 2 * n + j));
    }
    return c;
}

void emit_mult1xk(Circuit& c, const RegisterLayout& lay, const SynthOptions& opts) {
    if (lay.n < 1 || lay.n > lay.k)
        throw std::invalid_argument("mult1xk requires 1 <= n <= k");
    if (lay.n > 1 && lay.k > 2 * lay.n - 1)
        throw std::invalid_argument("mult1xk: k > 2n-1 does not fit a k+2n-1 accumulator");
    mult1x_rec(c, lay.k, lay.n, lay.a_off, lay.b_off, lay.c_off, opts);
}

Circuit synth_mult1xk(std::uint32_t k, std::uint32_t n, const SynthOptions& opts) {
    const RegisterLayout lay = RegisterLayout::for_mult1x(k, n);
    Circuit c(2 * n + lay.c_size);
    emit_mult1xk(c, lay, opts);
    return c;
}

void emit_kmult(Circuit& c, const RegisterLayout& lay, const SynthOptions& opts) {
    if (lay.n < 1) throw std::invalid_argument("kmult requires n >= 1");
    if (lay.c_size < 2 * lay.n - 1)
        throw std::invalid_argument("kmult accumulator needs 2n-1 wires");
    kmult_rec(c, lay.n, lay.a_off, lay.b_off, lay.c_off, opts);
}

Circuit synth_kmult(std::uint32_t n, const SynthOptions& opts) {
    const RegisterLayout lay = RegisterLayout::for_kmult(n);
    Circuit c(2 * n + lay.c_size);
    emit_kmult(c, lay, opts);
    return c;
}

Circuit synth_modmult(const Modulus& m, const SynthOptions& opts) {
    const std::uint32_t n = m.degree();
    if (n < 2)
        throw std::invalid_argument(
            "modmult requires degree >= 2; a degree-1 field multiplies with a single Toffoli");
    const std::uint32_t k = split_point(n);
    const Polynomial one_xk = Polynomial::one() ^ Polynomial::x_pow(k);

    const RegisterLayout lay = RegisterLayout::for_modmult(n);
    Circuit c(3 * n);
    const std::uint32_t a = lay.a_off, b = lay.b_off, co = lay.c_off;

    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(a + k + i, a + i));
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(b + k + i, b + i));
    kmult_rec(c, k, a, b, co, opts);  // C = (f0+f1)(g0+g1)
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(b + k + i, b + i));
    for (std::uint32_t i = 0; i < n - k; ++i) c.append(Gate::cnot(a + k + i, a + i));
    emit_constmult(c, one_xk, m, co, /*inverse=*/true);
    kmult_rec(c, n - k, a + k, b + k, co, opts);  // C += f1*g1
    for (std::uint32_t i = 0; i < k; ++i) emit_modshift(c, m, co);
    kmult_rec(c, k, a, b, co, opts);  // C += f0*g0
    emit_constmult(c, one_xk, m, co, /*inverse=*/false);
    return c;
}

}  // namespace qmul
