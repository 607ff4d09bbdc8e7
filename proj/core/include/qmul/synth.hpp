// Circuit builders for ancilla-free binary-field multiplication:
//
//   synth_add        b += a, coefficient-wise CNOTs
//   synth_modshift   g -> x*g mod m(x), one cyclic relabel plus weight-2 CNOTs
//   synth_constmult  g -> f*g mod m(x) from the LUP decomposition of the map
//   synth_schoolbook C += f*g (plain) or Horner-interleaved modular variant
//   synth_mult1xk    C += (1 + x^k) * f * g over GF(2)[x]
//   synth_kmult      C += f*g by Karatsuba splitting, inputs restored
//   synth_modmult    C = f*g mod m(x) on exactly 3n wires, inputs restored
//
// Karatsuba recombination used throughout, with k = ceil(n/2):
//   f*g = (1+x^k)*a + x^k*c + x^k*(1+x^k)*b
// for a = f0*g0, b = f1*g1, c = (f0+f1)*(g0+g1) on the split f = f0 + f1*x^k.
//
// Every builder emits gates in a fixed order, so gate counts, greedy depth
// and serialized netlists are reproducible run to run.

#pragma once

#include <cstdint>

#include "qmul/circuit.hpp"
#include "qmul/gf2linalg.hpp"
#include "qmul/gf2poly.hpp"

namespace qmul {

// Wire regions of one multiplier instance: A and B hold the n-coefficient
// inputs, C the accumulator. The three regions are pairwise disjoint.
struct RegisterLayout {
    std::uint32_t n = 0;      // input polynomial size (coefficient count)
    std::uint32_t k = 0;      // split point, ceil(n/2) (0 in the n = 1 base case)
    std::uint32_t ell = 0;    // max(0, 2n - 1 - k), size of the high slice
    std::uint32_t a_off = 0;
    std::uint32_t b_off = 0;
    std::uint32_t c_off = 0;
    std::uint32_t c_size = 0;

    // 3n wires total; C holds exactly n wires.
    static RegisterLayout for_modmult(std::uint32_t n);
    // C holds 2n-1 wires.
    static RegisterLayout for_kmult(std::uint32_t n);
    // C holds k+2n-1 wires; the n = 1 base case touches offsets 0 and k only.
    static RegisterLayout for_mult1x(std::uint32_t k, std::uint32_t n);
};

struct SynthOptions {
    // When nonzero, Karatsuba recursion switches to schoolbook Toffoli blocks
    // once the operand size drops to this value or below. Off by default.
    std::uint32_t schoolbook_cutoff = 0;
};

Circuit synth_add(std::uint32_t degree);
Circuit synth_modshift(const Modulus& m);
Circuit synth_constmult(const Polynomial& f, const Modulus& m);
Circuit synth_schoolbook(std::uint32_t n);
Circuit synth_schoolbook(std::uint32_t n, const Modulus& m);
Circuit synth_mult1xk(std::uint32_t k, std::uint32_t n, const SynthOptions& opts = {});
Circuit synth_kmult(std::uint32_t n, const SynthOptions& opts = {});
Circuit synth_modmult(const Modulus& m, const SynthOptions& opts = {});

// Fragment emitters appending into an existing circuit at the given offsets.
void emit_modshift(Circuit& c, const Modulus& m, std::uint32_t offset, bool inverse = false);
void emit_constmult(Circuit& c, const Polynomial& f, const Modulus& m, std::uint32_t offset,
                    bool inverse = false);
void emit_mult1xk(Circuit& c, const RegisterLayout& lay, const SynthOptions& opts = {});
void emit_kmult(Circuit& c, const RegisterLayout& lay, const SynthOptions& opts = {});

}  // namespace qmul
