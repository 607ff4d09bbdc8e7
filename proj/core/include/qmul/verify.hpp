// Oracle-based checking of synthesized circuits: simulate the netlist on
// concrete inputs and compare the result against the classical polynomial
// arithmetic, exhaustively or on seeded random samples.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qmul/circuit.hpp"
#include "qmul/gf2poly.hpp"
#include "qmul/synth.hpp"

namespace qmul {

enum class VerifyMode { Exhaustive, Random };

struct VerifyOutcome {
    VerifyMode mode = VerifyMode::Random;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string counterexample;  // first mismatch, human readable; empty when clean
};

// Uniform polynomial with the given coefficient count, drawn from the raw
// engine words so results are identical across platforms.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t bits);

void write_poly_bits(std::vector<std::uint8_t>& state, std::uint32_t offset, std::uint32_t width,
                     const Polynomial& p);
Polynomial read_poly_bits(std::span<const std::uint8_t> state, std::uint32_t offset,
                          std::uint32_t width);

VerifyOutcome verify_add(std::uint32_t degree, VerifyMode mode, std::uint64_t trials,
                         std::uint64_t seed);
VerifyOutcome verify_modshift(const Modulus& m, VerifyMode mode, std::uint64_t trials,
                              std::uint64_t seed);
VerifyOutcome verify_constmult(const Polynomial& f, const Modulus& m, VerifyMode mode,
                               std::uint64_t trials, std::uint64_t seed);
VerifyOutcome verify_schoolbook(std::uint32_t n, const std::optional<Modulus>& m, VerifyMode mode,
                                std::uint64_t trials, std::uint64_t seed);
VerifyOutcome verify_kmult(std::uint32_t n, VerifyMode mode, std::uint64_t trials,
                           std::uint64_t seed);
VerifyOutcome verify_modmult(const Modulus& m, VerifyMode mode, std::uint64_t trials,
                             std::uint64_t seed);

}  // namespace qmul
