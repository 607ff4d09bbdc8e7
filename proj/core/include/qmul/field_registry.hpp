// Built-in catalogue of irreducible field polynomials commonly used for
// binary-field arithmetic (low-weight trinomials/pentanomials plus a few
// deliberately heavy alternatives), together with reference gate counts for
// the table reproduction command.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace qmul {

struct ModulusInfo {
    unsigned degree;
    std::string_view exponents;  // "163,7,6,3,0"
    std::string_view source;     // provenance tag of the polynomial choice
    // Reference CNOT count / greedy depth for multiplication by 1 + x^(ceil(n/2)).
    std::uint64_t ref_constmult_cnot;
    std::uint64_t ref_constmult_depth;
    bool preferred;  // lowest-CNOT choice for its degree
};

struct MultReference {
    unsigned degree;
    std::uint64_t schoolbook_tof;
    std::uint64_t tof;
    std::uint64_t cnot;
    std::uint64_t depth;
};

std::span<const ModulusInfo> known_moduli();
// Preferred entry for a degree, if the registry has one.
const ModulusInfo* find_modulus(unsigned degree);

// Reference full-multiplier gate counts, keyed by degree.
std::span<const MultReference> mult_references();
const MultReference* find_mult_reference(unsigned degree);

}  // namespace qmul
