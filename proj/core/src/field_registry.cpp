#include "qmul/field_registry.hpp"

#include <array>

namespace qmul {

namespace {

// ref_constmult_* values of 0 mean "no reference available".
constexpr std::array<ModulusInfo, 17> kModuli{{
    {2, "2,1,0", "builtin", 0, 0, true},
    {4, "4,1,0", "hehcc", 5, 4, true},
    {8, "8,4,3,1,0", "hehcc", 20, 14, true},
    {16, "16,5,3,1,0", "hehcc", 47, 30, true},
    {32, "32,7,3,2,0", "hehcc", 133, 93, true},
    {64, "64,4,3,1,0", "hehcc", 264, 182, true},
    {127, "127,1,0", "hehcc", 396, 293, true},
    {128, "128,7,2,1,0", "hehcc", 626, 443, true},
    {163, "163,7,6,3,0", "fips186", 740, 975, true},
    {163, "163,89,74,15,0", "highweight", 1885, 1646, false},
    {233, "233,74,0", "fips186", 3319, 2976, true},
    {256, "256,10,5,2,0", "hehcc", 1401, 1030, true},
    {283, "283,12,7,5,0", "fips186", 2117, 1700, true},
    {283, "283,160,123,37,0", "highweight", 6785, 6368, false},
    {571, "571,10,5,2,0", "fips186", 4027, 3177, true},
    {571, "571,353,218,135,0", "highweight", 33182, 32331, false},
    {1024, "1024,19,6,1,0", "seroussi", 8147, 6624, true},
}};

constexpr std::array<MultReference, 14> kMultRefs{{
    {2, 4, 3, 9, 9},
    {4, 16, 9, 44, 32},
    {8, 64, 27, 200, 124},
    {16, 256, 81, 678, 365},
    {32, 1024, 243, 2238, 1110},
    {64, 4096, 729, 6896, 3129},
    {127, 16129, 2185, 20632, 8769},
    {128, 16384, 2187, 21272, 9142},
    {163, 26569, 4387, 37168, 17906},
    {233, 54289, 6323, 63655, 29530},
    {256, 65536, 6561, 64706, 26725},
    {283, 80089, 10273, 89620, 41548},
    {571, 326041, 31171, 270940, 121821},
    {1024, 1048576, 59049, 591942, 234053},
}};

}  // namespace

std::span<const ModulusInfo> known_moduli() { return kModuli; }

const ModulusInfo* find_modulus(unsigned degree) {
    for (const auto& info : kModuli)
        if (info.degree == degree && info.preferred) return &info;
    return nullptr;
}

std::span<const MultReference> mult_references() { return kMultRefs; }

const MultReference* find_mult_reference(unsigned degree) {
    for (const auto& ref : kMultRefs)
        if (ref.degree == degree) return &ref;
    return nullptr;
}

}  // namespace qmul
