#pragma once

// Reduction of integer-model polynomials modulo word-size primes that split
// the coefficient field, and Chinese remaindering back.

#include "orbcol/detail/nmod.hpp"
#include "orbcol/detail/zpoly.hpp"
#include "orbcol/field.hpp"

#include <array>
#include <optional>

namespace orbcol::detail {

struct PrimeImage {
    Montgomery mont;
    std::array<u64, 2> roots{};  // images of t (Montgomery form), quadratic fields only
    int embeddings = 1;
};

/// Reduction data for the k-th prime, or nullopt if the prime does not split
/// the field into distinct linear factors.
std::optional<PrimeImage> prime_image(const Field& field, std::size_t k);

/// Image of sum (u_i + v_i t) x^i under embedding e.
NPoly reduce_image(const PrimeImage& img, int e, const ZVec& u, const ZVec& v);

/// Recovers (u, v) residues (standard form) from the per-embedding images
/// (Montgomery form) of one coefficient.
void recover_components(const PrimeImage& img, u64 h1, u64 h2, u64& u, u64& v);

/// Incremental Chinese remaindering of integer vectors.
struct CrtAccumulator {
    Integer modulus = 0;
    ZVec values;  // in [0, modulus)

    /// Returns true if every value was already congruent to its residue.
    bool add(const std::vector<u64>& residues, u64 p);
    /// Representatives in (-modulus/2, modulus/2].
    ZVec symmetric() const;
};

/// r/s = a mod m with |r| <= bound_num and 0 < s <= bound_den.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m, const Integer& bound_num,
                                             const Integer& bound_den);

}  // namespace orbcol::detail
