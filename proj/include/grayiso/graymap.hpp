#pragma once

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "grayiso/ring.hpp"

namespace grayiso {

enum class MapFamily { Phi, PhiInverse, Psi, ComposedPhiInvPsi };

/// One of the supported isometries, together with its domain exponent.
/// Phi maps Z_4 -> F_2^2, PhiInverse maps even-length binary words to Z_4
/// words, Psi(k) maps Z_{2^k} -> F_2^{2^{k-1}}, and ComposedPhiInvPsi(k)
/// maps Z_{2^k} -> Z_4^{2^{k-2}}.
class MapKind {
public:
    static MapKind phi() { return MapKind(MapFamily::Phi, 2); }
    static MapKind phi_inverse() { return MapKind(MapFamily::PhiInverse, 1); }

    static MapKind psi(unsigned k) {
        if (k < 2 || k > Modulus::max_exponent)
            throw std::domain_error("psi requires exponent k in [2, 16]");
        return MapKind(MapFamily::Psi, k);
    }

    static MapKind composed(unsigned k) {
        if (k < 3 || k > Modulus::max_exponent)
            throw std::domain_error("the composed map requires exponent k in [3, 16]");
        return MapKind(MapFamily::ComposedPhiInvPsi, k);
    }

    MapFamily family() const noexcept { return family_; }
    unsigned exponent() const noexcept { return k_; }

    Modulus domain_modulus() const {
        switch (family_) {
            case MapFamily::Phi: return Modulus(4);
            case MapFamily::PhiInverse: return Modulus(2);
            case MapFamily::Psi:
            case MapFamily::ComposedPhiInvPsi: return Modulus::from_exponent(k_);
        }
        throw std::logic_error("unreachable");
    }

    Modulus image_modulus() const {
        switch (family_) {
            case MapFamily::Phi:
            case MapFamily::Psi: return Modulus(2);
            case MapFamily::PhiInverse:
            case MapFamily::ComposedPhiInvPsi: return Modulus(4);
        }
        throw std::logic_error("unreachable");
    }

    /// Output length of the word-level extension on an input of length n.
    std::size_t image_length(std::size_t n) const {
        switch (family_) {
            case MapFamily::Phi: return 2 * n;
            case MapFamily::PhiInverse:
                if (n % 2 != 0)
                    throw std::domain_error("phi-inv requires even input length");
                return n / 2;
            case MapFamily::Psi: return n << (k_ - 1);
            case MapFamily::ComposedPhiInvPsi: return n << (k_ - 2);
        }
        throw std::logic_error("unreachable");
    }

    /// Metric preserved on the domain / induced on the image.
    Metric source_metric() const {
        switch (family_) {
            case MapFamily::Phi: return Metric::Lee;
            case MapFamily::PhiInverse: return Metric::Hamming;
            case MapFamily::Psi:
            case MapFamily::ComposedPhiInvPsi: return Metric::Homogeneous;
        }
        throw std::logic_error("unreachable");
    }

    Metric target_metric() const {
        switch (family_) {
            case MapFamily::Phi:
            case MapFamily::Psi: return Metric::Hamming;
            case MapFamily::PhiInverse:
            case MapFamily::ComposedPhiInvPsi: return Metric::Lee;
        }
        throw std::logic_error("unreachable");
    }

    std::string name() const {
        switch (family_) {
            case MapFamily::Phi: return "phi";
            case MapFamily::PhiInverse: return "phi-inv";
            case MapFamily::Psi: return "psi";
            case MapFamily::ComposedPhiInvPsi: return "composed";
        }
        throw std::logic_error("unreachable");
    }

    friend bool operator==(const MapKind&, const MapKind&) = default;

private:
    MapKind(MapFamily family, unsigned k) : family_(family), k_(k) {}

    MapFamily family_;
    unsigned k_;
};

// ---------------------------------------------------------------------------
// The Gray map phi: Z_4 -> F_2^2 and its inverse.
// ---------------------------------------------------------------------------

namespace detail {

// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10
inline constexpr std::uint8_t phi_bits[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
// indexed by b0*2 + b1
inline constexpr std::uint32_t phi_inverse_table[4] = {0, 1, 3, 2};

}  // namespace detail

inline BinaryWord phi(std::uint32_t x) {
    if (x >= 4) throw std::domain_error("phi is defined on Z_4");
    return BinaryWord({detail::phi_bits[x][0], detail::phi_bits[x][1]});
}

/// Word-level phi: per-symbol images concatenated in input order, length n -> 2n.
inline BinaryWord phi(const RingWord& w) {
    if (w.modulus().value() != 4) throw std::domain_error("phi is defined on words over Z_4");
    std::vector<std::uint8_t> bits;
    bits.reserve(2 * w.size());
    for (std::uint32_t x : w.values()) {
        bits.push_back(detail::phi_bits[x][0]);
        bits.push_back(detail::phi_bits[x][1]);
    }
    return BinaryWord(std::move(bits));
}

inline std::uint32_t phi_inverse(std::uint8_t b0, std::uint8_t b1) {
    if (b0 > 1 || b1 > 1) throw std::domain_error("phi-inv takes bits");
    return detail::phi_inverse_table[b0 * 2 + b1];
}

/// Inverse of phi on all of F_2^{2n}, one Z_4 symbol per bit pair.
inline RingWord phi_inverse(const BinaryWord& b) {
    if (b.size() % 2 != 0)
        throw std::domain_error("phi-inv requires a binary word of even length");
    std::vector<std::uint32_t> vals;
    vals.reserve(b.size() / 2);
    for (std::size_t i = 0; i < b.size(); i += 2)
        vals.push_back(detail::phi_inverse_table[b[i] * 2 + b[i + 1]]);
    return RingWord(Modulus(4), std::move(vals));
}

// ---------------------------------------------------------------------------
// Affine boolean functions on F_2^vars and the generalized Gray map psi.
//
// Value listings fix the input enumeration order once and for all: input
// index j in [0, 2^vars) encodes y = (y_1, ..., y_vars) with y_i = bit i-1
// of j, so y_1 varies fastest. For vars = 2 the order is
// (0,0), (1,0), (0,1), (1,1).
// ---------------------------------------------------------------------------

/// Listing of y -> constant + <coeffs, y> over F_2^vars in the fixed order.
inline BinaryWord affine_value_listing(std::uint8_t constant, std::uint32_t coeffs,
                                       unsigned vars) {
    if (constant > 1) throw std::domain_error("affine constant must be 0 or 1");
    if (vars < 1 || vars > Modulus::max_exponent - 1)
        throw std::domain_error("affine listing requires vars in [1, 15]");
    if (coeffs >= (std::uint32_t{1} << vars))
        throw std::domain_error("affine coefficient mask out of range");
    const std::uint32_t points = std::uint32_t{1} << vars;
    std::vector<std::uint8_t> bits(points);
    for (std::uint32_t j = 0; j < points; ++j)
        bits[j] = static_cast<std::uint8_t>((constant + std::popcount(coeffs & j)) & 1);
    return BinaryWord(std::move(bits));
}

/// Carlet's generalized Gray map on a single symbol: u in Z_{2^k} with
/// 2-adic bits u_1..u_k maps to the listing of y -> u_k + sum_{i<k} u_i y_i,
/// a binary word of length 2^{k-1}.
inline BinaryWord psi(std::uint32_t u, unsigned k) {
    if (k < 2 || k > Modulus::max_exponent)
        throw std::domain_error("psi requires exponent k in [2, 16]");
    if (u >= (std::uint32_t{1} << k))
        throw std::domain_error("psi input out of range for Z_2^" + std::to_string(k));
    const std::uint32_t coeffs = u & ((std::uint32_t{1} << (k - 1)) - 1);
    const std::uint8_t constant = static_cast<std::uint8_t>((u >> (k - 1)) & 1);
    return affine_value_listing(constant, coeffs, k - 1);
}

/// Word-level psi, length n -> n * 2^{k-1}.
inline BinaryWord psi(const RingWord& w) {
    const unsigned k = w.modulus().exponent();
    if (k < 2) throw std::domain_error("psi requires modulus at least 4");
    std::vector<std::uint8_t> bits;
    bits.reserve(w.size() << (k - 1));
    for (std::uint32_t u : w.values()) {
        const BinaryWord img = psi(u, k);
        bits.insert(bits.end(), img.bits().begin(), img.bits().end());
    }
    return BinaryWord(std::move(bits));
}

// ---------------------------------------------------------------------------
// The composed isometry phi^-1 . psi.
// ---------------------------------------------------------------------------

/// Closed form on Z_8: u with bits (u_1, u_2, u_3) maps to the Z_4 pair
/// (u_1 + 2 u_3, u_1 + 2 u_3 + 2 u_2).
inline RingWord composed_map(std::uint32_t u) {
    if (u >= 8) throw std::domain_error("the composed map is defined on Z_8");
    const std::uint32_t u1 = u & 1;
    const std::uint32_t u2 = (u >> 1) & 1;
    const std::uint32_t u3 = (u >> 2) & 1;
    const std::uint32_t first = (u1 + 2 * u3) % 4;
    const std::uint32_t second = (u1 + 2 * u3 + 2 * u2) % 4;
    return RingWord(Modulus(4), {first, second});
}

/// Word-level composed map on Z_8 words, length n -> 2n.
inline RingWord composed_map(const RingWord& w) {
    if (w.modulus().value() != 8)
        throw std::domain_error("the composed map is defined on words over Z_8");
    std::vector<std::uint32_t> vals;
    vals.reserve(2 * w.size());
    for (std::uint32_t u : w.values()) {
        const RingWord pair = composed_map(u);
        vals.push_back(pair[0]);
        vals.push_back(pair[1]);
    }
    return RingWord(Modulus(4), std::move(vals));
}

/// phi^-1 . psi on Z_{2^k} for any k >= 3, one Z_4 word of length 2^{k-2}
/// per symbol. Agrees with composed_map at k = 3.
inline RingWord composed_map_general(std::uint32_t u, unsigned k) {
    if (k < 3 || k > Modulus::max_exponent)
        throw std::domain_error("the composed map requires exponent k in [3, 16]");
    return phi_inverse(psi(u, k));
}

inline RingWord composed_map_general(const RingWord& w) {
    const unsigned k = w.modulus().exponent();
    if (k < 3) throw std::domain_error("the composed map requires modulus at least 8");
    std::vector<std::uint32_t> vals;
    vals.reserve(w.size() << (k - 2));
    for (std::uint32_t u : w.values()) {
        const RingWord img = composed_map_general(u, k);
        vals.insert(vals.end(), img.values().begin(), img.values().end());
    }
    return RingWord(Modulus(4), std::move(vals));
}

// ---------------------------------------------------------------------------
// First-order Reed-Muller codes.
// ---------------------------------------------------------------------------

/// All 2^{m+1} value listings of affine boolean functions on F_2^m, sorted.
/// RM(1, k-1) is exactly the image of psi(., k).
inline std::vector<BinaryWord> rm1_codewords(unsigned m) {
    if (m < 1 || m > Modulus::max_exponent - 1)
        throw std::domain_error("rm1 requires m in [1, 15]");
    std::vector<BinaryWord> words;
    words.reserve(std::size_t{2} << m);
    for (std::uint8_t constant = 0; constant <= 1; ++constant)
        for (std::uint32_t coeffs = 0; coeffs < (std::uint32_t{1} << m); ++coeffs)
            words.push_back(affine_value_listing(constant, coeffs, m));
    std::sort(words.begin(), words.end());
    return words;
}

// ---------------------------------------------------------------------------
// Uniform word-level application; binary images come back as words over Z_2.
// ---------------------------------------------------------------------------

inline RingWord apply_map(const MapKind& kind, const RingWord& w) {
    if (w.modulus() != kind.domain_modulus())
        throw std::domain_error("word modulus does not match the map domain");
    switch (kind.family()) {
        case MapFamily::Phi: return to_ring_word(phi(w));
        case MapFamily::PhiInverse: return phi_inverse(to_binary_word(w));
        case MapFamily::Psi: return to_ring_word(psi(w));
        case MapFamily::ComposedPhiInvPsi:
            return kind.exponent() == 3 ? composed_map(w) : composed_map_general(w);
    }
    throw std::logic_error("unreachable");
}

}  // namespace grayiso
