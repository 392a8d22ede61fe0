#pragma once

#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grayiso {

/// Power-of-two modulus m = 2^k with 1 <= k <= 16.
class Modulus {
public:
    static constexpr unsigned max_exponent = 16;

    explicit Modulus(std::uint32_t m) {
        if (m < 2 || m > (std::uint32_t{1} << max_exponent) || !std::has_single_bit(m)) {
            throw std::domain_error("modulus must be a power of two in [2, 2^16], got " +
                                    std::to_string(m));
        }
        exp_ = static_cast<unsigned>(std::countr_zero(m));
    }

    static Modulus from_exponent(unsigned k) {
        if (k < 1 || k > max_exponent) {
            throw std::domain_error("modulus exponent must lie in [1, 16], got " +
                                    std::to_string(k));
        }
        return Modulus(std::uint32_t{1} << k);
    }

    std::uint32_t value() const noexcept { return std::uint32_t{1} << exp_; }
    unsigned exponent() const noexcept { return exp_; }

    friend bool operator==(const Modulus&, const Modulus&) = default;
    friend std::strong_ordering operator<=>(const Modulus&, const Modulus&) = default;

private:
    unsigned exp_;
};

/// Word over F2. Components are 0 or 1.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t b : bits_) {
            if (b > 1) throw std::domain_error("binary word component must be 0 or 1");
        }
    }

    static BinaryWord zeros(std::size_t n) { return BinaryWord(std::vector<std::uint8_t>(n, 0)); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend std::strong_ordering operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Word over Z_m, m = 2^k. Residues are kept canonical in [0, m);
/// construction rejects out-of-range components, arithmetic reduces.
class RingWord {
public:
    RingWord(Modulus m, std::vector<std::uint32_t> values) : mod_(m), vals_(std::move(values)) {
        for (std::uint32_t v : vals_) {
            if (v >= mod_.value()) {
                throw std::domain_error("residue " + std::to_string(v) +
                                        " out of range for modulus " +
                                        std::to_string(mod_.value()));
            }
        }
    }

    static RingWord zeros(Modulus m, std::size_t n) {
        return RingWord(m, std::vector<std::uint32_t>(n, 0));
    }

    Modulus modulus() const noexcept { return mod_; }
    std::size_t size() const noexcept { return vals_.size(); }
    bool empty() const noexcept { return vals_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return vals_[i]; }
    const std::vector<std::uint32_t>& values() const noexcept { return vals_; }

    bool is_zero() const noexcept {
        for (std::uint32_t v : vals_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const RingWord&, const RingWord&) = default;

    // Lexicographic by residue sequence; modulus breaks ties between
    // equal sequences over different rings.
    friend std::strong_ordering operator<=>(const RingWord& a, const RingWord& b) {
        if (auto c = a.vals_ <=> b.vals_; c != 0) return c;
        return a.mod_ <=> b.mod_;
    }

private:
    Modulus mod_;
    std::vector<std::uint32_t> vals_;
};

namespace detail {

inline void require_compatible(const RingWord& a, const RingWord& b) {
    if (a.modulus() != b.modulus())
        throw std::domain_error("ring word moduli differ");
    if (a.size() != b.size())
        throw std::domain_error("ring word lengths differ");
}

}  // namespace detail

inline RingWord operator+(const RingWord& a, const RingWord& b) {
    detail::require_compatible(a, b);
    const std::uint32_t m = a.modulus().value();
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % m;
    return RingWord(a.modulus(), std::move(out));
}

inline RingWord operator-(const RingWord& a) {
    const std::uint32_t m = a.modulus().value();
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (m - a[i]) % m;
    return RingWord(a.modulus(), std::move(out));
}

inline RingWord operator-(const RingWord& a, const RingWord& b) {
    detail::require_compatible(a, b);
    const std::uint32_t m = a.modulus().value();
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + m - b[i]) % m;
    return RingWord(a.modulus(), std::move(out));
}

inline RingWord operator*(std::uint32_t scalar, const RingWord& a) {
    const std::uint32_t m = a.modulus().value();
    const std::uint64_t s = scalar % m;
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint32_t>((s * a[i]) % m);
    return RingWord(a.modulus(), std::move(out));
}

inline RingWord operator*(const RingWord& a, std::uint32_t scalar) { return scalar * a; }

/// Concatenation. The empty word acts as the identity.
inline RingWord concat(const RingWord& a, const RingWord& b) {
    if (a.modulus() != b.modulus()) throw std::domain_error("ring word moduli differ");
    std::vector<std::uint32_t> out = a.values();
    out.insert(out.end(), b.values().begin(), b.values().end());
    return RingWord(a.modulus(), std::move(out));
}

inline BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
    std::vector<std::uint8_t> out = a.bits();
    out.insert(out.end(), b.bits().begin(), b.bits().end());
    return BinaryWord(std::move(out));
}

/// A binary word viewed as a word over Z_2.
inline RingWord to_ring_word(const BinaryWord& b) {
    return RingWord(Modulus(2), std::vector<std::uint32_t>(b.bits().begin(), b.bits().end()));
}

/// A word over Z_2 viewed as a binary word.
inline BinaryWord to_binary_word(const RingWord& w) {
    if (w.modulus().value() != 2)
        throw std::domain_error("only words over Z_2 convert to binary words");
    return BinaryWord(std::vector<std::uint8_t>(w.values().begin(), w.values().end()));
}

/// 2-adic expansion u = sum_i 2^i * bit(i). Bits stored least significant first.
class BitExpansion {
public:
    BitExpansion(std::uint32_t u, unsigned k) {
        if (k < 1 || k > Modulus::max_exponent)
            throw std::domain_error("expansion exponent must lie in [1, 16]");
        if (u >= (std::uint32_t{1} << k))
            throw std::domain_error("value " + std::to_string(u) +
                                    " out of range for 2^" + std::to_string(k));
        bits_.resize(k);
        for (unsigned i = 0; i < k; ++i) bits_[i] = static_cast<std::uint8_t>((u >> i) & 1);
    }

    unsigned exponent() const noexcept { return static_cast<unsigned>(bits_.size()); }
    std::uint8_t bit(unsigned i) const { return bits_.at(i); }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::uint32_t value() const noexcept {
        std::uint32_t u = 0;
        for (unsigned i = 0; i < bits_.size(); ++i) u |= std::uint32_t{bits_[i]} << i;
        return u;
    }

    friend bool operator==(const BitExpansion&, const BitExpansion&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline BitExpansion two_adic_expansion(std::uint32_t u, unsigned k) { return BitExpansion(u, k); }

// ---------------------------------------------------------------------------
// Weights. Lee weight is defined on Z_4 only; the homogeneous weight on any
// Z_{2^k} is 0 at zero, 2^{k-1} at the generator 2^{k-1} of the minimal
// ideal, and 2^{k-2} elsewhere. Word weights sum over components.
// ---------------------------------------------------------------------------

enum class Metric { Hamming, Lee, Homogeneous };

inline std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::Hamming: return "hamming";
        case Metric::Lee: return "lee";
        case Metric::Homogeneous: return "homogeneous";
    }
    throw std::logic_error("unreachable");
}

/// Lee metric needs modulus 4; the others apply to every power-of-two modulus.
inline bool metric_valid(Metric metric, Modulus m) {
    return metric != Metric::Lee || m.value() == 4;
}

inline std::size_t hamming_weight(const BinaryWord& w) {
    std::size_t count = 0;
    for (std::uint8_t b : w.bits()) count += (b != 0);
    return count;
}

inline std::size_t hamming_weight(const RingWord& w) {
    std::size_t count = 0;
    for (std::uint32_t v : w.values()) count += (v != 0);
    return count;
}

inline std::size_t lee_weight(std::uint32_t x) {
    if (x >= 4) throw std::domain_error("Lee weight is defined on Z_4 only");
    return std::min<std::size_t>(x, 4 - x);
}

inline std::size_t lee_weight(const RingWord& w) {
    if (w.modulus().value() != 4)
        throw std::domain_error("Lee weight is defined on words over Z_4 only");
    std::size_t total = 0;
    for (std::uint32_t v : w.values()) total += lee_weight(v);
    return total;
}

inline std::size_t homogeneous_weight(std::uint32_t x, Modulus m) {
    if (x >= m.value())
        throw std::domain_error("residue out of range for homogeneous weight");
    const std::uint32_t half = m.value() / 2;
    if (x == 0) return 0;
    if (x == half) return half;
    return half / 2;
}

inline std::size_t homogeneous_weight(const RingWord& w) {
    std::size_t total = 0;
    for (std::uint32_t v : w.values()) total += homogeneous_weight(v, w.modulus());
    return total;
}

inline std::size_t symbol_weight(std::uint32_t x, Modulus m, Metric metric) {
    switch (metric) {
        case Metric::Hamming:
            if (x >= m.value()) throw std::domain_error("residue out of range");
            return x != 0 ? 1 : 0;
        case Metric::Lee:
            if (m.value() != 4) throw std::domain_error("Lee weight is defined on Z_4 only");
            return lee_weight(x);
        case Metric::Homogeneous:
            return homogeneous_weight(x, m);
    }
    throw std::logic_error("unreachable");
}

inline std::size_t word_weight(const RingWord& w, Metric metric) {
    switch (metric) {
        case Metric::Hamming: return hamming_weight(w);
        case Metric::Lee: return lee_weight(w);
        case Metric::Homogeneous: return homogeneous_weight(w);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Text forms. Ring words are comma-separated residues ("6,6,6"); binary
// words are contiguous bit strings ("0110").
// ---------------------------------------------------------------------------

inline std::string to_string(const RingWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline std::string to_string(const BinaryWord& w) {
    std::string out;
    out.reserve(w.size());
    for (std::uint8_t b : w.bits()) out += static_cast<char>('0' + b);
    return out;
}

inline RingWord parse_ring_word(std::string_view text, Modulus m) {
    if (text.empty()) throw std::invalid_argument("empty ring word");
    std::vector<std::uint32_t> vals;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("bad residue '" + std::string(token) + "' in ring word");
        vals.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return RingWord(m, std::move(vals));  // range-checks residues
}

inline BinaryWord parse_binary_word(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty binary word");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("bad bit '") + c + "' in binary word");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(bits));
}

inline std::ostream& operator<<(std::ostream& os, const RingWord& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << to_string(w); }

}  // namespace grayiso
