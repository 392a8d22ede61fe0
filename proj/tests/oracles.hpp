#pragma once

// Test-side oracles, kept independent of the library code paths they check.
// Weight tables are written out as data; distances are recomputed from
// scratch by pairwise scans over these tables.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "grayiso/code.hpp"

namespace oracles {

inline constexpr std::array<std::size_t, 4> lee_z4 = {0, 1, 2, 1};
inline constexpr std::array<std::size_t, 8> hom_z8 = {0, 2, 2, 2, 4, 2, 2, 2};

inline std::size_t lee_word(const std::vector<std::uint32_t>& values) {
    std::size_t total = 0;
    for (std::uint32_t v : values) total += lee_z4.at(v);
    return total;
}

inline std::size_t hom_word_z8(const std::vector<std::uint32_t>& values) {
    std::size_t total = 0;
    for (std::uint32_t v : values) total += hom_z8.at(v);
    return total;
}

/// Minimum pairwise distance of a set of same-length words over Z_m, with
/// d(x, y) computed componentwise from a symbol-weight table of x - y.
template <typename SymbolWeight>
std::size_t min_pairwise_distance(const std::vector<std::vector<std::uint32_t>>& words,
                                  std::uint32_t m, SymbolWeight&& symbol_weight) {
    if (words.size() < 2) throw std::logic_error("oracle needs at least two words");
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t d = 0;
            for (std::size_t c = 0; c < words[i].size(); ++c)
                d += symbol_weight((words[i][c] + m - words[j][c]) % m);
            best = std::min(best, d);
        }
    }
    return best;
}

inline std::vector<std::vector<std::uint32_t>> raw_words(const grayiso::BlockCode& code) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(code.size());
    for (const grayiso::RingWord& w : code.codewords()) out.push_back(w.values());
    return out;
}

/// Uniformly random generator matrix over Z_m with given shape.
inline grayiso::GeneratorMatrix random_generator(std::mt19937& rng, grayiso::Modulus m,
                                                 std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<std::uint32_t> entry(0, m.value() - 1);
    std::vector<std::vector<std::uint32_t>> matrix(rows, std::vector<std::uint32_t>(cols));
    for (auto& row : matrix)
        for (auto& value : row) value = entry(rng);
    return grayiso::GeneratorMatrix(m, matrix);
}

inline grayiso::RingWord random_word(std::mt19937& rng, grayiso::Modulus m, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> entry(0, m.value() - 1);
    std::vector<std::uint32_t> values(n);
    for (auto& value : values) value = entry(rng);
    return grayiso::RingWord(m, std::move(values));
}

}  // namespace oracles
