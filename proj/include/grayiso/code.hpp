#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <variant>

#include "grayiso/graymap.hpp"

namespace grayiso {

/// Raised when an enumeration would exceed the information-word cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// k x n matrix over Z_m whose row span is a linear code.
class GeneratorMatrix {
public:
    GeneratorMatrix(Modulus m, std::vector<RingWord> rows) : mod_(m), rows_(std::move(rows)) {
        if (rows_.empty()) throw std::domain_error("generator matrix needs at least one row");
        cols_ = rows_.front().size();
        if (cols_ == 0) throw std::domain_error("generator matrix needs at least one column");
        for (const RingWord& row : rows_) {
            if (row.modulus() != mod_) throw std::domain_error("generator row modulus mismatch");
            if (row.size() != cols_) throw std::domain_error("generator rows differ in length");
        }
    }

    GeneratorMatrix(Modulus m, const std::vector<std::vector<std::uint32_t>>& rows)
        : GeneratorMatrix(m, [&] {
              std::vector<RingWord> words;
              words.reserve(rows.size());
              for (const auto& r : rows) words.emplace_back(m, r);
              return words;
          }()) {}

    Modulus modulus() const noexcept { return mod_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_; }
    const RingWord& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<RingWord>& rows() const noexcept { return rows_; }

    /// x -> xG for an information word x in Z_m^k.
    RingWord encode(const RingWord& info) const {
        if (info.modulus() != mod_ || info.size() != rows_.size())
            throw std::domain_error("information word does not match generator shape");
        RingWord acc = RingWord::zeros(mod_, cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) acc = acc + info[i] * rows_[i];
        return acc;
    }

private:
    Modulus mod_;
    std::size_t cols_;
    std::vector<RingWord> rows_;
};

enum class Provenance { FromGenerator, ImageUnder, Explicit };
enum class Linearity { Linear, Nonlinear, Unknown };

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

/// Deduplicated set of codewords of common length and modulus, kept in
/// lexicographic order.
class BlockCode {
public:
    static BlockCode from_words(std::vector<RingWord> words) {
        return BlockCode(std::move(words), Provenance::Explicit, Linearity::Unknown, {});
    }

    Modulus modulus() const noexcept { return words_.front().modulus(); }
    std::size_t length() const noexcept { return words_.front().size(); }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<RingWord>& codewords() const noexcept { return words_; }

    Provenance provenance() const noexcept { return provenance_; }
    Linearity linearity_hint() const noexcept { return linearity_; }
    const std::optional<MapKind>& image_map() const noexcept { return image_map_; }

    bool contains(const RingWord& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

private:
    BlockCode(std::vector<RingWord> words, Provenance provenance, Linearity linearity,
              std::optional<MapKind> imageMap)
        : provenance_(provenance), linearity_(linearity), image_map_(std::move(imageMap)) {
        if (words.empty()) throw std::domain_error("a block code is a non-empty set");
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        const Modulus m = words.front().modulus();
        const std::size_t n = words.front().size();
        if (n == 0) throw std::domain_error("codewords need length at least 1");
        for (const RingWord& w : words) {
            if (w.modulus() != m) throw std::domain_error("codeword modulus mismatch");
            if (w.size() != n) throw std::domain_error("codeword lengths differ");
        }
        words_ = std::move(words);
    }

    friend BlockCode enumerate_code(const GeneratorMatrix&, std::uint64_t);
    friend BlockCode image_code(const BlockCode&, const MapKind&);

    std::vector<RingWord> words_;
    Provenance provenance_;
    Linearity linearity_;
    std::optional<MapKind> image_map_;
};

/// Row-span enumeration: { xG : x in Z_m^k }, deduplicated. The scan covers
/// all m^k information words and refuses to start past the cap.
inline BlockCode enumerate_code(const GeneratorMatrix& g,
                                std::uint64_t max_info_words = default_enumeration_cap) {
    const unsigned bits_per_symbol = g.modulus().exponent();
    const std::uint64_t total_bits =
        static_cast<std::uint64_t>(g.row_count()) * bits_per_symbol;
    if (total_bits >= 64 || (std::uint64_t{1} << total_bits) > max_info_words)
        throw CapacityError("enumeration of " + std::to_string(g.row_count()) + " rows over Z_" +
                            std::to_string(g.modulus().value()) +
                            " exceeds the information-word cap of " +
                            std::to_string(max_info_words));
    const std::uint64_t count = std::uint64_t{1} << total_bits;
    const std::uint32_t m = g.modulus().value();

    std::set<RingWord> seen;
    for (std::uint64_t index = 0; index < count; ++index) {
        std::vector<std::uint32_t> digits(g.row_count());
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            digits[i] = static_cast<std::uint32_t>(rest % m);
            rest /= m;
        }
        seen.insert(g.encode(RingWord(g.modulus(), std::move(digits))));
    }
    return BlockCode(std::vector<RingWord>(seen.begin(), seen.end()), Provenance::FromGenerator,
                     Linearity::Linear, {});
}

/// Set image of a code under the word-level extension of a map.
inline BlockCode image_code(const BlockCode& code, const MapKind& kind) {
    if (code.modulus() != kind.domain_modulus())
        throw std::domain_error("code modulus does not match the map domain");
    std::set<RingWord> seen;
    for (const RingWord& w : code.codewords()) seen.insert(apply_map(kind, w));
    return BlockCode(std::vector<RingWord>(seen.begin(), seen.end()), Provenance::ImageUnder,
                     Linearity::Unknown, kind);
}

// ---------------------------------------------------------------------------
// Weight spectra and minimum distances. Distance is d(x, y) = weight(x - y)
// for every metric.
// ---------------------------------------------------------------------------

class WeightSpectrum {
public:
    WeightSpectrum(Metric metric, std::map<std::size_t, std::size_t> histogram)
        : metric_(metric), histogram_(std::move(histogram)) {}

    Metric metric() const noexcept { return metric_; }
    const std::map<std::size_t, std::size_t>& histogram() const noexcept { return histogram_; }

    std::size_t total() const noexcept {
        std::size_t sum = 0;
        for (const auto& [w, count] : histogram_) sum += count;
        return sum;
    }

    std::optional<std::size_t> min_nonzero() const noexcept {
        for (const auto& [w, count] : histogram_)
            if (w != 0) return w;
        return std::nullopt;
    }

private:
    Metric metric_;
    std::map<std::size_t, std::size_t> histogram_;
};

inline WeightSpectrum weight_spectrum(const BlockCode& code, Metric metric) {
    if (!metric_valid(metric, code.modulus()))
        throw std::domain_error("metric " + to_string(metric) + " is invalid for modulus " +
                                std::to_string(code.modulus().value()));
    std::map<std::size_t, std::size_t> histogram;
    for (const RingWord& w : code.codewords()) ++histogram[word_weight(w, metric)];
    return WeightSpectrum(metric, std::move(histogram));
}

/// Minimum weight over the nonzero codewords; the minimum distance of a
/// linear code.
inline std::size_t min_nonzero_weight(const BlockCode& code, Metric metric) {
    if (!metric_valid(metric, code.modulus()))
        throw std::domain_error("metric " + to_string(metric) + " is invalid for modulus " +
                                std::to_string(code.modulus().value()));
    if (code.size() < 2)
        throw std::domain_error("minimum distance needs at least two codewords");
    std::optional<std::size_t> best;
    for (const RingWord& w : code.codewords()) {
        if (w.is_zero()) continue;
        const std::size_t weight = word_weight(w, metric);
        if (!best || weight < *best) best = weight;
    }
    if (!best) throw std::domain_error("code has no nonzero codeword");
    return *best;
}

/// Minimum distance by the O(|C|^2) pairwise scan; works for arbitrary sets.
inline std::size_t min_distance_pairwise(const BlockCode& code, Metric metric) {
    if (!metric_valid(metric, code.modulus()))
        throw std::domain_error("metric " + to_string(metric) + " is invalid for modulus " +
                                std::to_string(code.modulus().value()));
    if (code.size() < 2)
        throw std::domain_error("minimum distance needs at least two codewords");
    const auto& words = code.codewords();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::size_t d = word_weight(words[i] - words[j], metric);
            if (!best || d < *best) best = d;
        }
    }
    return *best;
}

/// Routes by provenance: generator-built codes take the minimum-weight path,
/// everything else the pairwise scan. Both agree on linear codes.
inline std::size_t min_distance(const BlockCode& code, Metric metric) {
    if (code.provenance() == Provenance::FromGenerator)
        return min_nonzero_weight(code, metric);
    return min_distance_pairwise(code, metric);
}

// ---------------------------------------------------------------------------
// Linearity decision with explicit witnesses.
// ---------------------------------------------------------------------------

struct SumWitness {
    RingWord left;
    RingWord right;
    RingWord sum;  // left + right, absent from the code
};

struct ScalarWitness {
    std::uint32_t scalar;
    RingWord word;
    RingWord multiple;  // scalar * word, absent from the code
};

using LinearityWitness = std::variant<SumWitness, ScalarWitness>;

class LinearityVerdict {
public:
    static LinearityVerdict linear() { return LinearityVerdict(std::nullopt); }
    static LinearityVerdict nonlinear(LinearityWitness witness) {
        return LinearityVerdict(std::move(witness));
    }

    bool is_linear() const noexcept { return !witness_.has_value(); }

    const LinearityWitness& witness() const {
        if (!witness_) throw std::logic_error("linear verdicts carry no witness");
        return *witness_;
    }

private:
    explicit LinearityVerdict(std::optional<LinearityWitness> witness)
        : witness_(std::move(witness)) {}

    std::optional<LinearityWitness> witness_;
};

/// True when the witnessed combination is built from code members and is
/// genuinely absent from the code.
inline bool witness_verifies(const BlockCode& code, const LinearityWitness& witness) {
    if (const auto* sum = std::get_if<SumWitness>(&witness)) {
        return code.contains(sum->left) && code.contains(sum->right) &&
               sum->left + sum->right == sum->sum && !code.contains(sum->sum);
    }
    const auto& scalar = std::get<ScalarWitness>(witness);
    return code.contains(scalar.word) && scalar.scalar * scalar.word == scalar.multiple &&
           !code.contains(scalar.multiple);
}

/// Closure under pairwise addition and under every scalar in [0, m).
/// Scans in lexicographic order, so the reported witness is deterministic.
inline LinearityVerdict check_linearity(const BlockCode& code) {
    const auto& words = code.codewords();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            RingWord sum = words[i] + words[j];
            if (!code.contains(sum))
                return LinearityVerdict::nonlinear(SumWitness{words[i], words[j], std::move(sum)});
        }
    }
    for (std::uint32_t s = 0; s < code.modulus().value(); ++s) {
        for (const RingWord& w : words) {
            RingWord multiple = s * w;
            if (!code.contains(multiple))
                return LinearityVerdict::nonlinear(ScalarWitness{s, w, std::move(multiple)});
        }
    }
    return LinearityVerdict::linear();
}

// ---------------------------------------------------------------------------
// Exhaustive single-symbol isometry verification.
// ---------------------------------------------------------------------------

struct IsometryViolation {
    RingWord input;
    RingWord image;
    std::size_t input_weight;
    std::size_t image_weight;
};

struct IsometryReport {
    MapKind map;
    Metric source;
    Metric target;
    std::size_t domain_size;
    std::vector<IsometryViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Scans the whole single-symbol domain of the map (bit pairs for phi-inv)
/// and records every input whose image weight differs from its own.
inline IsometryReport verify_isometry(const MapKind& kind, Metric source, Metric target) {
    const Modulus domain = kind.domain_modulus();
    std::vector<RingWord> inputs;
    if (kind.family() == MapFamily::PhiInverse) {
        for (std::uint32_t b0 = 0; b0 <= 1; ++b0)
            for (std::uint32_t b1 = 0; b1 <= 1; ++b1)
                inputs.push_back(RingWord(domain, {b0, b1}));
    } else {
        for (std::uint32_t u = 0; u < domain.value(); ++u)
            inputs.push_back(RingWord(domain, {u}));
    }

    IsometryReport report{kind, source, target, inputs.size(), {}};
    for (const RingWord& input : inputs) {
        const RingWord image = apply_map(kind, input);
        const std::size_t in_weight = word_weight(input, source);
        const std::size_t out_weight = word_weight(image, target);
        if (in_weight != out_weight)
            report.violations.push_back({input, image, in_weight, out_weight});
    }
    return report;
}

}  // namespace grayiso
