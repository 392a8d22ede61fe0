#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grayiso/matrix_io.hpp"

namespace grayiso::cli {

using nlohmann::json;

/// Bad command-line input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// -- rendering ---------------------------------------------------------------

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string weight_label(Metric metric) {
    switch (metric) {
        case Metric::Hamming: return "w_H";
        case Metric::Lee: return "w_L";
        case Metric::Homogeneous: return "w_hom";
    }
    throw std::logic_error("unreachable");
}

inline Metric parse_metric(const std::string& name) {
    if (name == "hamming") return Metric::Hamming;
    if (name == "lee") return Metric::Lee;
    if (name == "homogeneous") return Metric::Homogeneous;
    throw UsageError("unknown metric '" + name + "'");
}

inline std::string fraction_string(std::uint64_t num, std::uint64_t den) {
    if (num == 0) return "0";
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

inline std::string spectrum_string(const WeightSpectrum& spectrum) {
    std::string out;
    for (const auto& [w, count] : spectrum.histogram()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(w) + ":" + std::to_string(count);
    }
    return out;
}

inline json spectrum_json(const WeightSpectrum& spectrum) {
    json pairs = json::array();
    for (const auto& [w, count] : spectrum.histogram()) pairs.push_back({w, count});
    return pairs;
}

inline std::string witness_string(const LinearityWitness& witness) {
    if (const auto* sum = std::get_if<SumWitness>(&witness)) {
        return to_string(sum->left) + " + " + to_string(sum->right) + " = " +
               to_string(sum->sum) + " (absent)";
    }
    const auto& scalar = std::get<ScalarWitness>(witness);
    return std::to_string(scalar.scalar) + " * " + to_string(scalar.word) + " = " +
           to_string(scalar.multiple) + " (absent)";
}

inline json witness_json(const LinearityWitness& witness) {
    json j;
    if (const auto* sum = std::get_if<SumWitness>(&witness)) {
        j["kind"] = "sum";
        j["left"] = to_string(sum->left);
        j["right"] = to_string(sum->right);
        j["combination"] = to_string(sum->sum);
    } else {
        const auto& scalar = std::get<ScalarWitness>(witness);
        j["kind"] = "scalar";
        j["scalar"] = scalar.scalar;
        j["word"] = to_string(scalar.word);
        j["combination"] = to_string(scalar.multiple);
    }
    return j;
}

// -- map tables --------------------------------------------------------------

struct TableRow {
    std::string input;
    std::optional<std::size_t> input_weight;
    std::string image;
    std::optional<std::size_t> image_weight;
};

inline std::vector<TableRow> phi_pair_table_rows() {
    std::vector<TableRow> rows;
    rows.reserve(16);
    for (std::uint32_t v = 0; v < 16; ++v) {
        const RingWord pair(Modulus(4), {v / 4, v % 4});
        const BinaryWord image = phi(pair);
        rows.push_back({to_string(pair), lee_weight(pair), to_string(image),
                        hamming_weight(image)});
    }
    return rows;
}

// Rows follow the RM(1, 2) listing psi(0), ..., psi(7).
inline std::vector<TableRow> phi_inverse_table_rows() {
    std::vector<TableRow> rows;
    rows.reserve(8);
    for (std::uint32_t u = 0; u < 8; ++u) {
        const BinaryWord input = psi(u, 3);
        rows.push_back({to_string(input), std::nullopt, to_string(phi_inverse(input)),
                        std::nullopt});
    }
    return rows;
}

inline std::vector<TableRow> psi_table_rows(unsigned k) {
    const Modulus m = Modulus::from_exponent(k);
    std::vector<TableRow> rows;
    rows.reserve(m.value());
    for (std::uint32_t u = 0; u < m.value(); ++u) {
        const BinaryWord image = psi(u, k);
        rows.push_back({std::to_string(u), homogeneous_weight(u, m), to_string(image),
                        hamming_weight(image)});
    }
    return rows;
}

inline std::vector<TableRow> composed_table_rows(unsigned k) {
    const Modulus m = Modulus::from_exponent(k);
    std::vector<TableRow> rows;
    rows.reserve(m.value());
    for (std::uint32_t u = 0; u < m.value(); ++u) {
        const RingWord image = k == 3 ? composed_map(u) : composed_map_general(u, k);
        rows.push_back({std::to_string(u), homogeneous_weight(u, m), to_string(image),
                        lee_weight(image)});
    }
    return rows;
}

// -- verification data (single-symbol tables with both weight columns) -------

struct PhiPairCase {
    std::uint32_t x, y;
    std::size_t lee;
    const char* image;
    std::size_t ham;
};

inline constexpr PhiPairCase phi_pair_cases[16] = {
    {0, 0, 0, "0000", 0}, {0, 1, 1, "0001", 1}, {0, 2, 2, "0011", 2}, {0, 3, 1, "0010", 1},
    {1, 0, 1, "0100", 1}, {1, 1, 2, "0101", 2}, {1, 2, 3, "0111", 3}, {1, 3, 2, "0110", 2},
    {2, 0, 2, "1100", 2}, {2, 1, 3, "1101", 3}, {2, 2, 4, "1111", 4}, {2, 3, 3, "1110", 3},
    {3, 0, 1, "1000", 1}, {3, 1, 2, "1001", 2}, {3, 2, 3, "1011", 3}, {3, 3, 2, "1010", 2},
};

struct PhiInvCase {
    const char* input;
    const char* image;
};

inline constexpr PhiInvCase phi_inv_cases[8] = {
    {"0000", "0,0"}, {"0101", "1,1"}, {"0011", "0,2"}, {"0110", "1,3"},
    {"1111", "2,2"}, {"1010", "3,3"}, {"1100", "2,0"}, {"1001", "3,1"},
};

struct PsiCase {
    std::uint32_t u;
    std::size_t hom;
    const char* image;
    std::size_t ham;
};

inline constexpr PsiCase psi_cases[8] = {
    {0, 0, "0000", 0}, {1, 2, "0101", 2}, {2, 2, "0011", 2}, {3, 2, "0110", 2},
    {4, 4, "1111", 4}, {5, 2, "1010", 2}, {6, 2, "1100", 2}, {7, 2, "1001", 2},
};

struct ComposedCase {
    std::uint32_t u;
    std::size_t hom;
    const char* image;
    std::size_t lee;
};

inline constexpr ComposedCase composed_cases[8] = {
    {0, 0, "0,0", 0}, {1, 2, "1,1", 2}, {2, 2, "0,2", 2}, {3, 2, "1,3", 2},
    {4, 4, "2,2", 4}, {5, 2, "3,3", 2}, {6, 2, "2,0", 2}, {7, 2, "3,1", 2},
};

// The Z_8 example: 2 x 3 generator, 32 codewords, d_H = 1, d_hom = 4.
inline GeneratorMatrix example_generator() {
    return GeneratorMatrix(Modulus(8), std::vector<std::vector<std::uint32_t>>{{1, 2, 7},
                                                                               {0, 2, 4}});
}

inline std::vector<BinaryWord> all_binary_words(std::size_t length) {
    std::vector<BinaryWord> words;
    words.reserve(std::size_t{1} << length);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << length); ++mask) {
        std::vector<std::uint8_t> bits(length);
        for (std::size_t i = 0; i < length; ++i)
            bits[i] = static_cast<std::uint8_t>((mask >> i) & 1);
        words.emplace_back(std::move(bits));
    }
    return words;
}

struct VerifyCheck {
    std::string name;
    std::function<bool(std::string& detail)> check;
};

inline std::vector<VerifyCheck> verify_checks() {
    std::vector<VerifyCheck> checks;

    checks.push_back({"phi-table", [](std::string& detail) {
        for (const auto& c : phi_pair_cases) {
            const RingWord pair(Modulus(4), {c.x, c.y});
            const BinaryWord image = phi(pair);
            if (lee_weight(pair) != c.lee || to_string(image) != c.image ||
                hamming_weight(image) != c.ham) {
                detail = "mismatch at input " + to_string(pair);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"phi-inv-table", [](std::string& detail) {
        for (const auto& c : phi_inv_cases) {
            if (to_string(phi_inverse(parse_binary_word(c.input))) != c.image) {
                detail = std::string("mismatch at input ") + c.input;
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"psi-table", [](std::string& detail) {
        for (const auto& c : psi_cases) {
            const BinaryWord image = psi(c.u, 3);
            if (homogeneous_weight(c.u, Modulus(8)) != c.hom || to_string(image) != c.image ||
                hamming_weight(image) != c.ham) {
                detail = "mismatch at u = " + std::to_string(c.u);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"composed-table", [](std::string& detail) {
        for (const auto& c : composed_cases) {
            const RingWord image = composed_map(c.u);
            if (homogeneous_weight(c.u, Modulus(8)) != c.hom || to_string(image) != c.image ||
                lee_weight(image) != c.lee) {
                detail = "mismatch at u = " + std::to_string(c.u);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"phi-bijective", [](std::string& detail) {
        const Modulus four(4);
        for (std::uint32_t a = 0; a < 4; ++a) {
            const RingWord w(four, {a});
            if (phi_inverse(phi(w)) != w) {
                detail = "phi-inv . phi failed at " + to_string(w);
                return false;
            }
            for (std::uint32_t b = 0; b < 4; ++b) {
                const RingWord pair(four, {a, b});
                if (phi_inverse(phi(pair)) != pair) {
                    detail = "phi-inv . phi failed at " + to_string(pair);
                    return false;
                }
            }
        }
        for (std::size_t length : {std::size_t{2}, std::size_t{4}}) {
            for (const BinaryWord& b : all_binary_words(length)) {
                if (phi(phi_inverse(b)) != b) {
                    detail = "phi . phi-inv failed at " + to_string(b);
                    return false;
                }
            }
        }
        return true;
    }});

    checks.push_back({"psi-k2-equals-phi", [](std::string& detail) {
        for (std::uint32_t u = 0; u < 4; ++u) {
            if (psi(u, 2) != phi(u)) {
                detail = "differs at u = " + std::to_string(u);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"composed-closed-form", [](std::string& detail) {
        for (std::uint32_t u = 0; u < 8; ++u) {
            if (composed_map(u) != phi_inverse(psi(u, 3)) ||
                composed_map(u) != composed_map_general(u, 3)) {
                detail = "differs at u = " + std::to_string(u);
                return false;
            }
        }
        return true;
    }});

    for (unsigned k : {2u, 3u, 4u}) {
        checks.push_back({"rm1-image-k" + std::to_string(k), [k](std::string& detail) {
            std::vector<BinaryWord> image;
            for (std::uint32_t u = 0; u < (std::uint32_t{1} << k); ++u)
                image.push_back(psi(u, k));
            std::sort(image.begin(), image.end());
            if (image != rm1_codewords(k - 1)) {
                detail = "psi image differs from RM(1, " + std::to_string(k - 1) + ")";
                return false;
            }
            if (k == 3) {
                // RM(1, 2) is exactly the even-weight half of F_2^4.
                std::vector<BinaryWord> evens;
                for (const BinaryWord& b : all_binary_words(4))
                    if (hamming_weight(b) % 2 == 0) evens.push_back(b);
                std::sort(evens.begin(), evens.end());
                if (image != evens) {
                    detail = "psi image differs from the even-weight words of F_2^4";
                    return false;
                }
            }
            return true;
        }});
    }

    auto isometry_check = [](const MapKind& kind, Metric source, Metric target,
                             std::string& detail) {
        const IsometryReport report = verify_isometry(kind, source, target);
        if (!report.ok()) {
            detail = std::to_string(report.violations.size()) + " violation(s) over " +
                     std::to_string(report.domain_size) + " symbols, first at input " +
                     to_string(report.violations.front().input);
            return false;
        }
        return true;
    };

    checks.push_back({"isometry-phi", [=](std::string& detail) {
        return isometry_check(MapKind::phi(), Metric::Lee, Metric::Hamming, detail);
    }});
    for (unsigned k : {2u, 3u, 4u}) {
        checks.push_back({"isometry-psi-k" + std::to_string(k), [=](std::string& detail) {
            return isometry_check(MapKind::psi(k), Metric::Homogeneous, Metric::Hamming, detail);
        }});
    }
    for (unsigned k : {3u, 4u}) {
        checks.push_back({"isometry-composed-k" + std::to_string(k), [=](std::string& detail) {
            return isometry_check(MapKind::composed(k), Metric::Homogeneous, Metric::Lee,
                                  detail);
        }});
    }

    checks.push_back({"example-code", [](std::string& detail) {
        const BlockCode code = enumerate_code(example_generator());
        if (code.size() != 32) {
            detail = "size " + std::to_string(code.size()) + ", expected 32";
            return false;
        }
        if (min_distance(code, Metric::Hamming) != 1) {
            detail = "Hamming distance differs from 1";
            return false;
        }
        if (min_distance(code, Metric::Homogeneous) != 4) {
            detail = "homogeneous distance differs from 4";
            return false;
        }
        return true;
    }});

    checks.push_back({"proposition-i", [](std::string& detail) {
        const BlockCode code = enumerate_code(example_generator());
        const BlockCode image = image_code(code, MapKind::composed(3));
        if (image.length() != 2 * code.length() || image.size() != code.size()) {
            detail = "image is not a size-preserving length-2n code";
            return false;
        }
        return true;
    }});

    checks.push_back({"proposition-ii", [](std::string& detail) {
        const BlockCode code = enumerate_code(example_generator());
        const BlockCode image = image_code(code, MapKind::composed(3));
        const std::size_t source = min_distance(code, Metric::Homogeneous);
        const std::size_t target = min_distance_pairwise(image, Metric::Lee);
        if (source != target || target != 4) {
            detail = "image Lee distance " + std::to_string(target) +
                     " differs from source homogeneous distance " + std::to_string(source);
            return false;
        }
        return true;
    }});

    checks.push_back({"proposition-iii", [](std::string& detail) {
        const BlockCode code = enumerate_code(example_generator());
        const BlockCode image = image_code(code, MapKind::composed(3));
        for (const RingWord& w : image.codewords()) {
            if (lee_weight(w) % 2 != 0) {
                detail = "odd Lee weight at " + to_string(w);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"nonlinearity-witness", [](std::string& detail) {
        const BlockCode code = enumerate_code(example_generator());
        const BlockCode image = image_code(code, MapKind::composed(3));
        const RingWord left = composed_map(RingWord(Modulus(8), {6, 6, 6}));
        const RingWord right = composed_map(RingWord(Modulus(8), {7, 6, 1}));
        if (!image.contains(left) || !image.contains(right)) {
            detail = "expected image words are missing";
            return false;
        }
        if (image.contains(left + right)) {
            detail = "superimposition unexpectedly inside the image";
            return false;
        }
        const LinearityVerdict verdict = check_linearity(image);
        if (verdict.is_linear()) {
            detail = "image reported linear";
            return false;
        }
        if (!witness_verifies(image, verdict.witness())) {
            detail = "reported witness does not verify";
            return false;
        }
        return true;
    }});

    return checks;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommand: map
// ---------------------------------------------------------------------------

namespace detail {

struct MapOptions {
    std::string name;
    unsigned k = 3;
    bool k_given = false;
    bool all = false;
    std::string word;
    bool word_given = false;
    bool as_json = false;
};

inline MapKind map_kind_for(const std::string& name, unsigned k) {
    if (name == "phi") return MapKind::phi();
    if (name == "phi-inv") return MapKind::phi_inverse();
    if (name == "psi") return MapKind::psi(k);
    if (name == "composed") return MapKind::composed(k);
    throw UsageError("unknown map '" + name + "'");
}

inline int run_map(const MapOptions& opt, std::ostream& out) {
    if (opt.all == opt.word_given)
        throw UsageError("provide exactly one of an input word or --all");
    if (opt.k_given && (opt.name == "phi" || opt.name == "phi-inv"))
        throw UsageError("--k applies only to psi and composed");

    const MapKind kind = map_kind_for(opt.name, opt.k);

    json inputs;
    inputs["all"] = opt.all;
    inputs["map"] = opt.name;
    if (opt.name == "psi" || opt.name == "composed") inputs["k"] = kind.exponent();
    if (opt.word_given) inputs["word"] = opt.word;

    if (opt.all) {
        std::vector<TableRow> rows;
        std::vector<std::string> header;
        switch (kind.family()) {
            case MapFamily::Phi:
                rows = phi_pair_table_rows();
                header = {"(x,y)", "w_L", "phi(x,y)", "w_H"};
                break;
            case MapFamily::PhiInverse:
                rows = phi_inverse_table_rows();
                header = {"x", "phi-inv(x)"};
                break;
            case MapFamily::Psi:
                rows = psi_table_rows(kind.exponent());
                header = {"u", "w_hom", "psi(u)", "w_H"};
                break;
            case MapFamily::ComposedPhiInvPsi:
                rows = composed_table_rows(kind.exponent());
                header = {"u", "w_hom", "composed(u)", "w_L"};
                break;
        }

        const bool with_weights = header.size() == 4;
        if (opt.as_json) {
            json results;
            if (with_weights) {
                results["input_metric"] = to_string(kind.source_metric());
                results["image_metric"] = to_string(kind.target_metric());
            }
            json json_rows = json::array();
            for (const TableRow& row : rows) {
                json r;
                r["input"] = row.input;
                r["image"] = row.image;
                if (with_weights) {
                    r["input_weight"] = *row.input_weight;
                    r["image_weight"] = *row.image_weight;
                }
                json_rows.push_back(std::move(r));
            }
            results["rows"] = std::move(json_rows);
            json report;
            report["command"] = "map";
            report["inputs"] = std::move(inputs);
            report["results"] = std::move(results);
            out << report.dump(2) << "\n";
        } else {
            std::vector<std::vector<std::string>> cells;
            cells.push_back(header);
            for (const TableRow& row : rows) {
                if (with_weights)
                    cells.push_back({row.input, std::to_string(*row.input_weight), row.image,
                                     std::to_string(*row.image_weight)});
                else
                    cells.push_back({row.input, row.image});
            }
            out << render_table(cells);
        }
        return 0;
    }

    // Single-word evaluation: image plus both weights.
    std::string input_text, image_text;
    std::size_t input_weight = 0, image_weight = 0;
    if (kind.family() == MapFamily::PhiInverse) {
        const BinaryWord input = parse_binary_word(opt.word);
        const RingWord image = phi_inverse(input);
        input_text = to_string(input);
        image_text = to_string(image);
        input_weight = hamming_weight(input);
        image_weight = lee_weight(image);
    } else {
        const RingWord input = parse_ring_word(opt.word, kind.domain_modulus());
        const RingWord image = apply_map(kind, input);
        input_text = to_string(input);
        input_weight = word_weight(input, kind.source_metric());
        image_weight = word_weight(image, kind.target_metric());
        image_text = kind.image_modulus().value() == 2 ? to_string(to_binary_word(image))
                                                       : to_string(image);
    }

    if (opt.as_json) {
        json results;
        results["input"] = input_text;
        results["image"] = image_text;
        results["input_metric"] = to_string(kind.source_metric());
        results["image_metric"] = to_string(kind.target_metric());
        results["input_weight"] = input_weight;
        results["image_weight"] = image_weight;
        json report;
        report["command"] = "map";
        report["inputs"] = std::move(inputs);
        report["results"] = std::move(results);
        out << report.dump(2) << "\n";
    } else {
        out << render_table({{"input", input_text},
                             {"image", image_text},
                             {weight_label(kind.source_metric()) + "(input)",
                              std::to_string(input_weight)},
                             {weight_label(kind.target_metric()) + "(image)",
                              std::to_string(image_weight)}});
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string path;
    std::string image_name;
    bool image_given = false;
    std::string metric_name;
    bool metric_given = false;
    std::uint64_t cap = default_enumeration_cap;
    bool as_json = false;
};

inline MapKind analyze_map_kind(const std::string& name, Modulus modulus) {
    try {
        if (name == "phi") return MapKind::phi();
        if (name == "phi-inv") return MapKind::phi_inverse();
        if (name == "psi") return MapKind::psi(modulus.exponent());
        if (name == "composed") return MapKind::composed(modulus.exponent());
    } catch (const std::domain_error& e) {
        throw UsageError("--image " + name + ": " + e.what());
    }
    throw UsageError("unknown map '" + name + "'");
}

inline int run_analyze(const AnalyzeOptions& opt, std::ostream& out) {
    const GeneratorMatrix generator = read_generator_matrix_file(opt.path);

    std::vector<Metric> metrics;
    if (opt.metric_given) {
        const Metric metric = parse_metric(opt.metric_name);
        if (!metric_valid(metric, generator.modulus()))
            throw UsageError("metric '" + opt.metric_name + "' is invalid for modulus " +
                             std::to_string(generator.modulus().value()));
        metrics.push_back(metric);
    } else {
        metrics.push_back(Metric::Hamming);
        if (generator.modulus().value() == 4) metrics.push_back(Metric::Lee);
        metrics.push_back(Metric::Homogeneous);
    }

    const BlockCode code = enumerate_code(generator, opt.cap);

    json results;
    std::vector<std::vector<std::string>> lines;
    lines.push_back({"file", opt.path});
    lines.push_back({"modulus", std::to_string(code.modulus().value())});
    lines.push_back({"length", std::to_string(code.length())});
    lines.push_back({"generator rows", std::to_string(generator.row_count())});
    lines.push_back({"size", std::to_string(code.size())});
    results["modulus"] = code.modulus().value();
    results["length"] = code.length();
    results["generator_rows"] = generator.row_count();
    results["size"] = code.size();

    // Nominal rate k/n next to the information rate log_m|C| / n; the two
    // differ whenever the rows are not independent.
    const std::string nominal = fraction_string(generator.row_count(), generator.col_count());
    results["rate"]["nominal"] = nominal;
    lines.push_back({"rate nominal", nominal});
    if (std::has_single_bit(code.size())) {
        const unsigned log2_size = static_cast<unsigned>(std::countr_zero(code.size()));
        const std::string information = fraction_string(
            log2_size,
            static_cast<std::uint64_t>(code.modulus().exponent()) * code.length());
        results["rate"]["information"] = information;
        lines.push_back({"rate information", information});
    }

    for (Metric metric : metrics) {
        const WeightSpectrum spectrum = weight_spectrum(code, metric);
        const std::string metric_name = to_string(metric);
        results["spectrum"][metric_name] = spectrum_json(spectrum);
        lines.push_back({"spectrum (" + metric_name + ")", spectrum_string(spectrum)});
        if (code.size() >= 2) {
            const std::size_t d = min_distance(code, metric);
            results["min_distance"][metric_name] = d;
            lines.push_back({"min distance (" + metric_name + ")", std::to_string(d)});
        } else {
            results["min_distance"][metric_name] = nullptr;
            lines.push_back({"min distance (" + metric_name + ")", "undefined"});
        }
    }

    if (opt.image_given) {
        const MapKind kind = analyze_map_kind(opt.image_name, code.modulus());
        const BlockCode image = image_code(code, kind);
        const Metric image_metric =
            image.modulus().value() == 4 ? Metric::Lee : Metric::Hamming;
        const std::string metric_name = to_string(image_metric);

        json image_json;
        image_json["map"] = opt.image_name;
        image_json["modulus"] = image.modulus().value();
        image_json["length"] = image.length();
        image_json["size"] = image.size();
        image_json["metric"] = metric_name;
        lines.push_back({"image map", opt.image_name});
        lines.push_back({"image modulus", std::to_string(image.modulus().value())});
        lines.push_back({"image length", std::to_string(image.length())});
        lines.push_back({"image size", std::to_string(image.size())});

        const WeightSpectrum spectrum = weight_spectrum(image, image_metric);
        image_json["spectrum"] = spectrum_json(spectrum);
        lines.push_back({"image spectrum (" + metric_name + ")", spectrum_string(spectrum)});

        if (image.size() >= 2) {
            const std::size_t d = min_distance_pairwise(image, image_metric);
            image_json["min_distance"] = d;
            lines.push_back({"image min distance (" + metric_name + ")", std::to_string(d)});
        } else {
            image_json["min_distance"] = nullptr;
            lines.push_back({"image min distance (" + metric_name + ")", "undefined"});
        }

        const LinearityVerdict verdict = check_linearity(image);
        if (verdict.is_linear()) {
            image_json["linearity"]["verdict"] = "linear";
            lines.push_back({"image linearity", "linear"});
        } else {
            image_json["linearity"]["verdict"] = "nonlinear";
            image_json["linearity"]["witness"] = witness_json(verdict.witness());
            lines.push_back({"image linearity", "nonlinear"});
            lines.push_back({"image witness", witness_string(verdict.witness())});
        }

        bool all_even = true;
        for (const RingWord& w : image.codewords())
            all_even = all_even && word_weight(w, image_metric) % 2 == 0;
        image_json["even_weights"] = all_even;
        lines.push_back({"image weights all even", all_even ? "yes" : "no"});

        results["image"] = std::move(image_json);
    }

    if (opt.as_json) {
        json report;
        report["command"] = "analyze";
        json inputs;
        inputs["file"] = opt.path;
        if (opt.image_given) inputs["image"] = opt.image_name;
        if (opt.metric_given) inputs["metric"] = opt.metric_name;
        report["inputs"] = std::move(inputs);
        report["results"] = std::move(results);
        out << report.dump(2) << "\n";
    } else {
        out << render_table(lines);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Subcommand: verify
// ---------------------------------------------------------------------------

inline int run_verify(bool as_json, std::ostream& out) {
    const std::vector<VerifyCheck> checks = verify_checks();
    std::size_t passed = 0;
    std::vector<std::vector<std::string>> lines;
    json json_checks = json::array();
    for (const VerifyCheck& check : checks) {
        std::string detail;
        const bool ok = check.check(detail);
        passed += ok;
        json entry;
        entry["name"] = check.name;
        entry["pass"] = ok;
        if (!ok) entry["detail"] = detail;
        json_checks.push_back(std::move(entry));
        std::vector<std::string> line = {check.name, ok ? "pass" : "fail"};
        if (!ok) line.push_back(detail);
        lines.push_back(std::move(line));
    }

    const bool all_passed = passed == checks.size();
    if (as_json) {
        json report;
        report["command"] = "verify";
        report["inputs"] = json::object();
        report["results"]["checks"] = std::move(json_checks);
        report["results"]["total"] = checks.size();
        report["results"]["passed"] = passed;
        report["results"]["failed"] = checks.size() - passed;
        out << report.dump(2) << "\n";
    } else {
        out << render_table(lines);
        out << "\n" << checks.size() << " checks: " << passed << " passed, "
            << (checks.size() - passed) << " failed\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Entry point. Exit codes: 0 success, 1 verification/analysis failure,
// 2 usage or parse error. Errors go to `err`, reports to `out`.
// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gray isometries on Z_{2^k} and block-code analysis"};
    app.name("grayiso");
    app.require_subcommand(1);

    detail::MapOptions map_opt;
    CLI::App* map_cmd = app.add_subcommand("map", "Evaluate an isometry or print its table");
    map_cmd->add_option("name", map_opt.name, "phi | phi-inv | psi | composed")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "psi", "composed"}));
    map_cmd->add_option("word", map_opt.word,
                        "input word (comma-separated residues; contiguous bits for phi-inv)");
    map_cmd->add_option("--k", map_opt.k, "domain exponent for psi/composed (default 3)");
    map_cmd->add_flag("--all", map_opt.all, "print the full single-symbol table");
    map_cmd->add_flag("--json", map_opt.as_json, "machine-readable report");

    detail::AnalyzeOptions analyze_opt;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Enumerate a code from a generator-matrix file");
    analyze_cmd->add_option("matrix-file", analyze_opt.path, "plain-text generator matrix")
        ->required();
    analyze_cmd->add_option("--image", analyze_opt.image_name,
                            "also analyze the image under this map");
    analyze_cmd->add_option("--metric", analyze_opt.metric_name,
                            "restrict to one metric: hamming | lee | homogeneous");
    analyze_cmd->add_option("--cap", analyze_opt.cap,
                            "information-word enumeration cap (default 2^24)");
    analyze_cmd->add_flag("--json", analyze_opt.as_json, "machine-readable report");

    bool verify_json = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suite");
    verify_cmd->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (map_cmd->parsed()) {
            map_opt.k_given = map_cmd->count("--k") > 0;
            map_opt.word_given = map_cmd->count("word") > 0;
            return detail::run_map(map_opt, out);
        }
        if (analyze_cmd->parsed()) {
            analyze_opt.image_given = analyze_cmd->count("--image") > 0;
            analyze_opt.metric_given = analyze_cmd->count("--metric") > 0;
            return detail::run_analyze(analyze_opt, out);
        }
        return detail::run_verify(verify_json, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("grayiso");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace grayiso::cli
