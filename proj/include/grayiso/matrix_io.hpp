#pragma once

#include <fstream>
#include <istream>
#include <sstream>

#include "grayiso/code.hpp"

namespace grayiso {

/// Parse failure in a generator-matrix file; `line` is 1-based.
struct MatrixParseError : std::runtime_error {
    MatrixParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    std::size_t line;
};

namespace detail {

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace detail

/// Reads the plain-text matrix form: a header `mod <m> rows <k> cols <n>`
/// followed by k lines of n comma-separated residues.
inline GeneratorMatrix read_generator_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw MatrixParseError(1, "missing header");
    line = detail::strip_cr(line);

    std::istringstream header(line);
    std::string mod_key, rows_key, cols_key;
    std::uint64_t m_value = 0, row_count = 0, col_count = 0;
    if (!(header >> mod_key >> m_value >> rows_key >> row_count >> cols_key >> col_count) ||
        mod_key != "mod" || rows_key != "rows" || cols_key != "cols")
        throw MatrixParseError(1, "expected header 'mod <m> rows <k> cols <n>'");
    std::string excess;
    if (header >> excess) throw MatrixParseError(1, "trailing content after header");
    if (row_count == 0) throw MatrixParseError(1, "row count must be at least 1");
    if (col_count == 0) throw MatrixParseError(1, "column count must be at least 1");
    if (m_value > std::uint32_t(-1)) throw MatrixParseError(1, "modulus out of range");

    Modulus modulus = [&] {
        try {
            return Modulus(static_cast<std::uint32_t>(m_value));
        } catch (const std::domain_error& e) {
            throw MatrixParseError(1, e.what());
        }
    }();

    std::vector<RingWord> rows;
    for (std::size_t i = 0; i < row_count; ++i) {
        const std::size_t line_number = i + 2;
        if (!std::getline(in, line))
            throw MatrixParseError(line_number, "missing matrix row " + std::to_string(i + 1));
        line = detail::strip_cr(line);
        try {
            RingWord row = parse_ring_word(line, modulus);
            if (row.size() != col_count)
                throw MatrixParseError(line_number,
                                       "expected " + std::to_string(col_count) +
                                           " residues, got " + std::to_string(row.size()));
            rows.push_back(std::move(row));
        } catch (const MatrixParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw MatrixParseError(line_number, e.what());
        }
    }

    std::size_t line_number = row_count + 2;
    while (std::getline(in, line)) {
        if (!detail::blank(line))
            throw MatrixParseError(line_number, "unexpected content after matrix rows");
        ++line_number;
    }

    return GeneratorMatrix(modulus, std::move(rows));
}

inline GeneratorMatrix read_generator_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    return read_generator_matrix(in);
}

inline std::string format_generator_matrix(const GeneratorMatrix& g) {
    std::string out = "mod " + std::to_string(g.modulus().value()) + " rows " +
                      std::to_string(g.row_count()) + " cols " + std::to_string(g.col_count()) +
                      "\n";
    for (std::size_t i = 0; i < g.row_count(); ++i) out += to_string(g.row(i)) + "\n";
    return out;
}

}  // namespace grayiso
