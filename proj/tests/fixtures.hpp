#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmi/combinatorics.hpp"
#include "nmi/formats.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(NMI_TEST_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Odd antihole on seven vertices: the complement of C7.
inline nmi::Graph antihole7() { return nmi::parse_graph(read_data("antihole7.graph")); }
inline nmi::Graph two_triangles() { return nmi::parse_graph(read_data("two_triangles.graph")); }
/// Kaiser's graph H4.
inline nmi::Graph kaiser_h4() { return nmi::parse_graph(read_data("kaiser_h4.graph")); }
/// 13-vertex graph whose cover ideal is not normal although its complement
/// has no Hochster configuration of long cycles.
inline nmi::Graph graph13() { return nmi::parse_graph(read_data("graph13.graph")); }
/// Degree-7 ideal in ten variables that is normal while its set B is not a
/// Hilbert basis.
inline nmi::MonomialIdeal degree7_ideal() { return nmi::parse_ideal(read_data("degree7.ideal")); }

/// Incidence matrix of the cover ideal of the odd antihole, as printed with
/// the example (rows are variables).
inline std::vector<std::vector<long>> antihole_cover_matrix() {
    return {{1, 0, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 0, 0, 1}, {1, 1, 1, 0, 0, 1, 1},
            {1, 1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 1, 1}};
}

/// Exponent of t1^4⋯t6^4 t7^2 t8^4⋯t13^4.
inline nmi::Exponent graph13_witness() { return nmi::Exponent(std::vector<int>{4, 4, 4, 4, 4, 4, 2, 4, 4, 4, 4, 4, 4}); }

/// Columns of a matrix as sorted row vectors, for comparison up to column order.
inline std::vector<std::vector<long>> sorted_columns(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<long>> cols(rows.empty() ? 0 : rows[0].size(), std::vector<long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j][i] = rows[i][j];
    std::sort(cols.begin(), cols.end());
    return cols;
}

inline std::vector<std::vector<long>> integer_rows(const nmi::lp::QMatrix& M) {
    std::vector<std::vector<long>> rows(M.rows(), std::vector<long>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) rows[i][j] = M(i, j).get_num().get_si();
    return rows;
}

inline nmi::MonomialIdeal ideal(std::size_t s, const std::vector<std::vector<int>>& gens) {
    std::vector<nmi::Exponent> e;
    for (const auto& g : gens) e.emplace_back(g);
    return nmi::make_ideal(s, std::move(e));
}

inline nmi::MonomialIdeal triangle() { return ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }
inline nmi::MonomialIdeal squares() { return ideal(2, {{2, 0}, {0, 2}}); }

}  // namespace fixtures
