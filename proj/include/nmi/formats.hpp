#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nmi/combinatorics.hpp"
#include "nmi/cone.hpp"
#include "nmi/ideal.hpp"

namespace nmi {

// Text formats. Blank lines and everything after '#' are ignored; errors
// are ParseError with 1-based line and column.
//
// Ideal file:
//     vars 3
//     2 0 1          exponent vector, or
//     t1^2*t3        monomial
//
// Graph / clutter file:
//     vertices 4
//     1 2            edge (1-based); clutters allow any number of vertices
//
// Matrix block (the interchange format of external Hilbert-basis tools):
//     amb_space 11   optional
//     normalization 21 | rees_algebra 10
//     <rows>         normalization rows have amb_space entries,
//                    rees_algebra rows have amb_space − 1

MonomialIdeal parse_ideal(const std::string& text);
std::string serialize_ideal(const MonomialIdeal& I);

/// Parses "t1^2*t3" (or "1") in a ring with `num_vars` variables.
Exponent parse_monomial(const std::string& text, std::size_t num_vars);

Clutter parse_clutter(const std::string& text);
/// Like parse_clutter but every edge must have exactly two vertices.
Graph parse_graph(const std::string& text);
std::string serialize_clutter(const Clutter& C);
std::string serialize_graph(const Graph& G);

enum class MatrixMode { normalization, rees_algebra };

struct MatrixBlock {
    MatrixMode mode = MatrixMode::normalization;
    /// Ambient dimension of the cone (row length + 1 for rees_algebra).
    std::size_t amb_space = 0;
    std::vector<IntVector> rows;

    friend bool operator==(const MatrixBlock&, const MatrixBlock&) = default;
};

MatrixBlock parse_matrix_block(const std::string& text);
std::string serialize_matrix_block(const MatrixBlock& block);

/// The block that asks for the Hilbert basis of ℬ (mode normalization).
MatrixBlock b_set_block(const MonomialIdeal& I);
/// The block that asks for the Hilbert basis of the Rees cone.
MatrixBlock rees_block(const MonomialIdeal& I);

}  // namespace nmi
