#ifndef KKTCO_IO_HPP
#define KKTCO_IO_HPP

#include <string>
#include <variant>

#include "kktco/coalgebra.hpp"
#include "kktco/kkt.hpp"
#include "kktco/liecoalg.hpp"

namespace kktco {

/// Text formats. Objects are written one top-level key per line with
/// compact values, so writing what was read reproduces the input exactly.
std::string write_algebra(const FiniteAlgebra& alg);
std::string write_coalgebra(const FiniteCoalgebra& c);
/// Algebra format plus a metadata block (part dimensions, embeddings,
/// IntDer generator provenance).
std::string write_kkt(const KKTAlgebra& k);
/// kind "lie-coalgebra": the comultiplication of L(A) plus part dimensions,
/// the gram matrix and the chosen [A*, A] generators.
std::string write_lspace(const LSpace& ls);
/// kind "subspace": field, ambient_dim and canonical basis rows.
std::string write_subspace(const Subspace& s);

/// Any of the above; metadata blocks are checked for shape but not kept.
/// Lie coalgebras come back as plain coalgebras. Throws ParseError.
using Structure = std::variant<FiniteAlgebra, FiniteCoalgebra>;
Structure read_structure(const std::string& text);
FiniteAlgebra read_algebra(const std::string& text);
FiniteCoalgebra read_coalgebra(const std::string& text);
Subspace read_subspace(const std::string& text);

/// Rows given as a JSON list of lists of scalar strings, e.g. [["1","0"]].
Subspace parse_subspace_rows(const std::string& text, Field f, std::size_t ambient_dim);
/// Same, with the ambient dimension read off the first row.
Subspace parse_subspace_rows(const std::string& text, Field f);

}  // namespace kktco

#endif  // KKTCO_IO_HPP
