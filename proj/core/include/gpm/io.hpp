#ifndef GPM_IO_HPP
#define GPM_IO_HPP

#include <optional>
#include <string>

#include <gpm/matrix.hpp>
#include <gpm/polynomial.hpp>
#include <gpm/rational.hpp>
#include <gpm/report.hpp>
#include <gpm/special.hpp>

namespace gpm
{

// A matrix block with the parameters it was generated from.
struct MatrixDocument {
    std::string kind;
    std::optional<std::int64_t> q;
    std::optional<Rational> phi;
    TriangularMatrix matrix;

    friend bool operator==(const MatrixDocument &, const MatrixDocument &) = default;
};

// {"kind", "q", "phi", "size", "rows"}; rationals as strings.
std::string to_json(const MatrixDocument &doc);
// Throws ParseError on malformed input.
MatrixDocument matrix_document_from_json(const std::string &text);

// Lower triangle only, one matrix row per line.
std::string to_csv(const TriangularMatrix &m);
TriangularMatrix matrix_from_csv(const std::string &text);

// Plain PBM (P1): '1' for nonzero entries, '0' elsewhere.
std::string to_pbm(const TriangularMatrix &m);

std::string to_json(const Report &report);
// {"q": "beta", ...} in increasing q.
std::string to_json(const PhiCoordinates &coords);
// Coefficients 0..max_degree as a JSON array of rational strings.
std::string series_to_json(const Polynomial &p, std::size_t max_degree);

} // namespace gpm

#endif
