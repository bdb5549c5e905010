#ifndef GPM_GPSPEC_HPP
#define GPM_GPSPEC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gpm/matrix.hpp>
#include <gpm/sequence.hpp>

namespace gpm
{

// Symbolic description of a generalized Pascal matrix. Entries are
// evaluated one at a time, so long Hadamard products stream per entry
// without building the factor matrices. materialize(N) agrees exactly with
// the dedicated builders.
class GPSpec
{
public:
    struct FromC {
        CSequence c;
    };
    struct PhiQ {
        Rational phi;
        Index q;
    };
    struct Fractal {
        Rational phi;
        Index q;
    };
    struct QUmbral {
        Rational q;
    };
    struct TMatrix {
        Index q;
    };
    // An empty product is the all-ones matrix.
    struct Hadamard {
        std::vector<GPSpec> factors;
    };

    static GPSpec from_c(CSequence c) { return GPSpec(FromC{std::move(c)}); }
    static GPSpec phi_q(Rational phi, Index q) { return GPSpec(PhiQ{std::move(phi), q}); }
    static GPSpec fractal(Rational phi, Index q) { return GPSpec(Fractal{std::move(phi), q}); }
    static GPSpec q_umbral(Rational q) { return GPSpec(QUmbral{std::move(q)}); }
    static GPSpec t_matrix(Index q) { return GPSpec(TMatrix{q}); }
    static GPSpec hadamard(std::vector<GPSpec> factors) { return GPSpec(Hadamard{std::move(factors)}); }

    [[nodiscard]] Rational entry(Index n, Index m) const;
    [[nodiscard]] TriangularMatrix materialize(std::size_t size) const;

    // "from-c", "phiq", "fractal", "qumbral", "tmatrix" or "hadamard".
    [[nodiscard]] std::string kind() const;
    // Integer modulus/parameter when the node has one.
    [[nodiscard]] std::optional<Index> modulus() const;
    [[nodiscard]] std::optional<Rational> phi() const;

private:
    using Node = std::variant<FromC, PhiQ, Fractal, QUmbral, TMatrix, Hadamard>;
    explicit GPSpec(Node node) : node_(std::move(node)) {}

    Node node_;
};

} // namespace gpm

#endif
