#include <gpm/gpspec.hpp>

#include <gpm/fractal.hpp>
#include <gpm/special.hpp>
#include <gpm/zero_algebra.hpp>

namespace gpm
{

Rational GPSpec::entry(Index n, Index m) const
{
    if (m > n) {
        return {};
    }
    return std::visit(
        [n, m](const auto &node) -> Rational {
            using N = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<N, FromC>) {
                return node.c.at(m) * node.c.at(n - m) / node.c.at(n);
            } else if constexpr (std::is_same_v<N, PhiQ>) {
                return phi_q_entry(node.phi, node.q, n, m);
            } else if constexpr (std::is_same_v<N, Fractal>) {
                return fractal_entry(node.phi, node.q, n, m);
            } else if constexpr (std::is_same_v<N, QUmbral>) {
                return gaussian_binomial(node.q, n, m);
            } else if constexpr (std::is_same_v<N, TMatrix>) {
                return t_coefficient(node.q, n, m);
            } else {
                Rational acc{1};
                for (const auto &f : node.factors) {
                    acc *= f.entry(n, m);
                    if (acc.is_zero()) {
                        break;
                    }
                }
                return acc;
            }
        },
        node_);
}

TriangularMatrix GPSpec::materialize(std::size_t size) const
{
    return TriangularMatrix::generate(size, [this](Index n, Index m) { return entry(n, m); });
}

std::string GPSpec::kind() const
{
    static constexpr const char *names[] = {"from-c", "phiq", "fractal", "qumbral", "tmatrix", "hadamard"};
    return names[node_.index()];
}

std::optional<Index> GPSpec::modulus() const
{
    if (auto *p = std::get_if<PhiQ>(&node_)) {
        return p->q;
    }
    if (auto *f = std::get_if<Fractal>(&node_)) {
        return f->q;
    }
    if (auto *t = std::get_if<TMatrix>(&node_)) {
        return t->q;
    }
    return std::nullopt;
}

std::optional<Rational> GPSpec::phi() const
{
    if (auto *p = std::get_if<PhiQ>(&node_)) {
        return p->phi;
    }
    if (auto *f = std::get_if<Fractal>(&node_)) {
        return f->phi;
    }
    return std::nullopt;
}

} // namespace gpm
