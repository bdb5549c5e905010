#include <gpm/sequence.hpp>

#include <sstream>
#include <stdexcept>
#include <variant>

#include <gpm/errors.hpp>

#include "memo.hpp"

namespace gpm
{

namespace
{

struct Naturals {
};
struct FractalB {
    Index q;
    Rational phi;
};
struct ExplicitList {
    std::vector<Rational> values;
};
struct FromC {
    CSequence c;
};

struct Exponential {
};
struct Geometric {
};
struct FromB {
    BSequence b;
};
struct PhiQ {
    Rational phi;
    Index q;
};

void require_base(Index q)
{
    if (q < 2) {
        throw std::invalid_argument("modulus q must be >= 2");
    }
}

} // namespace

struct BSequence::Impl {
    using Rule = std::variant<Naturals, FractalB, ExplicitList, FromC>;
    explicit Impl(Rule r) : rule(std::move(r)) {}

    Rule rule;
    detail::MemoTable<Rational> values;
    detail::MemoTable<Rational> factorials;

    Rational compute(Index n) const
    {
        if (n == 0) {
            return {};
        }
        return std::visit(
            [n](const auto &r) -> Rational {
                using R = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<R, Naturals>) {
                    return Rational(static_cast<std::int64_t>(n));
                } else if constexpr (std::is_same_v<R, FractalB>) {
                    return fractal_b(r.q, r.phi, n);
                } else if constexpr (std::is_same_v<R, ExplicitList>) {
                    if (n >= r.values.size()) {
                        throw std::out_of_range("b_" + std::to_string(n) + " beyond explicit sequence");
                    }
                    return r.values[n];
                } else {
                    return r.c.at(n - 1) / r.c.at(n);
                }
            },
            rule);
    }
};

struct CSequence::Impl {
    using Rule = std::variant<Exponential, Geometric, FromB, PhiQ, ExplicitList>;
    explicit Impl(Rule r) : rule(std::move(r)) {}

    Rule rule;
    detail::MemoTable<Rational> values;

    Rational compute(Index n, const std::vector<Rational> &prefix) const
    {
        return std::visit(
            [n, &prefix](const auto &r) -> Rational {
                using R = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<R, Exponential>) {
                    return n == 0 ? Rational{1} : prefix[n - 1] / Rational(static_cast<std::int64_t>(n));
                } else if constexpr (std::is_same_v<R, Geometric>) {
                    return Rational{1};
                } else if constexpr (std::is_same_v<R, FromB>) {
                    return c_from_b(r.b, n);
                } else if constexpr (std::is_same_v<R, PhiQ>) {
                    return r.phi.pow(-static_cast<std::int64_t>(n / r.q));
                } else {
                    if (n >= r.values.size()) {
                        throw std::out_of_range("c_" + std::to_string(n) + " beyond explicit sequence");
                    }
                    return r.values[n];
                }
            },
            rule);
    }
};

BSequence BSequence::naturals()
{
    return BSequence(std::make_shared<Impl>(Naturals{}));
}

BSequence BSequence::fractal(Index q, Rational phi)
{
    require_base(q);
    return BSequence(std::make_shared<Impl>(FractalB{q, std::move(phi)}));
}

BSequence BSequence::explicit_values(std::vector<Rational> values)
{
    if (!values.empty()) {
        values[0] = Rational{};
    }
    return BSequence(std::make_shared<Impl>(ExplicitList{std::move(values)}));
}

BSequence BSequence::from_c(const CSequence &c)
{
    return BSequence(std::make_shared<Impl>(FromC{c}));
}

Rational BSequence::at(Index n) const
{
    return impl_->values.get(n, [this](std::size_t i, const auto &) { return impl_->compute(i); });
}

Rational BSequence::factorial(Index n) const
{
    Rational f = impl_->factorials.get(n, [this](std::size_t i, const std::vector<Rational> &prefix) {
        return i == 0 ? Rational{1} : prefix[i - 1] * at(i);
    });
    if (f.is_zero()) {
        throw ZeroFactor("b_" + std::to_string(n) + "! vanishes for " + describe() +
                         "; use the digit mask for zero matrices");
    }
    return f;
}

std::size_t BSequence::bound() const
{
    if (auto *e = std::get_if<ExplicitList>(&impl_->rule)) {
        return e->values.size();
    }
    if (auto *c = std::get_if<FromC>(&impl_->rule)) {
        return c->c.bound();
    }
    return 0;
}

std::string BSequence::describe() const
{
    return std::visit(
        [](const auto &r) -> std::string {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, Naturals>) {
                return "naturals";
            } else if constexpr (std::is_same_v<R, FractalB>) {
                return "fractal(q=" + std::to_string(r.q) + ", phi=" + r.phi.to_string() + ")";
            } else if constexpr (std::is_same_v<R, ExplicitList>) {
                return "explicit(" + std::to_string(r.values.size()) + " terms)";
            } else {
                return "from-c(" + r.c.describe() + ")";
            }
        },
        impl_->rule);
}

CSequence CSequence::exponential()
{
    return CSequence(std::make_shared<Impl>(Exponential{}));
}

CSequence CSequence::geometric()
{
    return CSequence(std::make_shared<Impl>(Geometric{}));
}

CSequence CSequence::from_b(const BSequence &b)
{
    return CSequence(std::make_shared<Impl>(FromB{b}));
}

CSequence CSequence::phi_q(Rational phi, Index q)
{
    require_base(q);
    if (phi.is_zero()) {
        throw ZeroPhi("the series c(phi, q, x) is not defined for phi = 0");
    }
    return CSequence(std::make_shared<Impl>(PhiQ{std::move(phi), q}));
}

CSequence CSequence::fractal(Index q, Rational phi)
{
    require_base(q);
    if (phi.is_zero()) {
        throw ZeroPhi("fractal c-series is not defined for phi = 0");
    }
    return from_b(BSequence::fractal(q, std::move(phi)));
}

CSequence CSequence::explicit_values(std::vector<Rational> values)
{
    if (values.empty() || !values[0].is_one()) {
        throw InvalidSequence("c-sequence must start with c_0 = 1");
    }
    if (values.size() > 1 && !values[1].is_one()) {
        throw InvalidSequence("c-sequence must have c_1 = 1");
    }
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (values[n].is_zero()) {
            throw InvalidSequence("c_" + std::to_string(n) + " is zero");
        }
    }
    return CSequence(std::make_shared<Impl>(ExplicitList{std::move(values)}));
}

Rational CSequence::at(Index n) const
{
    return impl_->values.get(n, [this](std::size_t i, const std::vector<Rational> &prefix) {
        return impl_->compute(i, prefix);
    });
}

Polynomial CSequence::series(Index max_degree) const
{
    std::vector<Rational> v;
    v.reserve(max_degree + 1);
    for (Index n = 0; n <= max_degree; ++n) {
        v.push_back(at(n));
    }
    return Polynomial(std::move(v));
}

std::size_t CSequence::bound() const
{
    if (auto *e = std::get_if<ExplicitList>(&impl_->rule)) {
        return e->values.size();
    }
    if (auto *b = std::get_if<FromB>(&impl_->rule)) {
        return b->b.bound();
    }
    return 0;
}

std::string CSequence::describe() const
{
    return std::visit(
        [](const auto &r) -> std::string {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, Exponential>) {
                return "exponential";
            } else if constexpr (std::is_same_v<R, Geometric>) {
                return "geometric";
            } else if constexpr (std::is_same_v<R, FromB>) {
                return "from-b(" + r.b.describe() + ")";
            } else if constexpr (std::is_same_v<R, PhiQ>) {
                return "phi-q(phi=" + r.phi.to_string() + ", q=" + std::to_string(r.q) + ")";
            } else {
                return "explicit(" + std::to_string(r.values.size()) + " terms)";
            }
        },
        impl_->rule);
}

Rational b_factorial(const BSequence &b, Index n)
{
    return b.factorial(n);
}

Rational c_from_b(const BSequence &b, Index n)
{
    return b.factorial(n).inverse();
}

Rational fractal_b(Index q, const Rational &phi, Index n)
{
    if (n == 0) {
        throw std::invalid_argument("fractal_b is defined for n >= 1");
    }
    return phi.pow(valuation(n, q));
}

} // namespace gpm
