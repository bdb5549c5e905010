#include <gpm/report.hpp>

namespace gpm
{

void Report::expect(bool ok, const std::function<Fields()> &describe)
{
    ++checked;
    if (!ok && pass) {
        pass = false;
        counterexample = describe();
    } else if (!ok) {
        pass = false;
    }
}

void Report::fail(Fields fields)
{
    if (pass) {
        counterexample = std::move(fields);
    }
    pass = false;
}

void Report::absorb(const Report &sub)
{
    checked += sub.checked;
    if (!sub.pass) {
        if (pass) {
            Fields f;
            f.emplace_back("check", sub.suite);
            if (sub.counterexample) {
                f.insert(f.end(), sub.counterexample->begin(), sub.counterexample->end());
            }
            counterexample = std::move(f);
        }
        pass = false;
    }
}

} // namespace gpm
