#ifndef GPM_REPORT_HPP
#define GPM_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpm
{

// Outcome of a verification routine: pass/fail, the first counterexample
// found (ordered key/value pairs) and the number of individual checks.
struct Report {
    using Fields = std::vector<std::pair<std::string, std::string>>;

    std::string suite;
    bool pass = true;
    std::optional<Fields> counterexample;
    std::uint64_t checked = 0;

    explicit Report(std::string name = {}) : suite(std::move(name)) {}

    // Counts one check; records the first failure only.
    void expect(bool ok, const std::function<Fields()> &describe);
    void fail(Fields fields);

    // Adds the checks of a sub-report and adopts its counterexample if this
    // report has none yet. The sub-suite name is kept under "check".
    void absorb(const Report &sub);
};

} // namespace gpm

#endif
