#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>

namespace tabcrystal {

/// Outcome of an exhaustive verification: how many individual assertions ran
/// and, on failure, the first one that did not hold.
struct VerificationReport {
    std::string name;
    std::size_t checks = 0;
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }

    /// Records a check; keeps only the first failure. `what` is either a
    /// string or a nullary callable producing one (evaluated on failure only).
    template <class What>
    void expect(bool ok, What&& what) {
        ++checks;
        if (ok || counterexample)
            return;
        if constexpr (std::is_invocable_v<What>)
            counterexample = std::string(what());
        else
            counterexample = std::string(what);
    }

    /// Folds another report's count and first failure into this one.
    void absorb(const VerificationReport& other) {
        checks += other.checks;
        if (!counterexample && other.counterexample)
            counterexample = other.name + ": " + *other.counterexample;
    }
};

}  // namespace tabcrystal
