#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tubealg {

// Outcome of an exhaustive (or sampled) verifier. A failure always names the
// relation that broke and carries the offending tuple.
struct CheckResult {
    bool passed = true;
    std::string relation;
    std::vector<std::int64_t> witness;
    std::string detail;
    std::size_t cases = 0;  // number of tuples examined

    explicit operator bool() const { return passed; }

    static CheckResult pass(std::size_t cases = 0) {
        CheckResult r;
        r.cases = cases;
        return r;
    }
    static CheckResult fail(std::string relation, std::vector<std::int64_t> witness,
                            std::string detail = {}) {
        CheckResult r;
        r.passed = false;
        r.relation = std::move(relation);
        r.witness = std::move(witness);
        r.detail = std::move(detail);
        return r;
    }
};

// Malformed input: bad tables, labels violating their constraint, failed
// preconditions. Carries a witness tuple like CheckResult does.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& what, std::vector<std::int64_t> witness = {})
        : std::invalid_argument(what), witness_(std::move(witness)) {}

    const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
    std::vector<std::int64_t> witness_;
};

}  // namespace tubealg
