#pragma once

#include <stdexcept>
#include <string>

namespace padezeta {

// Base class for all library errors; carries a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error("invalid_params", msg) {}
};

struct DivisionFailure : Error {
    explicit DivisionFailure(const std::string& msg) : Error("division_failure", msg) {}
};

struct IntegralityFailure : Error {
    explicit IntegralityFailure(const std::string& msg) : Error("integrality_failure", msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg) : Error("pole_at_point", msg) {}
};

struct PrecisionNotReached : Error {
    explicit PrecisionNotReached(const std::string& msg) : Error("precision_not_reached", msg) {}
};

struct DivergentXi1 : Error {
    explicit DivergentXi1(const std::string& msg) : Error("divergent_xi1", msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error("precondition_violated", msg) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& msg) : Error("rank_deficient", msg) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& msg) : Error("hypothesis_violated", msg) {}
};

struct CacheError : Error {
    explicit CacheError(const std::string& msg) : Error("cache_error", msg) {}
};

} // namespace padezeta
