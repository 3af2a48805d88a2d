#ifndef QWZ_ERRORS_HPP
#define QWZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwz {

struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

struct Divergent : std::runtime_error {
    explicit Divergent(const std::string& what) : std::runtime_error(what) {}
};

struct Overflow : std::runtime_error {
    explicit Overflow(const std::string& what) : std::runtime_error(what) {}
};

struct NotProper : std::runtime_error {
    explicit NotProper(const std::string& what) : std::runtime_error(what) {}
};

struct NotSummable : std::runtime_error {
    explicit NotSummable(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTerm : std::runtime_error {
    explicit InvalidTerm(const std::string& what) : std::runtime_error(what) {}
};

struct NoFirstOrder : std::runtime_error {
    explicit NoFirstOrder(const std::string& what) : std::runtime_error(what) {}
};

struct CertificationFailed : std::runtime_error {
    explicit CertificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct UnbalancedLimit : std::runtime_error {
    explicit UnbalancedLimit(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateParameters : std::runtime_error {
    explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionViolated : std::runtime_error {
    explicit ConditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionUnsatisfiable : std::runtime_error {
    explicit ConditionUnsatisfiable(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qwz

#endif
