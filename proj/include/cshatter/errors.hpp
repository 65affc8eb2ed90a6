#pragma once

#include <stdexcept>
#include <string>

namespace cshatter {

// Recoverable domain failures. Each carries a stable name so front ends can
// report the condition without parsing message text.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define CSHATTER_DOMAIN_ERROR(Name)                                   \
    class Name : public DomainError {                                 \
    public:                                                           \
        explicit Name(const std::string& what)                        \
            : DomainError(#Name, what) {}                             \
    }

CSHATTER_DOMAIN_ERROR(NonRealResult);     // inverse transform of an asymmetric spectrum
CSHATTER_DOMAIN_ERROR(InvalidSparsity);   // requested sparsity exceeds floor(n/2)
CSHATTER_DOMAIN_ERROR(NotCoprime);        // permutation parameter shares a factor with n
CSHATTER_DOMAIN_ERROR(BadBankShape);      // filter count incompatible with signal length
CSHATTER_DOMAIN_ERROR(LengthMismatch);    // spectrum length differs from bank length
CSHATTER_DOMAIN_ERROR(ShatterCollision);  // a filter captured more than one frequency
CSHATTER_DOMAIN_ERROR(NoValidSigma);      // no permutation parameter de-clusters the support
CSHATTER_DOMAIN_ERROR(OffGridAngle);      // recovered angle is not on the sensing grid
CSHATTER_DOMAIN_ERROR(BadDimensions);     // matrix/vector sizes inconsistent or too large
CSHATTER_DOMAIN_ERROR(NoConvergence);     // pursuit exhausted its budget with a large residual

#undef CSHATTER_DOMAIN_ERROR

}  // namespace cshatter
