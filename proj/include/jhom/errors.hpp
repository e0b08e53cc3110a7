#ifndef JHOM_ERRORS_HPP
#define JHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jhom {

struct AxiomViolation : std::runtime_error {
    explicit AxiomViolation(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

struct FamilyMismatch : std::runtime_error {
    explicit FamilyMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotTraceClass : std::runtime_error {
    explicit NotTraceClass(const std::string& what) : std::runtime_error(what) {}
};

struct ShiftPartPresent : std::runtime_error {
    explicit ShiftPartPresent(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ModularDisagreement : std::runtime_error {
    explicit ModularDisagreement(const std::string& what) : std::runtime_error(what) {}
};

struct NotFreeCommutative : std::runtime_error {
    explicit NotFreeCommutative(const std::string& what) : std::runtime_error(what) {}
};

struct InternalMismatch : std::runtime_error {
    explicit InternalMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotInSubalgebra : std::runtime_error {
    explicit NotInSubalgebra(const std::string& what) : std::runtime_error(what) {}
};

struct ModeOutOfWindow : std::runtime_error {
    explicit ModeOutOfWindow(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jhom

#endif
