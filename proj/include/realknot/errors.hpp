#pragma once

#include <stdexcept>
#include <string>

namespace realknot {

// Base for every domain error; kind() is the machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define REALKNOT_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    };

REALKNOT_ERROR(ZeroPolynomial)
REALKNOT_ERROR(InvalidInput)
REALKNOT_ERROR(NonNodalError)
REALKNOT_ERROR(ProjectionError)
REALKNOT_ERROR(GenericityFailure)
REALKNOT_ERROR(DegenerateCrossing)
REALKNOT_ERROR(InternalInconsistency)
REALKNOT_ERROR(MissingSignData)
REALKNOT_ERROR(MoveNotApplicable)
REALKNOT_ERROR(LiftSingular)
REALKNOT_ERROR(ResolutionFailure)
REALKNOT_ERROR(ParityError)
REALKNOT_ERROR(DegenerateInput)

#undef REALKNOT_ERROR

}  // namespace realknot
