#ifndef HEIGHTLAB_ERRORS_HPP
#define HEIGHTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heightlab {

// Base of all typed domain errors. `kind()` is the stable identifier the
// CLI reports; the message is one line, human-readable.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HEIGHTLAB_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                           \
    public:                                                                \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}       \
    }

HEIGHTLAB_DEFINE_ERROR(FactorDegreeExceeded);
HEIGHTLAB_DEFINE_ERROR(NotAUnit);
HEIGHTLAB_DEFINE_ERROR(SupportsNotDisjoint);
HEIGHTLAB_DEFINE_ERROR(DegenerateMap);
HEIGHTLAB_DEFINE_ERROR(NotMoebius);
HEIGHTLAB_DEFINE_ERROR(OpenContour);
HEIGHTLAB_DEFINE_ERROR(SingularityOnPath);
HEIGHTLAB_DEFINE_ERROR(NoConvergence);
HEIGHTLAB_DEFINE_ERROR(RoundingAmbiguous);
HEIGHTLAB_DEFINE_ERROR(GeneralPositionFailure);
HEIGHTLAB_DEFINE_ERROR(IndeterminateRestriction);
HEIGHTLAB_DEFINE_ERROR(NotOnCurve);
HEIGHTLAB_DEFINE_ERROR(PrecisionUnreachable);
HEIGHTLAB_DEFINE_ERROR(ZeroElement);
HEIGHTLAB_DEFINE_ERROR(VerificationFailed);
HEIGHTLAB_DEFINE_ERROR(SyntaxError);
HEIGHTLAB_DEFINE_ERROR(InvalidArgument);

#undef HEIGHTLAB_DEFINE_ERROR

} // namespace heightlab

#endif
