// beurling-lab: error taxonomy shared by library, CLI and tests.
//
// The CLI maps these onto exit codes: validation-type failures exit 2,
// precision/resource failures exit 3, bad command lines exit 64.

#ifndef BEURLING_ERRORS_HPP
#define BEURLING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beurling {

// Bad argument, out-of-range query, violated precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

// Experiment parameter cannot work (e.g. K too small for a phase solve).
struct parameter_error : domain_error {
    explicit parameter_error(const std::string& m) : domain_error(m) {}
};

// A contour/box is placed so that the computation cannot be certified.
struct geometry_error : domain_error {
    explicit geometry_error(const std::string& m) : domain_error(m) {}
};

// Two routes that must agree do not (e.g. winding count vs known zeros).
struct consistency_error : domain_error {
    explicit consistency_error(const std::string& m) : domain_error(m) {}
};

// Wrong call pattern of an operation.
struct usage_error : domain_error {
    explicit usage_error(const std::string& m) : domain_error(m) {}
};

// Working precision or quadrature resolution insufficient for the request.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

// Memory or size budget exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace beurling

#endif
