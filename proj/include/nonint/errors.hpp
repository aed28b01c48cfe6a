// errors.hpp -- exception hierarchy shared by all analyzer components.
#pragma once

#include <stdexcept>
#include <string>

namespace nonint {

// Base of everything thrown on purpose by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: mixed variables, incompatible lattices, malformed input.
class structural_error : public error {
public:
    using error::error;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

// The invariant-plane polynomial has a repeated root; the analysis refuses.
class repeated_roots_error : public error {
public:
    using error::error;
};

// A singular point is not regular, so no Frobenius expansion exists there.
class irregular_singularity_error : public error {
public:
    using error::error;
};

// The indicial equation cannot be solved to an exact rational exponent pair.
class degenerate_indicial_error : public error {
public:
    using error::error;
};

// Finite-point exponents cannot be derived by the structural rule.
class finite_exponent_unknown_error : public error {
public:
    using error::error;
};

// A candidate fundamental pair has vanishing Wronskian.
class dependent_solutions_error : public error {
public:
    using error::error;
};

// A coefficient at or beyond the truncation bound was requested.
class precision_error : public error {
public:
    precision_error(const std::string& what, long required_terms)
        : error(what), required_terms(required_terms) {}
    long required_terms; // re-expansion hint, in lattice steps
};

class internal_error : public error {
public:
    using error::error;
};

} // namespace nonint
