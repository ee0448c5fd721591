#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qbeh {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs passed with incompatible or invalid shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A requested result would exceed the memory budget (Kronecker blow-up guard).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Parameter or construction-time validation failure (bad values, NaN entries, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A matrix required to be symmetric drifted beyond the tolerance.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// An operation that assumes a stable coefficient matrix was given one that is not.
class StabilityError : public Error {
public:
    StabilityError(const std::string& what, double abscissa)
        : Error(what), spectral_abscissa(abscissa) {}

    double spectral_abscissa;
};

/// A numerical routine finished but failed its accuracy contract.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, double achieved = 0.0)
        : Error(what), achieved_residual(achieved) {}

    double achieved_residual;
};

/// The fixed-point iteration left its basin: residual grew far past its running minimum.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::vector<double> history)
        : Error(what), residual_history(std::move(history)) {}

    std::vector<double> residual_history;
};

/// A theorem-mode starting pair violated one of the required matrix inequalities.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, double min_eig)
        : Error(what), min_eigenvalue(min_eig) {}

    double min_eigenvalue;
};

/// File could not be parsed; carries the file name and 1-based line number.
class FormatError : public Error {
public:
    FormatError(const std::string& file, long line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file_name(file), line_number(line) {}

    std::string file_name;
    long line_number;
};

/// Simulated state norm exceeded the blow-up threshold.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double time)
        : Error(what), first_offending_time(time) {}

    double first_offending_time;
};

} // namespace qbeh
