#pragma once

#include <stdexcept>
#include <string>

namespace mteg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown preset, design or parameter name.
class LookupError : public Error {
public:
    using Error::Error;
};

// An argument outside an operation's documented domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

class CalibrationError : public Error {
public:
    using Error::Error;
};

// Requested stoichiometry outside the bath window covered by data.
class ExtrapolationError : public Error {
public:
    using Error::Error;
};

// Explicit time step larger than the diffusion stability bound.
class StabilityError : public Error {
public:
    using Error::Error;
};

// Surface concentration of the tracked ion reached zero during a pulse.
class DepletionError : public Error {
public:
    DepletionError(double time_s, const std::string& what)
        : Error(what), time_s_(time_s) {}

    double time() const noexcept { return time_s_; }

private:
    double time_s_;
};

// A sweep or comparison entry failed; carries the parameter value or the
// design name that triggered it.
class EvaluationError : public Error {
public:
    EvaluationError(std::string subject, const std::string& what)
        : Error(what), subject_(std::move(subject)) {}

    const std::string& subject() const noexcept { return subject_; }

private:
    std::string subject_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Configuration errors carry the dotted path of the offending field
// ("design.leg_length_um", "designs[1].p_material").
class ConfigError : public Error {
public:
    ConfigError(std::string field_path, const std::string& what)
        : Error(field_path.empty() ? what : field_path + ": " + what),
          field_path_(std::move(field_path)) {}

    const std::string& field_path() const noexcept { return field_path_; }

private:
    std::string field_path_;
};

class ConfigFileError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ConfigSyntaxError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ConfigValidationError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

} // namespace mteg
