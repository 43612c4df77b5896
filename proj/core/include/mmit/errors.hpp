#pragma once

#include <stdexcept>
#include <string>

namespace mmit {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    Success = 0,
    ConfigError = 2,
    NoConvergence = 3,
    SingularOrPole = 4,
};

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail, ExitCode code)
        : std::runtime_error(detail), kind_(std::move(kind)), code_(code) {}

    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
    [[nodiscard]] ExitCode exit_code() const noexcept { return code_; }

private:
    std::string kind_;
    ExitCode code_;
};

// Parameter validation.
class ParamError : public Error {
public:
    ParamError(std::string kind, std::string field)
        : Error(std::move(kind), kind_detail(field), ExitCode::ConfigError),
          field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    static std::string kind_detail(const std::string& field) { return "field=" + field; }
    std::string field_;
};

class NonPositiveRate : public ParamError {
public:
    explicit NonPositiveRate(std::string field) : ParamError("NonPositiveRate", std::move(field)) {}
};

class NonFiniteValue : public ParamError {
public:
    explicit NonFiniteValue(std::string field) : ParamError("NonFiniteValue", std::move(field)) {}
};

// Configuration loading.
class ConfigError : public Error {
public:
    ConfigError(std::string kind, const std::string& detail)
        : Error(std::move(kind), detail, ExitCode::ConfigError) {}
};

class ParseError : public ConfigError {
public:
    ParseError(int line, const std::string& detail)
        : ConfigError("ParseError", "line=" + std::to_string(line) + " " + detail), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

class MissingField : public ConfigError {
public:
    explicit MissingField(const std::string& name)
        : ConfigError("MissingField", "field=" + name), name_(name) {}
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ConflictingModes : public ConfigError {
public:
    explicit ConflictingModes(const std::string& detail) : ConfigError("ConflictingModes", detail) {}
};

// Numerical failures.
class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double residual)
        : Error("NoConvergence",
                "iterations=" + std::to_string(iterations) + " residual=" + std::to_string(residual),
                ExitCode::NoConvergence),
          iterations_(iterations), residual_(residual) {}

    [[nodiscard]] int iterations() const noexcept { return iterations_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(double delta)
        : Error("SingularSystem", "delta_rad_s=" + std::to_string(delta), ExitCode::SingularOrPole),
          delta_(delta) {}
    [[nodiscard]] double delta() const noexcept { return delta_; }

private:
    double delta_;
};

class PoleEncountered : public Error {
public:
    PoleEncountered(const std::string& where, double delta)
        : Error("PoleEncountered", where + " delta_rad_s=" + std::to_string(delta),
                ExitCode::SingularOrPole),
          delta_(delta) {}
    [[nodiscard]] double delta() const noexcept { return delta_; }

private:
    double delta_;
};

class UnwrapAmbiguity : public Error {
public:
    explicit UnwrapAmbiguity(std::size_t index)
        : Error("UnwrapAmbiguity", "index=" + std::to_string(index), ExitCode::ConfigError),
          index_(index) {}
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace mmit
