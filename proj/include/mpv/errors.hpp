#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mpv {

// Base error. exit_code() drives the CLI's documented exit status mapping:
//   2 = parse / schema / scaling, 3 = logarithmic pole, 4 = precondition,
//   5 = internal consistency assertion.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const { return 4; }
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position = npos)
        : Error(position == npos ? msg : msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    int exit_code() const override { return 2; }
    std::size_t position() const { return position_; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class SchemaError : public ParseError {
public:
    using ParseError::ParseError;
};

// Fractional exponent whose denominator does not divide the scaling integer m.
class ScalingError : public ParseError {
public:
    using ParseError::ParseError;
};

class LogarithmicPole : public Error {
public:
    explicit LogarithmicPole(std::vector<std::string> components)
        : Error("logarithmic pole: alpha = 0 on " + join(components)),
          components_(std::move(components)) {}
    int exit_code() const override { return 3; }
    const std::vector<std::string>& components() const { return components_; }

private:
    static std::string join(const std::vector<std::string>& ids) {
        std::string out;
        for (const auto& id : ids) {
            if (!out.empty()) out += ", ";
            out += id;
        }
        return out;
    }
    std::vector<std::string> components_;
};

class InversionOfZero : public Error {
public:
    InversionOfZero() : Error("inversion of zero") {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(const std::string& msg) : Error(msg) {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& msg) : Error(msg) {}
};

class MissingRealization : public Error {
public:
    explicit MissingRealization(const std::string& msg) : Error(msg) {}
};

class MissingResolutionData : public Error {
public:
    explicit MissingResolutionData(const std::string& msg) : Error(msg) {}
};

class NotConvergent : public Error {
public:
    explicit NotConvergent(const std::string& msg) : Error(msg) {}
};

class InadmissibleShift : public Error {
public:
    explicit InadmissibleShift(const std::string& msg) : Error(msg) {}
};

class NotUnitComponent : public Error {
public:
    explicit NotUnitComponent(const std::string& msg) : Error(msg) {}
};

class InvalidCenter : public Error {
public:
    explicit InvalidCenter(const std::string& msg) : Error(msg) {}
};

class ExhaustedDoublePoint : public Error {
public:
    explicit ExhaustedDoublePoint(const std::string& msg) : Error(msg) {}
};

class UnknownStratum : public Error {
public:
    explicit UnknownStratum(const std::string& msg) : Error(msg) {}
};

class ConstraintViolated : public Error {
public:
    explicit ConstraintViolated(const std::string& msg) : Error(msg) {}
};

// A cross-check between two routes that must agree did not. Reaching this is a
// bug in the engine, never a property of the input.
class InternalCheckFailure : public Error {
public:
    explicit InternalCheckFailure(const std::string& msg) : Error(msg) {}
    int exit_code() const override { return 5; }
};

} // namespace mpv
