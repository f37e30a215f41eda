#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace oceanic {

// Malformed input data: bad quota, bad weights, bad files, bad grids.
// The command line tool maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A method was asked to run outside its hypothesis (wrong shape, not an
// ocean-majority game, size limits exceeded). Exit code 2 in the tool.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace oceanic
