#pragma once

#include <stdexcept>
#include <string>

namespace mdep {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

struct BudgetError : Error {
    double estimate;
    BudgetError(const std::string& msg, double est) : Error(msg), estimate(est) {}
};

struct UndecidedError : Error {
    explicit UndecidedError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

}  // namespace mdep
