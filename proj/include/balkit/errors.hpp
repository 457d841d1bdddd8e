#pragma once

#include <stdexcept>
#include <string>

namespace balkit {

// Exit-code contract used by the CLI: input 2, precondition 3, convergence 4.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class precondition_error : public std::domain_error {
public:
    explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an adaptive scheme exhausts its budget; carries the partial value.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial_value(partial), error_estimate(error_estimate) {}

    double partial_value = 0.0;
    double error_estimate = 0.0;
};

} // namespace balkit
