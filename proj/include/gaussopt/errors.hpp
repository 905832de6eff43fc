#pragma once

#include <stdexcept>
#include <string>

namespace gaussopt {

/// Data cannot identify the model (rank-deficient design, collapsed spans).
class DegenerateDataError : public std::runtime_error {
public:
    explicit DegenerateDataError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form prediction fell outside the model's valid region.
class OutOfDomainError : public std::runtime_error {
public:
    explicit OutOfDomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A required file is missing or cannot be parsed.
class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaussopt
