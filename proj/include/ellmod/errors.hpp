#pragma once

#include <stdexcept>
#include <string>

namespace ellmod {

// Input outside the range an operation is defined on (c < 2, g < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configuration whose numerical data contradicts itself.
class InconsistentConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operation is valid mathematically but not covered here.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TableUnavailable : public std::runtime_error {
public:
    TableUnavailable() : std::runtime_error("table unavailable") {}
    explicit TableUnavailable(const std::string& what) : std::runtime_error("table unavailable: " + what) {}
};

class TableFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ellmod
