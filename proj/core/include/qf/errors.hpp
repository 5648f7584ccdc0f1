#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Violation of a mathematical precondition or an unsatisfiable request
// (e.g. realizing invariants with odd parity).  CLI maps these to exit 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A p-adic computation would have to report fewer significant digits than
// the documented floor, or received inputs with no usable digits.
class precision_error : public domain_error {
public:
    explicit precision_error(const std::string& what) : domain_error(what) {}
};

// Malformed textual/JSON input.  CLI maps these to exit 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qf
