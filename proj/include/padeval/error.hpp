#pragma once

#include <stdexcept>
#include <string>

namespace padeval {

// Two error families, mapped to process exit codes by the CLI:
// validation errors (bad data, contract violations) exit with 1,
// I/O and parse errors exit with 2.

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public IoError {
public:
    explicit ParseError(const std::string& what) : IoError(what) {}
};

// manifest
class DuplicateIdError : public ValidationError {
public:
    explicit DuplicateIdError(const std::string& what) : ValidationError(what) {}
};

class InvalidEnumError : public ValidationError {
public:
    explicit InvalidEnumError(const std::string& what) : ValidationError(what) {}
};

class TaxonomyError : public ValidationError {
public:
    explicit TaxonomyError(const std::string& what) : ValidationError(what) {}
};

// protocol
class EmptyHoldoutError : public ValidationError {
public:
    explicit EmptyHoldoutError(const std::string& what) : ValidationError(what) {}
};

class MissingBonafideError : public ValidationError {
public:
    explicit MissingBonafideError(const std::string& what) : ValidationError(what) {}
};

class UnknownDatasetError : public ValidationError {
public:
    explicit UnknownDatasetError(const std::string& what) : ValidationError(what) {}
};

class MissingSpectrumError : public ValidationError {
public:
    explicit MissingSpectrumError(const std::string& what) : ValidationError(what) {}
};

class OneClassTrainError : public ValidationError {
public:
    explicit OneClassTrainError(const std::string& what) : ValidationError(what) {}
};

// metrics / separability
class OneClassError : public ValidationError {
public:
    explicit OneClassError(const std::string& what) : ValidationError(what) {}
};

class DimensionMismatchError : public ValidationError {
public:
    explicit DimensionMismatchError(const std::string& what) : ValidationError(what) {}
};

class DegenerateDispersionError : public ValidationError {
public:
    explicit DegenerateDispersionError(const std::string& what) : ValidationError(what) {}
};

class ZeroBaselineError : public ValidationError {
public:
    explicit ZeroBaselineError(const std::string& what) : ValidationError(what) {}
};

}  // namespace padeval
