#ifndef GEEZ_ERRORS_HPP
#define GEEZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geez {

// Base class for everything this library throws on domain failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raster/vector shape does not match the operation's contract.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Binary-image polarity is wrong for the requested operation.
class PolarityError : public Error {
public:
    explicit PolarityError(const std::string& what) : Error(what) {}
};

// A scan contains no ink at all (blank page).
class BlankImageError : public Error {
public:
    explicit BlankImageError(const std::string& what) : Error(what) {}
};

// Malformed file contents. `offset` is the byte position of the defect
// when it is known, -1 otherwise.
class FormatError : public Error {
public:
    FormatError(const std::string& what, long long offset = -1)
        : Error(offset >= 0 ? what + " (offset " + std::to_string(offset) + ")" : what),
          offset_(offset) {}
    long long offset() const { return offset_; }

private:
    long long offset_;
};

// Dataset directory names or manifest entries do not match the class table.
class LabelError : public Error {
public:
    explicit LabelError(const std::string& what) : Error(what) {}
};

// A class has too few samples for the requested train/test split.
class SplitError : public Error {
public:
    explicit SplitError(const std::string& what) : Error(what) {}
};

// Network output cannot be decoded to a class id.
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& what) : Error(what) {}
};

// Line-search failures: non-descent direction or no decrease at tiny steps.
class LineSearchError : public Error {
public:
    explicit LineSearchError(const std::string& what) : Error(what) {}
};

} // namespace geez

#endif
