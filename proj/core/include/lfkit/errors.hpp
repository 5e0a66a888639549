#pragma once

#include <stdexcept>
#include <string>

namespace lfkit {

/// Base class for every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Zero or negative dimension, or a channel count outside {1, 3}.
class InvalidDimensionError : public Error {
    using Error::Error;
};

/// An index (view, pixel, fixed EPI coordinate) outside its valid bounds.
class IndexError : public Error {
    using Error::Error;
};

/// Macro-pixel size k outside [1, min(U, V)].
class TradeoffError : public Error {
    using Error::Error;
};

/// Crop policy asked to produce an empty image (spatial grid smaller than k).
class EmptyOutputError : public Error {
    using Error::Error;
};

/// Shape mismatch: indivisible mosaic, kernel larger than padded input, ...
class GeometryError : public Error {
    using Error::Error;
};

/// A texture read outside the texture extent (no implicit wrapping).
class OutOfRangeError : public Error {
    using Error::Error;
};

/// Reference/target views that differ on both angular axes.
class BaselineError : public Error {
    using Error::Error;
};

/// EPI with too few views for a slope fit.
class InsufficientViewsError : public Error {
    using Error::Error;
};

/// Invalid operation parameter (empty search range, unknown category, ...).
class ParameterError : public Error {
    using Error::Error;
};

/// File system or codec failure.
class IoError : public Error {
    using Error::Error;
};

} // namespace lfkit
