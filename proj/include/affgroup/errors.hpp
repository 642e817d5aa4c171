#pragma once

#include <stdexcept>
#include <string>

namespace affgroup {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct InvalidChartPoint : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct ChartMismatch : Error {
    using Error::Error;
};

struct NonFiniteSample : Error {
    using Error::Error;
};

struct EmptySearchBox : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace affgroup
