#pragma once

#include <stdexcept>
#include <string>

namespace hgr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonMosaicFloorplan : Error {
    using Error::Error;
};
struct DegenerateCross : Error {
    using Error::Error;
};
struct ZeroPitch : Error {
    using Error::Error;
};
struct EdgeSaturated : Error {
    using Error::Error;
};
struct OverflowRejected : Error {
    using Error::Error;
};
struct IsolatedPin : Error {
    using Error::Error;
};
struct LocalOverflow : Error {
    using Error::Error;
};
struct AssignmentFailed : Error {
    using Error::Error;
};
struct EmptySnapshot : Error {
    using Error::Error;
};
struct TooManyPins : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_ = 0)
        : Error("parse error at line " + std::to_string(line_) + ": " + msg),
          line(line_),
          column(column_) {}
};

struct ValidationError : Error {
    using Error::Error;
};

}  // namespace hgr
