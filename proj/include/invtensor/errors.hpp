#pragma once

#include <stdexcept>
#include <string>

namespace invtensor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRank : Error {
    using Error::Error;
};
struct NotProportional : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct BadPrime : Error {
    using Error::Error;
};
struct PrimeDisagreement : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct WrongFamily : Error {
    using Error::Error;
};

} // namespace invtensor
