#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace confcarbon {

// Base of every error the toolkit reports. The CLI maps IoError to exit code 2
// and every other Error to exit code 1.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

class IntegrityError : public Error
{
public:
    using Error::Error;
};

class InvalidCoordinate : public Error
{
public:
    using Error::Error;
};

// Collects every failed field of an input instead of stopping at the first one.
class ValidationError : public Error
{
public:
    explicit ValidationError(std::vector<std::string> issues);

    const std::vector<std::string>& issues() const noexcept { return _issues; }

private:
    std::vector<std::string> _issues;
};

class UnknownCountry : public Error
{
public:
    explicit UnknownCountry(std::string countryCode, std::string context = {});

    const std::string& country_code() const noexcept { return _countryCode; }

private:
    std::string _countryCode;
};

class UnknownAirport : public Error
{
public:
    using Error::Error;
};

class UnknownAirportOverride : public UnknownAirport
{
public:
    using UnknownAirport::UnknownAirport;
};

class EmptyDataset : public Error
{
public:
    using Error::Error;
};

class EmptyTravelers : public Error
{
public:
    using Error::Error;
};

class EmptyCapitals : public Error
{
public:
    using Error::Error;
};

class EmptyRecords : public Error
{
public:
    using Error::Error;
};

class UndefinedSavings : public Error
{
public:
    using Error::Error;
};

}
