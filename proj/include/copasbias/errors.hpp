#pragma once

#include <stdexcept>
#include <string>

namespace copasbias {

// Input-data problem (CSV rows, config files). Maps to CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class CsvError : public DataError {
public:
    CsvError(const std::string& msg, long line) : DataError(msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class ConfigError : public DataError {
public:
    explicit ConfigError(const std::string& msg) : DataError(msg) {}
};

// Numerical failure (estimation, calibration). Maps to CLI exit code 3.
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& msg) : std::runtime_error(msg) {}
};

class CalibrationError : public EstimationError {
public:
    CalibrationError(const std::string& msg, double min_rate, double max_rate)
        : EstimationError(msg), min_rate_(min_rate), max_rate_(max_rate) {}
    // Achievable publication-rate range for the requested mechanism.
    double min_rate() const { return min_rate_; }
    double max_rate() const { return max_rate_; }

private:
    double min_rate_;
    double max_rate_;
};

}  // namespace copasbias
