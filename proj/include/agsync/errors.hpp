#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace agsync {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input validation.

class OutOfRangeEntry : public Error {
public:
    OutOfRangeEntry(std::size_t state, std::size_t letter, std::int64_t value);
    std::size_t state;
    std::size_t letter;
    std::int64_t value;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Resource guards. These map to the "refusal" exit code of the CLI.

class LimitExceeded : public Error {
public:
    LimitExceeded(std::size_t n, std::size_t limit);
    std::size_t n;
    std::size_t limit;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string &required, std::uint64_t budget);
    std::uint64_t budget;
};

class RejectionExhausted : public Error {
public:
    explicit RejectionExhausted(std::uint64_t attempts);
    std::uint64_t attempts;
};

class DomainTooSmall : public Error {
public:
    using Error::Error;
};

class UnknownFixture : public Error {
public:
    using Error::Error;
};

// Theorem checks. Any of these being thrown means a bug in the pair analysis
// or in the structural code, never bad input.

class NotTransitive : public Error {
public:
    NotTransitive(std::size_t p, std::size_t q, std::size_t r);
    std::size_t p, q, r;
};

class NotCongruence : public Error {
public:
    NotCongruence(std::size_t class_index, std::size_t letter);
    std::size_t class_index;
    std::size_t letter;
};

class BulletViolation : public Error {
public:
    BulletViolation(int bullet, const std::string &witness);
    int bullet;
};

class LemmaViolation : public Error {
public:
    using Error::Error;
};

} // namespace agsync
