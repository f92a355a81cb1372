#pragma once

#include <stdexcept>
#include <string>

namespace connmat {

/// An operation would exceed a configured size cap (Bell-number blowup,
/// matrix dimension, edge-count guards). The CLI maps this to exit code 3.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched ground sets, invalid permutations, out-of-range nodes.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed partition, order-file or graph-file text.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace connmat
