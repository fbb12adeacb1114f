#pragma once

#include <stdexcept>
#include <string>

namespace hetho
{
//! Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Root bracketing found no RSS-difference crossing on one side of the pico.
class NoBoundaryError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Offsets whose circles do not come out strictly nested.
class InconsistentOffsetsError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Bad or unresolvable configuration; carries the offending key.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, std::string const& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what)
        , key_(std::move(key))
    {
    }

    std::string const& key() const noexcept { return key_; }

  private:
    std::string key_;
};
}  // namespace hetho
