#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Base of every error the library throws on bad input or blown limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or law-violating input: a non-bijective permutation, an action
/// table with x.e != x, an index out of range, a spec that does not parse.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed one of the configured size limits.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error("cap exceeded: " + what + " (" + std::to_string(requested) +
              " > " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Size limits shared by every construction.
struct Limits {
  std::size_t max_elements = 20'000;       // group order
  std::size_t max_morphisms = 200'000;     // groupoid morphism count
  std::size_t max_compositions = 25'000'000;  // stored composable pairs
  std::size_t max_iso_order = 64;          // automorphism order for iso search
  // Full Cayley tables are materialized up to this order; above it products
  // are computed on demand.
  std::size_t cayley_table_order = 2048;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace burnside
