#ifndef SUBCOUNT_TYPES_HPP
#define SUBCOUNT_TYPES_HPP

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace subcount {

// All subgroup counts are exact; GMP keeps them exact past 64 bits.
using Int = mpz_class;

using u64 = std::uint64_t;

// Thrown when an operation would exceed a configured enumeration bound
// (e.g. brute-force subgroup listing of a too-large group).
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subcount

#endif  // SUBCOUNT_TYPES_HPP
