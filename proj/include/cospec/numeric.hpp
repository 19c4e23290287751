#ifndef COSPEC_NUMERIC_HPP
#define COSPEC_NUMERIC_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

// Eigen needs NumTraits for the GMP scalars before any matrix of them is
// instantiated.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace cospec {

/// Exact arbitrary-precision integer; never overflows.
using Int = mpz_class;
/// Exact rational, kept canonical by GMP.
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using I64Vector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Thrown when a computed quantity contradicts an invariant the underlying
/// theory guarantees. Always indicates an implementation bug, never bad input.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace cospec

#endif  // COSPEC_NUMERIC_HPP
