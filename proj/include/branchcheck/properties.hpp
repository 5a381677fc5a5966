#pragma once

#include <cstdint>
#include <random>

#include "branchcheck/report.hpp"
#include "branchcheck/weylalg.hpp"

namespace branchcheck {

/// Random algebra elements drawn from raw mt19937_64 output only, so a seed
/// gives the same cases on every platform.
class RandomAlgebra {
   public:
    explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

    long small(long lo, long hi);
    Rational rational();
    ParamScalar scalar();
    /// Polynomial in the parameters, no denominator.
    ParamScalar poly_scalar();
    ParamScalar nonzero_scalar();
    GeoPoly poly(const VarSet& vars, int max_degree = 3, int max_terms = 4);
    DiffOp op(const VarSet& vars, int max_order = 2, int max_terms = 3);
    std::vector<OpSymbol> word(const VarSet& vars, int max_len = 5);

   private:
    std::mt19937_64 rng_;
};

struct PropertyCounts {
    int cases = 0;
    int failures = 0;
    int first_failure = -1;
};

PropertyCounts check_associativity(RandomAlgebra& g, int cases);
PropertyCounts check_apply_compose(RandomAlgebra& g, int cases);
PropertyCounts check_jacobi_identity(RandomAlgebra& g, int cases);
PropertyCounts check_confluence(RandomAlgebra& g, int cases);
PropertyCounts check_field_axioms(RandomAlgebra& g, int cases);

/// One record per property, each over `cases` cases from one seeded stream.
Records property_suite(std::uint64_t seed, int cases = 200);

}  // namespace branchcheck
