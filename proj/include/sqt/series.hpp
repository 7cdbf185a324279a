#pragma once

#include <string>
#include <vector>

#include "sqt/lattice.hpp"

namespace sqt {

struct SeriesTruncation {
    long order = 0;               // N
    std::vector<Int> coeff;      // c_0 .. c_N

    bool operator==(const SeriesTruncation& o) const = default;
    std::string str() const;
};

// c_d = #{ (u,v) in N^n x N^n : Au = Av, |u|+|v| = d }
SeriesTruncation offshell_dims(const IntMatrix& a, long degree_bound);

// off-shell series times (1 - t^2)^ell; throws ArgumentError on a negative
// coefficient (the regular-sequence hypothesis failed).
SeriesTruncation onshell_dims(const IntMatrix& a, long degree_bound);

// numerator (coefficient list, index = degree) over prod (1 - t^{d_i})
SeriesTruncation expand_rational(const std::vector<Int>& numerator,
                                 const std::vector<long>& denominator_degrees, long order);

bool series_equal(const SeriesTruncation& a, const SeriesTruncation& b);

} // namespace sqt
