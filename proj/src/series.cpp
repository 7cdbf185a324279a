#include "sqt/series.hpp"

#include <map>
#include <sstream>

namespace sqt {

std::string SeriesTruncation::str() const {
    std::ostringstream out;
    out << "[";
    for (long d = 0; d <= order; ++d) {
        if (d) out << ", ";
        out << coeff[d].get_str();
    }
    out << "]";
    return out.str();
}

namespace {

// counts of A*u keyed by (|u|, A*u) over all u in N^n with |u| <= bound
using Buckets = std::map<std::pair<long, std::vector<Int>>, Int>;

void enumerate(const IntMatrix& a, long bound, long col, long used, std::vector<Int>& value,
               Buckets& out) {
    if (col == a.cols) {
        auto key = std::make_pair(used, value);
        out[key] += 1;
        return;
    }
    // exponent of this column from 0 to bound-used
    std::vector<Int> saved = value;
    for (long e = 0; used + e <= bound; ++e) {
        if (e > 0)
            for (long i = 0; i < a.rows; ++i) value[i] += a.at(i, col);
        enumerate(a, bound, col + 1, used + e, value, out);
    }
    value = saved;
}

} // namespace

SeriesTruncation offshell_dims(const IntMatrix& a, long degree_bound) {
    if (degree_bound < 0) throw ArgumentError("degree bound must be nonnegative");
    Buckets buckets;
    std::vector<Int> value(a.rows, Int(0));
    enumerate(a, degree_bound, 0, 0, value, buckets);

    SeriesTruncation s;
    s.order = degree_bound;
    s.coeff.assign(degree_bound + 1, Int(0));
    // meet in the middle: pair u of degree i with v of degree d-i when Au = Av
    for (auto it = buckets.begin(); it != buckets.end(); ++it) {
        const auto& [ku, cu] = *it;
        for (auto jt = buckets.begin(); jt != buckets.end(); ++jt) {
            const auto& [kv, cv] = *jt;
            long d = ku.first + kv.first;
            if (d > degree_bound) continue;
            if (ku.second != kv.second) continue;
            s.coeff[d] += cu * cv;
        }
    }
    return s;
}

SeriesTruncation onshell_dims(const IntMatrix& a, long degree_bound) {
    SeriesTruncation off = offshell_dims(a, degree_bound);
    SeriesTruncation on = off;
    for (long r = 0; r < a.rows; ++r) {
        std::vector<Int> next(degree_bound + 1, Int(0));
        for (long d = 0; d <= degree_bound; ++d) {
            next[d] = on.coeff[d] - (d >= 2 ? on.coeff[d - 2] : Int(0));
        }
        on.coeff = std::move(next);
    }
    for (long d = 0; d <= degree_bound; ++d)
        if (on.coeff[d] < 0)
            throw ArgumentError("negative on-shell dimension at degree " + std::to_string(d) +
                                ": moment components are not a regular sequence here");
    return on;
}

SeriesTruncation expand_rational(const std::vector<Int>& numerator,
                                 const std::vector<long>& denominator_degrees, long order) {
    if (order < 0) throw ArgumentError("order must be nonnegative");
    SeriesTruncation s;
    s.order = order;
    s.coeff.assign(order + 1, Int(0));
    for (size_t i = 0; i < numerator.size() && i <= static_cast<size_t>(order); ++i)
        s.coeff[i] = numerator[i];
    for (long d : denominator_degrees) {
        if (d <= 0) throw ArgumentError("denominator factor degrees must be positive");
        // multiply by 1/(1 - t^d)
        for (long i = d; i <= order; ++i) s.coeff[i] += s.coeff[i - d];
    }
    return s;
}

bool series_equal(const SeriesTruncation& a, const SeriesTruncation& b) {
    if (a.order != b.order) throw ArgumentError("series truncation orders differ");
    return a.coeff == b.coeff;
}

} // namespace sqt
