#pragma once

#include <tropdiv/rational.hpp>

#include <vector>

namespace tropdiv {

/// Standard binomial coefficient C(n, k) for n, k >= 0.
Integer binomial(long n, long k);

/// Binomial coefficient with the degenerate k = -1 column:
/// C(e, -1) = 1 if e = -1 and 0 if e >= 0. For k >= 0 the usual
/// convention applies, C(e, k) = 0 when e < k.
/// Arguments below -1 are a domain error.
Integer binomial_ext(long e, long k);

/// Number of unordered partitions of m into exactly k positive parts,
/// with p_0(m) = 1 iff m = 0.
Integer partitions_pk(long k, long m);

/// Number of surjections [1,p] -> [1,q], with T(p,0) = 1 iff p = 0.
Integer surjections(long p, long q);

/// Least common multiple of a nonempty list of positive integers.
Integer lcm_list(const std::vector<Integer>& values);

}  // namespace tropdiv
