#ifndef AFFCHAR_PARTITIONS_HPP
#define AFFCHAR_PARTITIONS_HPP

#include "affchar/array.hpp"
#include "affchar/formulas.hpp"

#include <map>
#include <vector>

namespace affchar {

/* The C1 array extended by the initial-condition columns: e-nodes at
 * (row 2i, col -2) carrying the exponent k_{l-i}, h-nodes at
 * (row 2i+1, col -1) carrying 0. */
struct ExtendedArray {
	RootArray base; /* type C1 */
	std::vector<long> k;

	/* exponent of the e-node in the given (even) row */
	long e_exponent(int row) const { return k[base.type.l - row / 2]; }
};

ExtendedArray extend_array(const RootArray &base, const std::vector<long> &k);

/* A colored partition: multiplicities on array node positions. */
using Multiplicities = std::map<std::pair<int, long>, long>;

/* Maximum over all downward paths (one node per row, consecutive columns
 * differing by exactly 1, e/h columns included) of the sum of exponents
 * along the path. */
long max_downpath(const ExtendedArray &ext, const Multiplicities &mult);

/* max_downpath <= level(k)? */
bool is_admissible(const ExtendedArray &ext, const Multiplicities &mult);

struct EnumConfig {
	int l = 2;
	std::vector<long> k; /* highest weight (k_0..k_l) */
	std::vector<long> s; /* specialization */
	long bound = 0;	     /* maximum degree */
	int threads = 1;
};

/* counts[n] = number of admissible colored partitions of degree n,
 * 0 <= n <= bound.  Deterministic and independent of thread count. */
std::vector<long> enumerate_admissible(const EnumConfig &cfg);

std::string counts_to_json(const EnumConfig &cfg,
			   const std::vector<long> &counts);

/* Compares enumerate_admissible against the character of the matching
 * family (chosen by the s pattern: (1,..,1) -> lepowsky, (2,1,..,1) ->
 * w-21...1, (1,..,1,2) -> w-1...12, (2,1,..,1,2) -> w-21...12) to order
 * min(bound, N). */
Report verify_conjecture(const EnumConfig &cfg, int N);

} /* namespace affchar */

#endif
