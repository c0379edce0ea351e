#ifndef AFFCHAR_AFFINE_HPP
#define AFFCHAR_AFFINE_HPP

#include "affchar/series.hpp"

#include <string>
#include <vector>

namespace affchar {

enum class Tag { C1, D2, A2, A2T };

std::string tag_name(Tag t);
Tag tag_from_name(const std::string &name);

struct AffineType {
	Tag tag;
	int l; /* rank; l >= 2 throughout except l = 1 for C1/A2 */
};

/* Simple roots alpha_0..alpha_l written as (vector in the epsilon basis of
 * length l, coefficient of delta).  delta_coords gives delta in the
 * simple-root basis. */
struct SimpleRoots {
	std::vector<std::vector<long>> eps; /* alpha_i, epsilon part */
	std::vector<long> del;		    /* alpha_i, delta coefficient */
	std::vector<long> delta_coords;
};

SimpleRoots simple_roots(AffineType type);

/* Coordinates (k_0..k_l) of the weight (eps_wt, delta_wt) in the
 * simple-root basis; throws internal_error when the solution is not an
 * integer vector. */
std::vector<long> root_coords(const SimpleRoots &sr,
			      const std::vector<long> &eps_wt, long delta_wt);

/* The s-period of the specialized root system: the s-degree of delta for
 * C1, and of 2*delta for the twisted types D2/A2/A2T. */
long period(AffineType type, const std::vector<long> &s);

/* dims[j] = dim g_j(s) for 1 <= j <= N (dims[0] unused, kept 0). */
std::vector<long> graded_dims(AffineType type, const std::vector<long> &s,
			      int N);

/* Q(s) = prod_j (1-q^j)^{dims[j]} truncated at N. */
Series q_denominator(AffineType type, const std::vector<long> &s, int N);

} /* namespace affchar */

#endif
