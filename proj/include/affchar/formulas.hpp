#ifndef AFFCHAR_FORMULAS_HPP
#define AFFCHAR_FORMULAS_HPP

#include "affchar/affine.hpp"
#include "affchar/product.hpp"

#include <string>
#include <vector>

namespace affchar {

/* Character families over C_l^(1).  The first four take a dominant weight
 * k = (k_0..k_l) and carry a fixed specialization; the ps families take an
 * arbitrary positive specialization s and a parameter n >= 1, with the
 * weight determined by n. */
enum class Family { lepowsky, w21_1, w1_12, w21_12, ps1, ps2, ps3 };

std::string family_name(Family f);
Family family_from_name(const std::string &name);
bool family_is_ps(Family f);

/* The C1 specialization vector attached to the family (for the ps
 * families this is the caller-supplied s, echoed back). */
std::vector<long> family_spec(Family f, int l, const std::vector<long> &s);

/* The weight (k_0..k_l) of the ps families at parameter n. */
std::vector<long> ps_weight(Family f, int l, long n);

/* Partial-sum walks.  d_set: starting from seg[0], the generic walk adds
 * seg[1..L-1], seg[L-1], seg[L-2..1] (families D2/A2/A2T); the C1 walk
 * adds seg[1..L-2], seg[L-1], seg[L-2..1], seg[0].  Both have cardinality
 * 2L-1.  Returned sorted. */
std::vector<long> d_set(Tag family, const std::vector<long> &seg);

/* Sorted multiset union of d_set(family, args[i..]) over all suffixes. */
std::vector<long> congruence_triangle(Tag family,
				      const std::vector<long> &args);

/* {a_0, a_0+2a_1, ..., a_0+2a_1+...+2a_{m-1}} */
std::vector<long> s_set(const std::vector<long> &args);

/* The specialized character as a ratio of Q-denominators (and Euler-phi
 * powers), truncated at N.  k_or_s is the weight for the non-ps families
 * and the specialization vector for the ps families; n is ignored for the
 * non-ps families. */
Series char_ratio(Family f, int l, const std::vector<long> &k_or_s, long n,
		  int N);

/* The same character as an explicit periodic product. */
ProductExpr char_explicit(Family f, int l, const std::vector<long> &k_or_s,
			  long n);

struct Report {
	std::string identity;
	int order = 0;
	bool equal = false;
	int first_mismatch = -1; /* -1 when equal */
	std::string lhs, rhs;
};

std::string report_to_json(const Report &r);

/* Expands char_ratio and char_explicit to order N and compares. */
Report verify_family(Family f, int l, const std::vector<long> &k_or_s,
		     long n, int N);

/* Checks ch^(2,1,...,1;C1)L(k) == F(q) * ch^(1,...,1;A2)L(2k_0+1,k_1..k_l)
 * with F(q) = prod_{i = +-1,+-3,...,+-(2l-1) mod 2(2l+1)}(1-q^i). */
Report borcea_check(int l, const std::vector<long> &k, int N);

/* Cartan matrix of C_l^(1) computed from the epsilon realization. */
std::vector<std::vector<long>> cartan_matrix_c1(int l);

/* Independent oracle: the s-specialized character of the C_l^(1) module
 * L(k) via the Weyl group numerator sum divided by Q(s; C1). */
Series weyl_kac_specialized(int l, const std::vector<long> &k,
			    const std::vector<long> &s, int N);

} /* namespace affchar */

#endif
