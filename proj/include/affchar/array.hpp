#ifndef AFFCHAR_ARRAY_HPP
#define AFFCHAR_ARRAY_HPP

#include "affchar/affine.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affchar {

/* Component kinds of the staggered arrays. */
inline constexpr const char *kind_first_triangle = "first-triangle";
inline constexpr const char *kind_adjoint_triangle = "adjoint-triangle";
inline constexpr const char *kind_vector_diagonal = "vector-diagonal";
inline constexpr const char *kind_sym2_triangle = "sym2-triangle";

struct ComponentId {
	std::string kind;
	long shift = 0;

	bool operator==(const ComponentId &o) const
	{
		return kind == o.kind && shift == o.shift;
	}
};

struct ArrayNode {
	int row = 0;	       /* 0 (top) .. 2l (bottom) */
	long col = 0;	       /* row == col (mod 2) */
	long tdeg = 0;	       /* power of t, <= 0 */
	std::vector<long> root; /* coefficients of the negated weight */
	ComponentId component;
	int p = 0, q = 0; /* index within the component */
};

struct RootArray {
	AffineType type{Tag::C1, 2};
	long ncols = 0;
	/* keyed by (row, col); at most one node per position */
	std::map<std::pair<int, long>, ArrayNode> nodes;
};

struct SpecArray {
	RootArray base;
	std::vector<long> s;
	long period = 0;
	long cols_per_period = 0;
	std::map<std::pair<int, long>, long> labels;
};

/* Builds the array of negative root vectors with columns 0..ncols-1. */
RootArray build_array(AffineType type, long ncols);

/* label(node) = dot(node.root, s). */
SpecArray specialize(const RootArray &a, const std::vector<long> &s);

/* Sorted multiset of labels of all nodes in columns [0, cols_per_period). */
std::vector<long> period_multiset(const SpecArray &sa);

/* Product over the period multiset of prod_{k>=0}(1-q^{a+kP}), truncated
 * at N.  Labels exceeding P are reported through oversized_labels when the
 * pointer is non-null (the product is still exact). */
Series q_from_array(AffineType type, const std::vector<long> &s, int N,
		    std::vector<long> *oversized_labels = nullptr);

/* 2l+1 text lines, top row first, fixed-width cells; vacant staggered
 * slots are printed as ".". */
std::string render_text(const SpecArray &sa);

std::string to_json(const SpecArray &sa);
SpecArray spec_array_from_json(const std::string &text);

} /* namespace affchar */

#endif
