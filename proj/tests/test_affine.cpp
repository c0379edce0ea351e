#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affchar/affine.hpp"
#include "affchar/formulas.hpp"
#include "worked_examples.hpp"

using namespace affchar;

TEST_CASE("tag names round trip")
{
	for (Tag t : {Tag::C1, Tag::D2, Tag::A2, Tag::A2T})
		CHECK(tag_from_name(tag_name(t)) == t);
	CHECK_THROWS_AS(tag_from_name("b3"), internal_error);
}

TEST_CASE("simple roots sum to delta along delta_coords")
{
	for (Tag t : {Tag::C1, Tag::D2, Tag::A2, Tag::A2T}) {
		int lmin = (t == Tag::C1 || t == Tag::A2) ? 1 : 2;
		for (int l = lmin; l <= 5; ++l) {
			SimpleRoots sr = simple_roots({t, l});
			REQUIRE(sr.eps.size() == std::size_t(l + 1));
			std::vector<long> eps(l, 0);
			long del = 0;
			for (int i = 0; i <= l; ++i) {
				for (int j = 0; j < l; ++j)
					eps[j] += sr.delta_coords[i] *
						  sr.eps[i][j];
				del += sr.delta_coords[i] * sr.del[i];
			}
			for (int j = 0; j < l; ++j)
				CHECK(eps[j] == 0);
			CHECK(del == 1);
		}
	}
}

TEST_CASE("rank restrictions")
{
	CHECK_NOTHROW(simple_roots({Tag::C1, 1}));
	CHECK_NOTHROW(simple_roots({Tag::A2, 1}));
	CHECK_THROWS_AS(simple_roots({Tag::D2, 1}), internal_error);
	CHECK_THROWS_AS(simple_roots({Tag::A2T, 1}), internal_error);
	CHECK_THROWS_AS(simple_roots({Tag::C1, 0}), internal_error);
}

TEST_CASE("root_coords inverts the simple roots")
{
	for (Tag t : {Tag::C1, Tag::D2, Tag::A2, Tag::A2T}) {
		int lmin = (t == Tag::C1 || t == Tag::A2) ? 1 : 2;
		for (int l = lmin; l <= 4; ++l) {
			SimpleRoots sr = simple_roots({t, l});
			for (int i = 0; i <= l; ++i) {
				std::vector<long> c = root_coords(
					sr, sr.eps[i], sr.del[i]);
				for (int j = 0; j <= l; ++j)
					CHECK(c[j] == (i == j ? 1 : 0));
			}
		}
	}
	/* non-integral combinations are rejected */
	SimpleRoots sr = simple_roots({Tag::C1, 2});
	CHECK_THROWS_AS(root_coords(sr, {1, 0}, 0), internal_error);
}

TEST_CASE("periods")
{
	/* C1: s_0 + 2(s_1+..+s_{l-1}) + s_l */
	CHECK(period({Tag::C1, 3}, {1, 1, 1, 1}) == 6);
	CHECK(period({Tag::C1, 3}, {2, 3, 1, 4}) == 14);
	/* D2: 2(s_0+..+s_l) */
	CHECK(period({Tag::D2, 3}, {1, 1, 1, 1}) == 8);
	CHECK(period({Tag::D2, 3}, {2, 3, 1, 4}) == 20);
	/* A2: 2(s_l + 2(s_0+..+s_{l-1})) */
	CHECK(period({Tag::A2, 2}, {1, 1, 1}) == 10);
	CHECK(period({Tag::A2, 2}, {3, 2, 1}) == 22);
	/* A2T is A2 with the specialization reversed */
	CHECK(period({Tag::A2T, 2}, {1, 2, 3}) == 22);
}

TEST_CASE("graded dims, principal C1")
{
	/* dim g_j(1,..,1) = l + 1 for j = 0 mod period/?; spot-check small
	 * values against the denominator closed form instead: the principal
	 * C1 exponents are l + [j odd]. */
	for (int l = 2; l <= 4; ++l) {
		std::vector<long> dims =
			graded_dims({Tag::C1, l}, std::vector<long>(l + 1, 1),
				    30);
		for (int j = 1; j <= 30; ++j)
			CHECK(dims[j] == l + (j % 2));
	}
}

TEST_CASE("denominator closed forms")
{
	/* order kept moderate here; the acceptance gate re-runs these at
	 * order 200 for l up to 6 */
	CHECK(worked::check_denominator_closed_forms(80, 4) == "");
}

TEST_CASE("Cartan matrix annihilates delta")
{
	for (int l = 2; l <= 6; ++l) {
		auto A = cartan_matrix_c1(l);
		auto d = simple_roots({Tag::C1, l}).delta_coords;
		REQUIRE(A.size() == std::size_t(l + 1));
		for (int i = 0; i <= l; ++i) {
			CHECK(A[i][i] == 2);
			long acc = 0;
			for (int j = 0; j <= l; ++j)
				acc += A[i][j] * d[j];
			CHECK(acc == 0);
		}
	}
}

TEST_CASE("q_denominator input validation")
{
	CHECK_THROWS_AS(q_denominator({Tag::C1, 2}, {1, 1}, 10),
			internal_error);
	CHECK_THROWS_AS(q_denominator({Tag::C1, 2}, {1, 0, 1}, 10),
			internal_error);
}
