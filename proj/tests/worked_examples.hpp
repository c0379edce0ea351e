#ifndef AFFCHAR_TESTS_WORKED_EXAMPLES_HPP
#define AFFCHAR_TESTS_WORKED_EXAMPLES_HPP

/* Hand-transcribed explicit products for specific modules, used as frozen
 * oracles by both the unit tests and the acceptance gate. */

#include "affchar/formulas.hpp"
#include "affchar/product.hpp"

#include <functional>
#include <string>
#include <vector>

namespace worked {

using affchar::Family;
using affchar::ProductExpr;
using affchar::Series;

struct Case {
	std::string name;
	Family family;
	int l;
	std::vector<long> param; /* weight, or specialization for ps */
	long n;
	ProductExpr product;
};

/* All residues mod m except the listed ones, with the given exponent. */
inline void add_all_but(ProductExpr &p, long m, const std::vector<long> &skip,
			long e)
{
	for (long r = 1; r <= m; ++r) {
		bool out = false;
		for (long s : skip)
			out = out || ((s % m + m) % m == r % m);
		if (!out)
			p.add_class(m, r % m == 0 ? m : r, e);
	}
}

inline std::vector<Case> cases()
{
	std::vector<Case> out;

	{ /* (2,1,1,1,2)-specialized L(1,2,1,2,1) over C_4 */
		ProductExpr p;
		for (long r : {1, 1, 2, 6, 6, 8, 11, 11})
			p.add_class_pm(24, r, -1);
		add_all_but(p, 24, {0, 12}, -1);
		for (long r : {2, 4, 6, 8, 10, 14, 16, 18, 20, 22})
			p.add_class(24, r, -1);
		p.add_class(10, 5, -1);
		out.push_back({"L(1,2,1,2,1) at (2,1,1,1,2)", Family::w21_12, 4,
			       {1, 2, 1, 2, 1}, 0, p});
	}
	{ /* (1,1,1,1,2)-specialized L(2,1,1,2,1) over C_4 */
		ProductExpr p;
		add_all_but(p, 24, {0}, -1);
		p.add_class_pm(48, 6, -1);
		p.add_class_pm(48, 20, -1);
		for (long r : {1, 1, 1, 2, 3, 4, 5, 6, 6, 8, 8, 9, 9, 11, 11})
			p.add_class_pm(24, r, -1);
		p.add_class(24, 12, -1);
		out.push_back({"L(2,1,1,2,1) at (1,1,1,1,2)", Family::w1_12, 4,
			       {2, 1, 1, 2, 1}, 0, p});
	}
	{ /* (2,1,1,1,1)-specialized L(2,1,1,2,1) over C_4 */
		ProductExpr p;
		add_all_but(p, 24, {0}, -1);
		p.add_class_pm(48, 4, -1);
		p.add_class_pm(48, 18, -1);
		for (long r : {1, 1, 1, 3, 3, 4, 5, 6, 6, 8, 8, 9, 10, 11, 11})
			p.add_class_pm(24, r, -1);
		p.add_class(24, 12, -1);
		out.push_back({"L(2,1,1,2,1) at (2,1,1,1,1)", Family::w21_1, 4,
			       {2, 1, 1, 2, 1}, 0, p});
	}
	{ /* L(1,2,1,2,1) over C_4, both one-sided specializations agree */
		ProductExpr p;
		add_all_but(p, 24, {0, 12}, -1);
		for (long r : {1, 1, 1, 2, 3, 4, 4, 6, 6, 6, 8, 8, 9, 10, 11,
			       11, 11})
			p.add_class_pm(24, r, -1);
		out.push_back({"L(1,2,1,2,1) at (2,1,1,1,1)", Family::w21_1, 4,
			       {1, 2, 1, 2, 1}, 0, p});
		out.push_back({"L(1,2,1,2,1) at (1,1,1,1,2)", Family::w1_12, 4,
			       {1, 2, 1, 2, 1}, 0, p});
	}

	/* ps1 at l=2, s=(3,1,1) */
	{
		ProductExpr p;
		p.add_one_plus_class(12, 5, 1);
		p.add_one_plus_class(12, 7, 1);
		p.add_class(2, 1, -1);
		p.add_class_pm(24, 6, -1);
		out.push_back({"ps1 s=(3,1,1) n=1", Family::ps1, 2, {3, 1, 1},
			       1, p});
	}
	{
		ProductExpr p;
		p.add_one_plus_class(24, 10, 1);
		p.add_one_plus_class(24, 14, 1);
		p.add_class(2, 1, -2);
		p.add_class_pm(24, 6, -1);
		p.add_class(24, 12, -1);
		out.push_back({"ps1 s=(3,1,1) n=2", Family::ps1, 2, {3, 1, 1},
			       2, p});
	}
	{
		ProductExpr p;
		add_all_but(p, 72, {0, 30, -30, 36}, -1);
		for (long r : {1, 5, 7, 11, 13, 15, 17})
			p.add_class_pm(36, r, -1);
		out.push_back({"ps1 s=(3,1,1) n=3", Family::ps1, 2, {3, 1, 1},
			       3, p});
	}

	/* ps2 at l=2, s=(1,3,1) */
	{
		ProductExpr p;
		p.add_one_plus_class(2, 1, 1);
		p.add_class_pm(16, 4, -2);
		out.push_back({"ps2 s=(1,3,1) n=1", Family::ps2, 2, {1, 3, 1},
			       1, p});
	}
	{
		ProductExpr p;
		for (long r : {1, 7, 9, 15}) {
			p.add_one_plus_class(32, r, 1);
			p.add_one_plus_class(32, 32 - r, 1);
		}
		p.add_class(2, 1, -1);
		p.add_class_pm(32, 4, -1);
		p.add_class_pm(32, 8, -2);
		p.add_class_pm(32, 12, -1);
		out.push_back({"ps2 s=(1,3,1) n=2", Family::ps2, 2, {1, 3, 1},
			       2, p});
	}

	/* ps3 at l=2, s=(3,1,1) */
	{
		ProductExpr p;
		p.add_class_pm(6, 1, -1);
		p.add_class(12, 6, -1);
		out.push_back({"ps3 s=(3,1,1) n=1", Family::ps3, 2, {3, 1, 1},
			       1, p});
	}
	{
		ProductExpr p;
		p.add_class(2, 1, -2);
		p.add_class(24, 12, -1);
		out.push_back({"ps3 s=(3,1,1) n=2", Family::ps3, 2, {3, 1, 1},
			       2, p});
	}
	{
		ProductExpr p;
		add_all_but(p, 72, {0, 9, -9, 27, -27, 36}, -1);
		p.add_class_pm(6, 1, -1);
		out.push_back({"ps3 s=(3,1,1) n=3", Family::ps3, 2, {3, 1, 1},
			       3, p});
	}

	return out;
}

/* The two rank-1 closed-form products for the (2,1)-specialization. */
inline ProductExpr rank1_closed_form_10()
{
	/* L(1,0): prod_{i = +-2, +-3 mod 12} (1-q^i)^{-1} */
	ProductExpr p;
	p.add_class_pm(12, 2, -1);
	p.add_class_pm(12, 3, -1);
	return p;
}

inline ProductExpr rank1_closed_form_01()
{
	/* L(0,1): prod_{i = +-2 mod 12} (1-q^i) / prod (1-q^{2i-1}) */
	ProductExpr p;
	p.add_class_pm(12, 2, 1);
	p.add_class(2, 1, -1);
	return p;
}

/* Closed forms for the specialized denominators, checked to the given
 * order for 2 <= l <= lmax.  Returns the name of the first failing identity,
 * or the empty string. */
inline std::string check_denominator_closed_forms(int order, int lmax)
{
	using namespace affchar;
	for (int l = 2; l <= lmax; ++l) {
		std::vector<long> ones(l + 1, 1);
		std::vector<long> s21(l + 1, 1);
		s21[0] = 2;
		std::vector<long> s212(l + 1, 1);
		s212[0] = s212[l] = 2;

		/* Q(1,..,1; C1) = phi^l * prod(1-q^{2j-1}) */
		{
			ProductExpr p;
			p.add_class(1, 0, l);
			p.add_class(2, 1, 1);
			if (!(q_denominator({Tag::C1, l}, ones, order) ==
			      p.expand(order)))
				return "principal C1 denominator, l=" +
				       std::to_string(l);
		}
		/* Q(2,1,..,1; C1) = phi^l */
		if (!(q_denominator({Tag::C1, l}, s21, order) ==
		      euler_phi_pow(order, l)))
			return "one-sided C1 denominator, l=" +
			       std::to_string(l);
		/* Q(2,1,..,1,2; C1) = phi^{l-1} * prod(1-q^{2j})
		 *                     * prod_{r = l+1 mod 2(l+1)}(1-q^r) */
		{
			ProductExpr p;
			p.add_class(1, 0, l - 1);
			p.add_class(2, 2, 1);
			p.add_class(2L * (l + 1), l + 1, 1);
			if (!(q_denominator({Tag::C1, l}, s212, order) ==
			      p.expand(order)))
				return "two-sided C1 denominator, l=" +
				       std::to_string(l);
		}
		/* Q(1,..,1; D2) = phi^l * prod(1-q^{2j-1}) */
		{
			ProductExpr p;
			p.add_class(1, 0, l);
			p.add_class(2, 1, 1);
			if (!(q_denominator({Tag::D2, l}, ones, order) ==
			      p.expand(order)))
				return "principal D2 denominator, l=" +
				       std::to_string(l);
		}
		/* Q(1,..,1; A2) = phi^l * prod over odd residues mod
		 * 2(2l+1) other than 2l+1 */
		{
			ProductExpr p;
			p.add_class(1, 0, l);
			for (long r = 1; r < 2L * (2 * l + 1); r += 2)
				if (r != 2 * l + 1)
					p.add_class(2L * (2 * l + 1), r, 1);
			if (!(q_denominator({Tag::A2, l}, ones, order) ==
			      p.expand(order)))
				return "principal A2 denominator, l=" +
				       std::to_string(l);
		}
	}
	return "";
}

} /* namespace worked */

#endif
