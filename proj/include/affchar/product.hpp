#ifndef AFFCHAR_PRODUCT_HPP
#define AFFCHAR_PRODUCT_HPP

#include "affchar/series.hpp"

#include <map>
#include <string>
#include <utility>

namespace affchar {

struct parse_error : std::runtime_error {
	std::size_t position;
	parse_error(std::size_t pos, const std::string &msg)
		: std::runtime_error(msg + " (at position " +
				     std::to_string(pos) + ")"),
		  position(pos)
	{
	}
};

/* Symbolic periodic infinite product
 *
 *     prod over (m, r, e) of prod_{j>0, j = r mod m} (1-q^j)^e
 *     times prod over (j, e) of (1-q^j)^e,
 *
 * kept canonical: residues reduced mod m, equal (m, r) keys merged by adding
 * exponents, zero exponents dropped.  Factors over different moduli are
 * never merged, so e.g. mod 24 and mod 48 factors coexist. */
class ProductExpr {
public:
	/* (modulus, residue) -> exponent */
	using PeriodicMap = std::map<std::pair<long, long>, long>;
	/* exponent j -> exponent e */
	using FiniteMap = std::map<long, long>;

	ProductExpr() = default;

	/* prod_{j>0, j = r mod m} (1-q^j)^e; r is reduced mod m. */
	void add_class(long m, long r, long e);

	/* Adds the classes r and -r mod m (multiset semantics: if the two
	 * residues coincide the exponent doubles). */
	void add_class_pm(long m, long r, long e)
	{
		add_class(m, r, e);
		add_class(m, -r, e);
	}

	/* prod_{j>0, j = r mod m} (1+q^j)^e, encoded with (1-q^j) factors
	 * via 1+q^j = (1-q^{2j})/(1-q^j). */
	void add_one_plus_class(long m, long r, long e);

	void add_finite(long j, long e);

	ProductExpr &operator*=(const ProductExpr &other);

	const PeriodicMap &periodic_factors() const { return periodic_; }
	const FiniteMap &finite_factors() const { return finite_; }

	bool operator==(const ProductExpr &other) const
	{
		return periodic_ == other.periodic_ &&
		       finite_ == other.finite_;
	}

	Series expand(int order) const;

	/* Canonical text form; factors sorted by (modulus, residue,
	 * exponent), finite factors first. */
	std::string str() const;

private:
	PeriodicMap periodic_;
	FiniteMap finite_;
};

/* Parses the ASCII grammar
 *
 *   expr   := factor (factor)*
 *   factor := "(1-q^" (INT | "j") ")" "^" SINT
 *             [ ":" "j" "=" INT ("," INT)* "mod" INT ]
 *
 * Whitespace is insignificant.  A "j" base requires the residue clause;
 * residues not smaller than the modulus are rejected. */
ProductExpr parse_product(const std::string &text);

} /* namespace affchar */

#endif
