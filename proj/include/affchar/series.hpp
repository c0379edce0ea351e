#ifndef AFFCHAR_SERIES_HPP
#define AFFCHAR_SERIES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace affchar {

/* Error thrown when a construction invariant is violated (maps to exit
 * status 3 in the command line tool). */
struct internal_error : std::logic_error {
	using std::logic_error::logic_error;
};

/* Truncated formal power series in q with arbitrary-precision integer
 * coefficients.  The truncation order is explicit state: a Series holds
 * coefficients for q^0 .. q^order and binary operations require equal
 * orders so precision is never lost silently. */
class Series {
public:
	explicit Series(int order) : coeffs_(order + 1)
	{
		if (order < 0)
			throw internal_error("Series: negative order");
	}

	static Series one(int order)
	{
		Series s(order);
		s.coeffs_[0] = 1;
		return s;
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }

	const mpz_class &operator[](int i) const { return coeffs_[i]; }
	mpz_class &at(int i) { return coeffs_[i]; }

	/* Cauchy product truncated at the common order. */
	Series mul(const Series &other) const;

	/* Multiplicative inverse; requires constant term 1. */
	Series inv() const;

	/* Multiply in place by (1 - q^d)^e for d >= 1 and any integer e.
	 * A single binomial factor needs only one linear pass, so this is
	 * the workhorse for expanding infinite products. */
	void mul_binomial(int d, long e);

	/* Truncate to a smaller order m <= order. */
	Series truncated(int m) const;

	struct Comparison {
		bool equal;
		int exponent;	/* first mismatching exponent, -1 if equal */
		mpz_class lhs, rhs;
	};

	/* Coefficientwise comparison; orders must match. */
	static Comparison compare(const Series &a, const Series &b);

	bool operator==(const Series &other) const
	{
		return compare(*this, other).equal;
	}

	std::string str(int max_terms = 12) const;

private:
	std::vector<mpz_class> coeffs_;
};

/* Euler's function phi(q) = prod_{j>=1} (1 - q^j), truncated. */
Series euler_phi(int order);

/* phi(q)^e for any integer e (negative exponents via inversion). */
Series euler_phi_pow(int order, long e);

} /* namespace affchar */

#endif
