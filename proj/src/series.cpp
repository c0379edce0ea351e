#include "affchar/series.hpp"

#include <sstream>

namespace affchar {

Series Series::mul(const Series &other) const
{
	if (order() != other.order())
		throw internal_error("Series::mul: order mismatch");

	const int n = order();
	Series out(n);
	for (int i = 0; i <= n; ++i) {
		if (coeffs_[i] == 0)
			continue;
		for (int j = 0; i + j <= n; ++j) {
			if (other.coeffs_[j] == 0)
				continue;
			out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
		}
	}
	return out;
}

Series Series::inv() const
{
	if (coeffs_[0] != 1)
		throw internal_error("Series::inv: constant term is not 1");

	const int n = order();
	Series out(n);
	out.coeffs_[0] = 1;
	/* b_m = -sum_{k=1..m} a_k b_{m-k}, using a_0 = 1. */
	for (int m = 1; m <= n; ++m) {
		mpz_class acc = 0;
		for (int k = 1; k <= m; ++k)
			acc += coeffs_[k] * out.coeffs_[m - k];
		out.coeffs_[m] = -acc;
	}
	return out;
}

void Series::mul_binomial(int d, long e)
{
	if (d < 1)
		throw internal_error("Series::mul_binomial: d < 1");

	const int n = order();
	if (d > n)
		return;
	if (e > 0) {
		for (long t = 0; t < e; ++t)
			for (int i = n; i >= d; --i)
				coeffs_[i] -= coeffs_[i - d];
	} else {
		for (long t = 0; t < -e; ++t)
			for (int i = d; i <= n; ++i)
				coeffs_[i] += coeffs_[i - d];
	}
}

Series Series::truncated(int m) const
{
	if (m > order())
		throw internal_error("Series::truncated: cannot extend order");
	Series out(m);
	for (int i = 0; i <= m; ++i)
		out.coeffs_[i] = coeffs_[i];
	return out;
}

Series::Comparison Series::compare(const Series &a, const Series &b)
{
	if (a.order() != b.order())
		throw internal_error("Series::compare: order mismatch");
	for (int i = 0; i <= a.order(); ++i)
		if (a.coeffs_[i] != b.coeffs_[i])
			return {false, i, a.coeffs_[i], b.coeffs_[i]};
	return {true, -1, 0, 0};
}

std::string Series::str(int max_terms) const
{
	std::ostringstream os;
	int printed = 0;
	for (int i = 0; i <= order() && printed < max_terms; ++i) {
		if (coeffs_[i] == 0)
			continue;
		if (printed > 0)
			os << (coeffs_[i] > 0 ? " + " : " - ");
		else if (coeffs_[i] < 0)
			os << "-";
		mpz_class mag = abs(coeffs_[i]);
		if (mag != 1 || i == 0)
			os << mag.get_str();
		if (i > 0) {
			if (mag != 1)
				os << "*";
			os << "q";
			if (i > 1)
				os << "^" << i;
		}
		++printed;
	}
	if (printed == 0)
		os << "0";
	else if (printed == max_terms)
		os << " + O(q^?)";
	return os.str();
}

Series euler_phi(int order)
{
	Series s = Series::one(order);
	for (int j = 1; j <= order; ++j)
		s.mul_binomial(j, 1);
	return s;
}

Series euler_phi_pow(int order, long e)
{
	Series s = Series::one(order);
	if (e == 0)
		return s;
	for (int j = 1; j <= order; ++j)
		s.mul_binomial(j, e);
	return s;
}

} /* namespace affchar */
