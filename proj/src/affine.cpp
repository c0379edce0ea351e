#include "affchar/affine.hpp"

#include <algorithm>
#include <numeric>

namespace affchar {

std::string tag_name(Tag t)
{
	switch (t) {
	case Tag::C1:
		return "C1";
	case Tag::D2:
		return "D2";
	case Tag::A2:
		return "A2";
	case Tag::A2T:
		return "A2T";
	}
	throw internal_error("tag_name: bad tag");
}

Tag tag_from_name(const std::string &name)
{
	if (name == "C1" || name == "c1")
		return Tag::C1;
	if (name == "D2" || name == "d2")
		return Tag::D2;
	if (name == "A2" || name == "a2")
		return Tag::A2;
	if (name == "A2T" || name == "a2t")
		return Tag::A2T;
	throw internal_error("unknown affine type '" + name + "'");
}

SimpleRoots simple_roots(AffineType type)
{
	const int l = type.l;
	if (l < 1 || (l < 2 && (type.tag == Tag::D2 || type.tag == Tag::A2T)))
		throw internal_error("simple_roots: rank too small");

	SimpleRoots sr;
	sr.eps.assign(l + 1, std::vector<long>(l, 0));
	sr.del.assign(l + 1, 0);
	sr.delta_coords.assign(l + 1, 0);

	auto unit = [&](int i) { /* epsilon_i, 1-based */
		std::vector<long> v(l, 0);
		v[i - 1] = 1;
		return v;
	};
	auto diff = [&](int i, int j) { /* epsilon_i - epsilon_j */
		std::vector<long> v(l, 0);
		v[i - 1] = 1;
		v[j - 1] = -1;
		return v;
	};

	switch (type.tag) {
	case Tag::C1:
		/* alpha_0 = delta - 2 eps_1, alpha_i = eps_i - eps_{i+1},
		 * alpha_l = 2 eps_l;  delta = (1,2,...,2,1). */
		sr.eps[0] = unit(1);
		sr.eps[0][0] = -2;
		sr.del[0] = 1;
		for (int i = 1; i < l; ++i)
			sr.eps[i] = diff(i, i + 1);
		sr.eps[l] = unit(l);
		sr.eps[l][l - 1] = 2;
		for (int i = 0; i <= l; ++i)
			sr.delta_coords[i] = (i == 0 || i == l) ? 1 : 2;
		break;
	case Tag::D2:
		/* alpha_0 = delta - eps_1, alpha_i = eps_i - eps_{i+1},
		 * alpha_l = eps_l;  delta = (1,...,1). */
		sr.eps[0] = unit(1);
		sr.eps[0][0] = -1;
		sr.del[0] = 1;
		for (int i = 1; i < l; ++i)
			sr.eps[i] = diff(i, i + 1);
		sr.eps[l] = unit(l);
		sr.delta_coords.assign(l + 1, 1);
		break;
	case Tag::A2:
		/* alpha_0 = eps_l, alpha_i = eps_{l-i} - eps_{l-i+1},
		 * alpha_l = delta - 2 eps_1;  delta = (2,...,2,1). */
		sr.eps[0] = unit(l);
		for (int i = 1; i < l; ++i)
			sr.eps[i] = diff(l - i, l - i + 1);
		sr.eps[l] = unit(1);
		sr.eps[l][0] = -2;
		sr.del[l] = 1;
		for (int i = 0; i <= l; ++i)
			sr.delta_coords[i] = (i == l) ? 1 : 2;
		break;
	case Tag::A2T: {
		/* index reversal i -> l - i of the A2 table */
		SimpleRoots a2 = simple_roots({Tag::A2, l});
		for (int i = 0; i <= l; ++i) {
			sr.eps[i] = a2.eps[l - i];
			sr.del[i] = a2.del[l - i];
			sr.delta_coords[i] = a2.delta_coords[l - i];
		}
		break;
	}
	}
	return sr;
}

namespace {

/* Small exact rational for the (l+1)-dimensional coordinate solves. */
struct Frac {
	long long n = 0, d = 1;

	static long long gcdll(long long a, long long b)
	{
		return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
	}

	void norm()
	{
		if (d < 0) {
			n = -n;
			d = -d;
		}
		long long g = gcdll(n == 0 ? 1 : n, d);
		if (g > 1) {
			n /= g;
			d /= g;
		}
		if (n == 0)
			d = 1;
	}

	Frac() = default;
	Frac(long long v) : n(v), d(1) {}
	Frac(long long nn, long long dd) : n(nn), d(dd) { norm(); }

	Frac operator+(const Frac &o) const
	{
		return {n * o.d + o.n * d, d * o.d};
	}
	Frac operator-(const Frac &o) const
	{
		return {n * o.d - o.n * d, d * o.d};
	}
	Frac operator*(const Frac &o) const { return {n * o.n, d * o.d}; }
	Frac operator/(const Frac &o) const
	{
		if (o.n == 0)
			throw internal_error("Frac: division by zero");
		return {n * o.d, d * o.n};
	}
	bool zero() const { return n == 0; }
};

} /* namespace */

std::vector<long> root_coords(const SimpleRoots &sr,
			      const std::vector<long> &eps_wt, long delta_wt)
{
	const int l = static_cast<int>(sr.eps.size()) - 1;
	const int n = l + 1;
	/* Columns are the simple roots in (eps_1..eps_l, delta)
	 * coordinates; solve M k = target. */
	std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
	for (int row = 0; row < l; ++row) {
		for (int col = 0; col < n; ++col)
			m[row][col] = Frac(sr.eps[col][row]);
		m[row][n] = Frac(eps_wt[row]);
	}
	for (int col = 0; col < n; ++col)
		m[l][col] = Frac(sr.del[col]);
	m[l][n] = Frac(delta_wt);

	for (int col = 0; col < n; ++col) {
		int pivot = -1;
		for (int row = col; row < n; ++row)
			if (!m[row][col].zero()) {
				pivot = row;
				break;
			}
		if (pivot < 0)
			throw internal_error("root_coords: singular system");
		std::swap(m[col], m[pivot]);
		for (int row = 0; row < n; ++row) {
			if (row == col || m[row][col].zero())
				continue;
			Frac f = m[row][col] / m[col][col];
			for (int k = col; k <= n; ++k)
				m[row][k] = m[row][k] - f * m[col][k];
		}
	}
	std::vector<long> out(n);
	for (int i = 0; i < n; ++i) {
		Frac v = m[i][n] / m[i][i];
		if (v.d != 1)
			throw internal_error(
				"root_coords: non-integer coordinate");
		out[i] = static_cast<long>(v.n);
	}
	return out;
}

namespace {

void check_spec(const AffineType &type, const std::vector<long> &s)
{
	if (static_cast<int>(s.size()) != type.l + 1)
		throw internal_error("specialization vector has wrong length");
	for (long v : s)
		if (v < 1)
			throw internal_error(
				"specialization entries must be positive");
}

/* Doubled degree functional: G[i] = 2 * degree(eps_{i+1}), so that the
 * s-degree of a finite weight v is dot(v, G) / 2. */
std::vector<long> doubled_eps_degrees(Tag tag, int l,
				      const std::vector<long> &s)
{
	std::vector<long> g(l, 0);
	switch (tag) {
	case Tag::C1:
		g[l - 1] = s[l];
		for (int i = l - 2; i >= 0; --i)
			g[i] = 2 * s[i + 1] + g[i + 1];
		break;
	case Tag::D2:
		for (int i = 0; i < l; ++i) {
			long acc = 0;
			for (int j = i + 1; j <= l; ++j)
				acc += s[j];
			g[i] = 2 * acc;
		}
		break;
	case Tag::A2:
		/* deg(eps_{l-i}) = s_0 + ... + s_i for 0 <= i <= l-1 */
		for (int i = 0; i <= l - 1; ++i) {
			long acc = 0;
			for (int j = 0; j <= i; ++j)
				acc += s[j];
			g[l - 1 - i] = 2 * acc;
		}
		break;
	case Tag::A2T:
		throw internal_error("doubled_eps_degrees: A2T is reduced "
				     "to A2");
	}
	return g;
}

long finite_degree(const std::vector<long> &v, const std::vector<long> &g)
{
	long acc = 0;
	for (std::size_t i = 0; i < v.size(); ++i)
		acc += v[i] * g[i];
	if (acc % 2 != 0)
		throw internal_error("finite_degree: odd doubled degree");
	return acc / 2;
}

std::vector<std::vector<long>> roots_c(int l)
{
	std::vector<std::vector<long>> out;
	for (int i = 0; i < l; ++i)
		for (int j = i + 1; j < l; ++j)
			for (int si : {1, -1})
				for (int sj : {1, -1}) {
					std::vector<long> v(l, 0);
					v[i] = si;
					v[j] = sj;
					out.push_back(v);
				}
	for (int i = 0; i < l; ++i)
		for (int si : {2, -2}) {
			std::vector<long> v(l, 0);
			v[i] = si;
			out.push_back(v);
		}
	return out;
}

std::vector<std::vector<long>> roots_b(int l)
{
	std::vector<std::vector<long>> out;
	for (int i = 0; i < l; ++i)
		for (int j = i + 1; j < l; ++j)
			for (int si : {1, -1})
				for (int sj : {1, -1}) {
					std::vector<long> v(l, 0);
					v[i] = si;
					v[j] = sj;
					out.push_back(v);
				}
	for (int i = 0; i < l; ++i)
		for (int si : {1, -1}) {
			std::vector<long> v(l, 0);
			v[i] = si;
			out.push_back(v);
		}
	return out;
}

std::vector<std::vector<long>> short_roots_b(int l)
{
	std::vector<std::vector<long>> out;
	for (int i = 0; i < l; ++i)
		for (int si : {1, -1}) {
			std::vector<long> v(l, 0);
			v[i] = si;
			out.push_back(v);
		}
	return out;
}

/* Nonzero weights of the B_l-module with highest weight 2 omega_1:
 * +-2 eps_i, +-eps_i +- eps_j, +-eps_i. */
std::vector<std::vector<long>> big_weights_a(int l)
{
	std::vector<std::vector<long>> out = roots_b(l);
	for (int i = 0; i < l; ++i)
		for (int si : {2, -2}) {
			std::vector<long> v(l, 0);
			v[i] = si;
			out.push_back(v);
		}
	return out;
}

} /* namespace */

long period(AffineType type, const std::vector<long> &s)
{
	check_spec(type, s);
	const int l = type.l;
	long acc = 0;
	switch (type.tag) {
	case Tag::C1:
		acc = s[0] + s[l];
		for (int i = 1; i < l; ++i)
			acc += 2 * s[i];
		return acc;
	case Tag::D2:
		for (long v : s)
			acc += v;
		return 2 * acc;
	case Tag::A2:
		acc = s[l];
		for (int i = 0; i < l; ++i)
			acc += 2 * s[i];
		return 2 * acc;
	case Tag::A2T: {
		std::vector<long> r(s.rbegin(), s.rend());
		return period({Tag::A2, l}, r);
	}
	}
	throw internal_error("period: bad tag");
}

std::vector<long> graded_dims(AffineType type, const std::vector<long> &s,
			      int N)
{
	check_spec(type, s);
	if (N < 1)
		throw internal_error("graded_dims: N must be positive");
	const int l = type.l;

	if (type.tag == Tag::A2T) {
		std::vector<long> r(s.rbegin(), s.rend());
		return graded_dims({Tag::A2, l}, r, N);
	}

	std::vector<long> dims(N + 1, 0);
	const std::vector<long> g = doubled_eps_degrees(type.tag, l, s);
	/* s-degree of one delta shift */
	long fd = 0;
	switch (type.tag) {
	case Tag::C1:
		fd = period(type, s);
		break;
	case Tag::D2:
		fd = period(type, s) / 2;
		break;
	case Tag::A2:
		fd = period(type, s) / 2;
		break;
	default:
		break;
	}

	auto add_set = [&](const std::vector<std::vector<long>> &set, long n,
			   bool positive_only) {
		for (const auto &v : set) {
			long d = finite_degree(v, g) + n * fd;
			if (positive_only && d <= 0)
				continue;
			if (n > 0 && d <= 0)
				throw internal_error(
					"graded_dims: nonpositive degree at "
					"positive shift");
			if (d >= 1 && d <= N)
				++dims[d];
		}
	};

	long maxabs = 0;
	auto track = [&](const std::vector<std::vector<long>> &set) {
		for (const auto &v : set)
			maxabs = std::max(maxabs,
					  std::labs(finite_degree(v, g)));
	};

	switch (type.tag) {
	case Tag::C1: {
		auto all = roots_c(l);
		track(all);
		add_set(all, 0, true);
		for (long n = 1; n * fd - maxabs <= N; ++n) {
			add_set(all, n, false);
			if (n * fd <= N)
				dims[n * fd] += l;
		}
		break;
	}
	case Tag::D2: {
		auto even = roots_b(l);
		auto odd = short_roots_b(l);
		track(even);
		add_set(even, 0, true);
		for (long n = 1; n * fd - maxabs <= N; ++n) {
			add_set(n % 2 == 0 ? even : odd, n, false);
			if (n * fd <= N)
				dims[n * fd] += (n % 2 == 0) ? l : 1;
		}
		break;
	}
	case Tag::A2: {
		auto even = roots_b(l);
		auto odd = big_weights_a(l);
		track(odd);
		add_set(even, 0, true);
		for (long n = 1; n * fd - maxabs <= N; ++n) {
			add_set(n % 2 == 0 ? even : odd, n, false);
			if (n * fd <= N)
				dims[n * fd] += l;
		}
		break;
	}
	default:
		break;
	}
	return dims;
}

Series q_denominator(AffineType type, const std::vector<long> &s, int N)
{
	const std::vector<long> dims = graded_dims(type, s, N);
	Series out = Series::one(N);
	for (int j = 1; j <= N; ++j)
		if (dims[j] != 0)
			out.mul_binomial(j, dims[j]);
	return out;
}

} /* namespace affchar */
