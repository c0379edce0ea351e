#include "affchar/formulas.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <queue>

namespace affchar {

std::string family_name(Family f)
{
	switch (f) {
	case Family::lepowsky:
		return "lepowsky";
	case Family::w21_1:
		return "w-21...1";
	case Family::w1_12:
		return "w-1...12";
	case Family::w21_12:
		return "w-21...12";
	case Family::ps1:
		return "ps1";
	case Family::ps2:
		return "ps2";
	case Family::ps3:
		return "ps3";
	}
	throw internal_error("family_name: bad family");
}

Family family_from_name(const std::string &name)
{
	for (Family f : {Family::lepowsky, Family::w21_1, Family::w1_12,
			 Family::w21_12, Family::ps1, Family::ps2,
			 Family::ps3})
		if (family_name(f) == name)
			return f;
	throw internal_error("unknown identity family '" + name + "'");
}

bool family_is_ps(Family f)
{
	return f == Family::ps1 || f == Family::ps2 || f == Family::ps3;
}

std::vector<long> family_spec(Family f, int l, const std::vector<long> &s)
{
	std::vector<long> out(l + 1, 1);
	switch (f) {
	case Family::lepowsky:
		break;
	case Family::w21_1:
		out[0] = 2;
		break;
	case Family::w1_12:
		out[l] = 2;
		break;
	case Family::w21_12:
		out[0] = 2;
		out[l] = 2;
		break;
	default:
		if (static_cast<int>(s.size()) != l + 1)
			throw internal_error("family_spec: wrong s length");
		out = s;
		break;
	}
	return out;
}

std::vector<long> ps_weight(Family f, int l, long n)
{
	if (!family_is_ps(f))
		throw internal_error("ps_weight: not a ps family");
	if (n < 1)
		throw internal_error("ps_weight: n must be >= 1");
	std::vector<long> k(l + 1, 2 * n - 1);
	switch (f) {
	case Family::ps1:
		k[l] = n - 1;
		break;
	case Family::ps2:
		k[0] = n - 1;
		break;
	case Family::ps3:
		k[0] = n - 1;
		k[l] = n - 1;
		break;
	default:
		break;
	}
	return k;
}

std::vector<long> d_set(Tag family, const std::vector<long> &seg)
{
	if (seg.empty())
		throw internal_error("d_set: empty segment");
	for (long v : seg)
		if (v < 1)
			throw internal_error("d_set: entries must be >= 1");
	const int L = static_cast<int>(seg.size());
	std::vector<long> steps;
	if (family == Tag::C1) {
		if (L >= 2) {
			for (int i = 1; i <= L - 2; ++i)
				steps.push_back(seg[i]);
			steps.push_back(seg[L - 1]);
			for (int i = L - 2; i >= 1; --i)
				steps.push_back(seg[i]);
			steps.push_back(seg[0]);
		}
	} else if (L >= 2) {
		for (int i = 1; i <= L - 1; ++i)
			steps.push_back(seg[i]);
		steps.push_back(seg[L - 1]);
		for (int i = L - 2; i >= 1; --i)
			steps.push_back(seg[i]);
	}
	std::vector<long> out;
	long acc = seg[0];
	out.push_back(acc);
	for (long st : steps)
		out.push_back(acc += st);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<long> congruence_triangle(Tag family,
				      const std::vector<long> &args)
{
	std::vector<long> out;
	for (std::size_t i = 0; i < args.size(); ++i) {
		std::vector<long> suffix(args.begin() + i, args.end());
		std::vector<long> d = d_set(family, suffix);
		out.insert(out.end(), d.begin(), d.end());
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<long> s_set(const std::vector<long> &args)
{
	if (args.empty())
		throw internal_error("s_set: empty arguments");
	std::vector<long> out;
	long acc = args[0];
	out.push_back(acc);
	for (std::size_t i = 1; i < args.size(); ++i)
		out.push_back(acc += 2 * args[i]);
	std::sort(out.begin(), out.end());
	return out;
}

namespace {

void check_weight(int l, const std::vector<long> &k)
{
	if (static_cast<int>(k.size()) != l + 1)
		throw internal_error("weight has wrong length");
	for (long v : k)
		if (v < 0)
			throw internal_error("weight entries must be >= 0");
}

long level_of(const std::vector<long> &k)
{
	long acc = 0;
	for (long v : k)
		acc += v;
	return acc;
}

/* P1 = sum_{j=0..l} s_j + sum_{j=1..l-1} s_j (the C1 s-period). */
long p1_of(int l, const std::vector<long> &s)
{
	long acc = 0;
	for (int j = 0; j <= l; ++j)
		acc += s[j];
	for (int j = 1; j <= l - 1; ++j)
		acc += s[j];
	return acc;
}

} /* namespace */

Series char_ratio(Family f, int l, const std::vector<long> &k_or_s, long n,
		  int N)
{
	if (family_is_ps(f)) {
		const std::vector<long> &s = k_or_s;
		if (static_cast<int>(s.size()) != l + 1)
			throw internal_error("char_ratio: wrong s length");
		if (n < 1)
			throw internal_error("char_ratio: n must be >= 1");
		std::vector<long> num;
		Tag num_tag = Tag::A2;
		switch (f) {
		case Family::ps1:
			num.push_back(n * s[l]);
			for (int j = l - 1; j >= 0; --j)
				num.push_back(2 * n * s[j]);
			break;
		case Family::ps2:
			num.push_back(n * s[0]);
			for (int j = 1; j <= l; ++j)
				num.push_back(2 * n * s[j]);
			break;
		case Family::ps3:
			num_tag = Tag::D2;
			num.push_back(n * s[0]);
			for (int j = 1; j <= l - 1; ++j)
				num.push_back(2 * n * s[j]);
			num.push_back(n * s[l]);
			break;
		default:
			break;
		}
		Series out = q_denominator({num_tag, l}, num, N);
		return out.mul(q_denominator({Tag::C1, l}, s, N).inv());
	}

	const std::vector<long> &k = k_or_s;
	check_weight(l, k);
	switch (f) {
	case Family::lepowsky: {
		std::vector<long> kp(k);
		for (long &v : kp)
			++v;
		Series num = q_denominator({Tag::D2, l}, kp, N);
		std::vector<long> ones(l + 1, 1);
		return num.mul(q_denominator({Tag::C1, l}, ones, N).inv());
	}
	case Family::w21_1: {
		std::vector<long> arg;
		for (int j = l; j >= 1; --j)
			arg.push_back(k[j] + 1);
		arg.push_back(2 * (k[0] + 1));
		Series num = q_denominator({Tag::A2, l}, arg, N);
		return num.mul(euler_phi_pow(N, -l));
	}
	case Family::w1_12: {
		std::vector<long> arg;
		for (int j = 0; j <= l - 1; ++j)
			arg.push_back(k[j] + 1);
		arg.push_back(2 * (k[l] + 1));
		Series num = q_denominator({Tag::A2, l}, arg, N);
		return num.mul(euler_phi_pow(N, -l));
	}
	case Family::w21_12: {
		std::vector<long> arg;
		arg.push_back(2 * (k[0] + 1));
		for (int j = 1; j <= l - 1; ++j)
			arg.push_back(k[j] + 1);
		arg.push_back(2 * (k[l] + 1));
		Series num = q_denominator({Tag::C1, l}, arg, N);
		std::vector<long> den(l + 1, 1);
		den[0] = 2;
		den[l] = 2;
		return num.mul(q_denominator({Tag::C1, l}, den, N).inv());
	}
	default:
		throw internal_error("char_ratio: bad family");
	}
}

ProductExpr char_explicit(Family f, int l, const std::vector<long> &k_or_s,
			  long n)
{
	ProductExpr out;

	if (family_is_ps(f)) {
		const std::vector<long> &s = k_or_s;
		if (static_cast<int>(s.size()) != l + 1)
			throw internal_error("char_explicit: wrong s length");
		if (n < 1)
			throw internal_error("char_explicit: n must be >= 1");
		const long P1 = p1_of(l, s);
		const long M = 2 * n * P1;

		/* shared denominator-type factor mod P1 */
		std::vector<long> c1args(s.begin() + 1, s.end());
		for (long a : congruence_triangle(Tag::C1, c1args))
			out.add_class_pm(P1, a, -1);
		out.add_class(P1, 0, -static_cast<long>(l));

		switch (f) {
		case Family::ps1: {
			std::vector<long> targs;
			for (int j = 1; j <= l - 1; ++j)
				targs.push_back(2 * n * s[j]);
			targs.push_back(n * s[l]);
			for (long a : congruence_triangle(Tag::A2T, targs))
				out.add_class_pm(M, a, 1);
			out.add_class(M, 0, static_cast<long>(l));
			std::vector<long> sargs;
			sargs.push_back(2 * n * s[0]);
			for (int j = 1; j <= l - 1; ++j)
				sargs.push_back(2 * n * s[j]);
			for (long c : s_set(sargs))
				out.add_class_pm(2 * M, c, 1);
			break;
		}
		case Family::ps2: {
			std::vector<long> targs;
			for (int j = l - 1; j >= 1; --j)
				targs.push_back(2 * n * s[j]);
			targs.push_back(n * s[0]);
			for (long a : congruence_triangle(Tag::A2, targs))
				out.add_class_pm(M, a, 1);
			out.add_class(M, 0, static_cast<long>(l));
			std::vector<long> sargs;
			sargs.push_back(2 * n * s[l]);
			for (int j = l - 1; j >= 1; --j)
				sargs.push_back(2 * n * s[j]);
			for (long c : s_set(sargs))
				out.add_class_pm(2 * M, c, 1);
			break;
		}
		case Family::ps3: {
			std::vector<long> dargs;
			dargs.push_back(n * s[0]);
			for (int j = 1; j <= l - 1; ++j)
				dargs.push_back(2 * n * s[j]);
			dargs.push_back(n * s[l]);
			for (long a : d_set(Tag::D2, dargs))
				out.add_class(M, a, 1);
			out.add_class(M, 0, static_cast<long>(l));
			std::vector<long> targs(dargs.begin() + 1,
						dargs.end());
			for (long b : congruence_triangle(Tag::D2, targs))
				out.add_class_pm(M, b, 1);
			break;
		}
		default:
			break;
		}
		return out;
	}

	const std::vector<long> &k = k_or_s;
	check_weight(l, k);
	const long m = 2 * (level_of(k) + l + 1);

	switch (f) {
	case Family::lepowsky: {
		std::vector<long> dargs(k);
		for (long &v : dargs)
			++v;
		for (long a : d_set(Tag::D2, dargs))
			out.add_class(m, a, 1);
		out.add_class(m, 0, static_cast<long>(l));
		std::vector<long> targs(dargs.begin() + 1, dargs.end());
		for (long b : congruence_triangle(Tag::D2, targs))
			out.add_class_pm(m, b, 1);
		out.add_class(1, 0, -static_cast<long>(l)); /* phi^{-l} */
		out.add_class(2, 1, -1);
		break;
	}
	case Family::w21_12: {
		out.add_class(m, 0, static_cast<long>(l));
		std::vector<long> targs;
		for (int j = 1; j <= l - 1; ++j)
			targs.push_back(k[j] + 1);
		targs.push_back(2 * (k[l] + 1));
		for (long b : congruence_triangle(Tag::C1, targs))
			out.add_class_pm(m, b, 1);
		out.add_class(1, 0, -(static_cast<long>(l) - 1));
		out.add_class(2, 0, -1);
		out.add_class(2L * (l + 1), l + 1, -1);
		break;
	}
	case Family::w1_12: {
		out.add_class(1, 0, -static_cast<long>(l));
		std::vector<long> targs;
		for (int j = l - 1; j >= 0; --j)
			targs.push_back(k[j] + 1);
		for (long a : congruence_triangle(Tag::A2, targs))
			out.add_class_pm(m, a, 1);
		out.add_class(m, 0, static_cast<long>(l));
		std::vector<long> sargs;
		sargs.push_back(2 * (k[l] + 1));
		for (int j = l - 1; j >= 1; --j)
			sargs.push_back(k[j] + 1);
		for (long c : s_set(sargs))
			out.add_class_pm(2 * m, c, 1);
		break;
	}
	case Family::w21_1: {
		out.add_class(1, 0, -static_cast<long>(l));
		std::vector<long> targs;
		for (int j = 1; j <= l; ++j)
			targs.push_back(k[j] + 1);
		for (long a : congruence_triangle(Tag::A2T, targs))
			out.add_class_pm(m, a, 1);
		out.add_class(m, 0, static_cast<long>(l));
		std::vector<long> sargs;
		sargs.push_back(2 * (k[0] + 1));
		for (int j = 1; j <= l - 1; ++j)
			sargs.push_back(k[j] + 1);
		for (long c : s_set(sargs))
			out.add_class_pm(2 * m, c, 1);
		break;
	}
	default:
		throw internal_error("char_explicit: bad family");
	}
	return out;
}

std::string report_to_json(const Report &r)
{
	nlohmann::json doc;
	doc["identity"] = r.identity;
	doc["order"] = r.order;
	doc["equal"] = r.equal;
	if (r.equal)
		doc["first_mismatch"] = nullptr;
	else
		doc["first_mismatch"] = r.first_mismatch;
	doc["lhs"] = r.lhs;
	doc["rhs"] = r.rhs;
	return doc.dump(2);
}

Report verify_family(Family f, int l, const std::vector<long> &k_or_s,
		     long n, int N)
{
	Series lhs = char_ratio(f, l, k_or_s, n, N);
	ProductExpr rhs = char_explicit(f, l, k_or_s, n);
	auto cmp = Series::compare(lhs, rhs.expand(N));
	Report r;
	r.identity = family_name(f);
	r.order = N;
	r.equal = cmp.equal;
	r.first_mismatch = cmp.exponent;
	r.lhs = "series";
	r.rhs = rhs.str();
	return r;
}

Report borcea_check(int l, const std::vector<long> &k, int N)
{
	check_weight(l, k);
	Series lhs = char_ratio(Family::w21_1, l, k, 0, N);

	std::vector<long> arg;
	for (int j = l; j >= 1; --j)
		arg.push_back(k[j] + 1);
	arg.push_back(2 * (k[0] + 1));
	Series rhs = q_denominator({Tag::A2, l}, arg, N);
	std::vector<long> ones(l + 1, 1);
	rhs = rhs.mul(q_denominator({Tag::A2, l}, ones, N).inv());
	ProductExpr fq;
	for (int i = 1; i <= l; ++i)
		fq.add_class_pm(2L * (2 * l + 1), 2 * i - 1, 1);
	rhs = rhs.mul(fq.expand(N));

	auto cmp = Series::compare(lhs, rhs);
	Report r;
	r.identity = "borcea";
	r.order = N;
	r.equal = cmp.equal;
	r.first_mismatch = cmp.exponent;
	r.lhs = "series";
	r.rhs = "series";
	return r;
}

std::vector<std::vector<long>> cartan_matrix_c1(int l)
{
	SimpleRoots sr = simple_roots({Tag::C1, l});
	std::vector<std::vector<long>> a(l + 1, std::vector<long>(l + 1, 0));
	for (int i = 0; i <= l; ++i)
		for (int j = 0; j <= l; ++j) {
			long ii = 0, ij = 0;
			for (int t = 0; t < l; ++t) {
				ii += sr.eps[i][t] * sr.eps[i][t];
				ij += sr.eps[i][t] * sr.eps[j][t];
			}
			if ((2 * ij) % ii != 0)
				throw internal_error(
					"cartan_matrix_c1: non-integer entry");
			a[i][j] = 2 * ij / ii;
		}
	return a;
}

Series weyl_kac_specialized(int l, const std::vector<long> &k,
			    const std::vector<long> &s, int N)
{
	check_weight(l, k);
	if (static_cast<int>(s.size()) != l + 1)
		throw internal_error("weyl_kac_specialized: wrong s length");
	for (long v : s)
		if (v < 1)
			throw internal_error(
				"weyl_kac_specialized: s must be positive");

	const auto a = cartan_matrix_c1(l);

	/* Breadth-first closure over simple reflections; a state is the
	 * vector n with w(Lambda+rho) = (Lambda+rho) - sum n_i alpha_i, so
	 * the contributed term is (-1)^depth q^{sum n_i s_i}. */
	Series num(N);
	std::map<std::vector<long>, char> seen;
	std::vector<std::vector<long>> frontier{std::vector<long>(l + 1, 0)};
	seen.emplace(frontier[0], 1);
	long sign = 1;
	while (!frontier.empty()) {
		for (const auto &nvec : frontier) {
			long deg = 0;
			for (int i = 0; i <= l; ++i)
				deg += nvec[i] * s[i];
			num.at(static_cast<int>(deg)) += sign;
		}
		std::vector<std::vector<long>> next;
		for (const auto &nvec : frontier) {
			for (int i = 0; i <= l; ++i) {
				long mu = k[i] + 1;
				for (int j = 0; j <= l; ++j)
					mu -= nvec[j] * a[i][j];
				if (mu <= 0)
					continue;
				std::vector<long> child(nvec);
				child[i] += mu;
				long deg = 0;
				for (int j = 0; j <= l; ++j)
					deg += child[j] * s[j];
				if (deg > N)
					continue;
				if (seen.emplace(child, 1).second)
					next.push_back(std::move(child));
			}
		}
		frontier = std::move(next);
		sign = -sign;
	}
	return num.mul(q_denominator({Tag::C1, l}, s, N).inv());
}

} /* namespace affchar */
