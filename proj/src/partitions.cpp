#include "affchar/partitions.hpp"

#include <algorithm>
#include <json.hpp>
#include <thread>

namespace affchar {

ExtendedArray extend_array(const RootArray &base, const std::vector<long> &k)
{
	if (base.type.tag != Tag::C1)
		throw internal_error("extend_array: C1 arrays only");
	if (static_cast<int>(k.size()) != base.type.l + 1)
		throw internal_error("extend_array: wrong weight length");
	for (long v : k)
		if (v < 0)
			throw internal_error("extend_array: negative weight");
	return {base, k};
}

namespace {

long level_of(const std::vector<long> &k)
{
	long acc = 0;
	for (long v : k)
		acc += v;
	return acc;
}

/* Row-sweep DP over the window cols -2 .. cmax.  Positions outside the
 * array's support carry weight 0 for array columns; the e/h columns carry
 * the initial-condition exponents. */
long downpath_dp(const ExtendedArray &ext, const Multiplicities &mult,
		 long cmax)
{
	const int l = ext.base.type.l;
	const long cmin = -2;
	if (cmax < 0)
		cmax = 0;
	const long width = cmax - cmin + 1;
	const long NEG = -(1L << 40);

	auto weight = [&](int row, long col) -> long {
		if (col == -2)
			return (row % 2 == 0) ? ext.e_exponent(row) : NEG;
		if (col == -1)
			return (row % 2 == 1) ? 0 : NEG;
		if ((row & 1) != (col & 1))
			return NEG;
		auto it = mult.find({row, col});
		return it == mult.end() ? 0 : it->second;
	};

	std::vector<long> best(width, NEG), next(width, NEG);
	for (long c = cmin; c <= cmax; ++c) {
		long w = weight(0, c);
		best[c - cmin] = w <= NEG ? NEG : w;
	}
	for (int row = 1; row <= 2 * l; ++row) {
		for (long c = cmin; c <= cmax; ++c) {
			long w = weight(row, c);
			if (w <= NEG) {
				next[c - cmin] = NEG;
				continue;
			}
			long up = NEG;
			if (c - 1 >= cmin)
				up = std::max(up, best[c - 1 - cmin]);
			if (c + 1 <= cmax)
				up = std::max(up, best[c + 1 - cmin]);
			next[c - cmin] = up <= NEG ? NEG : up + w;
		}
		std::swap(best, next);
	}
	long out = NEG;
	for (long v : best)
		out = std::max(out, v);
	if (out <= NEG)
		throw internal_error("downpath_dp: no downward path");
	return out;
}

long support_cmax(const ExtendedArray &ext, const Multiplicities &mult)
{
	long cmax = 0;
	for (const auto &[key, m] : mult)
		if (m > 0)
			cmax = std::max(cmax, key.second);
	return cmax + 2L * ext.base.type.l;
}

struct Candidate {
	int row;
	long col;
	long label;
};

struct Search {
	const ExtendedArray &ext;
	const std::vector<Candidate> &nodes;
	long level;
	long bound;
	Multiplicities mult;
	std::vector<long> counts;

	Search(const ExtendedArray &e, const std::vector<Candidate> &nd,
	       long lv, long bd)
		: ext(e), nodes(nd), level(lv), bound(bd),
		  counts(bd + 1, 0)
	{
	}

	void dfs(std::size_t idx, long deg)
	{
		if (idx == nodes.size()) {
			++counts[deg];
			return;
		}
		const Candidate &nd = nodes[idx];
		/* multiplicity 0 first: partition unchanged, admissible */
		dfs(idx + 1, deg);
		long cap = std::min(level, (bound - deg) / nd.label);
		auto key = std::make_pair(nd.row, nd.col);
		for (long m = 1; m <= cap; ++m) {
			mult[key] = m;
			/* path sums only grow with multiplicity, so an
			 * inadmissible prefix prunes the whole subtree */
			if (downpath_dp(ext, mult, support_cmax(ext, mult)) >
			    level)
				break;
			dfs(idx + 1, deg + m * nd.label);
		}
		mult.erase(key);
	}
};

} /* namespace */

long max_downpath(const ExtendedArray &ext, const Multiplicities &mult)
{
	return downpath_dp(ext, mult, support_cmax(ext, mult));
}

bool is_admissible(const ExtendedArray &ext, const Multiplicities &mult)
{
	return max_downpath(ext, mult) <= level_of(ext.k);
}

std::vector<long> enumerate_admissible(const EnumConfig &cfg)
{
	if (cfg.bound < 0)
		throw internal_error("enumerate_admissible: negative bound");
	if (cfg.bound > 60)
		throw internal_error("enumerate_admissible: bound too large "
				     "for exhaustive search (limit 60)");
	if (cfg.threads < 1)
		throw internal_error("enumerate_admissible: bad thread count");

	const long level = level_of(cfg.k);
	long smin = *std::min_element(cfg.s.begin(), cfg.s.end());
	long ncols = cfg.bound / std::max(smin, 1L) + 2L * cfg.l + 2;
	RootArray base = build_array({Tag::C1, cfg.l}, ncols);
	SpecArray sa = specialize(base, cfg.s);
	ExtendedArray ext = extend_array(base, cfg.k);

	std::vector<Candidate> nodes;
	for (const auto &[key, label] : sa.labels)
		if (label <= cfg.bound && level >= 1)
			nodes.push_back({key.first, key.second, label});
	std::sort(nodes.begin(), nodes.end(),
		  [](const Candidate &a, const Candidate &b) {
			  return std::tie(a.col, a.row) <
				 std::tie(b.col, b.row);
		  });

	if (!is_admissible(ext, {}))
		throw internal_error("enumerate_admissible: empty partition "
				     "inadmissible");

	if (nodes.empty() || cfg.threads == 1) {
		Search s(ext, nodes, level, cfg.bound);
		s.dfs(0, 0);
		return s.counts;
	}

	/* Fork on the multiplicity of the first candidate node; merge in
	 * choice order for determinism. */
	const Candidate &first = nodes[0];
	long cap = std::min(level, cfg.bound / first.label);
	std::vector<std::vector<long>> partial(cap + 1);
	std::vector<std::thread> workers;
	for (long m = 0; m <= cap; ++m)
		workers.emplace_back([&, m]() {
			Search s(ext, nodes, level, cfg.bound);
			if (m > 0) {
				s.mult[{first.row, first.col}] = m;
				if (downpath_dp(ext, s.mult,
						support_cmax(ext, s.mult)) >
				    level) {
					partial[m] = s.counts;
					return;
				}
			}
			s.dfs(1, m * first.label);
			partial[m] = s.counts;
		});
	for (auto &w : workers)
		w.join();
	std::vector<long> counts(cfg.bound + 1, 0);
	for (long m = 0; m <= cap; ++m)
		for (long n = 0; n <= cfg.bound; ++n)
			counts[n] += partial[m][n];
	return counts;
}

std::string counts_to_json(const EnumConfig &cfg,
			   const std::vector<long> &counts)
{
	nlohmann::json doc;
	doc["lambda"] = cfg.k;
	doc["s"] = cfg.s;
	doc["bound"] = cfg.bound;
	doc["counts"] = counts;
	return doc.dump(2);
}

Report verify_conjecture(const EnumConfig &cfg, int N)
{
	const int l = cfg.l;
	std::vector<long> s = cfg.s;
	Family family;
	std::vector<long> interior(s.begin() + 1, s.end() - 1);
	bool mid_ones = std::all_of(interior.begin(), interior.end(),
				    [](long v) { return v == 1; });
	if (!mid_ones || (s[0] != 1 && s[0] != 2) ||
	    (s[l] != 1 && s[l] != 2))
		throw internal_error("verify_conjecture: no product formula "
				     "for this specialization");
	if (s[0] == 1 && s[l] == 1)
		family = Family::lepowsky;
	else if (s[0] == 2 && s[l] == 1)
		family = Family::w21_1;
	else if (s[0] == 1 && s[l] == 2)
		family = Family::w1_12;
	else
		family = Family::w21_12;

	int order = std::min<long>(N, cfg.bound);
	std::vector<long> counts = enumerate_admissible(cfg);
	Series ch = char_ratio(family, l, cfg.k, 0, order);

	Report r;
	r.identity = "conjecture/" + family_name(family);
	r.order = order;
	r.equal = true;
	r.first_mismatch = -1;
	r.lhs = "counts";
	r.rhs = "series";
	for (int n = 0; n <= order; ++n)
		if (ch[n] != counts[n]) {
			r.equal = false;
			r.first_mismatch = n;
			break;
		}
	return r;
}

} /* namespace affchar */
