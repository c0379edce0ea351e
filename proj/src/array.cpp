#include "affchar/array.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace affchar {

namespace {

/* Letter weights of the vector representation, as epsilon vectors:
 * C_l: 1,...,l,lbar,...,1bar (2l letters);
 * B_l: 1,...,l,0,lbar,...,1bar (2l+1 letters). */
std::vector<std::vector<long>> letters_c(int l)
{
	std::vector<std::vector<long>> w(2 * l, std::vector<long>(l, 0));
	for (int p = 0; p < l; ++p)
		w[p][p] = 1;
	for (int p = l; p < 2 * l; ++p)
		w[p][2 * l - 1 - p] = -1;
	return w;
}

std::vector<std::vector<long>> letters_b(int l)
{
	std::vector<std::vector<long>> w(2 * l + 1, std::vector<long>(l, 0));
	for (int p = 0; p < l; ++p)
		w[p][p] = 1;
	for (int p = l + 1; p <= 2 * l; ++p)
		w[p][2 * l - p] = -1;
	return w;
}

struct Builder {
	AffineType type;
	int l;
	long ncols;
	SimpleRoots sr;
	bool reverse_roots; /* A2T: reverse RootCoord vectors */
	RootArray out;

	Builder(AffineType t, long nc)
		: type(t), l(t.l), ncols(nc),
		  sr(simple_roots(t.tag == Tag::A2T ? AffineType{Tag::A2, t.l}
						    : t)),
		  reverse_roots(t.tag == Tag::A2T)
	{
		out.type = t;
		out.ncols = nc;
	}

	void place(int row, long col, long tdeg,
		   const std::vector<long> &eps_wt, const ComponentId &cid,
		   int p, int q)
	{
		if (col < 0 || col >= ncols)
			return;
		if (row < 0 || row > 2 * l || (row & 1) != (col & 1))
			throw internal_error("array: node off the grid");
		std::vector<long> neg(eps_wt.size());
		for (std::size_t i = 0; i < eps_wt.size(); ++i)
			neg[i] = -eps_wt[i];
		std::vector<long> root = root_coords(sr, neg, -tdeg);
		bool nonzero = false;
		for (long k : root) {
			if (k < 0)
				throw internal_error(
					"array: negative root coordinate");
			if (k != 0)
				nonzero = true;
		}
		if (!nonzero)
			throw internal_error("array: zero root at a node");
		if (reverse_roots)
			std::reverse(root.begin(), root.end());
		ArrayNode node{row, col, tdeg, std::move(root), cid, p, q};
		auto [it, inserted] =
			out.nodes.emplace(std::make_pair(row, col), node);
		(void)it;
		if (!inserted)
			throw internal_error("array: duplicate node position");
	}

	/* up:   (p,q) -> (p-q, b+p+q);  down: (p,q) -> (2l-p+q, b+p+q) */
	void triangle(const std::vector<std::vector<long>> &w, int pmax,
		      bool shift_p, bool exclude_mid, long base, long tdeg,
		      bool up, const ComponentId &cid)
	{
		for (int p = 0; p <= pmax; ++p)
			for (int q = 0; q <= p; ++q) {
				if (exclude_mid && p == l && q == l)
					continue;
				std::vector<long> wt = w[shift_p ? p + 1 : p];
				for (int i = 0; i < this->l; ++i)
					wt[i] += w[q][i];
				int row = up ? p - q : 2 * l - p + q;
				place(row, base + p + q, tdeg, wt, cid, p, q);
			}
	}

	void diagonal(const std::vector<std::vector<long>> &w, long base,
		      long tdeg, bool rising, const ComponentId &cid)
	{
		for (int p = 0; p <= 2 * l; ++p) {
			int row = rising ? 2 * l - p : p;
			place(row, base + p, tdeg, w[p], cid, p, 0);
		}
	}

	void run()
	{
		switch (type.tag) {
		case Tag::C1: {
			auto w = letters_c(l);
			for (long j = 0; 2L * l * (j - 1) < ncols; ++j) {
				ComponentId cid{j == 0 ? kind_first_triangle
						       : kind_adjoint_triangle,
						j};
				triangle(w, 2 * l - 1, false, false,
					 2L * l * (j - 1), -j, j % 2 == 0,
					 cid);
			}
			break;
		}
		case Tag::D2: {
			auto w = letters_b(l);
			const long stride = 2L * (l + 1);
			for (long m = 0; stride * m - 2 * l < ncols; ++m) {
				ComponentId tri{m == 0 ? kind_first_triangle
						       : kind_adjoint_triangle,
						m};
				triangle(w, 2 * l - 1, true, false,
					 stride * m - 2 * l, -2 * m,
					 m % 2 == 0, tri);
				ComponentId dia{kind_vector_diagonal, m};
				diagonal(w, stride * m, -(2 * m + 1),
					 m % 2 == 0, dia);
			}
			break;
		}
		case Tag::A2:
		case Tag::A2T: {
			auto w = letters_b(l);
			const long stride = 2L * (2 * l + 1);
			for (long m = 0; stride * m - 2 * l < ncols; ++m) {
				ComponentId tri{m == 0 ? kind_first_triangle
						       : kind_adjoint_triangle,
						m};
				triangle(w, 2 * l - 1, true, false,
					 stride * m - 2 * l, -2 * m, true,
					 tri);
				ComponentId sym{kind_sym2_triangle, m};
				triangle(w, 2 * l, false, true, stride * m,
					 -(2 * m + 1), false, sym);
			}
			break;
		}
		}
	}
};

long cols_per_period_of(AffineType type)
{
	switch (type.tag) {
	case Tag::C1:
		return 2L * type.l;
	case Tag::D2:
		return 2L * (type.l + 1);
	case Tag::A2:
	case Tag::A2T:
		return 2L * (2 * type.l + 1);
	}
	throw internal_error("cols_per_period: bad tag");
}

} /* namespace */

RootArray build_array(AffineType type, long ncols)
{
	if (ncols < 1)
		throw internal_error("build_array: ncols must be positive");
	Builder b(type, ncols);
	b.run();
	return b.out;
}

SpecArray specialize(const RootArray &a, const std::vector<long> &s)
{
	if (static_cast<int>(s.size()) != a.type.l + 1)
		throw internal_error("specialize: wrong s length");
	for (long v : s)
		if (v < 1)
			throw internal_error("specialize: s entries must be "
					     "positive");
	SpecArray sa;
	sa.base = a;
	sa.s = s;
	sa.period = period(a.type, s);
	sa.cols_per_period = cols_per_period_of(a.type);
	for (const auto &[key, node] : a.nodes) {
		long label = 0;
		for (std::size_t i = 0; i < s.size(); ++i)
			label += node.root[i] * s[i];
		if (label < 1)
			throw internal_error("specialize: nonpositive label");
		sa.labels.emplace(key, label);
	}
	return sa;
}

std::vector<long> period_multiset(const SpecArray &sa)
{
	if (sa.base.ncols < sa.cols_per_period)
		throw internal_error("period_multiset: array covers less "
				     "than one period");
	std::vector<long> out;
	for (const auto &[key, label] : sa.labels)
		if (key.second < sa.cols_per_period)
			out.push_back(label);
	std::sort(out.begin(), out.end());
	return out;
}

Series q_from_array(AffineType type, const std::vector<long> &s, int N,
		    std::vector<long> *oversized_labels)
{
	long smin = s.empty() ? 1 : *std::min_element(s.begin(), s.end());
	long ncols = (N + smin - 1) / smin + cols_per_period_of(type);
	SpecArray sa = specialize(build_array(type, ncols), s);
	std::vector<long> labels = period_multiset(sa);
	const long P = sa.period;
	Series out = Series::one(N);
	for (long a : labels) {
		if (a > P && oversized_labels)
			oversized_labels->push_back(a);
		for (long j = a; j <= N; j += P)
			out.mul_binomial(static_cast<int>(j), 1);
	}
	return out;
}

std::string render_text(const SpecArray &sa)
{
	const int l = sa.base.type.l;
	long maxlabel = 1;
	for (const auto &[key, label] : sa.labels)
		maxlabel = std::max(maxlabel, label);
	int width = static_cast<int>(std::to_string(maxlabel).size());

	std::ostringstream os;
	for (int row = 0; row <= 2 * l; ++row) {
		std::string line;
		for (long col = 0; col < sa.base.ncols; ++col) {
			std::string cell;
			if ((row & 1) == (col & 1)) {
				auto it = sa.labels.find({row, col});
				cell = it == sa.labels.end()
					       ? "."
					       : std::to_string(it->second);
			}
			line += std::string(width - cell.size() + 1, ' ');
			line += cell;
		}
		while (!line.empty() && line.back() == ' ')
			line.pop_back();
		if (!line.empty() && line.front() == ' ')
			line.erase(0, 1);
		os << line << "\n";
	}
	return os.str();
}

std::string to_json(const SpecArray &sa)
{
	nlohmann::json doc;
	doc["type"] = tag_name(sa.base.type.tag);
	doc["l"] = sa.base.type.l;
	doc["period"] = sa.period;
	doc["s"] = sa.s;
	doc["ncols"] = sa.base.ncols;
	doc["nodes"] = nlohmann::json::array();
	for (const auto &[key, node] : sa.base.nodes) {
		nlohmann::json n;
		n["row"] = node.row;
		n["col"] = node.col;
		n["label"] = sa.labels.at(key);
		n["root"] = node.root;
		n["tdeg"] = node.tdeg;
		n["component"] = {{"kind", node.component.kind},
				  {"shift", node.component.shift}};
		n["p"] = node.p;
		n["q"] = node.q;
		doc["nodes"].push_back(std::move(n));
	}
	return doc.dump(2);
}

SpecArray spec_array_from_json(const std::string &text)
{
	nlohmann::json doc = nlohmann::json::parse(text);
	SpecArray sa;
	sa.base.type = {tag_from_name(doc.at("type").get<std::string>()),
			doc.at("l").get<int>()};
	sa.base.ncols = doc.at("ncols").get<long>();
	sa.period = doc.at("period").get<long>();
	sa.s = doc.at("s").get<std::vector<long>>();
	sa.cols_per_period = cols_per_period_of(sa.base.type);
	for (const auto &n : doc.at("nodes")) {
		ArrayNode node;
		node.row = n.at("row").get<int>();
		node.col = n.at("col").get<long>();
		node.tdeg = n.at("tdeg").get<long>();
		node.root = n.at("root").get<std::vector<long>>();
		node.component.kind =
			n.at("component").at("kind").get<std::string>();
		node.component.shift =
			n.at("component").at("shift").get<long>();
		node.p = n.at("p").get<int>();
		node.q = n.at("q").get<int>();
		auto key = std::make_pair(node.row, node.col);
		sa.labels[key] = n.at("label").get<long>();
		sa.base.nodes.emplace(key, std::move(node));
	}
	return sa;
}

} /* namespace affchar */
