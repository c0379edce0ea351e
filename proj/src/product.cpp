#include "affchar/product.hpp"

#include <cctype>
#include <sstream>

namespace affchar {

void ProductExpr::add_class(long m, long r, long e)
{
	if (m < 1)
		throw internal_error("ProductExpr: modulus must be positive");
	if (e == 0)
		return;
	r %= m;
	if (r < 0)
		r += m;
	auto key = std::make_pair(m, r);
	auto it = periodic_.find(key);
	if (it == periodic_.end()) {
		periodic_.emplace(key, e);
	} else {
		it->second += e;
		if (it->second == 0)
			periodic_.erase(it);
	}
}

void ProductExpr::add_one_plus_class(long m, long r, long e)
{
	/* 1+q^j = (1-q^{2j})/(1-q^j); j = r mod m maps to 2j = 2r mod 2m. */
	add_class(2 * m, 2 * r, e);
	add_class(m, r, -e);
}

void ProductExpr::add_finite(long j, long e)
{
	if (j < 1)
		throw internal_error("ProductExpr: finite exponent must be "
				     "positive");
	if (e == 0)
		return;
	auto it = finite_.find(j);
	if (it == finite_.end()) {
		finite_.emplace(j, e);
	} else {
		it->second += e;
		if (it->second == 0)
			finite_.erase(it);
	}
}

ProductExpr &ProductExpr::operator*=(const ProductExpr &other)
{
	for (const auto &[key, e] : other.periodic_)
		add_class(key.first, key.second, e);
	for (const auto &[j, e] : other.finite_)
		add_finite(j, e);
	return *this;
}

Series ProductExpr::expand(int order) const
{
	Series s = Series::one(order);
	for (const auto &[key, e] : periodic_) {
		const long m = key.first;
		const long start = key.second == 0 ? m : key.second;
		for (long j = start; j <= order; j += m)
			s.mul_binomial(static_cast<int>(j), e);
	}
	for (const auto &[j, e] : finite_)
		if (j <= order)
			s.mul_binomial(static_cast<int>(j), e);
	return s;
}

std::string ProductExpr::str() const
{
	std::ostringstream os;
	bool first = true;
	for (const auto &[j, e] : finite_) {
		if (!first)
			os << " ";
		first = false;
		os << "(1-q^" << j << ")^" << e;
	}
	for (const auto &[key, e] : periodic_) {
		if (!first)
			os << " ";
		first = false;
		os << "(1-q^j)^" << e << " : j = " << key.second << " mod "
		   << key.first;
	}
	if (first)
		os << "1";
	return os.str();
}

namespace {

class Scanner {
public:
	explicit Scanner(const std::string &text) : text_(text) {}

	void skip_ws()
	{
		while (pos_ < text_.size() &&
		       std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool done()
	{
		skip_ws();
		return pos_ >= text_.size();
	}

	/* Consumes the literal (ignoring interior whitespace mismatches is
	 * not needed: literals contain no spaces). */
	void expect(const std::string &lit)
	{
		skip_ws();
		if (text_.compare(pos_, lit.size(), lit) != 0)
			throw parse_error(pos_, "expected '" + lit + "'");
		pos_ += lit.size();
	}

	bool peek(const std::string &lit)
	{
		skip_ws();
		return text_.compare(pos_, lit.size(), lit) == 0;
	}

	bool accept(const std::string &lit)
	{
		if (!peek(lit))
			return false;
		pos_ += lit.size();
		return true;
	}

	long integer(bool allow_sign)
	{
		skip_ws();
		std::size_t start = pos_;
		if (allow_sign && pos_ < text_.size() &&
		    (text_[pos_] == '+' || text_[pos_] == '-'))
			++pos_;
		std::size_t digits = pos_;
		while (pos_ < text_.size() &&
		       std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (pos_ == digits)
			throw parse_error(start, "expected an integer");
		return std::stol(text_.substr(start, pos_ - start));
	}

	std::size_t position() const { return pos_; }

private:
	const std::string &text_;
	std::size_t pos_ = 0;
};

} /* namespace */

ProductExpr parse_product(const std::string &text)
{
	ProductExpr out;
	Scanner sc(text);
	while (!sc.done()) {
		sc.expect("(1-q^");
		bool symbolic = false;
		long base = 0;
		if (sc.accept("j"))
			symbolic = true;
		else
			base = sc.integer(false);
		sc.expect(")");
		sc.expect("^");
		long e = sc.integer(true);
		if (sc.accept(":")) {
			if (!symbolic)
				throw parse_error(
					sc.position(),
					"residue clause requires a 'j' base");
			sc.expect("j");
			sc.expect("=");
			std::vector<long> residues;
			residues.push_back(sc.integer(false));
			while (sc.accept(","))
				residues.push_back(sc.integer(false));
			sc.expect("mod");
			std::size_t mpos = sc.position();
			long m = sc.integer(false);
			if (m < 1)
				throw parse_error(mpos,
						  "modulus must be positive");
			for (long r : residues) {
				if (r >= m)
					throw parse_error(
						mpos,
						"residue not smaller than "
						"modulus");
				out.add_class(m, r, e);
			}
		} else {
			if (symbolic)
				throw parse_error(sc.position(),
						  "'j' base requires a "
						  "residue clause");
			if (base < 1)
				throw parse_error(sc.position(),
						  "exponent of q must be "
						  "positive");
			out.add_finite(base, e);
		}
	}
	return out;
}

} /* namespace affchar */
