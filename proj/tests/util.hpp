#ifndef AFFCHAR_TESTS_UTIL_HPP
#define AFFCHAR_TESTS_UTIL_HPP

#include "affchar/array.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

inline std::string read_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline std::vector<std::string> tokens(const std::string &text)
{
	std::istringstream in(text);
	std::vector<std::string> out;
	std::string t;
	while (in >> t)
		out.push_back(t);
	return out;
}

struct FixtureCase {
	std::string file;
	std::vector<std::string> argv;
};

inline std::vector<FixtureCase> load_manifest(const std::string &dir)
{
	nlohmann::json doc = nlohmann::json::parse(read_file(dir +
							     "/manifest.json"));
	std::vector<FixtureCase> out;
	for (const auto &e : doc.at("fixtures"))
		out.push_back({e.at("file").get<std::string>(),
			       e.at("argv").get<std::vector<std::string>>()});
	return out;
}

/* Pulls the value following a flag out of an argv list. */
inline std::string argv_value(const std::vector<std::string> &argv,
			      const std::string &flag)
{
	for (std::size_t i = 0; i + 1 < argv.size(); ++i)
		if (argv[i] == flag)
			return argv[i + 1];
	throw std::runtime_error("missing flag " + flag);
}

inline std::vector<long> parse_csv(const std::string &text)
{
	std::vector<long> out;
	std::istringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		out.push_back(std::stol(item));
	return out;
}

/* Renders the specialized array described by a manifest argv entry through
 * the library (same code path the command line tool uses). */
inline std::string render_fixture_case(const FixtureCase &fc)
{
	affchar::AffineType type{
		affchar::tag_from_name(argv_value(fc.argv, "--type")),
		static_cast<int>(std::stol(argv_value(fc.argv, "--rank")))};
	std::vector<long> s = parse_csv(argv_value(fc.argv, "--spec"));
	long cols = std::stol(argv_value(fc.argv, "--cols"));
	return affchar::render_text(
		affchar::specialize(affchar::build_array(type, cols), s));
}

/* Deterministic specialization draws with entries in [1, maxentry]. */
inline std::vector<long> random_spec(std::mt19937 &rng, int l, long maxentry)
{
	std::uniform_int_distribution<long> d(1, maxentry);
	std::vector<long> s(l + 1);
	for (auto &v : s)
		v = d(rng);
	return s;
}

/* All dominant weights (k_0..k_l) of level <= maxlevel. */
inline std::vector<std::vector<long>> weights_up_to_level(int l, long maxlevel)
{
	std::vector<std::vector<long>> out;
	std::vector<long> k(l + 1, 0);
	auto rec = [&](auto &&self, int i, long rem) -> void {
		if (i == l) {
			for (long v = 0; v <= rem; ++v) {
				k[l] = v;
				out.push_back(k);
			}
			return;
		}
		for (long v = 0; v <= rem; ++v) {
			k[i] = v;
			self(self, i + 1, rem - v);
		}
	};
	rec(rec, 0, maxlevel);
	return out;
}

} /* namespace testutil */

#endif
