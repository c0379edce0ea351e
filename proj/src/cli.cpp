#include "affchar/cli.hpp"

#include "affchar/array.hpp"
#include "affchar/formulas.hpp"
#include "affchar/partitions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace affchar {

namespace {

std::vector<long> parse_csv(const std::string &text)
{
	std::vector<long> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		out.push_back(std::stol(item));
	if (out.empty())
		throw CLI::ValidationError("expected a comma-separated list "
					   "of integers");
	return out;
}

std::string series_coeffs(const Series &s)
{
	std::string out;
	for (int i = 0; i <= s.order(); ++i) {
		if (i > 0)
			out += " ";
		out += s[i].get_str();
	}
	return out;
}

std::vector<std::string> series_json(const Series &s)
{
	std::vector<std::string> out;
	for (int i = 0; i <= s.order(); ++i)
		out.push_back(s[i].get_str());
	return out;
}

AffineType make_type(const std::string &type_name, int rank)
{
	return {tag_from_name(type_name), rank};
}

void require_length(const char *flag, const std::vector<long> &v, int rank,
		    long minval)
{
	if (static_cast<int>(v.size()) != rank + 1)
		throw CLI::ValidationError(
			std::string(flag) + " needs exactly rank+1 entries");
	for (long x : v)
		if (x < minval)
			throw CLI::ValidationError(
				std::string(flag) + " entries must be >= " +
				std::to_string(minval));
}

int cmd_array(const std::string &type_name, int rank,
	      const std::vector<long> &s, long cols,
	      const std::string &format, std::ostream &out)
{
	AffineType type = make_type(type_name, rank);
	require_length("--spec", s, rank, 1);
	SpecArray sa = specialize(build_array(type, cols), s);
	if (format == "json")
		out << to_json(sa) << "\n";
	else
		out << render_text(sa);
	return 0;
}

int cmd_qprod(const std::string &type_name, int rank,
	      const std::vector<long> &s, int order,
	      const std::string &format, std::ostream &out)
{
	AffineType type = make_type(type_name, rank);
	require_length("--spec", s, rank, 1);
	long P = period(type, s);
	SpecArray sa =
		specialize(build_array(type, 2L * (2 * rank + 1)), s);
	std::vector<long> labels = period_multiset(sa);
	Series q = q_from_array(type, s, order);
	if (format == "json") {
		nlohmann::json doc;
		doc["type"] = tag_name(type.tag);
		doc["l"] = rank;
		doc["s"] = s;
		doc["period"] = P;
		doc["labels"] = labels;
		doc["order"] = order;
		doc["series"] = series_json(q);
		out << doc.dump(2) << "\n";
	} else {
		out << "period " << P << "\n";
		out << "labels";
		for (long a : labels)
			out << " " << a;
		out << "\n";
		out << "series " << series_coeffs(q) << "\n";
	}
	return 0;
}

int cmd_char(const std::string &family_name_in, int rank,
	     const std::vector<long> &weight, const std::vector<long> &spec,
	     long n, int order, const std::string &format, std::ostream &out)
{
	Family f = family_from_name(family_name_in);
	std::vector<long> param;
	if (family_is_ps(f)) {
		if (spec.empty() || n < 1)
			throw CLI::ValidationError(
				"ps families need --spec and --n");
		require_length("--spec", spec, rank, 1);
		param = spec;
	} else {
		if (weight.empty())
			throw CLI::ValidationError(
				"family '" + family_name_in +
				"' needs --weight");
		require_length("--weight", weight, rank, 0);
		param = weight;
	}
	Series ch = char_ratio(f, rank, param, n, order);
	ProductExpr prod = char_explicit(f, rank, param, n);
	if (format == "json") {
		nlohmann::json doc;
		doc["family"] = family_name(f);
		doc["l"] = rank;
		if (family_is_ps(f)) {
			doc["s"] = param;
			doc["n"] = n;
			doc["weight"] = ps_weight(f, rank, n);
		} else {
			doc["weight"] = param;
			doc["s"] = family_spec(f, rank, {});
		}
		doc["order"] = order;
		doc["product"] = prod.str();
		doc["series"] = series_json(ch);
		out << doc.dump(2) << "\n";
	} else {
		out << "family " << family_name(f) << "\n";
		out << "product " << prod.str() << "\n";
		out << "series " << series_coeffs(ch) << "\n";
	}
	return 0;
}

int report_out(const Report &r, const std::string &format, std::ostream &out)
{
	if (format == "json") {
		out << report_to_json(r) << "\n";
	} else if (r.equal) {
		out << r.identity << ": OK to order " << r.order << "\n";
	} else {
		out << r.identity << ": MISMATCH at q^" << r.first_mismatch
		    << "\n";
	}
	return r.equal ? 0 : 1;
}

int cmd_verify(const std::string &identity, int rank,
	       const std::vector<long> &weight,
	       const std::vector<long> &spec, long n, int order,
	       const std::string &format, std::ostream &out)
{
	Report r;
	if (identity == "borcea") {
		if (weight.empty())
			throw CLI::ValidationError("borcea needs --weight");
		require_length("--weight", weight, rank, 0);
		r = borcea_check(rank, weight, order);
	} else {
		Family f = family_from_name(identity);
		std::vector<long> param;
		if (family_is_ps(f)) {
			if (spec.empty() || n < 1)
				throw CLI::ValidationError(
					"ps families need --spec and --n");
			require_length("--spec", spec, rank, 1);
			param = spec;
		} else {
			if (weight.empty())
				throw CLI::ValidationError(
					"family '" + identity +
					"' needs --weight");
			require_length("--weight", weight, rank, 0);
			param = weight;
		}
		r = verify_family(f, rank, param, n, order);
	}
	return report_out(r, format, out);
}

int cmd_partitions(int rank, long level, const std::vector<long> &weight,
		   const std::vector<long> &spec, long bound, bool check,
		   int threads, int order, const std::string &format,
		   std::ostream &out)
{
	require_length("--weight", weight, rank, 0);
	require_length("--spec", spec, rank, 1);
	long wlevel = 0;
	for (long v : weight)
		wlevel += v;
	if (level >= 0 && level != wlevel)
		throw CLI::ValidationError(
			"--level does not match the weight's level");
	EnumConfig cfg{rank, weight, spec, bound, threads};
	std::vector<long> counts = enumerate_admissible(cfg);
	if (format == "json") {
		out << counts_to_json(cfg, counts) << "\n";
	} else {
		out << "n count\n";
		for (long nn = 0; nn <= bound; ++nn)
			out << nn << " " << counts[nn] << "\n";
	}
	if (!check)
		return 0;
	Report r = verify_conjecture(cfg, order);
	return report_out(r, format, out);
}

int cmd_identities(const std::string &format, std::ostream &out)
{
	nlohmann::json cat = nlohmann::json::array();
	auto weight_entry = [](const std::string &name) {
		return nlohmann::json{
			{"name", name},
			{"params",
			 {{"rank", "int"}, {"weight", "k_0,...,k_l"}}}};
	};
	for (Family f : {Family::lepowsky, Family::w21_1, Family::w1_12,
			 Family::w21_12})
		cat.push_back(weight_entry(family_name(f)));
	for (Family f : {Family::ps1, Family::ps2, Family::ps3})
		cat.push_back(nlohmann::json{
			{"name", family_name(f)},
			{"params",
			 {{"rank", "int"},
			  {"spec", "s_0,...,s_l"},
			  {"n", "int >= 1"}}}});
	cat.push_back(weight_entry("borcea"));
	if (format == "json") {
		out << cat.dump(2) << "\n";
	} else {
		for (const auto &e : cat)
			out << e.at("name").get<std::string>() << "\n";
	}
	return 0;
}

} /* namespace */

int run_cli(int argc, const char *const *argv, std::ostream &out,
	    std::ostream &err)
{
	CLI::App app{"Specialized characters and arrays of negative root "
		     "vectors for affine Lie algebras"};
	app.require_subcommand(1);

	std::string type_name = "c1", format = "text", family, identity;
	int rank = 2, order = 60, threads = 1;
	long cols = -1, n = -1, level = -1, bound = 0;
	bool check = false;
	std::string spec_csv, weight_csv;

	auto add_common = [&](CLI::App *cmd, bool with_type) {
		if (with_type)
			cmd->add_option("--type", type_name,
					"affine type: c1, d2, a2, a2t")
				->check(CLI::IsMember({"c1", "d2", "a2",
						       "a2t", "C1", "D2",
						       "A2", "A2T"}));
		cmd->add_option("--rank", rank, "rank l")->required();
		cmd->add_option("--format", format, "text or json")
			->check(CLI::IsMember({"text", "json"}));
	};

	CLI::App *c_array = app.add_subcommand("array",
					       "render a specialized array");
	add_common(c_array, true);
	c_array->add_option("--spec", spec_csv, "specialization s_0,...,s_l")
		->required();
	c_array->add_option("--cols", cols, "number of columns");

	CLI::App *c_qprod = app.add_subcommand(
		"qprod", "specialized Q-denominator from the array");
	add_common(c_qprod, true);
	c_qprod->add_option("--spec", spec_csv, "specialization s_0,...,s_l")
		->required();
	c_qprod->add_option("--order", order, "truncation order");

	CLI::App *c_char = app.add_subcommand(
		"char", "specialized character of a standard module");
	add_common(c_char, false);
	c_char->add_option("--family", family, "character family")
		->required()
		->check(CLI::IsMember({"lepowsky", "w-21...1", "w-1...12",
				       "w-21...12", "ps1", "ps2", "ps3"}));
	c_char->add_option("--weight", weight_csv, "weight k_0,...,k_l");
	c_char->add_option("--spec", spec_csv, "specialization (ps only)");
	c_char->add_option("--n", n, "ps parameter n");
	c_char->add_option("--order", order, "truncation order");

	CLI::App *c_verify =
		app.add_subcommand("verify", "verify a product identity");
	add_common(c_verify, false);
	c_verify->add_option("--identity", identity, "identity name")
		->check(CLI::IsMember({"lepowsky", "w-21...1", "w-1...12",
				       "w-21...12", "ps1", "ps2", "ps3",
				       "borcea"}));
	c_verify->add_option("--weight", weight_csv, "weight k_0,...,k_l");
	c_verify->add_option("--spec", spec_csv, "specialization");
	c_verify->add_option("--n", n, "ps parameter n");
	c_verify->add_option("--order", order, "truncation order");
	c_verify->add_flag("--conjecture", check,
			   "verify the partition conjecture instead");
	c_verify->add_option("--level", level, "level of the weight");
	c_verify->add_option("--bound", bound, "enumeration bound");
	c_verify->add_option("--threads", threads, "worker threads");

	CLI::App *c_part = app.add_subcommand(
		"partitions", "enumerate admissible colored partitions");
	add_common(c_part, false);
	c_part->add_option("--level", level, "level of the weight");
	c_part->add_option("--weight", weight_csv, "weight k_0,...,k_l")
		->required();
	c_part->add_option("--spec", spec_csv, "specialization s_0,...,s_l")
		->required();
	c_part->add_option("--bound", bound, "enumeration bound")
		->required();
	c_part->add_flag("--check", check,
			 "compare counts against the character");
	c_part->add_option("--threads", threads, "worker threads");
	c_part->add_option("--order", order, "comparison order");

	CLI::App *c_ids = app.add_subcommand("identities",
					     "list verifiable identities");
	c_ids->add_option("--format", format, "text or json")
		->check(CLI::IsMember({"text", "json"}));

	try {
		app.parse(argc, argv);

		std::vector<long> spec, weight;
		if (!spec_csv.empty())
			spec = parse_csv(spec_csv);
		if (!weight_csv.empty())
			weight = parse_csv(weight_csv);

		if (c_array->parsed()) {
			if (cols < 1)
				cols = 4L * (2 * rank + 1);
			return cmd_array(type_name, rank, spec, cols, format,
					 out);
		}
		if (c_qprod->parsed())
			return cmd_qprod(type_name, rank, spec, order,
					 format, out);
		if (c_char->parsed())
			return cmd_char(family, rank, weight, spec, n, order,
					format, out);
		if (c_verify->parsed()) {
			if (check)
				return cmd_partitions(rank, level, weight,
						      spec, bound, true,
						      threads, order, format,
						      out);
			if (identity.empty())
				throw CLI::ValidationError(
					"need --identity or --conjecture");
			return cmd_verify(identity, rank, weight, spec, n,
					  order, format, out);
		}
		if (c_part->parsed())
			return cmd_partitions(rank, level, weight, spec,
					      bound, check, threads, order,
					      format, out);
		if (c_ids->parsed())
			return cmd_identities(format, out);
		throw CLI::ValidationError("no subcommand given");
	} catch (const CLI::ParseError &e) {
		if (e.get_exit_code() == 0) {
			/* --help and friends */
			std::ostringstream help;
			CLI::App *sub = nullptr;
			for (CLI::App *s : app.get_subcommands())
				sub = s;
			out << (sub ? sub->help() : app.help());
			return 0;
		}
		err << e.what() << "\n";
		return 2;
	} catch (const internal_error &e) {
		err << "internal error: " << e.what() << "\n";
		return 3;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

} /* namespace affchar */
