#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phidim/check.hpp"
#include "phidim/constructor.hpp"
#include "phidim/families.hpp"
#include "phidim/homology.hpp"

namespace phidim::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Limits {
  std::size_t max_vertices = 64;
  std::size_t max_k = 64;
};

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

TruncatedAlgebra load_algebra(const std::string& path, std::size_t k, const Limits& limits) {
  Quiver q = load_quiver(path);
  if (q.vertex_count() > limits.max_vertices)
    throw DomainError("quiver has " + std::to_string(q.vertex_count()) + " vertices, cap is " +
                      std::to_string(limits.max_vertices));
  if (k > limits.max_k) throw DomainError("k = " + std::to_string(k) + " exceeds cap " + std::to_string(limits.max_k));
  return make_algebra(std::move(q), k);
}

Json ext_json(const ExtCount& c) { return c.is_infinite() ? Json("infinite") : Json(c.value()); }

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

void table_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(static_cast<int>(std::max<std::size_t>(18, key.size() + 2))) << key << value << '\n';
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    out.push_back(item);
  }
  return out;
}

RatVector parse_rationals(const std::string& text) {
  RatVector out;
  for (const auto& item : split_csv(text)) {
    try {
      Rational q(item);
      q.canonicalize();
      out.push_back(q);
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed rational '" + item + "'");
    }
  }
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_csv(text)) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw DomainError("malformed count '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& x = m(r, c);
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

Json compute_json(const TruncatedAlgebra& a) {
  const PhiDimReport report = phi_dim_report(a);
  Json j;
  j["phidim"] = report.phidim;
  j["gldim"] = ext_json(gldim(a));
  j["selfinjective"] = report.self_injective;
  j["basis_size"] = report.basis_size;
  j["rank_sequence"] = report.generators.rank_sequence;
  j["bound_fk"] = phi_upper_bound(a);
  j["k"] = a.k();
  j["vertices"] = a.quiver().vertex_count();
  return j;
}

void print_compute_table(std::ostream& out, const TruncatedAlgebra& a) {
  const PhiDimReport report = phi_dim_report(a);
  table_row(out, "vertices", std::to_string(a.quiver().vertex_count()));
  table_row(out, "k", std::to_string(a.k()));
  table_row(out, "phidim", std::to_string(report.phidim));
  table_row(out, "gldim", gldim(a).to_string());
  table_row(out, "self-injective", report.self_injective ? "true" : "false");
  table_row(out, "basis size", std::to_string(report.basis_size));
  table_row(out, "rank sequence", join(report.generators.rank_sequence));
  table_row(out, "bound f_k(n)", std::to_string(phi_upper_bound(a)));
}

Json classify_json(const TruncatedAlgebra& a) {
  const Quiver& q = a.quiver();
  const auto cls = classify_vertices(q);
  const bool self_inj = is_self_injective(a);
  const auto verdict = classify_phidim_one_verdict(a);
  const auto remark = check_small_phidim_remark(a);
  auto names = [&](const std::set<std::size_t>& vs) {
    Json arr = Json::array();
    for (auto v : vs) arr.push_back(q.vertex_names()[v]);
    return arr;
  };
  auto bullet = [](const RemarkBullet& b) { return Json{{"applies", b.applies}, {"holds", b.holds}}; };

  Json j;
  j["vertices"] = q.vertex_count();
  j["k"] = a.k();
  j["connected"] = is_connected(q);
  j["cycle"] = is_cycle(q);
  j["sources"] = names(cls.sources);
  j["sinks"] = names(cls.sinks);
  j["selfinjective"] = {{"value", self_inj},
                        {"reason", self_inj ? "every component is an oriented cycle or a lone vertex"
                                            : "some component is neither an oriented cycle nor a lone vertex"}};
  j["phidim_one"] = {{"value", verdict.holds}, {"reason", verdict.reason}};
  j["phidim"] = remark.phidim;
  j["small_phidim"] = {{"no_source_sink_phidim2_one", bullet(remark.no_source_sink_d2_one)},
                       {"k_at_least_n_phidim2_two", bullet(remark.large_k_d2_two)},
                       {"k_at_least_n_minus_one", bullet(remark.k_at_least_n_minus_one)}};
  return j;
}

void print_classify_table(std::ostream& out, const Json& j) {
  table_row(out, "vertices", j["vertices"].dump());
  table_row(out, "k", j["k"].dump());
  table_row(out, "connected", j["connected"].dump());
  table_row(out, "cycle", j["cycle"].dump());
  table_row(out, "sources", j["sources"].dump());
  table_row(out, "sinks", j["sinks"].dump());
  table_row(out, "self-injective",
            j["selfinjective"]["value"].dump() + " (" + j["selfinjective"]["reason"].get<std::string>() + ")");
  table_row(out, "phidim-one",
            j["phidim_one"]["value"].dump() + " (" + j["phidim_one"]["reason"].get<std::string>() + ")");
  table_row(out, "phidim", j["phidim"].dump());
  for (const auto& [name, b] : j["small_phidim"].items()) {
    if (b["applies"].get<bool>()) table_row(out, "bound " + name, b["holds"].get<bool>() ? "holds" : "VIOLATED");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Igusa-Todorov phi-dimension toolkit for truncated path algebras"};
  app.require_subcommand(1);

  Limits limits;
  std::string quiver_path;
  std::size_t k = 2;
  bool json = false;

  auto* compute = app.add_subcommand("compute", "phi-dimension, global dimension and rank data");
  compute->add_option("--quiver", quiver_path, "quiver file")->required();
  compute->add_option("--k", k, "truncation exponent (>= 2)")->required();
  compute->add_flag("--json", json, "emit JSON");
  compute->add_option("--cap-vertices", limits.max_vertices, "vertex cap")->capture_default_str();
  compute->add_option("--cap-k", limits.max_k, "exponent cap")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "structural verdicts");
  classify->add_option("--quiver", quiver_path, "quiver file")->required();
  classify->add_option("--k", k, "truncation exponent (>= 2)")->required();
  classify->add_flag("--json", json, "emit JSON");
  classify->add_option("--cap-vertices", limits.max_vertices, "vertex cap")->capture_default_str();
  classify->add_option("--cap-k", limits.max_k, "exponent cap")->capture_default_str();

  std::size_t n = 0;
  std::string v_csv, w_csv;
  bool strict = false;
  auto* construct = app.add_subcommand("construct", "radical-square-zero quiver of maximal phi-dimension");
  construct->add_option("--n", n, "number of vertices (>= 2)")->required();
  construct->add_option("--v", v_csv, "comma-separated positive rationals (default all ones)");
  construct->add_option("--w", w_csv, "comma-separated positive rationals (default all 1/n)");
  construct->add_flag("--strict-positive", strict, "make every entry strictly positive");
  construct->add_flag("--json", json, "emit JSON");

  std::string family_name, params_csv;
  auto* family = app.add_subcommand("family", "named algebra families");
  family->add_option("--name", family_name, "cycle|gamma|afamily|s5")->required();
  family->add_option("--params", params_csv, "cycle: n,k  gamma: n,m,k  afamily: n,k,l  s5: n,m,i0")->required();
  family->add_flag("--json", json, "emit JSON");

  CorpusConfig corpus;
  unsigned workers = 0;
  auto* check = app.add_subcommand("check", "randomized cross-check suite");
  check->add_option("--seed", corpus.seed, "corpus seed")->capture_default_str();
  check->add_option("--samples", corpus.samples, "number of random algebras")->capture_default_str();
  check->add_option("--max-vertices", corpus.max_vertices, "largest quiver")->capture_default_str();
  check->add_option("--max-k", corpus.max_k, "largest truncation exponent")->capture_default_str();
  check->add_option("--workers", workers, "worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (compute->parsed()) {
      const auto a = load_algebra(quiver_path, k, limits);
      if (json)
        out << compute_json(a).dump() << '\n';
      else
        print_compute_table(out, a);
    } else if (classify->parsed()) {
      const auto a = load_algebra(quiver_path, k, limits);
      const Json j = classify_json(a);
      if (json)
        out << j.dump() << '\n';
      else
        print_classify_table(out, j);
    } else if (construct->parsed()) {
      ConstructionInput input = ConstructionInput::uniform(n);
      if (!v_csv.empty()) input.v_n = parse_rationals(v_csv);
      if (!w_csv.empty()) input.w_n = parse_rationals(w_csv);
      input.strict_positive = strict;
      const auto report = construct_maximal(input);
      if (json) {
        Json j;
        j["quiver"] = serialize_quiver(report.quiver);
        j["adjacency"] = matrix_json(adjacency(report.quiver));
        j["lambda"] = report.lambda;
        j["scale_m"] = report.scale_m.get_str();
        j["conjugator"] = rat_matrix_json(report.conjugator);
        j["achieved_phidim"] = report.achieved_phidim;
        out << j.dump() << '\n';
      } else {
        out << serialize_quiver(report.quiver);
        out << "# lambda " << report.lambda << '\n';
        out << "# scale_m " << report.scale_m.get_str() << '\n';
        out << "# achieved_phidim " << report.achieved_phidim << '\n';
      }
    } else if (family->parsed()) {
      const auto a = build_family({parse_family_name(family_name), parse_counts(params_csv)});
      if (json) {
        Json j = compute_json(a);
        j["quiver"] = serialize_quiver(a.quiver());
        out << j.dump() << '\n';
      } else {
        out << serialize_quiver(a.quiver());
        print_compute_table(out, a);
      }
    } else if (check->parsed()) {
      const CheckSummary summary = run_check_suite(corpus, workers);
      out << summary.render();
      return summary.passed() ? kSuccess : kCheckFailed;
    }
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace phidim::cli
