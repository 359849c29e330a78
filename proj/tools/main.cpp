#include "CLI11.hpp"

#include "strata/cech.hpp"
#include "strata/io.hpp"
#include "strata/persistence.hpp"
#include "strata/reeb.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using strata::json;

struct run_config {
  std::string input_path;
  std::string field_text = "rational";
  int max_degree = 2;
  std::string intervals_text;  // empty means the canonical cover
  std::string output_path;
};

strata::field make_field(const std::string& text) {
  if (text == "rational") return strata::field::rationals();
  try {
    std::size_t pos = 0;
    const unsigned long p = std::stoul(text, &pos);
    if (pos == text.size()) return strata::field::prime(p);
  } catch (const std::exception&) {
  }
  throw strata::invalid_field("--field expects \"rational\" or a prime, got \"" + text + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw strata::parse_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

// "lo,hi;lo,hi;..." with each bound an exact rational string.
strata::interval_cover parse_intervals(const std::string& text) {
  std::vector<strata::interval> intervals;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const std::string pair =
        text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos)
      throw strata::cover_invalid("--intervals expects lo,hi pairs separated by ';', got \"" +
                                  pair + "\"");
    const auto lo = strata::parse_rational(trimmed(pair.substr(0, comma)));
    const auto hi = strata::parse_rational(trimmed(pair.substr(comma + 1)));
    if (!lo || !hi)
      throw strata::cover_invalid("interval bounds must be exact rationals, got \"" + pair + "\"");
    intervals.push_back({*lo, *hi});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return strata::interval_cover::make(std::move(intervals));
}

json json_of_levels(const std::vector<strata::rational>& levels) {
  json out = json::array();
  for (const strata::rational& c : levels) out.push_back(strata::to_string(c));
  return out;
}

json config_echo(const run_config& cfg, bool with_intervals) {
  json out{{"input", cfg.input_path},
           {"field", cfg.field_text},
           {"max_degree", cfg.max_degree}};
  if (with_intervals)
    out["intervals"] = cfg.intervals_text.empty() ? "canonical" : cfg.intervals_text;
  return out;
}

json cmd_homology(const strata::field& f, const strata::simplicial_complex& K, int Q) {
  return {{"betti", strata::homology_dimensions(f, K, Q)},
          {"euler_characteristic", K.euler()}};
}

json cmd_reeb(const strata::field& f, const strata::simplicial_complex& K, int Q, bool& ok) {
  strata::cut_complex C = strata::cut_with_midpoints(K);
  std::vector<strata::truncated_reeb_complex> pages;
  for (int q = 0; q <= Q; ++q) pages.push_back(strata::truncated_reeb(f, C, q));

  json degrees = json::array();
  for (int q = 0; q <= Q; ++q) {
    const strata::truncated_reeb_complex& t = pages[static_cast<std::size_t>(q)];
    json fiber_dims = json::array();
    for (const strata::homology_space& h : t.fiber_spaces) fiber_dims.push_back(h.dimension());
    json sect_dims = json::array();
    for (const strata::sect_model& s : t.sect_spaces) sect_dims.push_back(s.space.dimension());
    degrees.push_back({{"degree", q},
                       {"fiber_dims", std::move(fiber_dims)},
                       {"section_dims", std::move(sect_dims)},
                       {"differential_rank", t.differential.rank()},
                       {"differential", strata::json_of(t.differential)}});
  }

  json checks = json::array();
  bool all_pass = true;
  const std::vector<strata::rational> criticals = K.distinct_heights();
  for (std::size_t s = 0; s + 1 < criticals.size(); ++s)
    for (int q = 0; q <= Q; ++q) {
      strata::diamond_report r = strata::verify_diamond(f, C, criticals[s], criticals[s + 1], q);
      all_pass = all_pass && r.pass();
      checks.push_back({{"slab", json::array({strata::to_string(r.lo), strata::to_string(r.hi)})},
                        {"degree", q},
                        {"rank_first", r.rank_first},
                        {"rank_second", r.rank_second},
                        {"kernel_second", r.kernel_second},
                        {"pass", r.pass()}});
    }

  ok = all_pass;
  return {{"critical_levels", json_of_levels(criticals)},
          {"degrees", std::move(degrees)},
          {"recovered_betti", strata::homology_of_base(pages)},
          {"diamond", json{{"checks", std::move(checks)}, {"pass", all_pass}}}};
}

json cmd_zigzag(const strata::field& f, const strata::simplicial_complex& K, int Q,
                const std::string& intervals_text) {
  if (K.simplex_count() == 0) return {{"critical_levels", json::array()}, {"degrees", json::array()}};

  const std::vector<strata::rational> criticals = K.distinct_heights();
  strata::interval_cover cover = intervals_text.empty() ? strata::canonical_cover(criticals)
                                                        : parse_intervals(intervals_text);
  strata::cut_complex C = strata::cut_at_levels(K, criticals);

  json degrees = json::array();
  for (int q = 0; q <= Q; ++q) {
    strata::levelset_module L = strata::levelset_zigzag(f, C, cover, q);
    json arrows = json::array();
    for (const strata::zigzag_arrow& a : L.module.arrows)
      arrows.push_back({{"forward", a.forward}, {"rank", a.map.mat.rank()}});
    degrees.push_back({{"degree", q},
                       {"dims", L.module.dims},
                       {"arrows", std::move(arrows)},
                       {"barcode", strata::json_of(strata::barcode_of(L.module))}});
  }
  return {{"critical_levels", json_of_levels(criticals)}, {"degrees", std::move(degrees)}};
}

json cmd_telescope(const strata::field& f, const strata::filtration& F, int Q, bool& ok) {
  json degrees = json::array();
  bool all_pass = true;
  for (int q = 0; q <= Q; ++q) {
    strata::ladder_report r = strata::verify_ladder(f, F, q);
    all_pass = all_pass && r.pass();
    degrees.push_back({{"degree", q},
                       {"direct_barcode", strata::json_of(r.direct_bars)},
                       {"telescope_barcode", strata::json_of(r.telescope_bars)},
                       {"faces_invertible", r.faces_invertible},
                       {"squares_commute", r.squares_commute},
                       {"barcodes_equal", r.barcodes_equal},
                       {"pass", r.pass()}});
  }
  ok = all_pass;
  json indices = json::array();
  for (const strata::rational& i : F.indices()) indices.push_back(strata::to_string(i));
  return {{"indices", std::move(indices)},
          {"stage_count", F.stage_count()},
          {"degrees", std::move(degrees)},
          {"pass", all_pass}};
}

json cmd_spectral(const strata::field& f, const strata::simplicial_complex& K, int Q,
                  const std::string& intervals_text) {
  const std::vector<strata::rational> criticals = K.distinct_heights();
  strata::interval_cover cover = intervals_text.empty() ? strata::canonical_cover(criticals)
                                                        : parse_intervals(intervals_text);
  std::vector<strata::rational> levels = criticals;
  for (const strata::interval& I : cover.intervals()) {
    levels.push_back(I.lo);
    levels.push_back(I.hi);
  }
  strata::pairwise_cover pc = strata::build_cover(strata::cut_at_levels(K, levels), cover);
  strata::cech_first_page fp = strata::first_page(f, pc, Q);

  json overlaps = json::array();
  for (const strata::pairwise_cover::overlap& ov : pc.overlaps)
    overlaps.push_back(json::array({ov.a, ov.b}));
  json pages = json::array();
  for (int q = 0; q <= Q; ++q) {
    const std::size_t i = static_cast<std::size_t>(q);
    pages.push_back({{"degree", q},
                     {"piece_dims", fp.piece_dims[i]},
                     {"overlap_dims", fp.overlap_dims[i]},
                     {"differential_rank", fp.differential[i].rank()},
                     {"differential", strata::json_of(fp.differential[i])}});
  }

  strata::nerve_report nr = strata::nerve_row(f, pc);
  json bad_overlaps = json::array();
  for (const auto& [a, b] : nr.bad_overlaps) bad_overlaps.push_back(json::array({a, b}));
  return {{"pieces", static_cast<int>(pc.pieces.size())},
          {"overlaps", std::move(overlaps)},
          {"first_page", std::move(pages)},
          {"second_page_betti", strata::second_page_two_column(fp)},
          {"nerve", json{{"complex", strata::json_of(nr.nerve)},
                         {"betti", nr.nerve_betti},
                         {"bad_pieces", nr.bad_pieces},
                         {"bad_overlaps", std::move(bad_overlaps)},
                         {"homologically_good", nr.good}}}};
}

int run(const CLI::App& app, const run_config& cfg) {
  const strata::field f = make_field(cfg.field_text);
  json report;
  bool ok = true;

  const auto load = [&]() { return strata::parse_document(read_file(cfg.input_path)); };

  if (app.got_subcommand("homology")) {
    report["command"] = "homology";
    report["config"] = config_echo(cfg, false);
    report["result"] = cmd_homology(f, strata::complex_from_json(load()), cfg.max_degree);
  } else if (app.got_subcommand("reeb")) {
    report["command"] = "reeb";
    report["config"] = config_echo(cfg, false);
    report["result"] = cmd_reeb(f, strata::complex_from_json(load()), cfg.max_degree, ok);
  } else if (app.got_subcommand("zigzag")) {
    report["command"] = "zigzag";
    report["config"] = config_echo(cfg, true);
    report["result"] =
        cmd_zigzag(f, strata::complex_from_json(load()), cfg.max_degree, cfg.intervals_text);
  } else if (app.got_subcommand("telescope")) {
    report["command"] = "telescope";
    report["config"] = config_echo(cfg, false);
    report["result"] = cmd_telescope(f, strata::filtration_from_json(load()), cfg.max_degree, ok);
  } else if (app.got_subcommand("spectral")) {
    report["command"] = "spectral";
    report["config"] = config_echo(cfg, true);
    report["result"] =
        cmd_spectral(f, strata::complex_from_json(load()), cfg.max_degree, cfg.intervals_text);
  } else {
    const CLI::App* verify = app.get_subcommand("verify");
    json doc = load();
    const bool is_filtration = doc.is_object() && doc.contains("stages");
    std::string kind;
    if (verify->got_subcommand("diamond")) kind = "diamond";
    else if (verify->got_subcommand("ladder")) kind = "ladder";
    else kind = is_filtration ? "ladder" : "diamond";

    report["command"] = "verify";
    report["config"] = config_echo(cfg, false);
    json result{{"check", kind}};
    if (kind == "ladder") {
      strata::filtration F = strata::filtration_from_json(doc);
      result["detail"] = cmd_telescope(f, F, cfg.max_degree, ok);
    } else {
      strata::simplicial_complex K = strata::complex_from_json(doc);
      result["detail"] = cmd_reeb(f, K, cfg.max_degree, ok);
    }
    result["pass"] = ok;
    report["result"] = std::move(result);
  }

  report["ok"] = ok;
  const std::string rendered = strata::write_document(report);
  if (cfg.output_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw strata::parse_error("cannot open output file: " + cfg.output_path);
    out << rendered;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact levelset, Reeb, telescope, and nerve computations for PL heights on "
               "simplicial complexes"};
  app.require_subcommand(1);

  run_config cfg;
  const auto add_common = [&](CLI::App* cmd, bool with_intervals) {
    cmd->add_option("input", cfg.input_path, "JSON input file")->required();
    cmd->add_option("--field", cfg.field_text, "coefficients: rational or a prime p")
        ->capture_default_str();
    cmd->add_option("--max-degree", cfg.max_degree, "top homology degree")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    if (with_intervals)
      cmd->add_option("--intervals", cfg.intervals_text,
                      "cover intervals \"lo,hi;lo,hi\" (default: canonical cover)");
    cmd->add_option("--output", cfg.output_path, "write the report here instead of stdout");
  };

  add_common(app.add_subcommand("homology", "Betti numbers of a complex"), false);
  add_common(app.add_subcommand("reeb", "truncated Reeb complexes, recovery, diamond checks"),
             false);
  add_common(app.add_subcommand("zigzag", "levelset zigzag dimensions, ranks, barcodes"), true);
  add_common(app.add_subcommand("telescope", "persistence two ways plus the ladder checks"),
             false);
  add_common(app.add_subcommand("spectral", "cover spectral sequence and nerve report"), true);

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->require_subcommand(1);
  add_common(verify->add_subcommand("diamond", "diamond exactness on every slab"), false);
  add_common(verify->add_subcommand("ladder", "persistence ladder equivalence"), false);
  add_common(verify->add_subcommand("all", "detect the input kind and verify it"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    return run(app, cfg);
  } catch (const strata::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
