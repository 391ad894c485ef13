// starpres: reproduce the star-graph enumeration, classification, K_{n,n}
// family certificates, and low-index abelianization separation from the
// command line, with deterministic, digest-stable reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "starpres/abelian.hpp"
#include "starpres/catalog.hpp"
#include "starpres/classify.hpp"
#include "starpres/enumerate.hpp"
#include "starpres/errors.hpp"
#include "starpres/family.hpp"
#include "starpres/invariants.hpp"
#include "starpres/low_index.hpp"
#include "starpres/schreier.hpp"
#include "starpres/star_graph.hpp"
#include "starpres/version.hpp"
#include "starpres/word.hpp"

namespace {

using nlohmann::json;
using namespace starpres;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Where a command's report goes, plus the manifest bookkeeping.
struct Sink {
  std::string output = "-";
  std::string manifest_path;
  std::string command;
  json parameters = json::object();

  void emit(const std::string& report) const {
    if (output == "-") {
      std::cout << report;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open output file: " + output);
      out << report;
      if (!out) throw std::runtime_error("write failed: " + output);
    }
    if (!manifest_path.empty()) {
      json manifest = {
          {"command", command},
          {"version", kVersion},
          {"parameters", parameters},
          {"artifacts",
           json::array({{{"target", output},
                         {"fnv1a64", hex64(fnv1a64(report))}}})},
      };
      std::ofstream mout(manifest_path, std::ios::binary);
      if (!mout)
        throw std::runtime_error("cannot open manifest file: " + manifest_path);
      mout << manifest.dump(2) << "\n";
    }
  }
};

// Words from a file or standard input, one compact word per line; blank
// lines and lines starting with '#' are skipped. Parse failures and
// duplicates are reported with their line numbers.
std::vector<Word> read_word_list(const std::string& path, std::uint32_t rank) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    in = &file;
  }
  std::vector<Word> words;
  std::map<Word, std::size_t> seen;
  std::vector<std::string> errors;
  std::string line;
  for (std::size_t lineno = 1; std::getline(*in, line); ++lineno) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string text = line.substr(begin, end - begin + 1);
    try {
      Word w = Word::reduced(parse_compact(text, rank), rank);
      auto [it, fresh] = seen.emplace(w, lineno);
      if (!fresh) {
        errors.push_back("line " + std::to_string(lineno) + ": duplicate of line " +
                         std::to_string(it->second) + ": " + text);
        continue;
      }
      words.push_back(w);
    } catch (const ParseError& e) {
      errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string all;
    for (const std::string& e : errors) all += e + "\n";
    throw ParseError(all);
  }
  return words;
}

json abelian_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const BigInt& d : g.torsion) torsion.push_back(d.str());
  return {{"rank", g.rank}, {"torsion", torsion}, {"name", g.to_string()}};
}

std::string letter_name(Letter a, std::uint32_t rank) {
  return format_compact(LetterSeq{a}, rank);
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& mode, bool as_json, Sink sink) {
  std::vector<Word> words =
      filter_special(candidates({}), mode == "proxy" ? FilterMode::proxy
                                                     : FilterMode::exact);
  if (as_json) {
    json doc;
    doc["mode"] = mode;
    doc["count"] = words.size();
    doc["words"] = json::array();
    for (const Word& w : words) doc["words"].push_back(format_compact(w));
    sink.emit(doc.dump(2) + "\n");
    return 0;
  }
  std::string report;
  for (const Word& w : words) report += format_compact(w) + "\n";
  sink.emit(report);
  return 0;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const std::string& input, bool builtin, bool check_table,
                 bool input_given, bool as_json, Sink sink) {
  // A bare --check-table needs no word list; reading the default stdin
  // there would block forever under a terminal.
  const bool classify_phase = builtin || input_given || !check_table;
  std::vector<Word> words;
  if (builtin) {
    for (const std::string& s : published_k33_words())
      words.push_back(Word::reduced(parse_compact(s, 3), 3));
  } else if (classify_phase) {
    words = read_word_list(input, 3);
  }
  for (const Word& w : words)
    if (!w.cyclically_reduced() || w.empty())
      throw ParseError("input words must be nonempty and cyclically reduced: " +
                       format_compact(w));

  int exit_code = 0;
  std::ostringstream out;
  json doc;
  if (classify_phase) {
    std::vector<EquivalenceClass> classes = partition(words);
    doc["input_words"] = words.size();
    doc["classes"] = json::array();
    out << "words: " << words.size() << "\n";
    out << "classes: " << classes.size() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const EquivalenceClass& cls = classes[i];
      out << "class " << i + 1 << " (size " << cls.members.size()
          << "): representative " << format_compact(cls.representative)
          << "\n";
      json jcls;
      jcls["representative"] = format_compact(cls.representative);
      jcls["members"] = json::array();
      for (const Word& m : cls.members) {
        const Witness& wit = cls.witnesses.at(m);
        out << "  " << format_compact(m) << "  " << witness_to_string(wit)
            << "\n";
        jcls["members"].push_back({{"word", format_compact(m)},
                                   {"witness", witness_to_string(wit)}});
      }
      doc["classes"].push_back(jcls);
    }
  }

  if (check_table) {
    const auto& rows = identification_rows();
    unsigned ok = 0;
    out << "identification table: " << rows.size() << " rows\n";
    json jrows = json::array();
    for (const IdentificationRow& row : rows) {
      RowReplay rep = verify_identification_row(row);
      ok += rep.ok;
      out << "  class " << row.class_number << "  " << row.word << "  "
          << (row.identity ? "identity" : witness_to_string(row.stated_steps))
          << "  -> " << (rep.ok ? "ok" : "FAIL");
      if (rep.ok && !row.identity) out << " (rot " << rep.shift << ")";
      if (rep.inversion_appended) out << " (inversion appended)";
      out << "\n";
      jrows.push_back({{"class", row.class_number},
                       {"word", row.word},
                       {"ok", rep.ok},
                       {"shift", rep.shift},
                       {"inversion_appended", rep.inversion_appended}});
      if (!rep.ok) exit_code = 1;
    }
    out << "rows ok: " << ok << "/" << rows.size() << "\n";

    // Members of the twelve classes the table leaves implicit still need a
    // mechanical witness to their representative.
    unsigned found = 0, missing = 0;
    for (const RelatorClass& cls : relator_classes()) {
      std::set<std::string> listed;
      for (const IdentificationRow& row : rows)
        if (row.class_number == cls.number) listed.insert(row.word);
      for (const std::string& member : cls.members) {
        if (listed.count(member)) continue;
        Word from = Word::reduced(parse_compact(member, 3), 3);
        Word to = Word::reduced(parse_compact(cls.representative, 3), 3);
        auto wit = find_witness(from, to);
        bool good = wit && replay(*wit, from) == to;
        good ? ++found : ++missing;
        out << "  unlisted member " << member << " (class " << cls.number
            << "): "
            << (good ? "witness " + witness_to_string(*wit) : "NO WITNESS")
            << "\n";
        jrows.push_back({{"class", cls.number},
                         {"word", member},
                         {"ok", good},
                         {"unlisted", true},
                         {"witness", good ? witness_to_string(*wit) : ""}});
        if (!good) exit_code = 1;
      }
    }
    out << "unlisted members: " << found << " witnessed";
    if (missing) out << ", " << missing << " MISSING";
    out << "\n";
    doc["identification_rows"] = jrows;
  }

  sink.emit(as_json ? doc.dump(2) + "\n" : out.str());
  return exit_code;
}

// ------------------------------------------------------------------- family

int cmd_family(std::uint32_t n, std::uint32_t alpha, std::uint32_t bound,
               bool as_json, Sink sink) {
  FamilyParams params{n, alpha, bound};
  Presentation p = family_presentation(params);
  Word w = family_word(n);
  KnnVerification knn = verify_knn(params);
  auto cert = check_special(p);
  auto steps = pair_count_table(n, bound);

  std::ostringstream out;
  json doc;
  out << "family relator: n=" << n << " alpha=" << alpha << "\n";
  out << "presentation: " << describe(p) << "\n";
  out << "base word: " << format_compact(w) << " (length " << w.size()
      << ", n^2 = " << n * n << ")\n";
  doc["n"] = n;
  doc["alpha"] = alpha;
  doc["presentation"] = describe(p);
  doc["base_word"] = format_compact(w);
  doc["base_length"] = w.size();

  out << "K_{" << n << "," << n << "}: " << (knn.ok ? "true" : "false")
      << " (" << knn.distinct_pairs << " distinct pairs";
  if (knn.ok) out << ", multiplicity " << knn.multiplicity;
  out << ")\n";
  doc["knn"] = knn.ok;
  doc["distinct_pairs"] = knn.distinct_pairs;
  doc["multiplicity"] = knn.multiplicity;

  if (cert) {
    out << "special: (" << cert->m << "," << cert->k << "," << cert->nu
        << ")\n";
    out << "hyperbolic flag: "
        << (hyperbolic_flag(cert->m, cert->k) ? "true" : "false") << "\n";
    doc["special"] = {{"m", cert->m}, {"k", cert->k}, {"nu", cert->nu}};
    doc["hyperbolic"] = hyperbolic_flag(cert->m, cert->k);
  } else {
    out << "special: none\n";
    doc["special"] = nullptr;
    if (knn.ok && n >= 2) {
      out << "hyperbolic flag: "
          << (hyperbolic_flag(2, n * n) ? "true" : "false") << "\n";
      doc["hyperbolic"] = hyperbolic_flag(2, n * n);
    }
  }

  out << "pair counts:\n";
  doc["pair_counts"] = json::array();
  for (const FamilyStep& s : steps) {
    out << "  n=" << s.n << ": " << s.distinct_pairs << " pairs (+"
        << s.new_pairs << ")\n";
    doc["pair_counts"].push_back({{"n", s.n},
                                  {"distinct_pairs", s.distinct_pairs},
                                  {"new_pairs", s.new_pairs}});
  }

  sink.emit(as_json ? doc.dump(2) + "\n" : out.str());
  return 0;
}

// --------------------------------------------------------------- invariants

Presentation pick_presentation(int group_index, const std::string& relator,
                               std::uint32_t rank) {
  if (group_index > 0) return group(static_cast<std::uint32_t>(group_index));
  if (!relator.empty()) return one_relator(relator, rank);
  return Presentation(rank, {});
}

int cmd_invariants(int group_index, const std::string& relator,
                   std::uint32_t rank, std::uint32_t max_index,
                   const std::string& mode, std::uint32_t bound, bool as_json,
                   Sink sink) {
  Presentation p = pick_presentation(group_index, relator, rank);
  SubgroupMode smode = mode == "classes" ? SubgroupMode::conjugacy_classes
                                         : SubgroupMode::all;
  LowIndexOptions options{bound};
  auto profile = invariant_profile(p, max_index, smode, options);

  std::ostringstream out;
  json doc;
  out << "presentation: " << describe(p) << "\n";
  if (group_index > 0) out << "group: " << group_name(group_index) << "\n";
  out << "mode: " << (smode == SubgroupMode::all ? "all" : "classes") << "\n";
  doc["presentation"] = describe(p);
  doc["mode"] = smode == SubgroupMode::all ? "all" : "classes";
  doc["max_index"] = max_index;
  doc["indices"] = json::array();
  for (std::uint32_t k = 1; k <= max_index; ++k) {
    unsigned total = 0;
    for (const auto& [ab, count] : profile[k]) total += count;
    out << "index " << k << " (" << total
        << (smode == SubgroupMode::all ? " subgroups" : " classes") << "):";
    json jk = {{"index", k}, {"total", total}, {"multiset", json::array()}};
    for (const auto& [ab, count] : profile[k]) {
      out << "  " << ab.to_string() << " x" << count << ";";
      json entry = abelian_json(ab);
      entry["count"] = count;
      jk["multiset"].push_back(entry);
    }
    out << "\n";
    doc["indices"].push_back(jk);
  }

  sink.emit(as_json ? doc.dump(2) + "\n" : out.str());
  return 0;
}

// ----------------------------------------------------------------- separate

int cmd_separate(std::vector<std::uint32_t> groups, std::uint32_t max_index,
                 std::uint32_t bound, bool as_json, Sink sink) {
  if (groups.empty())
    for (std::uint32_t i = 1; i <= 12; ++i) groups.push_back(i);
  std::vector<Presentation> ps;
  for (std::uint32_t i : groups) ps.push_back(group(i));
  auto matrix = separation_matrix(ps, max_index, LowIndexOptions{bound});

  std::ostringstream out;
  json doc;
  out << "groups:";
  for (std::uint32_t i : groups) out << " " << group_name(i);
  out << "\nmax index: " << max_index << "\n";
  doc["groups"] = groups;
  doc["max_index"] = max_index;
  doc["pairs"] = json::array();

  unsigned unseparated = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto& cell = matrix[i][j];
      out << group_name(groups[i]) << " vs " << group_name(groups[j]) << ": ";
      json jp = {{"left", group_name(groups[i])},
                 {"right", group_name(groups[j])}};
      if (cell) {
        out << "index " << cell->index << ", " << cell->invariant.to_string()
            << ", counts " << cell->count_left << " vs " << cell->count_right
            << "\n";
        jp["witness"] = {{"index", cell->index},
                         {"invariant", abelian_json(cell->invariant)},
                         {"count_left", cell->count_left},
                         {"count_right", cell->count_right}};
      } else {
        out << "UNSEPARATED\n";
        jp["witness"] = nullptr;
        ++unseparated;
      }
      doc["pairs"].push_back(jp);
    }
  out << "pairs: " << doc["pairs"].size() << ", separated: "
      << doc["pairs"].size() - unseparated << ", unseparated: " << unseparated
      << "\n";
  doc["unseparated"] = unseparated;

  sink.emit(as_json ? doc.dump(2) + "\n" : out.str());
  return unseparated == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- stargraph

int cmd_stargraph(const std::string& input,
                  const std::vector<std::string>& relators, std::uint32_t rank,
                  bool as_json, Sink sink) {
  std::vector<Word> words;
  if (!relators.empty()) {
    for (const std::string& r : relators)
      words.push_back(Word::reduced(parse_compact(r, rank), rank));
  } else {
    words = read_word_list(input, rank);
  }
  for (const Word& w : words)
    if (w.empty() || !w.cyclically_reduced())
      throw ParseError("relators must be nonempty and cyclically reduced");
  Presentation p(rank, words);
  StarGraph g = StarGraph::build(p);
  GraphAnalysis a = analyze(g.simple());
  auto cert = check_special(p);

  std::ostringstream out;
  json doc;
  out << "presentation: " << describe(p) << "\n";
  doc["presentation"] = describe(p);
  out << "edges (with multiplicity):\n";
  doc["edges"] = json::array();
  for (const auto& [edge, mult] : g.multiplicity()) {
    out << "  {" << letter_name(edge.first, rank) << ","
        << letter_name(edge.second, rank) << "} x" << mult << "\n";
    doc["edges"].push_back({{"u", letter_name(edge.first, rank)},
                            {"v", letter_name(edge.second, rank)},
                            {"multiplicity", mult}});
  }
  out << "girth: ";
  if (a.girth)
    out << *a.girth;
  else
    out << "infinity";
  out << "\nbipartite: " << (a.bipartite ? "true" : "false")
      << "\nmin degree: " << a.min_degree
      << "\ncomponents: " << a.component_count << " (diameters:";
  for (auto d : a.component_diameters) out << " " << d;
  out << ")\n";
  doc["girth"] = a.girth ? json(*a.girth) : json(nullptr);
  doc["bipartite"] = a.bipartite;
  doc["min_degree"] = a.min_degree;
  doc["component_diameters"] = a.component_diameters;

  out << "knn(K_{" << rank << "," << rank << "}): "
      << (is_knn(g, rank) ? "true" : "false") << "\n";
  doc["knn"] = is_knn(g, rank);
  if (cert) {
    out << "special: (" << cert->m << "," << cert->k << "," << cert->nu
        << ")\n";
    out << "hyperbolic flag: "
        << (hyperbolic_flag(cert->m, cert->k) ? "true" : "false") << "\n";
    doc["special"] = {{"m", cert->m}, {"k", cert->k}, {"nu", cert->nu}};
    doc["hyperbolic"] = hyperbolic_flag(cert->m, cert->k);
  } else {
    out << "special: none\n";
    doc["special"] = nullptr;
  }

  sink.emit(as_json ? doc.dump(2) + "\n" : out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-graph presentation toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string output = "-";
  std::string manifest;
  bool as_json = false;
  app.add_option("--output", output, "report destination path, or - for stdout")
      ->capture_default_str();
  app.add_option("--manifest", manifest,
                 "write a JSON run manifest (command, parameters, digests)");
  app.add_flag("--json", as_json, "machine-readable JSON report");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "length-9 rank-3 relators with star graph K3,3");
  std::string enum_mode = "exact";
  enumerate_cmd->add_option("--mode", enum_mode, "exact | proxy")
      ->check(CLI::IsMember({"exact", "proxy"}))
      ->capture_default_str();

  auto* classify_cmd =
      app.add_subcommand("classify", "partition relators under the symmetry moves");
  std::string cls_input = "-";
  bool cls_builtin = false;
  bool cls_check_table = false;
  classify_cmd->add_option("--input", cls_input,
                           "word list path, or - for stdin");
  classify_cmd->add_flag("--builtin", cls_builtin,
                         "classify the builtin 32-word list");
  classify_cmd->add_flag("--check-table", cls_check_table,
                         "replay the identification table rows");

  auto* family_cmd =
      app.add_subcommand("family", "recursive K_{n,n} relator family");
  std::uint32_t fam_n = 3, fam_alpha = 1, fam_bound = 64;
  family_cmd->add_option("-n,--n", fam_n, "number of generators")
      ->capture_default_str();
  family_cmd->add_option("--alpha", fam_alpha, "relator power")
      ->capture_default_str();
  family_cmd->add_option("--bound", fam_bound, "resource guard on n")
      ->capture_default_str();

  auto* invariants_cmd = app.add_subcommand(
      "invariants", "abelianization multisets of low-index subgroups");
  int inv_group = 0;
  std::string inv_relator;
  std::uint32_t inv_rank = 3, inv_max = 5, inv_bound = 6;
  std::string inv_mode = "all";
  invariants_cmd->add_option("--group", inv_group, "builtin group number 1..12")
      ->check(CLI::Range(1, 12));
  invariants_cmd->add_option("--relator", inv_relator,
                             "one-relator presentation, compact word");
  invariants_cmd->add_option("--rank", inv_rank, "generator count")
      ->capture_default_str();
  invariants_cmd->add_option("--max-index", inv_max, "largest subgroup index")
      ->capture_default_str();
  invariants_cmd->add_option("--mode", inv_mode, "all | classes")
      ->check(CLI::IsMember({"all", "classes"}))
      ->capture_default_str();
  invariants_cmd->add_option("--bound", inv_bound, "resource guard on the index")
      ->capture_default_str();

  auto* separate_cmd = app.add_subcommand(
      "separate", "pairwise abelianization-multiset separation");
  std::vector<std::uint32_t> sep_groups;
  std::uint32_t sep_max = 5, sep_bound = 6;
  separate_cmd->add_option("--groups", sep_groups,
                           "group numbers (default all twelve)")
      ->delimiter(',')
      ->check(CLI::Range(1, 12));
  separate_cmd->add_option("--max-index", sep_max, "largest subgroup index")
      ->capture_default_str();
  separate_cmd->add_option("--bound", sep_bound, "resource guard on the index")
      ->capture_default_str();

  auto* stargraph_cmd =
      app.add_subcommand("stargraph", "star-graph analysis of a presentation");
  std::string sg_input = "-";
  std::vector<std::string> sg_relators;
  std::uint32_t sg_rank = 3;
  stargraph_cmd->add_option("--input", sg_input,
                            "relator list path, or - for stdin");
  stargraph_cmd->add_option("--relator", sg_relators,
                            "relator (repeatable), compact word");
  stargraph_cmd->add_option("--rank", sg_rank, "generator count")
      ->capture_default_str();

  // --output/--manifest/--json are app-level; let them appear after the
  // subcommand name too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Sink sink;
  sink.output = output;
  sink.manifest_path = manifest;

  try {
    if (*enumerate_cmd) {
      sink.command = "enumerate";
      sink.parameters = {{"mode", enum_mode}};
      return cmd_enumerate(enum_mode, as_json, sink);
    }
    if (*classify_cmd) {
      sink.command = "classify";
      const bool cls_input_given = classify_cmd->count("--input") > 0;
      std::string input_param = cls_input;
      if (cls_builtin) input_param = "builtin";
      else if (cls_check_table && !cls_input_given) input_param = "none";
      sink.parameters = {{"input", input_param},
                         {"check_table", cls_check_table}};
      return cmd_classify(cls_input, cls_builtin, cls_check_table,
                          cls_input_given, as_json, sink);
    }
    if (*family_cmd) {
      sink.command = "family";
      sink.parameters = {{"n", fam_n}, {"alpha", fam_alpha}};
      return cmd_family(fam_n, fam_alpha, fam_bound, as_json, sink);
    }
    if (*invariants_cmd) {
      if (inv_group > 0 && !inv_relator.empty())
        throw CLI::ValidationError("invariants",
                                   "--group and --relator are exclusive");
      sink.command = "invariants";
      sink.parameters = {{"group", inv_group},
                         {"relator", inv_relator},
                         {"rank", inv_rank},
                         {"max_index", inv_max},
                         {"mode", inv_mode}};
      return cmd_invariants(inv_group, inv_relator, inv_rank, inv_max,
                            inv_mode, inv_bound, as_json, sink);
    }
    if (*separate_cmd) {
      sink.command = "separate";
      sink.parameters = {{"groups", sep_groups}, {"max_index", sep_max}};
      return cmd_separate(sep_groups, sep_max, sep_bound, as_json, sink);
    }
    if (*stargraph_cmd) {
      sink.command = "stargraph";
      sink.parameters = {{"input", sg_relators.empty() ? sg_input : "inline"},
                         {"rank", sg_rank}};
      return cmd_stargraph(sg_input, sg_relators, sg_rank, as_json, sink);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << e.what();
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
