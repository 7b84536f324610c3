// Command-line front end for the rootcluster shared library. Talks to the
// core exclusively through the C API; reports arrive as JSON and are either
// re-emitted (--json) or rendered as text tables here.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootcluster.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

int exit_code_for(rc_status st) {
  switch (st) {
    case RC_OK: return kExitOk;
    case RC_ERR_GROUP_TOO_LARGE: return kExitResource;
    case RC_ERR_INTERNAL: return kExitViolation;
    default: return kExitInput;
  }
}

void check(rc_status st) {
  if (st != RC_OK)
    die(exit_code_for(st), std::string(rc_status_name(st)) + ": " + rc_last_error());
}

struct GroupDeleter { void operator()(rc_group* g) const { rc_group_free(g); } };
struct SubgroupDeleter { void operator()(rc_subgroup* h) const { rc_subgroup_free(h); } };
struct PairDeleter { void operator()(rc_pair* p) const { rc_pair_free(p); } };
using GroupHandle = std::unique_ptr<rc_group, GroupDeleter>;
using SubgroupHandle = std::unique_ptr<rc_subgroup, SubgroupDeleter>;
using PairHandle = std::unique_ptr<rc_pair, PairDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  rc_string_free(s);
  return out;
}

// ---- spec resolution -------------------------------------------------------

std::vector<int64_t> int_row(const Json& arr, const std::string& where, size_t want_len) {
  if (!arr.is_array() || (want_len != 0 && arr.size() != want_len))
    die(kExitInput, where + ": expected an array of " + std::to_string(want_len) + " integers");
  std::vector<int64_t> row;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) die(kExitInput, where + ": entries must be integers");
    row.push_back(v.get<int64_t>());
  }
  return row;
}

struct SpecPair {
  GroupHandle group;
  SubgroupHandle subgroup;
};

std::string fixture_pair_expr(const std::string& name) {
  char* out = nullptr;
  check(rc_catalog_list_json(&out));
  Json list = Json::parse(take_string(out));
  for (const auto& f : list["fixtures"])
    if (f["name"] == name && f.contains("pair")) return f["pair"].get<std::string>();
  return "";
}

SpecPair load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitInput, "cannot open spec file '" + path + "'");
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const std::exception& e) {
    die(kExitInput, "spec '" + path + "': " + e.what());
  }
  if (!spec.contains("degree") || !spec["degree"].is_number_integer() ||
      spec["degree"].get<int64_t>() < 1)
    die(kExitInput, "spec.degree: must be a positive integer");
  int32_t degree = spec["degree"].get<int32_t>();
  if (!spec.contains("generators") || !spec["generators"].is_array())
    die(kExitInput, "spec.generators: must be an array of image arrays");

  std::vector<int64_t> flat;
  int32_t n_gens = 0;
  for (const auto& g : spec["generators"]) {
    auto row = int_row(g, "spec.generators[" + std::to_string(n_gens) + "]",
                       static_cast<size_t>(degree));
    flat.insert(flat.end(), row.begin(), row.end());
    ++n_gens;
  }
  SpecPair out;
  rc_group* graw = nullptr;
  check(rc_group_create(degree, flat.data(), n_gens, &graw));
  out.group.reset(graw);

  if (!spec.contains("subgroup") || !spec["subgroup"].is_object())
    die(kExitInput, "spec.subgroup: must be an object with 'generators' or 'stabilizer_of'");
  const Json& sub = spec["subgroup"];
  rc_subgroup* hraw = nullptr;
  if (sub.contains("stabilizer_of")) {
    std::vector<int64_t> pts;
    if (sub["stabilizer_of"].is_number_integer()) {
      pts.push_back(sub["stabilizer_of"].get<int64_t>());
    } else {
      pts = int_row(sub["stabilizer_of"], "spec.subgroup.stabilizer_of", 0);
    }
    check(rc_subgroup_stabilizer(out.group.get(), pts.data(),
                                 static_cast<int32_t>(pts.size()), &hraw));
  } else if (sub.contains("generators")) {
    std::vector<int64_t> sflat;
    int32_t sn = 0;
    for (const auto& g : sub["generators"]) {
      auto row = int_row(g, "spec.subgroup.generators[" + std::to_string(sn) + "]",
                         static_cast<size_t>(degree));
      sflat.insert(sflat.end(), row.begin(), row.end());
      ++sn;
    }
    check(rc_subgroup_from_generators(out.group.get(), sflat.data(), sn, &hraw));
  } else {
    die(kExitInput, "spec.subgroup: needs 'generators' or 'stabilizer_of'");
  }
  out.subgroup.reset(hraw);
  return out;
}

// A SPEC is either "catalog:<pair expression or fixture name>" or a path to a
// JSON spec file.
SpecPair resolve_spec(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) {
    std::string expr = spec.substr(8);
    std::string mapped = fixture_pair_expr(expr);
    if (!mapped.empty()) expr = mapped;
    rc_pair* praw = nullptr;
    check(rc_pair_from_expr(expr.c_str(), &praw));
    PairHandle pair(praw);
    SpecPair out;
    rc_group* graw = nullptr;
    rc_subgroup* hraw = nullptr;
    check(rc_pair_group(pair.get(), &graw));
    out.group.reset(graw);
    check(rc_pair_stabilizer(pair.get(), &hraw));
    out.subgroup.reset(hraw);
    return out;
  }
  return load_spec_file(spec);
}

PairHandle reduce(const SpecPair& sp) {
  rc_pair* praw = nullptr;
  check(rc_pair_reduce(sp.group.get(), sp.subgroup.get(), &praw));
  return PairHandle(praw);
}

SubgroupHandle resolve_upper(const SpecPair& sp, const std::string& upper) {
  rc_subgroup* raw = nullptr;
  if (upper.rfind("stab:", 0) == 0) {
    std::vector<int64_t> pts;
    std::stringstream ss(upper.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        pts.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        die(kExitInput, "--upper stab: expected a comma list of points");
      }
    }
    check(rc_subgroup_stabilizer(sp.group.get(), pts.data(), static_cast<int32_t>(pts.size()),
                                 &raw));
    return SubgroupHandle(raw);
  }
  if (upper == "core") {
    check(rc_subgroup_core(sp.group.get(), sp.subgroup.get(), &raw));
    return SubgroupHandle(raw);
  }
  std::ifstream in(upper);
  if (!in) die(kExitInput, "--upper: cannot open '" + upper + "' (or use stab:<pts> / core)");
  Json spec;
  try {
    spec = Json::parse(in);
  } catch (const std::exception& e) {
    die(kExitInput, "--upper '" + upper + "': " + e.what());
  }
  if (!spec.contains("generators")) die(kExitInput, "--upper file: needs a 'generators' array");
  std::vector<int64_t> flat;
  int32_t n = 0;
  int32_t degree = rc_group_degree(sp.group.get());
  for (const auto& g : spec["generators"]) {
    auto row = int_row(g, "--upper generators[" + std::to_string(n) + "]",
                       static_cast<size_t>(degree));
    flat.insert(flat.end(), row.begin(), row.end());
    ++n;
  }
  check(rc_subgroup_from_generators(sp.group.get(), flat.data(), n, &raw));
  return SubgroupHandle(raw);
}

// ---- rendering -------------------------------------------------------------

std::string cycles_of(const Json& images) {
  std::vector<int64_t> img;
  for (const auto& v : images) img.push_back(v.get<int64_t>());
  std::string out;
  std::vector<bool> used(img.size() + 1, false);
  for (size_t start = 1; start <= img.size(); ++start) {
    if (used[start] || img[start - 1] == static_cast<int64_t>(start)) continue;
    out += '(';
    size_t i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(i);
      used[i] = true;
      i = static_cast<size_t>(img[i - 1]);
      first = false;
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string gens_line(const Json& subgroup) {
  std::string out;
  for (const auto& g : subgroup["generators"]) {
    if (!out.empty()) out += " ";
    out += cycles_of(g);
  }
  return out.empty() ? "()" : out;
}

std::string seq_line(const Json& arr) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out += ",";
    out += v.dump();
    first = false;
  }
  return out + ")";
}

void kv(const std::string& key, const std::string& value) {
  std::printf("  %-22s %s\n", key.c_str(), value.c_str());
}

void render(const Json& j);

void render_cluster(const Json& j) {
  std::printf("cluster invariants\n");
  kv("degree n", j["n"].dump());
  kv("cluster size r", j["r"].dump());
  kv("clusters s", j["s"].dump());
  kv("aut order", j["aut_order"].dump());
  kv("fingerprint", j["fingerprint"].get<std::string>());
}

void render_partition(const Json& j) {
  std::printf("cluster partition (%zu blocks)\n", j["blocks"].size());
  for (const auto& b : j["blocks"]) kv("block", seq_line(b));
}

void render_tower(const Json& j) {
  std::printf("cluster tower\n");
  kv("ordering", seq_line(j["ordering"]));
  kv("degree sequence", seq_line(j["degree_sequence"]));
  kv("length", j["length"].dump());
  kv("jump indices", seq_line(j["jump_indices"]));
  kv("order bound holds", j["order_bound_holds"].dump());
  kv("fingerprint", j["fingerprint"].get<std::string>());
}

void render_sweep(const Json& j) {
  std::printf("tower sweep over %s orderings\n", j["orderings"].dump().c_str());
  std::printf("  %-26s %-8s %-10s %s\n", "degree sequence", "length", "orderings", "example");
  for (const auto& o : j["outcomes"])
    std::printf("  %-26s %-8s %-10s %s\n", seq_line(o["degree_sequence"]).c_str(),
                o["length"].dump().c_str(), o["count"].dump().c_str(),
                seq_line(o["example_ordering"]).c_str());
  kv("order bound holds", j["order_bound_holds"].dump());
}

void render_chain(const Json& j) {
  std::printf("%s chain (%zu stages, terminal: %s)\n", j["direction"].get<std::string>().c_str(),
              j["subgroup_chain"].size(), j["terminal"].get<std::string>().c_str());
  std::printf("  %-6s %-10s %-12s %s\n", "stage", "order", "field deg", "generators");
  int i = 0;
  for (const auto& st : j["subgroup_chain"]) {
    std::printf("  %-6d %-10s %-12s %s\n", i++, st["order"].dump().c_str(),
                st["field_degree"].dump().c_str(), gens_line(st).c_str());
  }
  kv("step indices", seq_line(j["step_indices"]));
  if (j.contains("t")) {
    kv("t", j["t"].dump());
    kv("u", j["u"].dump());
  }
}

void render_capacity(const Json& j) {
  std::printf("root capacity\n");
  kv("rho", j["rho"].dump());
  kv("a", j["a"].dump());
  kv("r", j["r"].dump());
  kv("witness clusters", seq_line(j["witness_cosets"]));
  kv("support order", j["support_subgroup"]["order"].dump());
  kv("support gens", gens_line(j["support_subgroup"]));
}

void render_detect(const Json& j) {
  std::printf("strong magnification decompositions: %zu%s\n", j["reports"].size(),
              j["reports"].empty() ? " (primitive)" : "");
  int i = 0;
  for (const auto& d : j["reports"]) {
    std::printf("  #%d factor %s\n", i++, d["magnification_factor"].dump().c_str());
    kv("  |A| / |B|", d["A"]["order"].dump() + " / " + d["B"]["order"].dump());
    kv("  A gens", gens_line(d["A"]));
    kv("  B gens", gens_line(d["B"]));
    kv("  L subgroup order", d["L_subgroup"]["order"].dump());
  }
}

void render_verify(const Json& j) {
  for (const auto& a : j["assertions"]) {
    bool pass = a["pass"].get<bool>();
    std::string suffix;
    if (!pass && a.contains("detail")) suffix = "  (" + a["detail"].get<std::string>() + ")";
    std::printf("[%s] %s%s\n", pass ? "PASS" : "FAIL", a["name"].get<std::string>().c_str(),
                suffix.c_str());
  }
  std::printf("%s: %s\n", j["name"].get<std::string>().c_str(),
              j["pass"].get<bool>() ? "all assertions passed" : "ASSERTIONS FAILED");
}

void render_catalog(const Json& j) {
  std::printf("%-26s %-26s %s\n", "name", "pair", "note");
  for (const auto& f : j["fixtures"])
    std::printf("%-26s %-26s %s\n", f["name"].get<std::string>().c_str(),
                f.contains("pair") ? f["pair"].get<std::string>().c_str() : "-",
                f["note"].get<std::string>().c_str());
}

void render_flags(const Json& j, const char* title) {
  std::printf("%s\n", title);
  for (const auto& [key, val] : j.items()) {
    if (key == "type" || key == "fingerprint") continue;
    if (val.is_object() && val.contains("type"))
      render(val);
    else
      kv(key, val.dump());
  }
}

void render(const Json& j) {
  std::string type = j.value("type", "");
  if (type == "cluster_report") return render_cluster(j);
  if (type == "cluster_partition") return render_partition(j);
  if (type == "tower_report") return render_tower(j);
  if (type == "tower_sweep") return render_sweep(j);
  if (type == "chain_report") return render_chain(j);
  if (type == "capacity_report") return render_capacity(j);
  if (type == "decomposition_reports") return render_detect(j);
  if (type == "verify_report") return render_verify(j);
  if (type == "catalog") return render_catalog(j);
  if (type == "weak_magnification") return render_flags(j, "weak magnification");
  if (type == "base_change") return render_flags(j, "base change verification");
  if (type == "strong_chain_correspondence") return render_flags(j, "strong chain correspondence");
  if (type == "hint_report") return render_flags(j, "normality hint");
  if (type == "link_profile") return render_flags(j, "chain linkage profile");
  std::printf("%s\n", j.dump(2).c_str());
}

void emit(const std::string& json_text, bool as_json) {
  Json j = Json::parse(json_text);
  if (as_json)
    std::printf("%s\n", j.dump(2).c_str());
  else
    render(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"root cluster calculus for finite permutation groups"};
  app.require_subcommand(1);
  int64_t max_order = 200000;
  int32_t max_degree = 5000;
  app.add_option("--max-order", max_order, "element cap for group enumeration");
  app.add_option("--max-degree", max_degree, "point cap for induced actions");

  std::string spec, upper, by, order_csv, name;
  bool as_json = false, all_orders = false, descending = false, ascending = false;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec, "catalog:<expr> or a JSON spec file")->required();
    cmd->add_flag("--json", as_json, "emit JSON instead of tables");
  };

  CLI::App* inv = app.add_subcommand("invariants", "cluster size, cluster count, aut order");
  add_spec(inv);
  CLI::App* tower = app.add_subcommand("tower", "cluster tower for an ordering of representatives");
  add_spec(tower);
  tower->add_option("--order", order_csv, "comma list of 1-based representative points");
  tower->add_flag("--all-orders", all_orders, "sweep every ordering (up to 7 clusters)");
  CLI::App* chain = app.add_subcommand("chain", "unique descending/ascending chain");
  add_spec(chain);
  chain->add_flag("--descending", descending, "iterated normalizers");
  chain->add_flag("--ascending", ascending, "iterated normal closures");
  CLI::App* capacity = app.add_subcommand("capacity", "root capacity of an upper field");
  add_spec(capacity);
  capacity->add_option("--upper", upper, "stab:<pts> | core | JSON file with generators")
      ->required();
  CLI::App* detect = app.add_subcommand("detect", "search for strong magnification decompositions");
  add_spec(detect);
  CLI::App* magnify = app.add_subcommand("magnify", "magnify by a disjoint product factor");
  add_spec(magnify);
  magnify->add_option("--by", by, "group expression, e.g. cyclic:2 or cyclic:2,cyclic:2")
      ->required();
  CLI::App* basechange = app.add_subcommand("basechange", "verify base-change preservation");
  add_spec(basechange);
  basechange->add_option("--by", by, "group expression for the new base")->required();
  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite on the spec");
  add_spec(verify);
  CLI::App* link = app.add_subcommand("link", "linkage profile of the two unique chains");
  add_spec(link);

  CLI::App* catalog = app.add_subcommand("catalog", "built-in fixture registry");
  catalog->require_subcommand(1);
  CLI::App* cat_list = catalog->add_subcommand("list", "list fixtures");
  cat_list->add_flag("--json", as_json, "emit JSON");
  CLI::App* cat_run = catalog->add_subcommand("run", "run a fixture's expectation set");
  cat_run->add_option("name", name, "fixture name")->required();
  cat_run->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n%s", e.what(), app.help().c_str());
    return kExitInput;
  }

  rc_set_limits(max_order, max_degree);

  try {
    if (*inv) {
      PairHandle p = reduce(resolve_spec(spec));
      char* out = nullptr;
      check(rc_cluster_report_json(p.get(), &out));
      emit(take_string(out), as_json);
    } else if (*tower) {
      PairHandle p = reduce(resolve_spec(spec));
      char* out = nullptr;
      if (all_orders) {
        check(rc_tower_sweep_json(p.get(), &out));
      } else if (!order_csv.empty()) {
        std::vector<int64_t> pts;
        std::stringstream ss(order_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          try {
            pts.push_back(std::stoll(tok));
          } catch (const std::exception&) {
            die(kExitInput, "--order: expected a comma list of integers");
          }
        }
        check(rc_tower_json(p.get(), pts.data(), static_cast<int32_t>(pts.size()), &out));
      } else {
        die(kExitInput, "tower: pass --order or --all-orders");
      }
      emit(take_string(out), as_json);
    } else if (*chain) {
      if (descending == ascending)
        die(kExitInput, "chain: pass exactly one of --descending/--ascending");
      SpecPair sp = resolve_spec(spec);
      char* out = nullptr;
      check(rc_chain_json(sp.group.get(), sp.subgroup.get(), descending ? 1 : 0, &out));
      emit(take_string(out), as_json);
    } else if (*capacity) {
      SpecPair sp = resolve_spec(spec);
      SubgroupHandle um = resolve_upper(sp, upper);
      char* out = nullptr;
      check(rc_capacity_json(sp.group.get(), um.get(), sp.subgroup.get(), &out));
      emit(take_string(out), as_json);
    } else if (*detect) {
      PairHandle p = reduce(resolve_spec(spec));
      char* out = nullptr;
      check(rc_detect_json(p.get(), &out));
      emit(take_string(out), as_json);
    } else if (*magnify) {
      PairHandle p = reduce(resolve_spec(spec));
      rc_group* braw = nullptr;
      check(rc_group_from_expr(by.c_str(), &braw));
      GroupHandle bygroup(braw);
      rc_pair* mraw = nullptr;
      check(rc_pair_magnify(p.get(), bygroup.get(), &mraw));
      PairHandle m(mraw);
      char* before = nullptr;
      char* after = nullptr;
      check(rc_cluster_report_json(p.get(), &before));
      check(rc_cluster_report_json(m.get(), &after));
      Json j;
      j["type"] = "magnify_report";
      j["factor"] = rc_group_order(bygroup.get());
      j["before"] = Json::parse(take_string(before));
      j["after"] = Json::parse(take_string(after));
      if (as_json) {
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("magnification by a factor of %lld\n",
                    static_cast<long long>(rc_group_order(bygroup.get())));
        render(j["before"]);
        render(j["after"]);
      }
    } else if (*basechange) {
      PairHandle p = reduce(resolve_spec(spec));
      rc_group* braw = nullptr;
      check(rc_group_from_expr(by.c_str(), &braw));
      GroupHandle bygroup(braw);
      char* out = nullptr;
      check(rc_basechange_json(p.get(), bygroup.get(), &out));
      std::string text = take_string(out);
      emit(text, as_json);
      Json j = Json::parse(text);
      if (!j["all"].get<bool>()) return kExitViolation;
    } else if (*link) {
      PairHandle p = reduce(resolve_spec(spec));
      char* out = nullptr;
      check(rc_link_profile_json(p.get(), &out));
      emit(take_string(out), as_json);
    } else if (*verify) {
      SpecPair sp = resolve_spec(spec);
      char* out = nullptr;
      int32_t pass = 0;
      check(rc_verify_json(sp.group.get(), sp.subgroup.get(), &pass, &out));
      emit(take_string(out), as_json);
      if (!pass) return kExitViolation;
    } else if (*catalog) {
      if (*cat_list) {
        char* out = nullptr;
        check(rc_catalog_list_json(&out));
        emit(take_string(out), as_json);
      } else {
        char* out = nullptr;
        int32_t pass = 0;
        check(rc_catalog_run_json(name.c_str(), &pass, &out));
        emit(take_string(out), as_json);
        if (!pass) return kExitViolation;
      }
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitOk;
}
