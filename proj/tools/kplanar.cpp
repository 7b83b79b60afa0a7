// Copyright 2026 The kplanar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command line front end for the kplanar library.
#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "kplanar/core.hpp"
#include "kplanar/dsl.hpp"
#include "kplanar/error.hpp"
#include "kplanar/families.hpp"
#include "kplanar/metrics.hpp"
#include "kplanar/render.hpp"
#include "kplanar/report.hpp"
#include "kplanar/saturation.hpp"
#include "kplanar/search.hpp"
#include "kplanar/table.hpp"

using namespace kplanar;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> k;
  std::optional<std::string> restrict;
  std::string format;
  std::string out;
};

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

DrawingDocument load(const std::string& path) { return parse_document(read_file(path)); }

// Flags win over the document header.
StyleSpec style_of(const Options& o, const DrawingDocument& doc, bool need_k) {
  StyleSpec s;
  if (o.k) {
    s.k = *o.k;
  } else if (doc.k) {
    s.k = *doc.k;
  } else if (need_k) {
    throw UsageError("--k is required (the drawing declares no k)");
  }
  if (o.restrict) {
    s.restrictions = parse_restrictions(*o.restrict);
  } else if (doc.restrictions) {
    s.restrictions = *doc.restrictions;
  }
  return s;
}

bool json(const Options& o) { return o.format == "json-report"; }

int emit_drawing(const Options& o, const Planarization& p, const StyleSpec& s) {
  if (o.format == "svg") {
    const Layout l = layout(p);
    if (l.degenerate) std::cerr << "warning: layout degenerate, circular fallback used\n";
    write_output(o, render_svg(p, l));
  } else if (json(o)) {
    write_output(o, drawing_report(p, s).dump(2) + "\n");
  } else {
    write_output(o, emit(p, s.k, s.restrictions));
  }
  return kPass;
}

void print_style(const StyleVerdict& v) {
  std::cout << (v.in_style ? "in style" : "not in style") << "\n";
  for (const StyleViolation& x : v.violations) {
    std::cout << "  " << x.restriction << ": " << x.detail << " (edges";
    for (EdgeId e : x.edges) std::cout << ' ' << e;
    std::cout << ")\n";
  }
}

int cmd_validate(const Options&, const std::string& file) {
  const Planarization p = parse(read_file(file));
  const CountsReport c = counts(p, 4);
  std::cout << "valid: n=" << c.n << " m=" << c.m << " cr=" << c.cr << "\n";
  return kPass;
}

int cmd_stats(const Options& o, const std::string& file) {
  const DrawingDocument doc = load(file);
  const StyleSpec s = style_of(o, doc, false);
  if (json(o)) {
    write_output(o, drawing_report(doc.drawing, s).dump(2) + "\n");
    return kPass;
  }
  const CountsReport c = counts(doc.drawing, s.k);
  std::cout << "n " << c.n << "\nn_real " << c.n_real << "\nm " << c.m << "\nm_p " << c.m_p
            << "\nm_x " << c.m_x << "\ncr " << c.cr << "\niso " << c.iso << "\nc0 " << c.c[0]
            << "\nc1 " << c.c[1] << "\nc2 " << c.c[2] << "\nc3 " << c.c[3] << "\nc4plus "
            << c.c4plus << "\nc2_prime " << c.c2_prime << "\ncells " << c.cells
            << "\ncomponents " << c.components << "\nepsilon " << to_string(c.epsilon)
            << "\neuler " << (verify_euler(doc.drawing) ? "ok" : "FAILED") << "\n";
  return kPass;
}

int cmd_check_style(const Options& o, const std::string& file) {
  const DrawingDocument doc = load(file);
  const StyleSpec s = style_of(o, doc, true);
  const StyleVerdict v = check_style(doc.drawing, s);
  if (json(o)) {
    write_output(o, Json(v).dump(2) + "\n");
  } else {
    print_style(v);
  }
  return v.in_style ? kPass : kFail;
}

int cmd_check_filled(const Options& o, const std::string& file) {
  const DrawingDocument doc = load(file);
  const FilledReport r = is_filled(doc.drawing);
  if (json(o)) {
    write_output(o, Json(r).dump(2) + "\n");
  } else {
    std::cout << (r.filled ? "filled" : "not filled") << "\n";
    for (const FilledViolation& v : r.violations) {
      std::cout << "  cell " << v.cell << ": vertices " << v.u << " and " << v.v
                << " not joined\n";
    }
  }
  return r.filled ? kPass : kFail;
}

int cmd_check_tight(const Options& o, const std::string& file) {
  const DrawingDocument doc = load(file);
  const StyleSpec s = style_of(o, doc, true);
  const bool t = is_tight(doc.drawing, s.k);
  std::cout << (t ? "tight" : "not tight") << " for k=" << s.k << "\n";
  return t ? kPass : kFail;
}

int cmd_check_saturated(const Options& o, const std::string& file, const std::string& expect) {
  const DrawingDocument doc = load(file);
  const StyleSpec s = style_of(o, doc, true);
  const SaturationVerdict v = check_saturated(doc.drawing, s);
  if (json(o)) {
    write_output(o, Json(v).dump(2) + "\n");
  } else {
    std::cout << to_string(v.status) << "\n";
    if (v.witness) {
      std::cout << "  new edge " << v.witness->u << " -> " << v.witness->v << " crossing";
      for (const WalkStep& st : v.witness->walk) std::cout << " e" << st.edge;
      if (v.witness->walk.empty()) std::cout << " nothing";
      std::cout << "\n";
    }
    for (const std::string& n : v.notes) std::cout << "  " << n << "\n";
  }
  std::string want = expect;
  for (char& ch : want) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return want == to_string(v.status) ? kPass : kFail;
}

int cmd_generate(const Options& o, const std::string& family) {
  if (!o.k) throw UsageError("--k is required");
  const Family f = family_from_string(family);
  StyleSpec s{*o.k, family_info(f).styles.front()};
  if (o.restrict) s.restrictions = parse_restrictions(*o.restrict);
  return emit_drawing(o, generate(f, *o.k), s);
}

int cmd_glue(const Options& o, const std::string& a, const std::string& b) {
  const DrawingDocument d1 = load(a), d2 = load(b);
  const StyleSpec s = style_of(o, d1, false);
  return emit_drawing(o, glue_first(d1.drawing, d2.drawing), s);
}

int cmd_search(const Options& o, int m_max, bool exhaustive, long long budget) {
  if (!o.k) throw UsageError("--k is required");
  if (exhaustive && m_max > 4) throw UsageError("exhaustive mode needs --m-max <= 4");
  const StyleSpec s{*o.k, o.restrict ? parse_restrictions(*o.restrict) : 0u};
  SearchOptions opt;
  opt.budget = budget;
  const SearchResult r = search_tight(s, m_max, opt);
  if (json(o)) {
    write_output(o, search_report(s, m_max, r).dump(2) + "\n");
  } else {
    std::string text;
    for (const Planarization& p : r.drawings) text += emit(p, s.k, s.restrictions) + "\n";
    if (!o.out.empty()) write_output(o, text);
    std::cout << "found " << r.drawings.size() << " tight drawing(s); "
              << (r.exhaustive ? "exhaustive" : "not exhaustive") << "; " << r.nodes
              << " nodes" << (r.budget_exceeded ? "; budget exceeded" : "") << "\n";
  }
  if (r.budget_exceeded) return kFail;
  return exhaustive && !r.exhaustive ? kFail : kPass;
}

int cmd_table_run(const Options& o, int lo, int hi) {
  if (lo < 4 || hi > 12 || lo > hi) throw UsageError("k range must lie within 4..12");
  const std::string text = cmd_table(lo, hi);
  write_output(o, text);
  return text.find("FAIL") == std::string::npos ? kPass : kFail;
}

int cmd_render(const Options& o, const std::string& file) {
  const Planarization p = parse(read_file(file));
  const Layout l = layout(p);
  if (l.degenerate) std::cerr << "warning: layout degenerate, circular fallback used\n";
  write_output(o, render_svg(p, l));
  return kPass;
}

int cmd_catalog(const Options& o, int lo, int hi) {
  if (o.out.empty()) throw UsageError("--out DIR is required");
  std::filesystem::create_directories(o.out);
  for (Family f : all_families()) {
    for (int k = lo; k <= hi; ++k) {
      if (!family_accepts(f, k)) continue;
      const FamilyInfo& info = family_info(f);
      const std::string text = "# " + std::string(to_string(f)) + ", k = " + std::to_string(k) +
                               ": " + info.source + "\n" +
                               emit(generate(f, k), k, info.styles.front());
      write_file((std::filesystem::path(o.out) / catalog_file_name(f, k)).string(), text);
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kplanar: saturated k-planar drawings"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--k", o.k, "crossings allowed per edge");
    c->add_option("--restrict", o.restrict, "restrictions, e.g. s,i,m,h");
    c->add_option("--format", o.format, "dsl, svg or json-report")
        ->check(CLI::IsMember({"dsl", "svg", "json-report"}));
    c->add_option("--out", o.out, "output path (default stdout)");
  };
  std::string file, file2, family, expect = "saturated";
  int m_max = 4, lo = 4, hi = 12;
  bool exhaustive = false;
  long long budget = 2'000'000;
  std::function<int()> run;

  auto with_file = [&](const char* name, const char* help, auto fn) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    c->add_option("file", file, "drawing file")->required();
    c->callback([&, fn] { run = [&, fn] { return fn(o, file); }; });
    return c;
  };
  with_file("validate", "parse and validate a drawing", cmd_validate);
  with_file("stats", "counts and identities", cmd_stats);
  with_file("check-style", "check k-planarity and restrictions", cmd_check_style);
  with_file("check-filled", "check that the drawing is filled", cmd_check_filled);
  with_file("check-tight", "check tightness for k", cmd_check_tight);
  with_file("render", "write an SVG rendering", cmd_render);
  CLI::App* sat = app.add_subcommand("check-saturated", "decide saturation");
  common(sat);
  sat->add_option("file", file, "drawing file")->required();
  sat->add_option("--expect", expect, "verdict that counts as success")
      ->check(CLI::IsMember({"saturated", "insertable", "unknown"}, CLI::ignore_case));
  sat->callback([&] { run = [&] { return cmd_check_saturated(o, file, expect); }; });

  CLI::App* gen = app.add_subcommand("generate", "generate a tight family instance");
  common(gen);
  gen->add_option("--family", family, "spiral, odd-pair, weave, star, cycle, im4, "
                                      "im-matching or sim-matching")
      ->required();
  gen->callback([&] { run = [&] { return cmd_generate(o, family); }; });

  CLI::App* glue_cmd = app.add_subcommand("glue", "glue two drawings at a vertex");
  common(glue_cmd);
  glue_cmd->add_option("first", file, "host drawing")->required();
  glue_cmd->add_option("second", file2, "drawing placed in a cell of the host")->required();
  glue_cmd->callback([&] { run = [&] { return cmd_glue(o, file, file2); }; });

  CLI::App* search = app.add_subcommand("search", "search small tight drawings");
  common(search);
  search->add_option("--m-max", m_max, "largest number of edges");
  search->add_flag("--exhaustive", exhaustive, "fail unless the search is exhaustive");
  search->add_option("--budget", budget, "search node limit");
  search->callback([&] { run = [&] { return cmd_search(o, m_max, exhaustive, budget); }; });

  CLI::App* table = app.add_subcommand("table", "reproduce the overview table");
  common(table);
  table->add_option("--k-min", lo, "smallest k");
  table->add_option("--k-max", hi, "largest k");
  table->callback([&] { run = [&] { return cmd_table_run(o, lo, hi); }; });

  CLI::App* cat = app.add_subcommand("catalog", "write every family instance to a directory");
  common(cat);
  cat->add_option("--k-min", lo, "smallest k");
  cat->add_option("--k-max", hi, "largest k");
  cat->callback([&] { run = [&] { return cmd_catalog(o, lo, hi); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
}
