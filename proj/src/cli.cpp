// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvrmf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "mvrmf/compact_spectrum.hpp"
#include "mvrmf/core.hpp"
#include "mvrmf/json_io.hpp"
#include "mvrmf/rmf.hpp"
#include "mvrmf/symmetry.hpp"

namespace mvrmf::cli {

namespace {

struct Options {
  unsigned p = 0;
  std::size_t n = 0;
  std::string format = "text";
  std::string layout;
  std::string kind = "rotation";
  std::string values;
  std::string input;
  std::string a;
  std::string b;
  std::string cache_dir;
  std::size_t limit = kDefaultDenseLimit;
  bool compact_input = false;
};

// Everything a command needs besides its options.
struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;

  bool json() const { return opt.format == "json"; }
  Radix radix() const { return Radix(opt.p); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool looks_like_json(std::string_view text) {
  text = trim(text);
  return !text.empty() && text.front() == '{';
}

std::string read_payload(const Context& ctx) {
  const Options& opt = ctx.opt;
  if (!opt.values.empty() && !opt.input.empty()) {
    throw UsageError("--values and --input are mutually exclusive");
  }
  if (!opt.values.empty()) return opt.values;
  if (opt.input.empty()) throw UsageError("one of --values or --input is required");
  std::stringstream text;
  if (opt.input == "-") {
    text << ctx.in.rdbuf();
  } else {
    std::ifstream file(opt.input);
    if (!file) throw Error(ErrorKind::Io, "cannot open " + opt.input);
    text << file.rdbuf();
  }
  return text.str();
}

void check_dimensions(Radix p, std::size_t n, const Context& ctx) {
  if (p != ctx.radix() || n != ctx.opt.n) {
    throw Error(ErrorKind::Domain,
                "input is for p = " + std::to_string(p.value()) +
                    ", n = " + std::to_string(n) + " but --p " +
                    std::to_string(ctx.opt.p) + " --n " +
                    std::to_string(ctx.opt.n) + " was given");
  }
}

ValueVector parse_function(std::string_view text, const Context& ctx) {
  if (looks_like_json(text)) {
    auto f = value_vector_from_json(parse_json(text));
    check_dimensions(f.radix(), f.arity(), ctx);
    return f;
  }
  return parse_value_vector(text, ctx.radix(), ctx.opt.n);
}

CompactVector parse_compact(std::string_view text, const OrbitTable& table,
                            const Context& ctx) {
  if (looks_like_json(text)) {
    auto c = compact_vector_from_json(parse_json(text));
    check_dimensions(c.radix(), c.arity(), ctx);
    check_compatible(c, table);
    return c;
  }
  return CompactVector(table, parse_digits(text, table.radix(), table.size()));
}

OrbitTable table_for(const Context& ctx) {
  if (ctx.opt.kind == "symmetric") {
    return build_symmetric_table(ctx.radix(), ctx.opt.n);
  }
  return build_orbit_table(ctx.radix(), ctx.opt.n);
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::optional<std::filesystem::path> cache_directory(const Options& opt) {
  if (!opt.cache_dir.empty()) return std::filesystem::path(opt.cache_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

// Output

void write_function(const ValueVector& f, const Context& ctx) {
  if (ctx.json()) {
    ctx.out << to_json(f).dump() << '\n';
  } else if (ctx.opt.layout == "map") {
    ctx.out << format_map(f.values(), f.radix(), f.arity());
  } else {
    ctx.out << format_value_vector(f) << '\n';
  }
}

void write_compact_table(const CompactVector& c, const OrbitTable& table,
                         std::ostream& out) {
  std::vector<std::string> reprs(table.size());
  std::size_t repr_width = 4;
  for (std::size_t r = 0; r < table.size(); ++r) {
    reprs[r] = format_assignment(table.orbit(r).representative, table.radix());
    repr_width = std::max(repr_width, reprs[r].size());
  }
  const std::size_t rank_width =
      std::max<std::size_t>(4, std::to_string(table.size() - 1).size());
  out << pad_right("repr", repr_width) << ' ' << pad_left("rank", rank_width)
      << " value\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << pad_right(reprs[r], repr_width) << ' '
        << pad_left(std::to_string(r), rank_width) << ' '
        << pad_left(std::to_string(c[r]), 5) << '\n';
  }
}

void write_compact(const CompactVector& c, const OrbitTable& table,
                   const Context& ctx) {
  if (ctx.json()) {
    ctx.out << to_json(c).dump() << '\n';
  } else if (ctx.opt.layout == "flat") {
    ctx.out << format_digits(c.entries(), c.radix()) << '\n';
  } else {
    write_compact_table(c, table, ctx.out);
  }
}

// Commands

void cmd_matrix(const Context& ctx) {
  const std::size_t n = ctx.opt.n == 0 ? 1 : ctx.opt.n;
  const RmfMatrix m = transform_matrix(ctx.radix(), n, ctx.opt.limit);
  if (ctx.json()) {
    ctx.out << to_json(m).dump() << '\n';
    return;
  }
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      ctx.out << (c == 0 ? "" : " ") << row[c];
    }
    ctx.out << '\n';
  }
}

void cmd_orbits(const Context& ctx) {
  const OrbitTable table = table_for(ctx);
  const Radix p = table.radix();
  const std::string separator = p.value() <= 10 ? "-" : " ";
  std::vector<std::string> reprs;
  std::vector<std::string> cycles;
  for (const Orbit& orbit : table.orbits()) {
    reprs.push_back(format_assignment(orbit.representative, p));
    std::string cycle;
    for (std::size_t k = 0; k < orbit.members.size(); ++k) {
      if (k != 0) cycle += separator;
      cycle += format_assignment(orbit.members[k], p);
    }
    cycles.push_back(std::move(cycle));
  }
  if (ctx.json()) {
    nlohmann::json doc{{"schema", kSchema},
                       {"p", p.value()},
                       {"n", table.arity()},
                       {"kind", to_string(table.kind())}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < table.size(); ++r) {
      std::vector<std::vector<Digit>> members(table.orbit(r).members.begin(),
                                              table.orbit(r).members.end());
      rows.push_back({{"rank", r},
                      {"representative", table.orbit(r).representative},
                      {"members", members}});
    }
    doc["orbits"] = std::move(rows);
    ctx.out << doc.dump() << '\n';
    return;
  }
  std::size_t repr_width = 4;
  for (const auto& s : reprs) repr_width = std::max(repr_width, s.size());
  const std::size_t rank_width =
      std::max<std::size_t>(4, std::to_string(table.size() - 1).size());
  ctx.out << pad_right("repr", repr_width) << ' '
          << pad_left("rank", rank_width) << " cycle\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    ctx.out << pad_right(reprs[r], repr_width) << ' '
            << pad_left(std::to_string(r), rank_width) << ' ' << cycles[r]
            << '\n';
  }
}

void cmd_classify(const Context& ctx) {
  const ValueVector f = parse_function(read_payload(ctx), ctx);
  const SymmetryClass cls = classify(f);
  if (ctx.json()) {
    nlohmann::json doc{{"schema", kSchema},
                       {"p", f.radix().value()},
                       {"n", f.arity()},
                       {"class", to_string(cls)}};
    ctx.out << doc.dump() << '\n';
  } else {
    ctx.out << to_string(cls) << '\n';
  }
}

void cmd_transform(const Context& ctx) {
  write_function(rmf_transform(parse_function(read_payload(ctx), ctx)), ctx);
}

void cmd_compact(const Context& ctx) {
  const OrbitTable table = table_for(ctx);
  write_compact(compress(parse_function(read_payload(ctx), ctx), table), table,
                ctx);
}

void cmd_expand(const Context& ctx) {
  const OrbitTable table = table_for(ctx);
  write_function(expand(parse_compact(read_payload(ctx), table, ctx), table),
                 ctx);
}

void cmd_basis(const Context& ctx) {
  const OrbitTable table = build_orbit_table(ctx.radix(), ctx.opt.n);
  BasisCache cache(cache_directory(ctx.opt));
  const auto basis = cache.get(ctx.radix(), ctx.opt.n);
  if (ctx.json()) {
    ctx.out << to_json(*basis).dump() << '\n';
    return;
  }
  const Radix p = table.radix();
  std::size_t repr_width = 4;
  for (const Orbit& orbit : table.orbits()) {
    repr_width =
        std::max(repr_width, format_assignment(orbit.representative, p).size());
  }
  std::vector<std::size_t> width(basis->size());
  ctx.out << pad_right("repr", repr_width);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    width[k] = std::max(std::to_string(k).size(),
                        std::to_string(p.value() - 1).size());
    ctx.out << ' ' << pad_left(std::to_string(k), width[k]);
  }
  ctx.out << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    ctx.out << pad_right(format_assignment(table.orbit(r).representative, p),
                         repr_width);
    for (std::size_t k = 0; k < basis->size(); ++k) {
      ctx.out << ' ' << pad_left(std::to_string(basis->column(k)[r]), width[k]);
    }
    ctx.out << '\n';
  }
}

void cmd_spectrum(const Context& ctx) {
  const OrbitTable table = build_orbit_table(ctx.radix(), ctx.opt.n);
  const std::string payload = read_payload(ctx);
  const CompactVector c = ctx.opt.compact_input
                              ? parse_compact(payload, table, ctx)
                              : compress(parse_function(payload, ctx), table);
  BasisCache cache(cache_directory(ctx.opt));
  write_compact(compact_spectrum(c, *cache.get(ctx.radix(), ctx.opt.n)), table,
                ctx);
}

void cmd_sum(const Context& ctx) {
  if (ctx.opt.a.empty() || ctx.opt.b.empty()) {
    throw UsageError("sum needs --a and --b");
  }
  const OrbitTable table = build_orbit_table(ctx.radix(), ctx.opt.n);
  const auto result = sum_and_classify(parse_compact(ctx.opt.a, table, ctx),
                                       parse_compact(ctx.opt.b, table, ctx),
                                       table);
  if (ctx.json()) {
    nlohmann::json doc = to_json(result.sum);
    doc["class"] = to_string(result.symmetry);
    doc["distinguishing_classes"] =
        distinguishing_class_count(result.sum, table);
    ctx.out << doc.dump() << '\n';
    return;
  }
  write_compact(result.sum, table, ctx);
  ctx.out << "class: " << to_string(result.symmetry) << '\n';
}

void cmd_count(const Context& ctx) {
  const Radix p = ctx.radix();
  const std::uint64_t orbits = orbit_count(p, ctx.opt.n);
  const std::uint64_t classes = kappa(p, ctx.opt.n);
  const auto symmetric = function_count(p, classes);
  const auto rotation = function_count(p, orbits);
  const boost::multiprecision::cpp_int strict = rotation - symmetric;
  if (ctx.json()) {
    nlohmann::json doc{{"schema", kSchema},
                       {"p", p.value()},
                       {"n", ctx.opt.n},
                       {"orbits", orbits},
                       {"kappa", classes},
                       {"symmetric_functions", symmetric.str()},
                       {"rotation_symmetric_functions", rotation.str()},
                       {"strictly_rotation_symmetric_functions", strict.str()}};
    ctx.out << doc.dump() << '\n';
    return;
  }
  ctx.out << "orbits: " << orbits << '\n'
          << "kappa: " << classes << '\n'
          << "symmetric functions: " << symmetric.str() << '\n'
          << "rotation-symmetric functions (including symmetric): "
          << rotation.str() << '\n'
          << "strictly rotation-symmetric functions: " << strict.str() << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Reed-Muller-Fourier spectra of rotation symmetric "
               "multiple-valued functions",
               "mvrmf"};
  app.require_subcommand(1);

  auto add_dims = [&](CLI::App* cmd, bool n_required) {
    cmd->add_option("--p", opt.p, "Number of logic values")->required();
    auto* n = cmd->add_option("--n", opt.n, "Number of arguments");
    if (n_required) n->required();
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--values", opt.values,
                    "Inline values (digits, comma list for p > 10, or JSON)");
    cmd->add_option("--input", opt.input, "Read values from a file, - for stdin");
  };
  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind", opt.kind, "Orbit kind")
        ->check(CLI::IsMember({"rotation", "symmetric"}));
  };
  auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", opt.cache_dir,
                    std::string("Basis cache directory (default $") +
                        kCacheDirEnv + ")");
  };

  std::vector<std::pair<CLI::App*, void (*)(const Context&)>> commands;

  auto* matrix = app.add_subcommand("matrix", "Print the RMF transform matrix");
  add_dims(matrix, false);
  matrix->add_option("--limit", opt.limit, "Largest p^n to materialize");
  commands.emplace_back(matrix, cmd_matrix);

  auto* orbits = app.add_subcommand("orbits", "List orbits with ranks");
  add_dims(orbits, true);
  add_kind(orbits);
  commands.emplace_back(orbits, cmd_orbits);

  auto* classify_cmd = app.add_subcommand("classify", "Report the symmetry class");
  add_dims(classify_cmd, true);
  add_input(classify_cmd);
  commands.emplace_back(classify_cmd, cmd_classify);

  auto* transform = app.add_subcommand("transform", "Full RMF spectrum");
  add_dims(transform, true);
  add_input(transform);
  transform->add_option("--layout", opt.layout, "flat or map")
      ->check(CLI::IsMember({"flat", "map"}));
  commands.emplace_back(transform, cmd_transform);

  auto* compact = app.add_subcommand("compact", "Compress a value vector");
  add_dims(compact, true);
  add_input(compact);
  add_kind(compact);
  compact->add_option("--layout", opt.layout, "table or flat")
      ->check(CLI::IsMember({"table", "flat"}));
  commands.emplace_back(compact, cmd_compact);

  auto* expand_cmd = app.add_subcommand("expand", "Expand a compact vector");
  add_dims(expand_cmd, true);
  add_input(expand_cmd);
  add_kind(expand_cmd);
  expand_cmd->add_option("--layout", opt.layout, "flat or map")
      ->check(CLI::IsMember({"flat", "map"}));
  commands.emplace_back(expand_cmd, cmd_expand);

  auto* basis = app.add_subcommand("basis", "Compact spectra of elementary functions");
  add_dims(basis, true);
  add_cache(basis);
  commands.emplace_back(basis, cmd_basis);

  for (const char* name : {"spectrum", "inverse"}) {
    auto* cmd = app.add_subcommand(
        name, std::string(name) == "spectrum"
                  ? "Compact RMF spectrum via the elementary spectra"
                  : "Compact function from a compact spectrum (same operation)");
    add_dims(cmd, true);
    add_input(cmd);
    add_cache(cmd);
    cmd->add_flag("--compact", opt.compact_input,
                  "Input is a compact vector in rank order");
    cmd->add_option("--layout", opt.layout, "table or flat")
        ->check(CLI::IsMember({"table", "flat"}));
    commands.emplace_back(cmd, cmd_spectrum);
  }

  auto* sum = app.add_subcommand("sum", "Sum two compact vectors and classify");
  add_dims(sum, true);
  sum->add_option("--a", opt.a, "First compact vector");
  sum->add_option("--b", opt.b, "Second compact vector");
  sum->add_option("--layout", opt.layout, "table or flat")
      ->check(CLI::IsMember({"table", "flat"}));
  commands.emplace_back(sum, cmd_sum);

  auto* count = app.add_subcommand("count", "Orbit and function counts");
  add_dims(count, true);
  commands.emplace_back(count, cmd_count);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error:usage: " << e.what() << '\n';
    return 1;
  }

  const Context ctx{opt, in, out};
  try {
    for (const auto& [cmd, handler] : commands) {
      if (cmd->parsed()) handler(ctx);
    }
  } catch (const UsageError& e) {
    err << "error:usage: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error:" << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error:internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mvrmf::cli
