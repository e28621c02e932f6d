// Copyright 2026 The hdshapes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdshapes/cli.hpp"
#include "hdshapes/composer.hpp"
#include "hdshapes/error.hpp"
#include "hdshapes/io.hpp"
#include "hdshapes/shapes.hpp"
#include "hdshapes/topology.hpp"

namespace hdshapes {

namespace {

using nlohmann::json;

// Reading or writing a file failed.
class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments that the parser itself cannot catch.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string flag_name(std::string param) {
  for (char& c : param) {
    if (c == '_') c = '-';
  }
  return "--" + param;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoFailure("failed reading '" + path + "'");
  return text.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out << contents;
  out.close();
  if (!out) throw IoFailure("failed writing '" + path + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

// ---------------------------------------------------------------------------
// Shape parameter flags.

struct ParamFlags {
  std::size_t n = 0, p = 0, k = 0, steps = 0, spins = 0;
  double h = 0, ratio = 0, r = 0, hc = 0, non_fac = 0, l = 0, rt = 0, rb = 0,
         spe = 0;
  std::vector<double> w, l_vec, r_vec, range, s;
  std::vector<std::size_t> n_vec;
  bool allow_share = false;
  std::map<std::string, CLI::Option*> options;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  auto& o = f.options;
  o["n"] = cmd->add_option("--n", f.n, "number of points");
  o["p"] = cmd->add_option("--p", f.p, "number of dimensions");
  o["k"] = cmd->add_option("--k", f.k, "number of branches or clusters");
  o["h"] = cmd->add_option("--h", f.h, "height");
  o["ratio"] = cmd->add_option("--ratio", f.ratio, "cone tip radius ratio");
  o["s"] = cmd->add_option("--s", f.s, "covariance, row-major, comma-separated")
               ->delimiter(',');
  o["r"] = cmd->add_option("--r", f.r, "radius");
  o["w"] = cmd->add_option("--w", f.w, "width interval: a,b or a single half-width")
               ->delimiter(',')
               ->expected(1, 2);
  o["steps"] = cmd->add_option("--steps", f.steps, "number of bands");
  o["spins"] = cmd->add_option("--spins", f.spins, "number of spins");
  o["hc"] = cmd->add_option("--hc", f.hc, "nonlinear curvature");
  o["non_fac"] = cmd->add_option("--non-fac", f.non_fac, "nonlinear factor");
  o["l"] = cmd->add_option("--l", f.l, "triangular base size");
  o["l_vec"] = cmd->add_option("--l-vec", f.l_vec, "rectangular base half-widths a,b")
                   ->delimiter(',')
                   ->expected(2);
  o["rt"] = cmd->add_option("--rt", f.rt, "top radius");
  o["rb"] = cmd->add_option("--rb", f.rb, "base radius");
  o["n_vec"] = cmd->add_option("--n-vec", f.n_vec, "counts: big,small")
                   ->delimiter(',');
  o["r_vec"] = cmd->add_option("--r-vec", f.r_vec, "radii: big,small")
                   ->delimiter(',')
                   ->expected(2);
  o["spe"] = cmd->add_option("--spe", f.spe, "spread of small-sphere centers");
  o["range"] = cmd->add_option("--range", f.range, "x range a,b or a single half-width")
                   ->delimiter(',')
                   ->expected(1, 2);
  o["allow_share"] = cmd->add_flag("--allow-share", f.allow_share,
                                   "let branches share coordinate pairs");
}

Interval to_interval(const std::vector<double>& v, const std::string& name) {
  if (v.size() == 1) return {-v[0], v[0]};
  if (v.size() == 2) return {v[0], v[1]};
  throw UsageError(flag_name(name) + " expects one or two values");
}

ShapeParams collect_params(const ParamFlags& f) {
  ShapeParams q;
  auto set = [&](const char* name) { return f.options.at(name)->count() > 0; };
  if (set("n")) q.n = f.n;
  if (set("p")) q.p = f.p;
  if (set("k")) q.k = f.k;
  if (set("h")) q.h = f.h;
  if (set("ratio")) q.ratio = f.ratio;
  if (set("s")) {
    const auto dim = static_cast<Eigen::Index>(
        std::llround(std::sqrt(static_cast<double>(f.s.size()))));
    if (dim * dim != static_cast<Eigen::Index>(f.s.size())) {
      throw UsageError("--s expects p*p values, got " + std::to_string(f.s.size()));
    }
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        m(i, j) = f.s[static_cast<std::size_t>(i * dim + j)];
      }
    }
    q.s = m;
  }
  if (set("r")) q.r = f.r;
  if (set("w")) q.w = to_interval(f.w, "w");
  if (set("steps")) q.steps = f.steps;
  if (set("spins")) q.spins = f.spins;
  if (set("hc")) q.hc = f.hc;
  if (set("non_fac")) q.non_fac = f.non_fac;
  if (set("l")) q.l = f.l;
  if (set("l_vec")) q.l_vec = to_interval(f.l_vec, "l_vec");
  if (set("rt")) q.rt = f.rt;
  if (set("rb")) q.rb = f.rb;
  if (set("n_vec")) q.n_vec = f.n_vec;
  if (set("r_vec")) q.r_vec = to_interval(f.r_vec, "r_vec");
  if (set("spe")) q.spe = f.spe;
  if (set("range")) q.range = to_interval(f.range, "range");
  if (set("allow_share")) q.allow_share = f.allow_share;
  return q;
}

// Rejects flags the kind does not take, naming the first offending flag.
void check_flags(const ShapeInfo& info, const ShapeParams& params) {
  for (const auto& name : params.provided()) {
    if (std::find(info.params.begin(), info.params.end(), name) ==
        info.params.end()) {
      std::vector<std::string> accepted;
      for (const auto& p : info.params) accepted.push_back(flag_name(p));
      throw UsageError(flag_name(name) + " is not a valid option for " +
                       info.name + " (accepted: " + join(accepted, ", ") + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// Jobs: a command plus its JSON spec fully determine the data given a seed.

struct Job {
  std::string command;
  json spec;
};

const ShapeInfo& lookup_shape(const std::string& name) {
  if (!has_shape(name)) {
    std::vector<std::string> kinds;
    for (const auto& info : shape_registry()) kinds.push_back(info.name);
    throw UsageError("unknown shape '" + name + "'; available: " +
                     join(kinds, ", "));
  }
  return find_shape(name);
}

Dataset execute(const Job& job, std::uint64_t seed) {
  RandomStream stream = make_stream(seed);
  const json& s = job.spec;
  if (job.command == "generate") {
    const auto& info = lookup_shape(s.at("shape").get<std::string>());
    const ShapeParams params = params_from_json(s.at("params"), "params");
    check_flags(info, params);
    return generate_shape(info.name, params, stream);
  }
  if (job.command == "multicluster") {
    return gen_multicluster(spec_from_json(s), stream);
  }
  if (job.command == "hole") {
    const auto kind = s.at("kind").get<std::string>();
    const auto n = s.at("n").get<std::size_t>();
    const auto r = s.at("r").get<double>();
    if (kind == "scurve") return gen_scurvehole(n, r, stream).data;
    if (kind == "unifcube") {
      return gen_unifcubehole(n, s.at("p").get<std::size_t>(), r, stream).data;
    }
    throw UsageError("unknown hole kind '" + kind + "' (expected scurve or unifcube)");
  }
  if (job.command == "preset") {
    PresetParams params;
    if (s.contains("n")) params.n = s["n"].get<std::size_t>();
    if (s.contains("p")) params.p = s["p"].get<std::size_t>();
    if (s.contains("k")) params.k = s["k"].get<std::size_t>();
    return make_preset(s.at("name").get<std::string>(), params, stream);
  }
  throw UsageError("unknown command '" + job.command + "'");
}

struct OutputFlags {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  CLI::Option* format_option = nullptr;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--seed", f.seed, "random seed (default: $HDSHAPES_SEED, else random)");
  cmd->add_option("--out", f.out, "output file (default: standard output)");
  f.format_option = cmd->add_option("--format", f.format, "csv or ndjson")
                        ->check(CLI::IsMember({"csv", "ndjson"}));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           std::ostream& err) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HDSHAPES_SEED"); env && *env) {
    const std::string text = env;
    std::uint64_t seed = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || end != text.data() + text.size()) {
      throw UsageError("HDSHAPES_SEED must be an unsigned 64-bit integer, got '" +
                       text + "'");
    }
    return seed;
  }
  std::random_device entropy;
  const std::uint64_t seed =
      (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
  err << "seed: " << seed << "\n";
  return seed;
}

void emit(const Job& job, std::uint64_t seed, const std::string& out_path,
          Format format, std::ostream& out) {
  const Dataset data = execute(job, seed);
  if (out_path.empty()) {
    write_dataset(out, data, format);
    return;
  }
  std::ostringstream buffer;
  write_dataset(buffer, data, format);
  write_file(out_path, buffer.str());

  json manifest;
  manifest["tool_version"] = kToolVersion;
  manifest["seed"] = seed;
  manifest["command"] = job.command;
  manifest["spec"] = job.spec;
  manifest["format"] = to_string(format);
  manifest["output_path"] = out_path;
  manifest["row_count"] = data.rows();
  manifest["col_count"] = data.cols();
  manifest["created_at"] = utc_timestamp();
  write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

Job replay_job(const json& manifest, std::uint64_t& seed, Format& format,
               std::string& out_path) {
  for (const char* key : {"seed", "command", "spec", "format", "output_path"}) {
    if (!manifest.contains(key)) throw ConfigError(key, "missing manifest field");
  }
  if (!manifest["seed"].is_number_unsigned() &&
      !(manifest["seed"].is_number_integer() && manifest["seed"].get<long long>() >= 0)) {
    throw ConfigError("seed", "expected an unsigned integer");
  }
  seed = manifest["seed"].get<std::uint64_t>();
  format = parse_format(manifest["format"].get<std::string>());
  if (out_path.empty()) out_path = manifest["output_path"].get<std::string>();
  return {manifest["command"].get<std::string>(), manifest["spec"]};
}

void print_list(bool presets, std::ostream& out) {
  if (presets) {
    for (const auto& info : preset_registry()) {
      out << info.name << ": " << join(info.params, ", ") << "\n";
    }
    return;
  }
  for (const auto& info : shape_registry()) {
    out << info.name << ": " << join(info.params, ", ") << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generate synthetic high-dimensional point clouds.", "hdshapes"};
  // --h is a shape parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  OutputFlags gen_out;
  ParamFlags gen_params;
  std::string shape;
  std::string manifest_path;
  auto* gen = app.add_subcommand("generate", "generate one shape");
  gen->add_option("shape", shape, "shape kind (see `list`)");
  gen->add_option("--from-manifest", manifest_path,
                  "re-run the command recorded in a manifest");
  add_param_flags(gen, gen_params);
  add_output_flags(gen, gen_out);

  OutputFlags mc_out;
  std::string config_path;
  auto* mc = app.add_subcommand("multicluster", "compose a multi-cluster scene");
  mc->add_option("config", config_path, "JSON scene description")->required();
  add_output_flags(mc, mc_out);

  OutputFlags hole_out;
  std::string hole_kind;
  std::size_t hole_n = 1000;
  std::size_t hole_p = 3;
  double hole_r = 0.0;
  auto* hole = app.add_subcommand("hole", "shape with a spherical hole");
  hole->add_option("kind", hole_kind, "scurve or unifcube")
      ->required()
      ->check(CLI::IsMember({"scurve", "unifcube"}));
  hole->add_option("--n", hole_n, "number of points kept");
  auto* hole_p_opt = hole->add_option("--p", hole_p, "cube dimension (unifcube)");
  hole->add_option("--r", hole_r, "hole radius")->required();
  add_output_flags(hole, hole_out);

  OutputFlags preset_out;
  std::string preset_name;
  std::size_t preset_n = 0, preset_p = 0, preset_k = 0;
  auto* preset = app.add_subcommand("preset", "named multi-cluster scene");
  preset->add_option("name", preset_name, "preset name (see `list --presets`)")
      ->required();
  auto* preset_n_opt = preset->add_option("--n", preset_n, "total points");
  auto* preset_p_opt = preset->add_option("--p", preset_p, "number of dimensions");
  auto* preset_k_opt = preset->add_option("--k", preset_k, "number of clusters");
  add_output_flags(preset, preset_out);

  bool list_presets = false;
  auto* list = app.add_subcommand("list", "list shape kinds or presets");
  list->add_flag("--presets", list_presets, "list preset scenes instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list) {
      print_list(list_presets, out);
      return kExitOk;
    }

    Job job;
    OutputFlags* flags = nullptr;
    if (*gen) {
      flags = &gen_out;
      if (!manifest_path.empty()) {
        if (!shape.empty()) {
          throw UsageError("--from-manifest cannot be combined with a shape");
        }
        const ShapeParams extra = collect_params(gen_params);
        if (!extra.provided().empty() || gen_out.seed || gen_out.format_option->count()) {
          throw UsageError("--from-manifest only accepts --out");
        }
        const json manifest = parse_json_document(read_file(manifest_path));
        std::uint64_t seed = 0;
        Format format = Format::kCsv;
        std::string out_path = gen_out.out;
        job = replay_job(manifest, seed, format, out_path);
        emit(job, seed, out_path, format, out);
        return kExitOk;
      }
      if (shape.empty()) throw UsageError("generate needs a shape kind");
      const auto& info = lookup_shape(shape);
      const ShapeParams params = collect_params(gen_params);
      check_flags(info, params);
      validate_params(info, params);
      job = {"generate", {{"shape", info.name}, {"params", params_to_json(params)}}};
    } else if (*mc) {
      flags = &mc_out;
      const json config = parse_json_document(read_file(config_path));
      const MultiClusterSpec spec = spec_from_json(config);
      validate(spec);
      job = {"multicluster", spec_to_json(spec)};
    } else if (*hole) {
      flags = &hole_out;
      if (hole_kind == "scurve" && hole_p_opt->count() > 0) {
        throw UsageError("--p is not a valid option for the scurve hole");
      }
      json spec = {{"kind", hole_kind}, {"n", hole_n}, {"r", hole_r}};
      if (hole_kind == "unifcube") spec["p"] = hole_p;
      job = {"hole", spec};
    } else {
      flags = &preset_out;
      json spec = {{"name", preset_name}};
      PresetParams params;
      if (preset_n_opt->count() > 0) spec["n"] = *(params.n = preset_n);
      if (preset_p_opt->count() > 0) spec["p"] = *(params.p = preset_p);
      if (preset_k_opt->count() > 0) spec["k"] = *(params.k = preset_k);
      validate(preset_spec(preset_name, params));
      job = {"preset", spec};
    }

    const std::uint64_t seed = resolve_seed(flags->seed, err);
    emit(job, seed, flags->out, parse_format(flags->format), out);
    return kExitOk;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: " << (config_path.empty() ? manifest_path : config_path)
        << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed manifest: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hdshapes
