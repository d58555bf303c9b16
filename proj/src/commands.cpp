#include "cstar/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace cstar {

namespace {

CommandResult invalid(const Error& e) { return {ExitStatus::Invalid, error_to_json(e), std::nullopt}; }

struct Tally {
  int surfaces = 0;
  int not_fano = 0;
  int ke = 0;
  int krs = 0;
  int se_candidate = 0;
  int indeterminate = 0;

  void add(const Json& outcome) {
    ++surfaces;
    if (outcome.at("status") == "not_fano") {
      ++not_fano;
      return;
    }
    const Json& r = outcome.at("report");
    if (r.at("ke").at("admits").get<bool>()) ++ke;
    const std::string krs_v = r.at("krs").at("verdict");
    const std::string se_v = r.at("se").at("verdict");
    if (krs_v == "yes") ++krs;
    if (se_v == "candidate") ++se_candidate;
    if (krs_v == "indeterminate" || se_v == "indeterminate") ++indeterminate;
  }

  Json json() const {
    Json j;
    j["surfaces"] = surfaces;
    j["not_fano"] = not_fano;
    j["ke"] = ke;
    j["krs"] = krs;
    j["se_candidate"] = se_candidate;
    j["indeterminate"] = indeterminate;
    return j;
  }
};

Json analyze_file(const std::filesystem::path& file, const RunConfig& config) {
  Json out;
  out["file"] = file.filename().string();
  try {
    const CommandResult r = analyze_command(read_json_file(file), config);
    switch (r.status) {
      case ExitStatus::Ok:
        out["status"] = "analyzed";
        out["report"] = r.document;
        break;
      case ExitStatus::NotFano:
        out["status"] = "not_fano";
        out["report"] = r.document;
        break;
      case ExitStatus::Invalid:
        out["status"] = "invalid";
        out["error"] = r.document;
        break;
    }
  } catch (const Error& e) {
    out["status"] = "invalid";
    out["error"] = error_to_json(e);
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": " + e.what());
  }
}

CommandResult validate_command(const Json& doc) {
  try {
    const DefiningData data = parse_surface(doc);
    const SurfaceContext ctx = make_context(data);
    Json j;
    j["valid"] = true;
    j["r"] = data.r;
    j["n"] = data.n();
    j["m"] = data.m();
    j["P"] = to_json(ctx.P);
    j["fano"] = ctx.is_fano;
    j["special"] = ctx.special_set;
    j["family_dimension"] = family_dimension(data);
    return {ExitStatus::Ok, j, std::nullopt};
  } catch (const Error& e) {
    return invalid(e);
  }
}

CommandResult analyze_command(const Json& doc, const RunConfig& config) {
  DefiningData data;
  std::optional<SurfaceContext> ctx;
  try {
    data = parse_surface(doc);
    ctx = make_context(data);
  } catch (const Error& e) {
    return invalid(e);
  }
  if (!ctx->is_fano) {
    Json j = error_to_json(Error(ErrorCode::NotFano, "-K is not in the relative interior of the moving cone"));
    j["fano"] = false;
    j["family_dimension"] = family_dimension(data);
    j["meta"] = Json::parse(data.metadata);
    return {ExitStatus::NotFano, j, std::nullopt};
  }
  try {
    const DegenerationSet set = build_degenerations(*ctx, config.alpha);
    StabilityReport report = analyze(*ctx, set, config.options);
    return {ExitStatus::Ok, report_to_json(report, data.metadata), std::move(report)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFano) return {ExitStatus::NotFano, error_to_json(e), std::nullopt};
    return invalid(e);
  }
}

CommandResult degenerations_command(const Json& doc, const RunConfig& config) {
  try {
    const SurfaceContext ctx = make_context(parse_surface(doc));
    return {ExitStatus::Ok, atlas_to_json(ctx, build_degenerations(ctx, config.alpha)), std::nullopt};
  } catch (const Error& e) {
    return invalid(e);
  }
}

std::vector<std::filesystem::path> collect_inputs(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::filesystem::path> files;
  for (const auto& p : paths) {
    if (std::filesystem::is_directory(p)) {
      for (const auto& entry : std::filesystem::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  return files;
}

CommandResult batch_command(const std::vector<std::filesystem::path>& files, const RunConfig& config) {
  std::vector<Json> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) outcomes[i] = analyze_file(files[i], config);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Tally total;
  std::map<int, Tally> by_dimension;
  std::map<std::string, std::map<long long, Tally>> by_meta;
  Json surfaces = Json::array(), failures = Json::array();
  for (const auto& o : outcomes) {
    if (o.at("status") == "invalid") {
      failures.push_back({{"file", o.at("file")}, {"error", o.at("error")}});
      continue;
    }
    const Json& r = o.at("report");
    total.add(o);
    by_dimension[r.at("family_dimension").get<int>()].add(o);
    if (r.contains("meta") && r["meta"].is_object())
      for (const auto& [key, value] : r["meta"].items())
        if (value.is_number_integer()) by_meta[key][value.get<long long>()].add(o);
    surfaces.push_back(o);
  }

  Json summary;
  summary["totals"] = total.json();
  Json dims = Json::object();
  for (const auto& [d, t] : by_dimension) dims[std::to_string(d)] = t.json();
  summary["by_dimension"] = dims;
  Json meta = Json::object();
  for (const auto& [key, groups] : by_meta) {
    Json g = Json::object();
    for (const auto& [value, t] : groups) g[std::to_string(value)] = t.json();
    meta[key] = g;
  }
  summary["by_meta"] = meta;
  summary["failures"] = failures;
  summary["surfaces"] = surfaces;
  const ExitStatus status = total.surfaces == 0 ? ExitStatus::Invalid : ExitStatus::Ok;
  return {status, summary, std::nullopt};
}

std::string batch_to_text(const Json& summary) {
  std::ostringstream os;
  auto row = [&](const std::string& label, const Json& t) {
    os << label << "\t" << t["surfaces"] << "\t" << t["ke"] << "\t" << t["krs"] << "\t" << t["se_candidate"] << "\t"
       << t["indeterminate"] << "\t" << t["not_fano"] << "\n";
  };
  os << "d\tsurfaces\tKE\tKRS\tSE-candidate\tindeterminate\tnot-Fano\n";
  for (const auto& [d, t] : summary["by_dimension"].items()) row(d, t);
  row("total", summary["totals"]);
  for (const auto& [key, groups] : summary["by_meta"].items()) {
    os << "\n" << key << "\tsurfaces\tKE\tKRS\tSE-candidate\tindeterminate\tnot-Fano\n";
    for (const auto& [value, t] : groups.items()) row(value, t);
  }
  if (!summary["failures"].empty()) {
    os << "\nfailures:\n";
    for (const auto& f : summary["failures"])
      os << "  " << f["file"].get<std::string>() << ": " << f["error"]["error"].get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace cstar
