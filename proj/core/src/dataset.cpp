#include "actcode/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "actcode/error.hpp"

namespace actcode {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view cell, double& out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return ec == std::errc{} && ptr == cell.data() + cell.size() && std::isfinite(out);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

AngleUnit parse_unit(const std::string& text, const std::string& where) {
  if (text == "deg") return AngleUnit::Degrees;
  if (text == "rad") return AngleUnit::Radians;
  throw InputError(where + ": angle_unit must be \"deg\" or \"rad\", got \"" + text + "\"");
}

template <typename T>
T required(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": field \"" + key + "\" has the wrong type");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path.string() + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

}  // namespace

std::string_view to_string(AngleUnit unit) noexcept { return unit == AngleUnit::Radians ? "rad" : "deg"; }

DatasetManifest parse_manifest(std::string_view json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(origin + ": top level must be an object");

  DatasetManifest m;
  m.dataset_name = required<std::string>(doc, "dataset_name", origin);
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError(origin + ": \"entries\" must be an array");
  }
  std::set<std::string> seen;
  std::size_t n = 0;
  for (const auto& item : doc["entries"]) {
    const std::string where = origin + ": entries[" + std::to_string(n++) + "]";
    if (!item.is_object()) throw InputError(where + ": must be an object");
    ManifestEntry e;
    e.path = required<std::string>(item, "path", where);
    e.class_label = required<std::string>(item, "class_label", where);
    e.subject_id = required<std::string>(item, "subject_id", where);
    e.action_id = required<std::string>(item, "action_id", where);
    e.frame_rate = required<double>(item, "frame_rate", where);
    e.angle_unit = parse_unit(required<std::string>(item, "angle_unit", where), where);
    if (!(e.frame_rate > 0.0) || !std::isfinite(e.frame_rate)) throw InputError(where + ": frame_rate must be > 0");
    if (!seen.insert(e.action_id).second) throw InputError(where + ": duplicate action_id \"" + e.action_id + "\"");
    m.entries.push_back(std::move(e));
  }
  return m;
}

DatasetManifest read_manifest(const fs::path& path) { return parse_manifest(read_file(path), path.string()); }

std::string manifest_to_json(const DatasetManifest& manifest) {
  json entries = json::array();
  for (const auto& e : manifest.entries) {
    entries.push_back({{"path", e.path},
                       {"class_label", e.class_label},
                       {"subject_id", e.subject_id},
                       {"action_id", e.action_id},
                       {"frame_rate", e.frame_rate},
                       {"angle_unit", std::string(to_string(e.angle_unit))}});
  }
  json doc = {{"dataset_name", manifest.dataset_name}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

Eigen::MatrixXd read_action_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");

  std::vector<double> values;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  bool first_content = true;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto cells = split_cells(view);

    std::vector<double> parsed(cells.size());
    std::size_t bad = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_double(cells[c], parsed[c])) {
        bad = c;
        break;
      }
    }
    if (first_content) {
      first_content = false;
      columns = cells.size();
      if (bad != cells.size()) continue;  // header row
    }
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (cells.size() != columns) {
      throw InputError(where + ": row " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                       " columns, expected " + std::to_string(columns));
    }
    if (bad != cells.size()) {
      throw InputError(where + ": column " + std::to_string(bad + 1) + " is not a finite number: \"" +
                       std::string(trim(cells[bad])) + "\"");
    }
    values.insert(values.end(), parsed.begin(), parsed.end());
    ++rows;
  }
  if (rows == 0) throw InputError(path.string() + ": no numeric rows");

  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(columns));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = values[r * columns + c];
    }
  }
  return m;
}

void write_action_csv(const fs::path& path, const Eigen::MatrixXd& samples) {
  std::string text;
  for (Eigen::Index r = 0; r < samples.rows(); ++r) {
    for (Eigen::Index c = 0; c < samples.cols(); ++c) {
      if (c > 0) text += ',';
      text += format_double(samples(r, c));
    }
    text += '\n';
  }
  write_file(path, text);
}

std::vector<ActionMatrix> load_dataset(const fs::path& manifest_path) {
  const DatasetManifest manifest = read_manifest(manifest_path);
  const fs::path base = manifest_path.parent_path();

  std::vector<ActionMatrix> actions;
  actions.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) {
    const fs::path file = base / e.path;
    Eigen::MatrixXd samples = read_action_csv(file);
    if (e.angle_unit == AngleUnit::Radians) samples *= 180.0 / std::numbers::pi;
    if (!actions.empty() && static_cast<std::size_t>(samples.cols()) != actions.front().joints()) {
      throw InputError(file.string() + ": has " + std::to_string(samples.cols()) + " joints but " +
                       actions.front().action_id() + " has " + std::to_string(actions.front().joints()));
    }
    try {
      actions.emplace_back(std::move(samples), e.frame_rate, ActionMeta{e.class_label, e.subject_id, e.action_id});
    } catch (const std::invalid_argument& err) {
      throw InputError(file.string() + ": " + err.what());
    }
  }
  return actions;
}

fs::path write_dataset(const fs::path& directory, const std::string& dataset_name,
                       const std::vector<ActionMatrix>& actions) {
  std::error_code ec;
  fs::create_directories(directory / "actions", ec);
  if (ec) throw InputError((directory / "actions").string() + ": " + ec.message());

  DatasetManifest manifest{dataset_name, {}};
  std::set<std::string> seen;
  for (const auto& a : actions) {
    if (a.action_id().empty() || a.action_id().find_first_of("/\\") != std::string::npos) {
      throw InputError("action id \"" + a.action_id() + "\" cannot be used as a file name");
    }
    if (!seen.insert(a.action_id()).second) throw InputError("duplicate action id \"" + a.action_id() + "\"");
    const std::string rel = "actions/" + a.action_id() + ".csv";
    write_action_csv(directory / rel, a.samples());
    manifest.entries.push_back({rel, a.class_label(), a.subject_id(), a.action_id(), a.frame_rate(), AngleUnit::Degrees});
  }
  const fs::path manifest_path = directory / "manifest.json";
  write_file(manifest_path, manifest_to_json(manifest));
  return manifest_path;
}

}  // namespace actcode
