#include "cdent/state_io.hpp"

#include <fstream>
#include <sstream>

#include "cdent/errors.hpp"
#include "cdent/json_writer.hpp"
#include "json.hpp"

namespace cdent {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw StructuralError("field " + path + ": " + what);
}

const json& require(const json& obj, const std::string& path, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) fail(path, std::string("missing required key \"") + name + "\"");
  return *it;
}

double read_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Complex read_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {read_real(j[0], path + "[0]"), read_real(j[1], path + "[1]")};
}

RealVector read_vector(const json& j, const std::string& path, std::size_t d) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  if (j.size() != d)
    fail(path, "expected length " + std::to_string(d) + ", got " + std::to_string(j.size()));
  RealVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_real(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

GaussianSum read_gaussian_sum(const json& j, const std::string& path, std::size_t d) {
  const json& terms = require(j, path, "terms");
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  GaussianSum sum{d, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    if (!t.is_object()) fail(tp, "expected an object");
    GaussianTerm term;
    term.amplitude = read_complex(require(t, tp, "amplitude"), tp + ".amplitude");
    term.center = read_vector(require(t, tp, "center"), tp + ".center", d);
    term.width = read_real(require(t, tp, "width"), tp + ".width");
    if (!(term.width > 0.0)) fail(tp + ".width", "must be positive");
    term.linear_phase = t.contains("linear_phase")
                            ? read_vector(t["linear_phase"], tp + ".linear_phase", d)
                            : RealVector(d, 0.0);
    term.quad_phase = t.contains("quad_phase") ? read_real(t["quad_phase"], tp + ".quad_phase") : 0.0;
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

HermiteExpansion read_hermite(const json& j, const std::string& path, std::size_t d) {
  HermiteExpansion h;
  h.scale = read_real(require(j, path, "scale"), path + ".scale");
  if (!(h.scale > 0.0)) fail(path + ".scale", "must be positive");
  h.origin = read_vector(require(j, path, "origin"), path + ".origin", d);

  if (j.contains("coefficients")) {
    h.cutoff = read_count(require(j, path, "cutoff"), path + ".cutoff");
    if (h.cutoff == 0) fail(path + ".cutoff", "must be >= 1");
    const json& coeffs = j["coefficients"];
    if (!coeffs.is_array()) fail(path + ".coefficients", "expected an array");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      h.coefficients.push_back(read_complex(coeffs[i], path + ".coefficients[" + std::to_string(i) + "]"));
    std::size_t expected = 1;
    for (std::size_t i = 0; i < d; ++i) expected *= h.cutoff;
    if (h.coefficients.size() != expected)
      fail(path + ".coefficients", "expected cutoff^d = " + std::to_string(expected) +
                                       " entries, got " + std::to_string(h.coefficients.size()));
    return h;
  }

  const json& modes = require(j, path, "modes");
  if (!modes.is_array()) fail(path + ".modes", "expected an array");
  std::vector<std::pair<MultiIndex, Complex>> entries;
  std::size_t cutoff = j.contains("cutoff") ? read_count(j["cutoff"], path + ".cutoff") : 1;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string mp = path + ".modes[" + std::to_string(i) + "]";
    const json& idx = require(modes[i], mp, "index");
    if (!idx.is_array() || idx.size() != d) fail(mp + ".index", "expected " + std::to_string(d) + " mode numbers");
    MultiIndex m;
    for (std::size_t k = 0; k < d; ++k) {
      m.push_back(read_count(idx[k], mp + ".index[" + std::to_string(k) + "]"));
      cutoff = std::max(cutoff, m.back() + 1);
    }
    entries.emplace_back(std::move(m), read_complex(require(modes[i], mp, "coefficient"), mp + ".coefficient"));
  }
  h.cutoff = cutoff;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= cutoff;
  h.coefficients.assign(total, Complex(0.0));
  for (const auto& [m, c] : entries) h.coefficients[h.flat_index(m)] += c;
  return h;
}

ComponentPart read_part(const json& j, const std::string& path, std::size_t d) {
  if (!j.is_object()) fail(path, "expected an object");
  const json& type = require(j, path, "type");
  if (!type.is_string()) fail(path + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "gaussian_sum") return read_gaussian_sum(j, path, d);
  if (t == "hermite") return read_hermite(j, path, d);
  fail(path + ".type", "unknown component type \"" + t + "\"");
}

WaveComponent read_component(const json& j, const std::string& path, std::size_t d) {
  if (j.is_object() && j.contains("type") && j["type"] == "composite") {
    const json& parts = require(j, path, "parts");
    if (!parts.is_array()) fail(path + ".parts", "expected an array");
    CompositeComponent c{d, {}};
    for (std::size_t i = 0; i < parts.size(); ++i)
      c.parts.push_back(read_part(parts[i], path + ".parts[" + std::to_string(i) + "]", d));
    return c;
  }
  return std::visit([](auto&& p) -> WaveComponent { return p; }, read_part(j, path, d));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void write_part(JsonWriter& w, const GaussianSum& sum) {
  w.begin_object();
  w.key("type").value("gaussian_sum");
  w.key("terms").begin_array();
  for (const auto& t : sum.terms) {
    w.begin_object();
    w.key("amplitude").value(t.amplitude);
    w.key("center").value(t.center);
    w.key("width").value(t.width);
    w.key("linear_phase").value(t.linear_phase);
    w.key("quad_phase").value(t.quad_phase);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

void write_part(JsonWriter& w, const HermiteExpansion& h) {
  w.begin_object();
  w.key("type").value("hermite");
  w.key("scale").value(h.scale);
  w.key("origin").value(h.origin);
  w.key("cutoff").value(h.cutoff);
  w.key("coefficients").begin_array();
  for (const auto& c : h.coefficients) w.value(c);
  w.end_array();
  w.end_object();
}

}  // namespace

HybridState read_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw StructuralError("state file line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  const std::size_t version = read_count(require(doc, "$", "schema_version"), "schema_version");
  if (version != static_cast<std::size_t>(kStateSchemaVersion))
    fail("schema_version", "unsupported version " + std::to_string(version));
  const std::size_t n = read_count(require(doc, "$", "n"), "n");
  const std::size_t d = read_count(require(doc, "$", "d"), "d");
  if (n == 0) fail("n", "must be >= 1");
  if (d == 0) fail("d", "must be >= 1");
  const json& comps = require(doc, "$", "components");
  if (!comps.is_array()) fail("components", "expected an array");
  if (comps.size() != n)
    fail("components", "expected n = " + std::to_string(n) + " entries, got " + std::to_string(comps.size()));

  std::vector<WaveComponent> components;
  for (std::size_t i = 0; i < n; ++i)
    components.push_back(read_component(comps[i], "components[" + std::to_string(i) + "]", d));
  return HybridState(std::move(components));
}

HybridState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open state file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_state(buffer.str());
}

void write_state(std::ostream& out, const HybridState& state) {
  JsonWriter w(out);
  w.begin_object();
  w.key("schema_version").value(kStateSchemaVersion);
  w.key("n").value(state.discrete_dim());
  w.key("d").value(state.momentum_dim());
  w.key("components").begin_array();
  for (const auto& c : state.components()) {
    if (const auto* g = std::get_if<GaussianSum>(&c)) {
      write_part(w, *g);
    } else if (const auto* h = std::get_if<HermiteExpansion>(&c)) {
      write_part(w, *h);
    } else {
      const auto& composite = std::get<CompositeComponent>(c);
      w.begin_object();
      w.key("type").value("composite");
      w.key("parts").begin_array();
      for (const auto& part : composite.parts) std::visit([&](const auto& p) { write_part(w, p); }, part);
      w.end_array();
      w.end_object();
    }
  }
  w.end_array();
  w.end_object();
  w.finish();
}

std::string write_state(const HybridState& state) {
  std::ostringstream out;
  write_state(out, state);
  return out.str();
}

}  // namespace cdent
