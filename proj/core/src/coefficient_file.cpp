#include "arkimex/coefficient_file.hpp"

#include "arkimex/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

namespace arkimex {

using nlohmann::json;

double parse_decimal(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  if (!std::isfinite(value))
    throw std::invalid_argument("non-finite coefficient: '" + std::string(text) + "'");
  return value;
}

std::string format_decimal(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

namespace {

// Input iterator that records how far the parser has read, so SAX events can
// be mapped back to byte offsets.
struct TrackingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char** high = nullptr;

  reference operator*() const { return *p; }
  TrackingIterator& operator++() {
    ++p;
    if (p > *high) *high = p;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto tmp = *this;
    ++*this;
    return tmp;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p == b.p; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p != b.p; }
};

// Records the byte offset at which every value ends, keyed by field path.
class PathRecorder : public nlohmann::json_sax<json> {
 public:
  PathRecorder(const char* begin, const char** high) : begin_(begin), high_(high) {}

  std::map<std::string, std::size_t> offsets;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    value();
    stack_.push_back({false, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().selector = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    value();
    stack_.push_back({true, 0, {}});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool array;
    std::size_t count;
    std::string selector;
  };

  bool value() {
    if (!stack_.empty() && stack_.back().array)
      stack_.back().selector = "[" + std::to_string(stack_.back().count++) + "]";
    offsets[path()] = static_cast<std::size_t>(*high_ - begin_);
    return true;
  }

  std::string path() const {
    std::string s;
    for (const auto& f : stack_) {
      if (f.array)
        s += f.selector;
      else
        s += (s.empty() ? "" : ".") + f.selector;
    }
    return s;
  }

  const char* begin_;
  const char** high_;
  std::vector<Frame> stack_;
};

std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class Reader {
 public:
  Reader(std::string_view text, std::map<std::string, std::size_t> offsets)
      : text_(text), offsets_(std::move(offsets)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    std::size_t line = 0;
    // Fall back to the nearest enclosing path when the field itself is absent.
    std::string p = path;
    while (true) {
      if (auto it = offsets_.find(p); it != offsets_.end()) {
        line = line_of(text_, it->second);
        break;
      }
      const auto cut = p.find_last_of(".[");
      if (cut == std::string::npos || cut == 0) break;
      p.resize(cut);
    }
    throw ParseError(what, line, path);
  }

  const json& member(const json& obj, const std::string& path, const std::string& key) const {
    const std::string sub = path.empty() ? key : path + "." + key;
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(sub, "missing field '" + key + "'");
    return *it;
  }

  double coefficient(const json& v, const std::string& path) const {
    if (v.is_number()) return v.get<double>();
    if (!v.is_string()) fail(path, "expected a decimal string");
    try {
      return parse_decimal(v.get_ref<const std::string&>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }

  int integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  bool boolean(const json& v, const std::string& path) const {
    if (!v.is_boolean()) fail(path, "expected true or false");
    return v.get<bool>();
  }

  Eigen::VectorXd vector(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
      out(static_cast<Eigen::Index>(i)) = coefficient(v[i], path + "[" + std::to_string(i) + "]");
    return out;
  }

  ButcherTableau tableau(const json& v, const std::string& path) const {
    ButcherTableau t;
    t.b = vector(member(v, path, "b"), path + ".b");
    t.c = vector(member(v, path, "c"), path + ".c");
    const auto s = t.b.size();
    const std::string apath = path + ".A";
    const json& a = member(v, path, "A");
    if (!a.is_array() || static_cast<Eigen::Index>(a.size()) != s)
      fail(apath, "A must have one row per stage");
    t.A.resize(s, s);
    for (Eigen::Index i = 0; i < s; ++i) {
      const std::string rpath = apath + "[" + std::to_string(i) + "]";
      const Eigen::VectorXd row = vector(a[static_cast<std::size_t>(i)], rpath);
      if (row.size() != s) fail(rpath, "row length differs from the stage count");
      t.A.row(i) = row.transpose();
    }
    if (t.c.size() != s) fail(path + ".c", "c length differs from the stage count");
    return t;
  }

  std::array<int, 3> triple(const json& v, const std::string& path) const {
    if (!v.is_array() || v.size() != 3) fail(path, "expected [explicit, implicit, coupled]");
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = integer(v[i], path + "[" + std::to_string(i) + "]");
    return out;
  }

  DeclaredProperties properties(const json& v, const std::string& path) const {
    DeclaredProperties p;
    p.order = triple(member(v, path, "order"), path + ".order");
    p.stage_order = triple(member(v, path, "stage_order"), path + ".stage_order");
    auto flag = [&](const char* key) { return boolean(member(v, path, key), path + "." + key); };
    p.a_stable = flag("a_stable");
    p.l_stable = flag("l_stable");
    p.b_stable = flag("b_stable");
    p.stiffly_accurate_implicit = flag("stiffly_accurate_implicit");
    p.stiffly_accurate_explicit = flag("stiffly_accurate_explicit");
    p.shared_b = flag("shared_b");
    p.shared_c = flag("shared_c");
    const json& mx = member(v, path, "max_explicit_imag");
    if (!mx.is_number()) fail(path + ".max_explicit_imag", "expected a number");
    p.max_explicit_imag = mx.get<double>();
    return p;
  }

  ArkMethod method(const json& v, const std::string& path) const {
    ArkMethod m;
    const json& name = member(v, path, "name");
    if (!name.is_string() || name.get_ref<const std::string&>().empty())
      fail(path + ".name", "expected a non-empty string");
    m.name = name.get<std::string>();
    if (auto it = v.find("reference"); it != v.end()) {
      if (!it->is_string()) fail(path + ".reference", "expected a string");
      m.reference = it->get<std::string>();
    }
    const std::string dpath = path + ".declared";
    const json& d = member(v, path, "declared");
    m.declared_order = integer(member(d, dpath, "order"), dpath + ".order");
    m.declared_implicit_solves = integer(member(d, dpath, "implicit_solves"), dpath + ".implicit_solves");
    m.declared_explicit_evals = integer(member(d, dpath, "explicit_evals"), dpath + ".explicit_evals");
    if (auto it = v.find("pure_explicit"); it != v.end()) m.pure_explicit = boolean(*it, path + ".pure_explicit");
    m.explicit_tableau = tableau(member(v, path, "explicit"), path + ".explicit");
    m.implicit_tableau = tableau(member(v, path, "implicit"), path + ".implicit");
    if (m.explicit_tableau.stages() != m.implicit_tableau.stages())
      fail(path + ".implicit", "stage count differs from the explicit tableau");
    if (auto it = v.find("properties"); it != v.end())
      m.declared_properties = properties(*it, path + ".properties");
    for (const auto& [key, _] : v.items()) {
      static const char* known[] = {"name", "reference", "declared", "pure_explicit",
                                    "explicit", "implicit", "properties"};
      if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
          std::end(known))
        fail(path + "." + key, "unknown field '" + key + "'");
    }
    return m;
  }

 private:
  std::string_view text_;
  std::map<std::string, std::size_t> offsets_;
};

}  // namespace

std::vector<ArkMethod> parse_coefficient_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), line_of(text, e.byte), "");
  }

  const char* high = text.data();
  PathRecorder recorder(text.data(), &high);
  TrackingIterator first{text.data(), &high};
  TrackingIterator last{text.data() + text.size(), &high};
  json::sax_parse(first, last, &recorder);
  Reader reader(text, std::move(recorder.offsets));

  if (!doc.is_object()) reader.fail("", "top level must be an object");
  const json& version = reader.member(doc, "", "schema_version");
  if (reader.integer(version, "schema_version") != kCoefficientSchemaVersion)
    reader.fail("schema_version", "unsupported schema_version " + version.dump());
  const json& list = reader.member(doc, "", "methods");
  if (!list.is_array()) reader.fail("methods", "expected an array of methods");

  std::vector<ArkMethod> methods;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "methods[" + std::to_string(i) + "]";
    ArkMethod m = reader.method(list[i], path);
    for (const auto& prev : methods)
      if (prev.name == m.name) reader.fail(path + ".name", "duplicate method name " + m.name);
    validate(m);
    methods.push_back(std::move(m));
  }
  return methods;
}

std::vector<ArkMethod> load_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open coefficient file " + path.string(), 0, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coefficient_file(ss.str());
}

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_vector(std::ostringstream& os, const Eigen::VectorXd& v) {
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << quoted(format_decimal(v(i)));
  os << "]";
}

void write_tableau(std::ostringstream& os, const ButcherTableau& t) {
  os << "{\n    \"A\": [\n";
  for (Eigen::Index i = 0; i < t.A.rows(); ++i) {
    os << "     ";
    write_vector(os, t.A.row(i).transpose());
    os << (i + 1 < t.A.rows() ? ",\n" : "\n");
  }
  os << "    ],\n    \"b\": ";
  write_vector(os, t.b);
  os << ",\n    \"c\": ";
  write_vector(os, t.c);
  os << "\n   }";
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string serialize_coefficient_file(const std::vector<ArkMethod>& methods) {
  std::ostringstream os;
  os << "{\n \"schema_version\": " << kCoefficientSchemaVersion << ",\n \"methods\": [\n";
  for (std::size_t k = 0; k < methods.size(); ++k) {
    const ArkMethod& m = methods[k];
    os << "  {\n   \"name\": " << quoted(m.name) << ",\n";
    if (!m.reference.empty()) os << "   \"reference\": " << quoted(m.reference) << ",\n";
    os << "   \"declared\": {\"order\": " << m.declared_order
       << ", \"implicit_solves\": " << m.declared_implicit_solves
       << ", \"explicit_evals\": " << m.declared_explicit_evals << "},\n";
    os << "   \"pure_explicit\": " << flag(m.pure_explicit) << ",\n";
    os << "   \"explicit\": ";
    write_tableau(os, m.explicit_tableau);
    os << ",\n   \"implicit\": ";
    write_tableau(os, m.implicit_tableau);
    if (m.declared_properties) {
      const auto& p = *m.declared_properties;
      auto triple = [](const std::array<int, 3>& a) {
        return "[" + std::to_string(a[0]) + ", " + std::to_string(a[1]) + ", " + std::to_string(a[2]) + "]";
      };
      os << ",\n   \"properties\": {\"order\": " << triple(p.order)
         << ", \"stage_order\": " << triple(p.stage_order) << ", \"a_stable\": " << flag(p.a_stable)
         << ", \"l_stable\": " << flag(p.l_stable) << ", \"b_stable\": " << flag(p.b_stable)
         << ", \"stiffly_accurate_implicit\": " << flag(p.stiffly_accurate_implicit)
         << ", \"stiffly_accurate_explicit\": " << flag(p.stiffly_accurate_explicit)
         << ", \"shared_b\": " << flag(p.shared_b) << ", \"shared_c\": " << flag(p.shared_c)
         << ", \"max_explicit_imag\": " << format_decimal(p.max_explicit_imag) << "}";
    }
    os << "\n  }" << (k + 1 < methods.size() ? "," : "") << "\n";
  }
  os << " ]\n}\n";
  return os.str();
}

}  // namespace arkimex
