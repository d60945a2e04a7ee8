#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cdent {

// Shortest-free, locale-independent rendering with 17 significant digits,
// enough to round-trip any binary64 value exactly.
std::string format_double(double value);

// Streaming JSON emitter with deterministic layout: two-space indentation,
// keys in call order, numbers through format_double. Arrays of scalars are
// kept on one line.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::size_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  // [re, im]
  JsonWriter& value(std::complex<double> v);
  JsonWriter& value(const std::vector<double>& v);

  // Ends the document with a newline.
  void finish();

 private:
  struct Frame {
    bool is_object;
    bool empty = true;
    bool inline_scalars = true;
  };

  void before_value(bool container);
  void newline_indent(std::size_t depth);
  void write_string(std::string_view s);

  std::ostream& out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

}  // namespace cdent
