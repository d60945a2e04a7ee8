#include "cdent/json_writer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "cdent/errors.hpp"

namespace cdent {

std::string format_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot serialize a non-finite number");
  if (value == 0.0) return std::signbit(value) ? "-0.0" : "0.0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  std::string s(buf, res.ptr);
  // Keep a decimal point or exponent so the token always reads back as a float.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void JsonWriter::newline_indent(std::size_t depth) {
  out_ << '\n';
  for (std::size_t i = 0; i < depth; ++i) out_ << "  ";
}

void JsonWriter::before_value(bool container) {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& top = stack_.back();
  if (top.is_object) throw DomainError("JsonWriter: value inside object needs a key");
  if (container) top.inline_scalars = false;
  if (!top.empty) out_ << (top.inline_scalars ? ", " : ",");
  if (!top.inline_scalars) newline_indent(stack_.size());
  top.empty = false;
}

void JsonWriter::write_string(std::string_view s) {
  out_ << '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out_ << "\\\"";
        break;
      case '\\':
        out_ << "\\\\";
        break;
      case '\n':
        out_ << "\\n";
        break;
      case '\t':
        out_ << "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ << buf;
        } else {
          out_ << c;
        }
    }
  }
  out_ << '"';
}

JsonWriter& JsonWriter::begin_object() {
  before_value(true);
  out_ << '{';
  stack_.push_back({true});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  if (stack_.empty() || !stack_.back().is_object) throw DomainError("JsonWriter: unbalanced object");
  const bool empty = stack_.back().empty;
  stack_.pop_back();
  if (!empty) newline_indent(stack_.size());
  out_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value(true);
  out_ << '[';
  stack_.push_back({false});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  if (stack_.empty() || stack_.back().is_object) throw DomainError("JsonWriter: unbalanced array");
  const Frame top = stack_.back();
  stack_.pop_back();
  if (!top.empty && !top.inline_scalars) newline_indent(stack_.size());
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  if (stack_.empty() || !stack_.back().is_object) throw DomainError("JsonWriter: key outside object");
  Frame& top = stack_.back();
  if (!top.empty) out_ << ',';
  newline_indent(stack_.size());
  top.empty = false;
  write_string(name);
  out_ << ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value(false);
  out_ << format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value(false);
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(std::size_t v) {
  before_value(false);
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_value(false);
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_value(false);
  write_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::complex<double> v) {
  begin_array();
  value(v.real());
  value(v.imag());
  return end_array();
}

JsonWriter& JsonWriter::value(const std::vector<double>& v) {
  begin_array();
  for (double x : v) value(x);
  return end_array();
}

void JsonWriter::finish() {
  if (!stack_.empty()) throw DomainError("JsonWriter: unterminated document");
  out_ << '\n';
}

}  // namespace cdent
