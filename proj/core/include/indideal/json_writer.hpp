#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "indideal/bigint.hpp"

namespace indideal {

// Minimal JSON value with insertion-ordered object keys and exact integer
// literals of any width. Output is byte-deterministic: no whitespace, keys
// in insertion order, integers as bare decimal literals (general-purpose
// JSON libraries would push >64-bit values through double).
class Json {
 public:
  Json() : node_(nullptr) {}  // null

  static Json boolean(bool b) { return Json(Node{b}); }
  static Json number(long long v) { return Json(Node{Number{std::to_string(v)}}); }
  static Json number(std::size_t v) { return Json(Node{Number{std::to_string(v)}}); }
  static Json number(const BigInt& v) { return Json(Node{Number{v.str()}}); }
  static Json string(std::string s) { return Json(Node{std::move(s)}); }
  static Json array() { return Json(Node{Array{}}); }
  static Json object() { return Json(Node{Object{}}); }

  Json& push_back(Json v) {
    std::get<Array>(*node_).push_back(std::move(v));
    return *this;
  }
  Json& set(std::string key, Json v) {
    std::get<Object>(*node_).emplace_back(std::move(key), std::move(v));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  struct Number {
    std::string literal;
  };
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;
  using Node = std::variant<bool, Number, std::string, Array, Object>;

  explicit Json(Node n) : node_(std::make_shared<Node>(std::move(n))) {}

  static void escape(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out) const {
    if (!node_) {
      out += "null";
      return;
    }
    if (auto* b = std::get_if<bool>(node_.get())) {
      out += *b ? "true" : "false";
    } else if (auto* n = std::get_if<Number>(node_.get())) {
      out += n->literal;
    } else if (auto* s = std::get_if<std::string>(node_.get())) {
      escape(*s, out);
    } else if (auto* a = std::get_if<Array>(node_.get())) {
      out += '[';
      for (std::size_t i = 0; i < a->size(); ++i) {
        if (i) out += ',';
        (*a)[i].write(out);
      }
      out += ']';
    } else if (auto* o = std::get_if<Object>(node_.get())) {
      out += '{';
      for (std::size_t i = 0; i < o->size(); ++i) {
        if (i) out += ',';
        escape((*o)[i].first, out);
        out += ':';
        (*o)[i].second.write(out);
      }
      out += '}';
    }
  }

  std::shared_ptr<Node> node_;
};

}  // namespace indideal
