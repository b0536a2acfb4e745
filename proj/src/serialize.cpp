#include "swd/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace swd {

namespace sc = simple_class;

namespace {

std::int64_t parse_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw DomainError("malformed integer '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("JSON object lacks field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw DomainError("expected a rational as an integer or string, got " + v.dump());
}

std::string key_of(std::int64_t a, std::int64_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}

template <class V, class Conv>
Grid<V> grid_from_entries(const std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Json>>& entries,
                          V fill, Conv conv) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [ab, _] : entries) {
    lo = std::min({lo, ab.first, ab.second});
    hi = std::max({hi, ab.first, ab.second});
  }
  const Window win{lo, hi};
  const auto side = static_cast<std::size_t>(win.size());
  if (entries.size() != side * side) {
    throw DomainError("family keys do not cover the square window [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "]^2");
  }
  Grid<V> g(win, win, std::move(fill));
  for (const auto& [ab, value] : entries) g.at(ab.first, ab.second) = conv(value);
  return g;
}

template <class G>
Json group_value_json(const G& x) {
  if constexpr (std::is_same_v<G, QPower>) {
    return to_json(x);
  } else {
    return x.to_string();
  }
}

Json series2_json(const TruncSeries2& c) {
  Json rows = Json::array();
  for (int i = 0; i <= c.order(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= c.order(); ++j) row.push_back(c.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json window_json(Window w) { return Json::array({w.lo, w.hi}); }

struct CocycleOutput {
  template <class G>
  Json operator()(const WindowFamily<G>& w) const {
    const CSolution<G> sol = solve_c(w);
    Json c = Json::object();
    const Window win = w.window();
    for (std::int64_t a = win.lo; a <= win.hi; ++a)
      for (std::int64_t b = win.lo; b <= win.hi; ++b)
        c[key_of(a, b)] = group_value_json(sol.c.at(a, b));
    return Json{{"schema", kSchemaVersion}, {"N", w.N}, {"group", GroupOps<G>::name},
                {"window", window_json(win)}, {"c", std::move(c)},
                {"verified", verify_c(w, sol)}};
  }
  Json operator()(const SeriesFamily& s) const {
    const SeriesSolution sol = solve_c_series(s);
    Json c = Json::object();
    const Window core = sol.c.rows();
    for (std::int64_t a = core.lo; a <= core.hi; ++a)
      for (std::int64_t b = core.lo; b <= core.hi; ++b) c[key_of(a, b)] = series2_json(sol.c.at(a, b));
    return Json{{"schema", kSchemaVersion}, {"N", s.N}, {"group", "series"},
                {"order", s.K}, {"window", window_json(s.window())},
                {"c_window", window_json(core)}, {"c", std::move(c)},
                {"verified", verify_c_series(s, sol)}};
  }
};

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(QPower x) { return Json{{"sign", x.sign()}, {"exp2", x.exp2()}}; }

QPower qpower_from_json(const Json& j) {
  const std::int64_t sign = require_int(j, "sign");
  if (sign != 1 && sign != -1) throw DomainError("QPower sign must be +1 or -1");
  return QPower(static_cast<int>(sign), HalfInt::from_twice(require_int(j, "exp2")));
}

Json to_json(const SimpleClassB& c) {
  struct Visitor {
    Json operator()(const sc::Zero&) const { return Json{{"tag", "Zero"}}; }
    Json operator()(const sc::Unit&) const { return Json{{"tag", "Unit"}}; }
    Json operator()(const sc::Fund& f) const {
      return Json{{"tag", "Fund"}, {"i", f.i}, {"x", to_json(f.x)}};
    }
    Json operator()(const sc::HeadNN& h) const {
      return Json{{"tag", "HeadNN"}, {"x1", to_json(h.x1)}, {"x2", to_json(h.x2)}};
    }
  };
  return std::visit(Visitor{}, c);
}

SimpleClassB simple_class_from_json(const Json& j) {
  const Json& tag = require(j, "tag");
  if (!tag.is_string()) throw DomainError("simple class tag must be a string");
  const std::string t = tag.get<std::string>();
  if (t == "Zero") return sc::Zero{};
  if (t == "Unit") return sc::Unit{};
  if (t == "Fund") {
    return sc::Fund{static_cast<int>(require_int(j, "i")), qpower_from_json(require(j, "x"))};
  }
  if (t == "HeadNN") {
    return sc::HeadNN{qpower_from_json(require(j, "x1")), qpower_from_json(require(j, "x2"))};
  }
  throw DomainError("unknown simple class tag '" + t + "'");
}

Json to_json(const Segment& s) { return Json::array({s.a(), s.b()}); }

Json to_json(const KRelation& r) {
  Json out = Json::array();
  for (const KTerm& t : r.terms) {
    Json word = Json::array();
    for (const Segment& s : t.word) word.push_back(to_json(s));
    out.push_back(Json{{"coef_sign", t.coef_sign}, {"q_exp", t.q_exp}, {"word", std::move(word)}});
  }
  return out;
}

Json to_json(const DenominatorRoots& r) {
  Json out = Json::array();
  for (QPower x : r.roots()) out.push_back(to_json(x));
  return out;
}

Segment parse_segment(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  const std::string what = "segment '" + std::string(text) + "'";
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
      throw DomainError("malformed " + what + ": expected (a,b)");
    }
    return Segment(parse_int(s.substr(0, comma), what), parse_int(s.substr(comma + 1), what));
  }
  if (const auto dots = s.find(".."); dots != std::string_view::npos) {
    return Segment(parse_int(s.substr(0, dots), what), parse_int(s.substr(dots + 2), what));
  }
  throw DomainError("malformed " + what + ": expected (a,b) or a..b");
}

Multisegment parse_multisegment(std::string_view text) {
  Multisegment out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    out.push_back(parse_segment(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

CocycleInput cocycle_input_from_json(const Json& j, int N, bool series, int order) {
  const Json& body = (j.is_object() && j.contains("h")) ? j.at("h") : j;
  if (!body.is_object() || body.empty()) throw DomainError("family must be a non-empty object");

  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, Json>> entries;
  bool any_object = false;
  bool any_array = false;
  for (const auto& [key, value] : body.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw DomainError("family key '" + key + "' is not of the form a,b");
    const std::string what = "family key '" + key + "'";
    const std::int64_t a = parse_int(std::string_view(key).substr(0, comma), what);
    const std::int64_t b = parse_int(std::string_view(key).substr(comma + 1), what);
    any_object = any_object || value.is_object();
    any_array = any_array || value.is_array();
    entries.push_back({{a, b}, value});
  }

  if (series) {
    if (order < 0) throw DomainError("series order must be non-negative");
    auto conv = [order](const Json& v) {
      if (!v.is_array()) throw DomainError("series entries must be coefficient arrays");
      std::vector<Rational> coeffs;
      for (const Json& c : v) coeffs.push_back(rational_from_json(c));
      return TruncSeries1(order, std::move(coeffs));
    };
    return SeriesFamily(N, order, grid_from_entries(entries, TruncSeries1(order), conv));
  }
  if (any_array) throw DomainError("coefficient arrays need --series");
  if (any_object) {
    auto conv = [](const Json& v) { return qpower_from_json(v); };
    return WindowFamily<QPower>(N, grid_from_entries(entries, QPower::one(), conv));
  }
  return WindowFamily<Rational>(N, grid_from_entries(entries, Rational(1), rational_from_json));
}

Json cocycle_output_json(const CocycleInput& input) {
  return std::visit(CocycleOutput{}, input);
}

}  // namespace swd
