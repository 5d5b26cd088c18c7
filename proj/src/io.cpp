#include "secrecy/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <utility>
#include <vector>

#include "secrecy/rates.hpp"

namespace secrecy {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

double round_sig(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

namespace {

// Minimal JSON document builder. Exists so every numeric field is
// serialised with exactly the canonical %.12g text — general-purpose JSON
// libraries emit shortest-round-trip forms with up to 17 digits, which
// breaks the documented 12-significant-digit output format.
class Json {
 public:
  static Json number(double v) { return Json(Kind::literal, format_number(v)); }
  static Json integer(long long v) { return Json(Kind::literal, std::to_string(v)); }
  static Json unsigned_integer(unsigned long long v) {
    return Json(Kind::literal, std::to_string(v));
  }
  static Json boolean(bool v) { return Json(Kind::literal, v ? "true" : "false"); }
  static Json string(std::string v) { return Json(Kind::string, std::move(v)); }
  static Json object() { return Json(Kind::object, {}); }
  static Json array() { return Json(Kind::array, {}); }

  Json& set(const std::string& key, Json value) {
    members_.emplace_back(key, std::move(value));
    return *this;
  }
  Json& push(Json value) {
    members_.emplace_back(std::string{}, std::move(value));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out, 0);
    out += '\n';
    return out;
  }

 private:
  enum class Kind { literal, string, object, array };

  Json(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

  static void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (const char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int depth) const {
    switch (kind_) {
      case Kind::literal: out += text_; return;
      case Kind::string: append_escaped(out, text_); return;
      case Kind::object:
      case Kind::array: break;
    }
    const char open = kind_ == Kind::object ? '{' : '[';
    const char close = kind_ == Kind::object ? '}' : ']';
    if (members_.empty()) {
      out += open;
      out += close;
      return;
    }
    const std::string pad((depth + 1) * 2, ' ');
    out += open;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      out += i == 0 ? "\n" : ",\n";
      out += pad;
      if (kind_ == Kind::object) {
        append_escaped(out, members_[i].first);
        out += ": ";
      }
      members_[i].second.write(out, depth + 1);
    }
    out += '\n';
    out.append(depth * 2, ' ');
    out += close;
  }

  Kind kind_;
  std::string text_;
  std::vector<std::pair<std::string, Json>> members_;
};

Json json_channel(const ChannelParams& ch) {
  return Json::object()
      .set("a", Json::number(ch.a))
      .set("ac", Json::number(ch.ac))
      .set("n", Json::number(ch.N));
}

Json json_grid(const GridSpec& grid) {
  return Json::object()
      .set("n_power", Json::integer(grid.n_power))
      .set("n_lambda", Json::integer(grid.n_lambda))
      .set("refine", Json::integer(grid.refine_rounds))
      .set("zoom_factor", Json::number(grid.zoom_factor));
}

Json json_strategy(const Strategy& s) {
  return Json::object()
      .set("p1", Json::number(s.p1))
      .set("p2", Json::number(s.p2))
      .set("lambda1", Json::number(s.lambda1))
      .set("lambda2", Json::number(s.lambda2));
}

Json json_rates(const RatePair& r) {
  return Json::object()
      .set("r1", Json::number(r.r1))
      .set("r2", Json::number(r.r2))
      .set("r1_raw", Json::number(r.r1_raw))
      .set("r2_raw", Json::number(r.r2_raw));
}

Json json_number_list(const std::vector<double>& values) {
  Json list = Json::array();
  for (const double v : values) list.push(Json::number(v));
  return list;
}

// Common report head: the command plus the full config echo.
Json json_head(const RunConfig& config) {
  Json cfg = Json::object();
  cfg.set("channel", json_channel(config.channel));
  cfg.set("p", Json::number(config.P));
  if (!config.p_list.empty()) cfg.set("p_list", json_number_list(config.p_list));
  if (!config.ac_list.empty()) cfg.set("ac_list", json_number_list(config.ac_list));
  cfg.set("grid", json_grid(config.grid));
  cfg.set("format", Json::string(config.format));
  cfg.set("out", Json::string(config.out));
  cfg.set("seed", Json::unsigned_integer(config.seed));
  cfg.set("no_an", Json::boolean(config.no_an));
  cfg.set("frontier", Json::boolean(config.emit_frontier));
  cfg.set("user", Json::integer(config.user));
  cfg.set("draws", Json::integer(config.draws));
  return Json::object()
      .set("command", Json::string(config.command))
      .set("config", std::move(cfg));
}

Json json_mode(double p, const ModeComparison& cmp) {
  return Json::object()
      .set("p", Json::number(p))
      .set("mode", Json::string(to_string(cmp.mode)))
      .set("rate_max_min", Json::number(cmp.rate_max_min))
      .set("rate_time_share", Json::number(cmp.rate_time_share))
      .set("difference", Json::number(cmp.difference));
}

void csv_row(std::string& out, const std::string& key, const std::string& value) {
  out += key;
  out += ',';
  out += value;
  out += '\n';
}

void csv_row(std::string& out, const std::string& key, double value) {
  csv_row(out, key, format_number(value));
}

}  // namespace

void write_region_csv(std::ostream& os, const RegionEstimate& region,
                      bool include_frontier) {
  os << "r1,r2,kind\n";
  if (include_frontier)
    for (const FrontierSample& f : region.frontier)
      os << format_number(f.rates.r1) << ',' << format_number(f.rates.r2)
         << ",frontier\n";
  for (const Eigen::Vector2d& v : region.hull)
    os << format_number(v.x()) << ',' << format_number(v.y()) << ",hull\n";
}

std::string to_json(const RunConfig& config, const MaxMinSolution& sol) {
  Json r = Json::object();
  r.set("r_min_star", Json::number(sol.r_min_star));
  r.set("p_min_star", Json::number(sol.p_min_star));
  r.set("power_limited", Json::boolean(sol.power_limited));
  r.set("lambda_star_interval",
        Json::array()
            .push(Json::number(sol.lambda_star_interval.lo))
            .push(Json::number(sol.lambda_star_interval.hi)));
  r.set("chosen_lambda", Json::number(sol.chosen_lambda));
  r.set("p_star", Json::number(sol.p_star));
  r.set("strategy", json_strategy(sol.strategy()));
  r.set("rates", json_rates(secrecy_rates(config.channel, sol.strategy())));
  return json_head(config).set("result", std::move(r)).dump();
}

std::string to_json(const RunConfig& config, const SingleUserSolution& sol) {
  Json r = Json::object();
  r.set("user", Json::integer(sol.user));
  r.set("r_su_star", Json::number(sol.r_su_star));
  r.set("delta", Json::number(sol.delta));
  r.set("strategy", json_strategy(sol.strategy));
  r.set("rates", json_rates(secrecy_rates(config.channel, sol.strategy)));
  return json_head(config).set("result", std::move(r)).dump();
}

std::string to_json(const RunConfig& config, double critical_power,
                    const std::vector<std::pair<double, ModeComparison>>& modes) {
  Json r = Json::object();
  r.set("critical_power", Json::number(critical_power));
  if (!modes.empty()) {
    Json list = Json::array();
    for (const auto& [p, cmp] : modes) list.push(json_mode(p, cmp));
    r.set("modes", std::move(list));
  }
  return json_head(config).set("result", std::move(r)).dump();
}

std::string to_json(const RunConfig& config, const RegionEstimate& region) {
  Json frontier = Json::array();
  for (const FrontierSample& f : region.frontier)
    frontier.push(Json::object()
                      .set("r1", Json::number(f.rates.r1))
                      .set("r2", Json::number(f.rates.r2))
                      .set("strategy", json_strategy(f.strategy)));
  Json hull = Json::array();
  for (const Eigen::Vector2d& v : region.hull)
    hull.push(Json::array().push(Json::number(v.x())).push(Json::number(v.y())));
  Json r = Json::object();
  r.set("with_artificial_noise", Json::boolean(region.with_artificial_noise));
  r.set("frontier", std::move(frontier));
  r.set("hull", std::move(hull));
  return json_head(config).set("result", std::move(r)).dump();
}

std::string to_json(const RunConfig& config, const VerifyReport& report) {
  Json checks = Json::array();
  for (const VerifyCheck& check : report.checks) {
    Json c = Json::object();
    c.set("name", Json::string(check.name));
    c.set("pass", Json::boolean(check.pass));
    c.set("max_abs_difference", Json::number(check.max_abs_difference));
    c.set("cases", Json::integer(static_cast<long long>(check.cases.size())));
    Json failures = Json::array();
    bool any_failure = false;
    for (const VerifyCase& vc : check.cases) {
      if (vc.pass) continue;
      any_failure = true;
      failures.push(Json::object()
                        .set("channel", json_channel(vc.channel))
                        .set("p", Json::number(vc.power.P))
                        .set("closed_form", Json::number(vc.closed_form))
                        .set("oracle", Json::number(vc.oracle))
                        .set("difference", Json::number(vc.difference))
                        .set("resolution_bound", Json::number(vc.resolution_bound)));
    }
    if (any_failure) c.set("failures", std::move(failures));
    checks.push(std::move(c));
  }
  Json r = Json::object();
  r.set("checks", std::move(checks));
  r.set("pass", Json::boolean(report.pass));
  return json_head(config).set("result", std::move(r)).dump();
}

std::string to_csv(const RunConfig&, const MaxMinSolution& sol) {
  std::string out = "key,value\n";
  csv_row(out, "r_min_star", sol.r_min_star);
  csv_row(out, "p_min_star", sol.p_min_star);
  csv_row(out, "power_limited", sol.power_limited ? "true" : "false");
  csv_row(out, "lambda_star_lo", sol.lambda_star_interval.lo);
  csv_row(out, "lambda_star_hi", sol.lambda_star_interval.hi);
  csv_row(out, "chosen_lambda", sol.chosen_lambda);
  csv_row(out, "p_star", sol.p_star);
  return out;
}

std::string to_csv(const RunConfig&, const SingleUserSolution& sol) {
  std::string out = "key,value\n";
  csv_row(out, "user", std::to_string(sol.user));
  csv_row(out, "r_su_star", sol.r_su_star);
  csv_row(out, "delta", sol.delta);
  csv_row(out, "p1", sol.strategy.p1);
  csv_row(out, "p2", sol.strategy.p2);
  csv_row(out, "lambda1", sol.strategy.lambda1);
  csv_row(out, "lambda2", sol.strategy.lambda2);
  return out;
}

std::string to_csv(const RunConfig&, double critical_power,
                   const std::vector<std::pair<double, ModeComparison>>& modes) {
  std::string out = "key,value\n";
  csv_row(out, "critical_power", critical_power);
  for (const auto& [p, cmp] : modes) {
    csv_row(out, "mode_at_" + format_number(p), to_string(cmp.mode));
    csv_row(out, "difference_at_" + format_number(p), cmp.difference);
  }
  return out;
}

std::string to_csv(const RunConfig&, const VerifyReport& report) {
  std::string out = "check,pass,max_abs_difference\n";
  for (const VerifyCheck& check : report.checks) {
    out += check.name;
    out += check.pass ? ",true," : ",false,";
    out += format_number(check.max_abs_difference);
    out += '\n';
  }
  out += report.pass ? "overall,true,0\n" : "overall,false,0\n";
  return out;
}

}  // namespace secrecy
