#include "dcsf/advisor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <regex>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

namespace dcsf {

namespace {

std::vector<std::array<double, 3>> normalized(std::span<const ObjectiveTriple> front,
                                              const std::optional<ObjectiveFrame>& frame) {
  const ObjectiveFrame f = frame ? *frame : ObjectiveFrame::from_points(front);
  std::vector<std::array<double, 3>> out;
  out.reserve(front.size());
  for (const auto& t : front) out.push_back(f.normalize(t));
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double window_mean(const std::vector<MetricSample>& window, double MetricSample::*field) {
  double s = 0.0;
  for (const auto& m : window) s += m.*field;
  return s / static_cast<double>(window.size());
}

std::string trend(double value, const std::vector<MetricSample>& window,
                  double MetricSample::*field) {
  if (window.empty()) return "n/a";
  const double mean = window_mean(window, field);
  const double tol = 0.02 * std::abs(mean);
  if (value > mean + tol) return "↑";
  if (value < mean - tol) return "↓";
  return "→";
}

void replace_all(std::string& text, const std::string& key, const std::string& value) {
  const std::string token = "{{" + key + "}}";
  for (std::size_t pos = text.find(token); pos != std::string::npos;
       pos = text.find(token, pos + value.size())) {
    text.replace(pos, token.size(), value);
  }
}

}  // namespace

double spacing_metric(std::span<const ObjectiveTriple> front,
                      const std::optional<ObjectiveFrame>& frame) {
  const std::size_t n = front.size();
  if (n < 2) return 0.0;
  const auto pts = normalized(front, frame);
  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dist = std::abs(pts[i][0] - pts[j][0]) + std::abs(pts[i][1] - pts[j][1]) +
                          std::abs(pts[i][2] - pts[j][2]);
      d[i] = std::min(d[i], dist);
    }
  }
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (mean - v) * (mean - v);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double max_spread_metric(std::span<const ObjectiveTriple> front,
                         const std::optional<ObjectiveFrame>& frame) {
  if (front.empty()) return 0.0;
  const auto pts = normalized(front, frame);
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    double lo = pts[0][k];
    double hi = pts[0][k];
    for (const auto& p : pts) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    total += (hi - lo) * (hi - lo);
  }
  return std::sqrt(total);
}

std::string_view to_string(AdvisorMode mode) {
  switch (mode) {
    case AdvisorMode::Llm: return "llm";
    case AdvisorMode::Fallback: return "fallback";
    case AdvisorMode::Static: return "static";
  }
  return "unknown";
}

std::string_view to_string(UpdateSource source) {
  switch (source) {
    case UpdateSource::Llm: return "llm";
    case UpdateSource::Fallback: return "fallback";
    case UpdateSource::Static: return "static";
  }
  return "unknown";
}

std::optional<AdvisorMode> parse_advisor_mode(std::string_view text) {
  if (text == "llm") return AdvisorMode::Llm;
  if (text == "fallback") return AdvisorMode::Fallback;
  if (text == "static") return AdvisorMode::Static;
  return std::nullopt;
}

void AdvisorInput::validate() const {
  if (!std::isfinite(p_c) || !std::isfinite(p_m)) {
    throw std::invalid_argument("p_c and p_m must be finite");
  }
  if (!std::isfinite(sp) || sp < 0.0 || !std::isfinite(m3) || m3 < 0.0) {
    throw std::invalid_argument("SP and M3* must be finite and non-negative");
  }
  if (window.size() > kAdvisorWindow) {
    throw std::invalid_argument("metric window holds at most 5 samples");
  }
  for (const auto& s : window) {
    if (!std::isfinite(s.sp) || s.sp < 0.0 || !std::isfinite(s.m3) || s.m3 < 0.0) {
      throw std::invalid_argument("window samples must be finite and non-negative");
    }
  }
}

ParamUpdate clamp_update(double p_c, double p_m, UpdateSource source) {
  ParamUpdate u;
  u.p_c = std::isfinite(p_c) ? std::clamp(p_c, kCrossoverMin, kCrossoverMax) : 0.8;
  u.p_m = std::isfinite(p_m) ? std::clamp(p_m, kMutationMin, kMutationMax) : 0.4;
  u.source = source;
  return u;
}

ParamUpdate fallback_rule(const AdvisorInput& input) {
  double p_c = input.p_c;
  double p_m = input.p_m;
  if (!input.window.empty()) {
    const double mean_sp = window_mean(input.window, &MetricSample::sp);
    const double mean_m3 = window_mean(input.window, &MetricSample::m3);
    const bool sp_worse = input.sp > mean_sp && input.sp >= 1.1 * mean_sp;
    double m3_change = 0.0;
    if (mean_m3 > 0.0) {
      m3_change = std::abs(input.m3 - mean_m3) / mean_m3;
    } else if (input.m3 != 0.0) {
      m3_change = std::numeric_limits<double>::infinity();
    }
    if (sp_worse && m3_change < 0.05) {
      p_m *= 1.2;
      p_c *= 0.95;
    } else if (input.sp < mean_sp && input.m3 > mean_m3) {
      p_m *= 0.85;
      p_c *= 1.05;
    }
  }
  return clamp_update(p_c, p_m, UpdateSource::Fallback);
}

std::string render_prompt(const AdvisorInput& input) {
  std::string text(prompt_template());
  replace_all(text, "generation", std::to_string(input.generation));
  replace_all(text, "p_c", fmt(input.p_c));
  replace_all(text, "p_m", fmt(input.p_m));
  replace_all(text, "sp", fmt(input.sp));
  replace_all(text, "m3", fmt(input.m3));
  replace_all(text, "sp_trend", trend(input.sp, input.window, &MetricSample::sp));
  replace_all(text, "m3_trend", trend(input.m3, input.window, &MetricSample::m3));
  std::string history;
  for (const auto& s : input.window) {
    if (!history.empty()) history += "; ";
    history += "(" + fmt(s.sp) + ", " + fmt(s.m3) + ")";
  }
  replace_all(text, "history", history.empty() ? "none" : history);
  const char* names[3] = {"f1", "f2", "f3"};
  for (int k = 0; k < 3; ++k) {
    replace_all(text, std::string(names[k]) + "_min", fmt(input.front_min[k]));
    replace_all(text, std::string(names[k]) + "_max", fmt(input.front_max[k]));
  }
  replace_all(text, "p_c_min", fmt(kCrossoverMin));
  replace_all(text, "p_c_max", fmt(kCrossoverMax));
  replace_all(text, "p_m_min", fmt(kMutationMin));
  replace_all(text, "p_m_max", fmt(kMutationMax));
  return text;
}

std::string build_request(const AdvisorInput& input, std::string_view model) {
  nlohmann::json body = {
      {"model", std::string(model)},
      {"temperature", 0},
      {"messages",
       nlohmann::json::array(
           {{{"role", "system"},
             {"content",
              "You tune evolutionary algorithm parameters. Reply with only a JSON object."}},
            {{"role", "user"}, {"content", render_prompt(input)}}})}};
  return body.dump();
}

std::optional<std::string> first_json_object(std::string_view text) {
  for (std::size_t start = text.find('{'); start != std::string_view::npos;
       start = text.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        if (--depth == 0) {
          std::string candidate(text.substr(start, i - start + 1));
          if (nlohmann::json::accept(candidate)) return candidate;
          break;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<double, double>> parse_completion(std::string_view body) {
  const auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  const auto choices = doc.find("choices");
  if (choices == doc.end() || !choices->is_array() || choices->empty()) return std::nullopt;
  const auto& first = (*choices)[0];
  if (!first.is_object()) return std::nullopt;
  const auto message = first.find("message");
  if (message == first.end() || !message->is_object()) return std::nullopt;
  const auto content = message->find("content");
  if (content == message->end() || !content->is_string()) return std::nullopt;
  const auto object = first_json_object(content->get<std::string>());
  if (!object) return std::nullopt;
  const auto reply = nlohmann::json::parse(*object, nullptr, false);
  if (reply.is_discarded() || !reply.is_object()) return std::nullopt;
  const auto pc = reply.find("p_c");
  const auto pm = reply.find("p_m");
  if (pc == reply.end() || pm == reply.end() || !pc->is_number() || !pm->is_number()) {
    return std::nullopt;
  }
  const double p_c = pc->get<double>();
  const double p_m = pm->get<double>();
  if (!std::isfinite(p_c) || !std::isfinite(p_m)) return std::nullopt;
  return std::make_pair(p_c, p_m);
}

HttpTransport::HttpTransport(std::string url, std::string api_key, LlmSettings settings)
    : api_key_(std::move(api_key)), settings_(std::move(settings)) {
  static const std::regex pattern(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, pattern)) {
    throw std::invalid_argument("LLM endpoint must be an http(s) URL: " + url);
  }
  scheme_host_port_ = m[1].str();
  path_ = m[2].matched ? m[2].str() : "/v1/chat/completions";
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme_host_port_.rfind("https", 0) == 0) {
    throw std::invalid_argument("built without TLS support; https endpoints are unavailable");
  }
#endif
}

std::optional<std::string> HttpTransport::post(const std::string& body) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + settings_.timeout;
  const int attempts = 1 + std::max(0, settings_.retries);
  for (int a = 0; a < attempts; ++a) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now());
    if (left.count() <= 0) break;
    const auto slice = left / (attempts - a);
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(slice);
    client.set_read_timeout(slice);
    client.set_write_timeout(slice);
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);
    auto res = client.Post(path_, headers, body, "application/json");
    if (res && res->status == 200) return res->body;
  }
  return std::nullopt;
}

std::unique_ptr<LlmTransport> transport_from_environment(const LlmSettings& settings) {
  const char* url = std::getenv("DCSF_LLM_URL");
  if (url == nullptr || *url == '\0') return nullptr;
  const char* key = std::getenv("DCSF_LLM_KEY");
  return std::make_unique<HttpTransport>(url, key ? key : "", settings);
}

Advisor::Advisor(AdvisorMode mode, std::unique_ptr<LlmTransport> transport, LlmSettings settings)
    : mode_(mode), transport_(std::move(transport)), settings_(std::move(settings)) {}

ParamUpdate Advisor::advise(const AdvisorInput& input) noexcept {
  try {
    input.validate();
  } catch (...) {
    return clamp_update(input.p_c, input.p_m,
                        mode_ == AdvisorMode::Static ? UpdateSource::Static
                                                     : UpdateSource::Fallback);
  }
  if (mode_ == AdvisorMode::Static) {
    return clamp_update(input.p_c, input.p_m, UpdateSource::Static);
  }
  if (mode_ == AdvisorMode::Llm) {
    if (transport_) {
      try {
        const auto body = transport_->post(build_request(input, settings_.model));
        if (body) {
          if (const auto values = parse_completion(*body)) {
            return clamp_update(values->first, values->second, UpdateSource::Llm);
          }
        }
      } catch (...) {
      }
    }
    ++llm_failures_;
  }
  return fallback_rule(input);
}

}  // namespace dcsf
