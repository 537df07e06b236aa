#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcsf/individual.hpp"
#include "dcsf/pareto.hpp"

namespace dcsf {

// Spacing: standard deviation of nearest-neighbour city-block distances on
// the normalized front. 0 for fronts with fewer than two members. Without a
// frame the front's own min/max normalization is used.
double spacing_metric(std::span<const ObjectiveTriple> front,
                      const std::optional<ObjectiveFrame>& frame = std::nullopt);

// Maximum spread: diagonal of the front's bounding box in normalized space.
double max_spread_metric(std::span<const ObjectiveTriple> front,
                         const std::optional<ObjectiveFrame>& frame = std::nullopt);

enum class AdvisorMode { Llm, Fallback, Static };
enum class UpdateSource { Llm, Fallback, Static };

std::string_view to_string(AdvisorMode mode);
std::string_view to_string(UpdateSource source);
std::optional<AdvisorMode> parse_advisor_mode(std::string_view text);

inline constexpr double kCrossoverMin = 0.1;
inline constexpr double kCrossoverMax = 0.95;
inline constexpr double kMutationMin = 0.01;
inline constexpr double kMutationMax = 0.9;
inline constexpr std::size_t kAdvisorWindow = 5;

struct MetricSample {
  double sp = 0.0;
  double m3 = 0.0;
};

struct AdvisorInput {
  std::size_t generation = 0;
  double p_c = 0.8;
  double p_m = 0.4;
  double sp = 0.0;
  double m3 = 0.0;
  std::array<double, 3> front_min{};  // f1, f2, f3 over the current front
  std::array<double, 3> front_max{};
  std::vector<MetricSample> window;  // previous generations, oldest first

  void validate() const;
};

struct ParamUpdate {
  double p_c = 0.8;
  double p_m = 0.4;
  UpdateSource source = UpdateSource::Static;
};

ParamUpdate clamp_update(double p_c, double p_m, UpdateSource source);

// Deterministic adjustment from the SP / M3* trend against the window mean.
ParamUpdate fallback_rule(const AdvisorInput& input);

// The prompt template text shipped with the library.
std::string_view prompt_template();
std::string render_prompt(const AdvisorInput& input);

// Chat-completions request body.
std::string build_request(const AdvisorInput& input, std::string_view model);

// Extracts {p_c, p_m} from a chat-completions response body. Returns nullopt
// if the body, the assistant message, or the embedded object is malformed.
// Values are returned unclamped.
std::optional<std::pair<double, double>> parse_completion(std::string_view body);

// First balanced {...} object in free text, if any.
std::optional<std::string> first_json_object(std::string_view text);

// Sends one request body and returns the raw response body.
class LlmTransport {
 public:
  virtual ~LlmTransport() = default;
  virtual std::optional<std::string> post(const std::string& body) = 0;
};

struct LlmSettings {
  std::string model = "gpt-4o-mini";
  std::chrono::milliseconds timeout{20000};  // total budget per advise call
  int retries = 1;
};

// OpenAI-compatible endpoint over HTTP(S). `url` is the full endpoint,
// e.g. https://host/v1/chat/completions.
class HttpTransport final : public LlmTransport {
 public:
  HttpTransport(std::string url, std::string api_key, LlmSettings settings);
  std::optional<std::string> post(const std::string& body) override;

 private:
  std::string scheme_host_port_;
  std::string path_;
  std::string api_key_;
  LlmSettings settings_;
};

// Reads DCSF_LLM_URL and DCSF_LLM_KEY. Returns nullptr when no URL is set.
std::unique_ptr<LlmTransport> transport_from_environment(const LlmSettings& settings);

/// Turns population diagnostics into new (p_c, p_m). advise() never throws
/// and always returns in-bounds values; in Llm mode any transport or parse
/// failure degrades to the fallback rule.
class Advisor {
 public:
  explicit Advisor(AdvisorMode mode, std::unique_ptr<LlmTransport> transport = nullptr,
                   LlmSettings settings = {});

  ParamUpdate advise(const AdvisorInput& input) noexcept;
  AdvisorMode mode() const { return mode_; }
  bool has_transport() const { return transport_ != nullptr; }

  std::size_t llm_failures() const { return llm_failures_; }

 private:
  AdvisorMode mode_;
  std::unique_ptr<LlmTransport> transport_;
  LlmSettings settings_;
  std::size_t llm_failures_ = 0;
};

}  // namespace dcsf
