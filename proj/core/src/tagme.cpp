#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "wikirank/tagme.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wikirank/errors.hpp"
#include "wikirank/io.hpp"
#include "wikirank/text.hpp"

namespace wikirank {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // leading path to prepend before /tag, may be empty
};

Endpoint split_endpoint(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw ConfigError("endpoint '" + url + "' has no scheme");
  }
  const std::size_t slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) {
    return Endpoint{url, ""};
  }
  std::string path = url.substr(slash);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return Endpoint{url.substr(0, slash), std::move(path)};
}

double parse_rho(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return std::stod(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("tagme response: rho '" + v.get<std::string>() +
                       "' is not numeric");
    }
  }
  throw ParseError("tagme response: rho has unexpected type");
}

}  // namespace

std::vector<ConceptAnnotation> parse_tagme_response(
    const std::string& body, double confidence_threshold,
    std::size_t offset_shift) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tagme response is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("annotations") ||
      !j["annotations"].is_array()) {
    throw ParseError("tagme response lacks an annotations array");
  }

  std::vector<ConceptAnnotation> out;
  for (const json& spot : j["annotations"]) {
    try {
      const double rho = parse_rho(spot.at("rho"));
      if (rho < confidence_threshold) continue;
      ConceptAnnotation a;
      a.start = spot.at("start").get<std::size_t>() + offset_shift;
      a.end = spot.at("end").get<std::size_t>() + offset_shift;
      a.title = spot.at("title").get<std::string>();
      a.confidence = rho;
      out.push_back(std::move(a));
    } catch (const json::exception& e) {
      throw ParseError(std::string("tagme response spot is malformed: ") +
                       e.what());
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> chunk_text(
    const std::string& text, std::size_t max_chars) {
  std::vector<std::pair<std::string, std::size_t>> chunks;
  if (max_chars == 0) max_chars = 1;
  const Utf8Index index(text);
  const std::size_t n = index.size();

  std::size_t pos = 0;
  while (pos < n) {
    if (n - pos <= max_chars) {
      chunks.emplace_back(std::string(index.slice(pos, n)), pos);
      break;
    }
    const std::size_t window_end = pos + max_chars;
    // Prefer cutting right after sentence punctuation followed by
    // whitespace; fall back to any whitespace, then to a hard cut.
    std::size_t cut = 0;
    for (std::size_t i = window_end; i > pos + 1; --i) {
      const std::string_view prev = index.slice(i - 1, i);
      const std::string_view here = index.slice(i, i + 1);
      if (here.size() == 1 && is_ascii_space(here[0]) && prev.size() == 1 &&
          (prev[0] == '.' || prev[0] == '!' || prev[0] == '?')) {
        cut = i;
        break;
      }
    }
    if (cut == 0) {
      for (std::size_t i = window_end; i > pos + 1; --i) {
        const std::string_view here = index.slice(i - 1, i);
        if (here.size() == 1 && is_ascii_space(here[0])) {
          cut = i;
          break;
        }
      }
    }
    if (cut == 0) cut = window_end;
    chunks.emplace_back(std::string(index.slice(pos, cut)), pos);
    pos = cut;
  }
  return chunks;
}

struct TagmeClient::Impl {
  AnnotatorConfig config;
  Endpoint endpoint;

  explicit Impl(AnnotatorConfig cfg)
      : config(std::move(cfg)), endpoint(split_endpoint(config.tagme_endpoint)) {}

  std::filesystem::path cache_path(const std::string& key) const {
    return std::filesystem::path(config.cache_dir) / (key + ".json");
  }

  std::string fetch(const std::string& chunk) const {
    const std::string key = cache_key(config.tagme_endpoint, chunk);
    if (!config.cache_dir.empty()) {
      const auto path = cache_path(key);
      std::error_code ec;
      if (std::filesystem::exists(path, ec)) {
        return read_file(path);
      }
    }

    httplib::Client client(endpoint.base);
    client.set_connection_timeout(30, 0);
    client.set_read_timeout(30, 0);

    httplib::Params params{{"text", chunk},
                           {"lang", "en"},
                           {"gcube-token", config.tagme_token}};
    const std::string path = endpoint.path + "/tag";

    std::string last_transport_error;
    int last_status = 0;
    std::string last_body;
    const int attempts = config.retry_limit + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
      if (attempt > 0) {
        const auto delay = std::chrono::milliseconds(
            config.retry_initial_delay_ms) * (1 << (attempt - 1));
        std::this_thread::sleep_for(delay);
      }
      httplib::Result res = client.Post(path, params);
      if (!res) {
        last_transport_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 200 && res->status < 300) {
        if (!config.cache_dir.empty()) {
          atomic_write_file(cache_path(key), res->body);
        }
        return res->body;
      }
      // 5xx and 429 are transient; other statuses fail immediately.
      if (res->status >= 500 || res->status == 429) {
        last_status = res->status;
        last_body = res->body;
        last_transport_error.clear();
        continue;
      }
      throw ServiceError(res->status, res->body);
    }
    if (last_status != 0) {
      throw ServiceError(last_status, last_body);
    }
    throw TransportError("tagme request to " + endpoint.base + path +
                         " failed after " + std::to_string(attempts) +
                         " attempts: " + last_transport_error);
  }
};

TagmeClient::TagmeClient(AnnotatorConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

TagmeClient::~TagmeClient() = default;

std::vector<ConceptAnnotation> TagmeClient::annotate(
    const std::string& text) const {
  if (impl_->config.tagme_token.empty()) {
    throw ConfigError(
        "tagme mode needs an access token (TAGME_TOKEN or --tagme-token)");
  }
  std::vector<ConceptAnnotation> out;
  for (const auto& [chunk, offset] :
       chunk_text(text, impl_->config.max_text_chars)) {
    const std::string body = impl_->fetch(chunk);
    auto anns = parse_tagme_response(
        body, impl_->config.confidence_threshold, offset);
    out.insert(out.end(), anns.begin(), anns.end());
  }
  return out;
}

std::string TagmeClient::cache_key(const std::string& endpoint,
                                   const std::string& text) {
  std::string data = endpoint;
  data.push_back('\0');
  data += text;

  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace wikirank
