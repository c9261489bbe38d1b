#pragma once

#include "travel/core/text_model.hpp"
#include "travel/service/config.hpp"
#include "travel/service/trip_service.hpp"

#include <map>
#include <memory>
#include <string>

namespace travel::service {

struct ApiRequest {
    std::string method; // GET | POST
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

// Routes the trip workflow onto a TripService. Socket-free so the routing
// and error mapping can be exercised directly. Errors come back as
// {"error": {"code": ..., "message": ...}} with a status derived from the code.
class HttpApi {
  public:
    explicit HttpApi(std::shared_ptr<TripService> service);
    ApiResponse handle(const ApiRequest& req) const;

  private:
    std::shared_ptr<TripService> service_;
};

int http_status(ErrorCode code);

// Blocking HTTP listener over HttpApi.
class HttpServer {
  public:
    explicit HttpServer(std::shared_ptr<TripService> service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    // Returns the bound port (an ephemeral one when port == 0). Throws Io.
    int bind(const std::string& host, int port);
    // Serves until stop() is called from another thread.
    void listen();
    void stop();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct HttpReply {
    int status = 0;
    std::string body;
};

// Minimal client for the CLI and tests. Throws Io when the server is unreachable.
HttpReply http_call(const std::string& host, int port, const std::string& method, const std::string& path,
                    const std::string& body = {});

// OpenAI-compatible chat completion endpoint. The API key is read from the
// configured environment variable at construction; a missing key, a
// transport failure or a non-2xx reply raise ModelFailure.
class HttpChatModel final : public TextModel {
  public:
    explicit HttpChatModel(ModelConfig cfg);
    std::string complete(const std::string& prompt) const override;

  private:
    ModelConfig cfg_;
    std::string api_key_;
};

// null for the deterministic adapter; replay reads model.transcript;
// http records to model.transcript when one is set.
std::shared_ptr<const TextModel> make_text_model(const ModelConfig& cfg);

// Wires fixtures, the state directory and the model adapter into a service.
std::shared_ptr<TripService> make_service(const ServiceConfig& cfg);

} // namespace travel::service
