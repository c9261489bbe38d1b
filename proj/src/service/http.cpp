// The only translation unit that includes httplib.
#include "travel/service/http.hpp"

#include "travel/domain/json_io.hpp"
#include "travel/recommend/json_io.hpp"
#include "travel/toolkit/catalog.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <regex>

namespace travel::service {
namespace {

using nlohmann::json;

ApiResponse json_response(int status, const json& body) {
    return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse error_response(ErrorCode code, const std::string& message) {
    return json_response(http_status(code), json{{"error", {{"code", to_string(code)}, {"message", message}}}});
}

json parse_body(const std::string& body) {
    if (body.empty()) return json::object();
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("request body is not JSON: ") + e.what());
    }
}

Money money_field(const json& body, const char* key) {
    if (!body.is_object() || !body.contains(key)) throw Error(ErrorCode::MissingField, key);
    const json& v = body.at(key);
    if (v.is_number()) {
        const double units = v.get<double>();
        if (!std::isfinite(units)) throw Error(ErrorCode::BadField, key);
        return Money::from_units(units);
    }
    if (v.is_string()) return parse_money(v.get<std::string>());
    throw Error(ErrorCode::BadField, std::string(key) + " must be a number or a money string");
}

std::string string_field(const json& body, const char* key) {
    if (!body.is_object() || !body.contains(key)) throw Error(ErrorCode::MissingField, key);
    if (!body.at(key).is_string()) throw Error(ErrorCode::BadField, std::string(key) + " must be a string");
    return body.at(key).get<std::string>();
}

std::string query_or(const ApiRequest& req, const std::string& key, std::string fallback) {
    auto it = req.query.find(key);
    return it == req.query.end() ? fallback : it->second;
}

struct Url {
    std::string origin; // scheme://host[:port]
    std::string path;
};

Url split_url(const std::string& url) {
    static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, re)) throw Error(ErrorCode::BadField, "model endpoint is not an http(s) URL: " + url);
    return Url{m[1].str(), m[2].matched ? m[2].str() : "/"};
}

} // namespace

int http_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownItem:
    case ErrorCode::NotFound: return 404;
    case ErrorCode::StageConflict:
    case ErrorCode::PreconditionFailed: return 409;
    case ErrorCode::NoResults:
    case ErrorCode::NoFlights:
    case ErrorCode::BudgetTooSmall:
    case ErrorCode::InfeasibleTrip:
    case ErrorCode::FixtureMissing: return 422;
    case ErrorCode::ProviderUnavailable:
    case ErrorCode::ModelFailure: return 502;
    case ErrorCode::Io:
    case ErrorCode::NoActiveScenario:
    case ErrorCode::EmptyBuffer:
    case ErrorCode::EmptySeries: return 500;
    default: return 400;
    }
}

HttpApi::HttpApi(std::shared_ptr<TripService> service) : service_(std::move(service)) {}

ApiResponse HttpApi::handle(const ApiRequest& req) const {
    static const std::regex trip_route(R"(^/trips/([A-Za-z0-9_-]+)(/recommendations|/feedback|/budget|/plan|/plan/export)?$)");
    try {
        if (req.path == "/trips") {
            if (req.method == "POST") {
                try {
                    return json_response(201, json{{"trip_id", service_->create_trip(parse_body(req.body))}});
                } catch (const RequestRejected& e) {
                    return json_response(422, json{{"error", {{"code", "invalid_request"}, {"message", e.what()}}},
                                                  {"violations", e.violations()}});
                } catch (const Error& e) {
                    // The form did not parse at all: reported the same way.
                    json v = json::array({{{"code", to_string(e.code())}, {"message", e.what()}}});
                    return json_response(422, json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}},
                                                  {"violations", v}});
                }
            }
            if (req.method == "GET") return json_response(200, json{{"trips", service_->trip_ids()}});
            return error_response(ErrorCode::NotFound, "no route for " + req.method + " " + req.path);
        }

        std::smatch m;
        if (!std::regex_match(req.path, m, trip_route)) {
            return error_response(ErrorCode::NotFound, "no route for " + req.method + " " + req.path);
        }
        const std::string id = m[1].str();
        const std::string tail = m[2].matched ? m[2].str() : "";

        if (req.method == "GET" && tail.empty()) return json_response(200, session_to_json(service_->session(id)));
        if (req.method == "GET" && tail == "/recommendations") {
            return json_response(200, service_->recommendations(id, query_or(req, "stage", "attractions")));
        }
        if (req.method == "POST" && tail == "/feedback") {
            const json body = parse_body(req.body);
            service_->feedback(id, string_field(body, "item_ref"), rec::parse_verdict(string_field(body, "verdict")));
            return json_response(200, json{{"trip_id", id}, {"stage", to_string(service_->session(id).stage)}});
        }
        if (req.method == "POST" && tail == "/budget") {
            const json body = parse_body(req.body);
            return json_response(200, json(service_->confirm_budget(id, money_field(body, "confirmed"))));
        }
        if (req.method == "POST" && tail == "/plan") return json_response(200, json(service_->plan(id)));
        if (req.method == "GET" && tail == "/plan/export") {
            const std::string format = query_or(req, "format", "markdown");
            const std::string doc = service_->export_plan(id, format);
            return ApiResponse{200, format == "json" ? "application/json" : "text/markdown; charset=utf-8", doc};
        }
        return error_response(ErrorCode::NotFound, "no route for " + req.method + " " + req.path);
    } catch (const Error& e) {
        return error_response(e.code(), e.what());
    } catch (const std::exception& e) {
        return json_response(500, json{{"error", {{"code", "internal"}, {"message", e.what()}}}});
    }
}

struct HttpServer::Impl {
    HttpApi api;
    httplib::Server server;

    explicit Impl(std::shared_ptr<TripService> s) : api(std::move(s)) {
        auto route = [this](const httplib::Request& in, httplib::Response& out) {
            ApiRequest req{in.method, in.path, {}, in.body};
            for (const auto& [k, v] : in.params) req.query.emplace(k, v);
            const ApiResponse res = api.handle(req);
            out.status = res.status;
            out.set_content(res.body, res.content_type);
        };
        const std::string any = R"(/trips(/.*)?)";
        server.Get(any, route);
        server.Post(any, route);
    }
};

HttpServer::HttpServer(std::shared_ptr<TripService> service) : impl_(std::make_unique<Impl>(std::move(service))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        const int bound = impl_->server.bind_to_any_port(host);
        if (bound < 0) throw Error(ErrorCode::Io, "cannot bind " + host);
        return bound;
    }
    if (!impl_->server.bind_to_port(host, port)) {
        throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
    }
    return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

HttpReply http_call(const std::string& host, int port, const std::string& method, const std::string& path,
                    const std::string& body) {
    httplib::Client cli(host, port);
    cli.set_connection_timeout(5);
    httplib::Result res = method == "POST" ? cli.Post(path, body, "application/json") : cli.Get(path);
    if (!res) throw Error(ErrorCode::Io, method + " " + path + ": " + httplib::to_string(res.error()));
    return HttpReply{res->status, res->body};
}

HttpChatModel::HttpChatModel(ModelConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.endpoint.empty()) throw Error(ErrorCode::ModelFailure, "model.endpoint is not set");
    split_url(cfg_.endpoint);
    const char* key = std::getenv(cfg_.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
        throw Error(ErrorCode::ModelFailure, "environment variable " + cfg_.api_key_env + " is not set");
    }
    api_key_ = key;
}

std::string HttpChatModel::complete(const std::string& prompt) const {
    const Url url = split_url(cfg_.endpoint);
    httplib::Client cli(url.origin);
    cli.set_connection_timeout(cfg_.timeout_seconds);
    cli.set_read_timeout(cfg_.timeout_seconds);
    cli.set_bearer_token_auth(api_key_);
    const json body{{"model", cfg_.model},
                    {"temperature", 0},
                    {"messages", json::array({{{"role", "user"}, {"content", prompt}}})}};
    httplib::Result res = cli.Post(url.path, body.dump(), "application/json");
    if (!res) throw Error(ErrorCode::ModelFailure, "model request failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300) {
        throw Error(ErrorCode::ModelFailure, "model endpoint answered " + std::to_string(res->status));
    }
    try {
        const json reply = json::parse(res->body);
        return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ModelFailure, std::string("unexpected model reply: ") + e.what());
    }
}

std::shared_ptr<const TextModel> make_text_model(const ModelConfig& cfg) {
    switch (cfg.adapter) {
    case ModelAdapter::deterministic: return nullptr;
    case ModelAdapter::replay:
        if (cfg.transcript.empty()) throw Error(ErrorCode::MissingField, "model.transcript is required for replay");
        return std::make_shared<ReplayTextModel>(read_transcript(cfg.transcript));
    case ModelAdapter::http: {
        auto live = std::make_shared<HttpChatModel>(cfg);
        if (cfg.transcript.empty()) return live;
        return std::make_shared<RecordingTextModel>(live, cfg.transcript);
    }
    }
    return nullptr;
}

std::shared_ptr<TripService> make_service(const ServiceConfig& cfg) {
    auto catalog = std::make_shared<tools::Catalog>(tools::load_fixture_dir(cfg.fixtures));
    auto provider = std::make_shared<tools::FixtureProvider>(catalog, cfg.planner.travel_speed_kmh);
    auto documents = std::make_shared<memory::DirectoryStore>(cfg.state_dir);
    auto memory = std::make_shared<memory::MemoryStore>(documents);
    auto text = make_text_model(cfg.model);
    std::shared_ptr<const rec::PreferenceModel> model;
    if (text) model = std::make_shared<rec::LlmPreferenceModel>(text);
    return std::make_shared<TripService>(ServiceDeps{provider, documents, memory, model, text}, cfg);
}

} // namespace travel::service
