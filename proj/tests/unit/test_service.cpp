#include "support.hpp"

#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/memory/document_store.hpp"
#include "travel/memory/memory_store.hpp"
#include "travel/service/config.hpp"
#include "travel/service/http.hpp"
#include "travel/service/trip_service.hpp"

#include <doctest.h>

#include <set>

#include <thread>

using namespace travel;
using namespace travel::service;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

std::shared_ptr<TripService> service_over(std::shared_ptr<memory::DocumentStore> docs) {
    ServiceDeps deps;
    deps.provider = support::provider();
    deps.documents = docs;
    deps.memory = std::make_shared<memory::MemoryStore>(docs);
    ServiceConfig cfg;
    cfg.fixtures = support::fixture_dir();
    return std::make_shared<TripService>(deps, cfg);
}

std::shared_ptr<TripService> fresh_service() { return service_over(std::make_shared<memory::InMemoryStore>()); }

json form1() { return support::forms().at(0); }

ApiResponse call(const HttpApi& api, std::string method, std::string path, std::string body = {},
                 std::map<std::string, std::string> query = {}) {
    return api.handle(ApiRequest{std::move(method), std::move(path), std::move(query), std::move(body)});
}

// Likes the first n presented attractions.
void like_top(TripService& svc, const std::string& id, std::size_t n) {
    const auto recs = svc.recommendations(id, "attractions");
    for (std::size_t i = 0; i < n && i < recs.at("items").size(); ++i) {
        svc.feedback(id, recs["items"][i].at("item_ref").get<std::string>(), rec::Verdict::like);
    }
}

} // namespace

TEST_SUITE("service") {

TEST_CASE("config files") {
    const ServiceConfig c = parse_config("# comment\nplanner.day_end = 20\nbudget.shares = 25,20,15,15,10,15\n"
                                         "planner.lunch_window = none\nmodel.adapter = replay\nserver.port=9000\n");
    CHECK(c.planner.day_end == 20.0);
    CHECK(c.budget.shares.accommodation == 25);
    CHECK(c.budget.shares.reserve == 15);
    CHECK_FALSE(c.planner.lunch_window.has_value());
    CHECK(c.model.adapter == ModelAdapter::replay);
    CHECK(c.port == 9000);
    CHECK(code_of([] { parse_config("nonsense = 1\n"); }) == ErrorCode::BadField);
    CHECK(code_of([] { parse_config("planner.day_end = soon\n"); }) == ErrorCode::BadField);
    CHECK(config_keys().contains("planner.meal_start_slack"));
    CHECK(config_keys().contains("model.api_key_env"));
}

TEST_CASE("stages must run in order") {
    auto svc = fresh_service();
    const std::string id = svc->create_trip(form1());
    CHECK(id == "trip-000001");
    CHECK(svc->session(id).user_id == "sheep");
    CHECK(code_of([&] { svc->plan(id); }) == ErrorCode::StageConflict);
    CHECK(code_of([&] { svc->confirm_budget(id, Money::from_cents(100000)); }) == ErrorCode::StageConflict);
    CHECK(code_of([&] { svc->export_plan(id, "markdown"); }) == ErrorCode::StageConflict);
    const auto first = svc->recommendations(id, "attractions");
    CHECK(first.at("items").size() == 20);
    CHECK(svc->recommendations(id, "attractions") == first);
    CHECK(code_of([&] { svc->feedback(id, "not-an-item", rec::Verdict::like); }) == ErrorCode::UnknownItem);
    like_top(*svc, id, 8);
    CHECK(svc->session(id).stage == Stage::feedback);
    const auto plan = svc->confirm_budget(id, Money::from_cents(100000));
    CHECK(plan.amount(budget::Category::accommodation).cents == 30000);
    const Itinerary it = svc->plan(id);
    CHECK(it.days.size() == 4);
    CHECK(svc->plan(id) == it);
    CHECK(code_of([&] { svc->confirm_budget(id, Money::from_cents(100000)); }) == ErrorCode::StageConflict);
    CHECK(code_of([&] { svc->export_plan(id, "pdf"); }) == ErrorCode::BadField);
    CHECK(code_of([&] { svc->session("trip-999999"); }) == ErrorCode::NotFound);
    CHECK(code_of([&] { svc->recommendations(id, "weather"); }) == ErrorCode::BadField);
    CHECK(svc->trip_ids() == std::vector<std::string>{id});
}

TEST_CASE("other recommendation stages") {
    auto svc = fresh_service();
    const std::string id = svc->create_trip(form1());
    const auto f = svc->recommendations(id, "flights");
    CHECK(f.at("selected").size() == 2);
    CHECK(f.at("items").size() == 7);
    const auto h = svc->recommendations(id, "hotel");
    CHECK(h.at("selected").size() == 1);
    const auto r = svc->recommendations(id, "restaurants");
    CHECK(r.at("items")[0].at("cuisine") == "Chinese");
    const auto b = svc->recommendations(id, "budget");
    CHECK(b.at("recommendation").contains("recommended_fund"));
}

TEST_CASE("invalid forms are rejected with every violation") {
    auto svc = fresh_service();
    json f = form1();
    f["adults_num"] = 0;
    f["children_ages"] = "3,4";
    try {
        svc->create_trip(f);
        FAIL("expected a rejection");
    } catch (const RequestRejected& e) {
        CHECK(e.violations().size() == 2);
    }
}

TEST_CASE("the HTTP routes match direct calls") {
    auto direct = fresh_service();
    const HttpApi api(fresh_service());

    const std::string id = direct->create_trip(form1());
    const auto created = call(api, "POST", "/trips", form1().dump());
    REQUIRE(created.status == 201);
    CHECK(json::parse(created.body).at("trip_id") == id);

    const auto recs = direct->recommendations(id, "attractions");
    const auto got = call(api, "GET", "/trips/" + id + "/recommendations");
    REQUIRE(got.status == 200);
    CHECK(json::parse(got.body) == recs);

    for (std::size_t i = 0; i < 6; ++i) {
        const std::string item = recs["items"][i].at("item_ref");
        direct->feedback(id, item, rec::Verdict::like);
        const auto fb = call(api, "POST", "/trips/" + id + "/feedback", json{{"item_ref", item}, {"verdict", "like"}}.dump());
        CHECK(fb.status == 200);
        CHECK(json::parse(fb.body).at("stage") == "feedback");
    }
    const std::string passed = recs["items"][7].at("item_ref");
    direct->feedback(id, passed, rec::Verdict::pass);
    call(api, "POST", "/trips/" + id + "/feedback", json{{"item_ref", passed}, {"verdict", "pass"}}.dump());

    const auto b = call(api, "POST", "/trips/" + id + "/budget", R"({"confirmed": 1000})");
    REQUIRE(b.status == 200);
    CHECK(json::parse(b.body) == json(direct->confirm_budget(id, Money::from_cents(100000))));

    const auto p = call(api, "POST", "/trips/" + id + "/plan");
    REQUIRE(p.status == 200);
    CHECK(json::parse(p.body) == json(direct->plan(id)));

    const auto md = call(api, "GET", "/trips/" + id + "/plan/export", {}, {{"format", "markdown"}});
    CHECK(md.status == 200);
    CHECK(md.content_type.find("markdown") != std::string::npos);
    CHECK(md.body == direct->export_plan(id, "markdown"));
    const auto js = call(api, "GET", "/trips/" + id + "/plan/export", {}, {{"format", "json"}});
    CHECK(json::parse(js.body) == json::parse(direct->export_plan(id, "json")));

    const auto whole = call(api, "GET", "/trips/" + id);
    CHECK(json::parse(whole.body).at("stage") == "planned");
    CHECK(json::parse(call(api, "GET", "/trips").body).at("trips") == json::array({id}));
}

TEST_CASE("HTTP error statuses") {
    const HttpApi api(fresh_service());
    json bad = form1();
    bad["adults_num"] = 0;
    auto r = call(api, "POST", "/trips", bad.dump());
    CHECK(r.status == 422);
    CHECK(json::parse(r.body).at("violations").size() == 1);
    CHECK(call(api, "POST", "/trips", "{not json").status == 422);

    const std::string id = json::parse(call(api, "POST", "/trips", form1().dump()).body).at("trip_id");
    r = call(api, "POST", "/trips/" + id + "/plan");
    CHECK(r.status == 409);
    CHECK(json::parse(r.body).at("error").at("code") == "stage_conflict");
    call(api, "GET", "/trips/" + id + "/recommendations");
    r = call(api, "POST", "/trips/" + id + "/feedback", R"({"item_ref": "nope", "verdict": "like"})");
    CHECK(r.status == 404);
    CHECK(json::parse(r.body).at("error").at("code") == "unknown_item");
    CHECK(call(api, "GET", "/trips/trip-000404").status == 404);
    CHECK(call(api, "GET", "/elsewhere").status == 404);
    CHECK(call(api, "POST", "/trips/" + id + "/budget", R"({"amount": 5})").status == 400);
    CHECK(call(api, "POST", "/trips/" + id + "/budget", R"({"confirmed": 1})").status == 422);

    CHECK(http_status(ErrorCode::ModelFailure) == 502);
    CHECK(http_status(ErrorCode::PreconditionFailed) == 409);
    CHECK(http_status(ErrorCode::InfeasibleTrip) == 422);
    CHECK(http_status(ErrorCode::BadField) == 400);
}

TEST_CASE("markdown export carries the detail blocks") {
    auto svc = fresh_service();
    const std::string id = svc->create_trip(form1());
    like_top(*svc, id, 10);
    svc->confirm_budget(id, Money::from_cents(100000));
    svc->plan(id);
    const std::string md = svc->export_plan(id, "markdown");
    for (const char* label : {"Flight Info", "Hotel Info", "Sight Info", "Restaurant Info"}) {
        CHECK(md.find(label) != std::string::npos);
    }
    CHECK(md.find("08:00 to 10:10") != std::string::npos);
    CHECK(md.find("CZ 8888") != std::string::npos);
}

TEST_CASE("a plan with every attraction passed still exports") {
    auto svc = fresh_service();
    const std::string id = svc->create_trip(form1());
    // Reranking surfaces unseen items, so keep passing until none is left.
    std::set<std::string> passed;
    for (bool more = true; more;) {
        more = false;
        const auto recs = svc->recommendations(id, "attractions");
        for (const auto& item : recs.at("items")) {
            const auto ref = item.at("item_ref").get<std::string>();
            if (passed.insert(ref).second) {
                svc->feedback(id, ref, rec::Verdict::pass);
                more = true;
            }
        }
    }
    svc->confirm_budget(id, Money::from_cents(100000));
    const Itinerary it = svc->plan(id);
    for (const auto& d : it.days) {
        for (const auto& p : d.points) CHECK(p.kind != RouteKind::visit);
    }
    const std::string md = svc->export_plan(id, "markdown");
    CHECK(md.find("Sight Info") == std::string::npos);
    CHECK(md.find("Flight Info") != std::string::npos);
}

TEST_CASE("sessions and memory survive a restart") {
    support::TempDir dir;
    std::string id;
    {
        auto svc = service_over(std::make_shared<memory::DirectoryStore>(dir.path()));
        id = svc->create_trip(form1());
        like_top(*svc, id, 5);
    }
    auto svc = service_over(std::make_shared<memory::DirectoryStore>(dir.path()));
    CHECK(svc->session(id).stage == Stage::feedback);
    CHECK(svc->session(id).attractions->feedback.size() == 5);
    svc->confirm_budget(id, Money::from_cents(100000));
    svc->plan(id);
    CHECK(svc->create_trip(form1()) == "trip-000002");

    // Planning consolidated the feedback into the user's persona.
    memory::MemoryStore m(std::make_shared<memory::DirectoryStore>(dir.path()));
    const auto p = m.persona("sheep");
    REQUIRE(p.has_value());
    CHECK(p->structured.contains(std::string(insight_keys::spending_level)));
    CHECK(p->narratives.size() == 1);

    const TripSession s = svc->session(id);
    CHECK(session_from_json(session_to_json(s)) == s);
}

TEST_CASE("non-interactive runs") {
    auto svc = fresh_service();
    const auto out = svc->run_noninteractive(form1(), "batch", Money::from_cents(100000));
    CHECK(out.itinerary.days.size() == 4);
    CHECK(svc->session(out.trip_id).stage == Stage::planned);
    CHECK(svc->session(out.trip_id).user_id == "batch");
}

TEST_CASE("model adapters") {
    ModelConfig cfg;
    CHECK(make_text_model(cfg) == nullptr);
    cfg.adapter = ModelAdapter::http;
    cfg.endpoint = "http://127.0.0.1:9/v1/chat/completions";
    cfg.api_key_env = "TRAVEL_TEST_KEY_THAT_IS_NOT_SET";
    CHECK(code_of([&] { HttpChatModel m(cfg); }) == ErrorCode::ModelFailure);
    cfg.adapter = ModelAdapter::replay;
    cfg.transcript = "/nonexistent/transcript.jsonl";
    CHECK(code_of([&] { make_text_model(cfg); }) == ErrorCode::Io);
}

TEST_CASE("real sockets") {
    auto svc = fresh_service();
    HttpServer server(svc);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread t([&] { server.listen(); });
    HttpReply r;
    for (int i = 0; i < 50; ++i) {
        try {
            r = http_call("127.0.0.1", port, "POST", "/trips", form1().dump());
            break;
        } catch (const Error&) {
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
        }
    }
    CHECK(r.status == 201);
    const std::string id = json::parse(r.body).at("trip_id");
    CHECK(http_call("127.0.0.1", port, "GET", "/trips/" + id + "/recommendations?stage=attractions").status == 200);
    CHECK(http_call("127.0.0.1", port, "POST", "/trips/" + id + "/plan").status == 409);
    server.stop();
    t.join();
}

} // TEST_SUITE
