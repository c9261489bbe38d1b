#include "support.hpp"

#include "travel/core/error.hpp"
#include "travel/memory/document_store.hpp"
#include "travel/memory/memory_store.hpp"

#include <doctest.h>

#include <thread>

using namespace travel;
using namespace travel::memory;

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

InsightRecord soft(std::string level, std::string pref, std::string narrative, std::int64_t at) {
    InsightRecord r;
    r.kind = InsightKind::soft;
    r.structured = {{std::string(insight_keys::spending_level), std::move(level)}};
    if (!pref.empty()) r.structured[std::string(insight_keys::attraction_preference)] = std::move(pref);
    r.narrative = std::move(narrative);
    r.created_at = at;
    return r;
}

InsightRecord rule(std::string id, std::string effect) {
    InsightRecord r;
    r.kind = InsightKind::commonsense;
    r.structured = {{"id", std::move(id)}, {"condition", "always"}, {"effect", std::move(effect)}};
    return r;
}

} // namespace

TEST_SUITE("memory") {

TEST_CASE("short-term writes need an open scenario") {
    MemoryStore m(std::make_shared<InMemoryStore>());
    CHECK(code_of([&] { m.append_short_term("u", rec::Feedback{"1", rec::Verdict::like, std::nullopt, 0}); }) ==
          ErrorCode::NoActiveScenario);
    CHECK(code_of([&] { m.consolidate("u"); }) == ErrorCode::NoActiveScenario);
    m.begin_scenario("u", "s1");
    CHECK(m.active_scenario("u") == "s1");
    CHECK(code_of([&] { m.consolidate("u"); }) == ErrorCode::EmptyBuffer);
    m.append_short_term("u", rec::Feedback{"1", rec::Verdict::like, std::nullopt, 1});
    CHECK(m.short_term("u").events.size() == 1);
}

TEST_CASE("consolidation is last-writer-wins on structured fields") {
    MemoryStore m(std::make_shared<InMemoryStore>());
    m.begin_scenario("u", "s1");
    m.append_short_term("u", soft("mid", "museums", "first", 1));
    m.append_short_term("u", soft("low", "", "second", 2));
    const UserPersona p = m.consolidate("u");
    CHECK(p.structured.at(std::string(insight_keys::spending_level)) == "low");
    CHECK(p.structured.at(std::string(insight_keys::attraction_preference)) == "museums");
    REQUIRE(p.narratives.size() == 1);
    CHECK(p.narratives[0].scenario_id == "s1");
    CHECK(p.narratives[0].created_at == 2);
    CHECK_FALSE(m.active_scenario("u").has_value());
    CHECK(code_of([&] { (void)m.short_term("u"); }) == ErrorCode::NoActiveScenario);
}

TEST_CASE("two scenarios leave two narratives, capped") {
    MemoryConfig cfg;
    cfg.narrative_cap = 3;
    MemoryStore m(std::make_shared<InMemoryStore>(), cfg);
    for (int i = 1; i <= 5; ++i) {
        m.begin_scenario("u", "s" + std::to_string(i));
        m.append_short_term("u", soft("mid", "", "round " + std::to_string(i), i));
        const UserPersona p = m.consolidate("u");
        CHECK(p.narratives.size() == static_cast<std::size_t>(std::min(i, 3)));
        if (i == 2) {
            CHECK(p.narratives[0].scenario_id == "s1");
            CHECK(p.narratives[1].scenario_id == "s2");
        }
    }
    const auto p = *m.persona("u");
    CHECK(p.narratives.front().scenario_id == "s3"); // oldest evicted
    CHECK(p.narratives.back().text.find("round 5") != std::string::npos);
}

TEST_CASE("a failing merger still merges the structured fields") {
    MemoryStore m(std::make_shared<InMemoryStore>());
    m.begin_scenario("u", "s");
    m.append_short_term("u", soft("high", "", "x", 1));
    const NarrativeMerger broken = [](const UserPersona&, const ShortTermBuffer&) -> std::string {
        throw Error(ErrorCode::ModelFailure, "down");
    };
    const UserPersona p = m.consolidate("u", broken);
    CHECK(p.structured.at(std::string(insight_keys::spending_level)) == "high");
    CHECK(p.narratives.empty());
}

TEST_CASE("retrieval for unknown and known users") {
    MemoryStore m(std::make_shared<InMemoryStore>());
    const RetrievedInsights none = m.retrieve_insights("ghost");
    CHECK(none.soft.empty());
    CHECK(none.commonsense == seed_rules());
    for (auto id : {rule_ids::no_repeat_restaurant, rule_ids::meal_windows, rule_ids::child_pacing}) {
        CHECK(none.commonsense.contains(id));
    }

    m.begin_scenario("u", "s");
    m.append_short_term("u", soft("low", "gardens", "n", 1));
    m.append_short_term("u", rule("rain-plan", "prefer indoor sights when it rains"));
    m.consolidate("u");
    const RetrievedInsights got = m.retrieve_insights("u");
    CHECK(got.soft.spending_level == SpendingLevel::low);
    CHECK(got.soft.attraction_preference == "gardens");
    REQUIRE(got.commonsense.contains("rain-plan"));
    CHECK(got.commonsense.find("rain-plan")->source == RuleSource::learned);
}

TEST_CASE("imported flat records") {
    const auto doc = nlohmann::json::parse(support::slurp(support::test_data("flat_user2.json")));
    const auto [persona, buffer] = parse_user_document(doc);
    CHECK(persona.user_id == "2");
    CHECK_FALSE(buffer.has_value());
    const SoftConstraintSet s = to_soft_constraints(persona);
    CHECK(s.spending_level == SpendingLevel::low);
    CHECK(s.restaurant_preference == "Chinese");
    CHECK(s.attraction_preference.find("gardens") != std::string::npos);

    MemoryStore m(std::make_shared<InMemoryStore>());
    m.put_persona(persona);
    CHECK(m.retrieve_insights("2").soft == s);
    CHECK(code_of([] { parse_user_document(nlohmann::json::array()); }) == ErrorCode::MalformedDocument);
}

TEST_CASE("a new store over the same documents resumes") {
    support::TempDir dir;
    {
        MemoryStore m(std::make_shared<DirectoryStore>(dir.path()));
        m.begin_scenario("sheep", "s1");
        m.append_short_term("sheep", soft("low", "", "a", 1));
        m.consolidate("sheep");
        m.begin_scenario("sheep", "s2");
        m.append_short_term("sheep", rec::Feedback{"7", rec::Verdict::pass, std::nullopt, 3});
    }
    CHECK(std::filesystem::exists(dir.path() / "user-sheep.json"));
    MemoryStore again(std::make_shared<DirectoryStore>(dir.path()));
    CHECK(again.persona("sheep")->structured.at(std::string(insight_keys::spending_level)) == "low");
    CHECK(again.active_scenario("sheep") == "s2");
    REQUIRE(again.short_term("sheep").events.size() == 1);
    CHECK(std::get<rec::Feedback>(again.short_term("sheep").events[0]).item_ref == "7");
}

TEST_CASE("documents read back what was written") {
    support::TempDir dir;
    DirectoryStore d(dir.path());
    InMemoryStore mem;
    for (DocumentStore* s : {static_cast<DocumentStore*>(&d), static_cast<DocumentStore*>(&mem)}) {
        CHECK_FALSE(s->read("a/b c").has_value());
        s->write("a/b c", "{\"x\":1}");
        CHECK(s->read("a/b c") == "{\"x\":1}");
        s->write("a/b c", "{}");
        CHECK(s->read("a/b c") == "{}");
        CHECK(s->keys() == std::vector<std::string>{"a/b c"});
        s->remove("a/b c");
        CHECK(s->keys().empty());
    }
    CHECK(decode_key(encode_key("user-ü/1")) == "user-ü/1");
    CHECK(encode_key("trip-000001") == "trip-000001");
}

TEST_CASE("concurrent writers keep every document whole") {
    support::TempDir dir;
    DirectoryStore d(dir.path());
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; ++t) {
        ts.emplace_back([&d, t] {
            for (int i = 0; i < 50; ++i) d.write("k", std::string(static_cast<std::size_t>(100 + t), 'a' + t));
        });
    }
    for (auto& t : ts) t.join();
    const std::string v = *d.read("k");
    CHECK(v.size() >= 100);
    CHECK(std::all_of(v.begin(), v.end(), [&](char c) { return c == v[0]; }));
    CHECK(v.size() == 100 + static_cast<std::size_t>(v[0] - 'a'));
}

TEST_CASE("snapshots round trip byte for byte") {
    MemoryStore m(std::make_shared<InMemoryStore>());
    for (const char* u : {"a", "b"}) {
        m.begin_scenario(u, "s1");
        m.append_short_term(u, soft("mid", "parks", "p", 1));
        m.append_short_term(u, rule(std::string("r-") + u, "e"));
        m.consolidate(u);
    }
    m.begin_scenario("a", "s2");
    m.append_short_term("a", rec::Feedback{"3", std::nullopt, 4, 9});
    const MemorySnapshot snap = m.snapshot();

    InMemoryStore store;
    save_snapshot(store, "snap", snap);
    const MemorySnapshot back = load_snapshot(store, "snap");
    CHECK(back == snap);
    InMemoryStore again;
    save_snapshot(again, "snap", back);
    CHECK(*again.read("snap") == *store.read("snap"));
    CHECK(snapshot_from_json(snapshot_to_json(snap)) == snap);
}

} // TEST_SUITE
