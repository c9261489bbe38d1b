#include "travel/memory/memory_store.hpp"

#include "travel/core/assets.hpp"
#include "travel/core/error.hpp"
#include "travel/domain/json_io.hpp"
#include "travel/recommend/json_io.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace travel::memory {
namespace {

constexpr std::string_view kCommonsenseKey = "commonsense";
constexpr std::string_view kUserPrefix = "user-";

bool reserved_field(const std::string& key) {
    return key == "user_id" || key == "narratives" || key == "short_term";
}

std::string user_key(const std::string& user_id) {
    return std::string(kUserPrefix) + user_id;
}

std::string id_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorCode::MalformedDocument, "user_id must be a string or an integer");
}

std::string structured_lines(const std::map<std::string, std::string>& m) {
    std::string out;
    for (const auto& [k, v] : m) out += k + ": " + v + "\n";
    return out;
}

} // namespace

void to_json(nlohmann::json& j, const NarrativeEntry& n) {
    j = nlohmann::json{{"scenario_id", n.scenario_id}, {"text", n.text}, {"created_at", n.created_at}};
}

void from_json(const nlohmann::json& j, NarrativeEntry& n) {
    n.scenario_id = j.value("scenario_id", "");
    n.text = j.at("text").get<std::string>();
    n.created_at = j.value("created_at", std::int64_t{0});
}

void to_json(nlohmann::json& j, const ShortTermBuffer& b) {
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : b.events) {
        nlohmann::json je;
        travel::memory::to_json(je, e);
        events.push_back(std::move(je));
    }
    j = nlohmann::json{{"scenario_id", b.scenario_id}, {"events", events}};
}

void from_json(const nlohmann::json& j, ShortTermBuffer& b) {
    b.scenario_id = j.at("scenario_id").get<std::string>();
    b.events.clear();
    for (const auto& je : j.at("events")) {
        MemoryEvent e;
        travel::memory::from_json(je, e);
        b.events.push_back(std::move(e));
    }
}

void to_json(nlohmann::json& j, const MemoryEvent& e) {
    if (const auto* f = std::get_if<rec::Feedback>(&e)) {
        j = nlohmann::json{{"type", "interaction"}, {"feedback", *f}};
    } else {
        j = nlohmann::json{{"type", "insight"}, {"insight", std::get<InsightRecord>(e)}};
    }
}

void from_json(const nlohmann::json& j, MemoryEvent& e) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "interaction") {
        e = j.at("feedback").get<rec::Feedback>();
    } else if (type == "insight") {
        e = j.at("insight").get<InsightRecord>();
    } else {
        throw Error(ErrorCode::MalformedDocument, "unknown memory event type '" + type + "'");
    }
}

NarrativeMerger concatenating_merger() {
    return [](const UserPersona&, const ShortTermBuffer& buffer) {
        std::string out;
        for (const auto& e : buffer.events) {
            const auto* r = std::get_if<InsightRecord>(&e);
            if (r == nullptr || r->kind != InsightKind::soft || r->narrative.empty()) continue;
            if (!out.empty()) out += " ";
            out += r->narrative;
        }
        return out;
    };
}

NarrativeMerger text_model_merger(std::shared_ptr<const TextModel> model) {
    return [model = std::move(model)](const UserPersona& before, const ShortTermBuffer& buffer) {
        std::string persona = structured_lines(before.structured);
        for (const auto& n : before.narratives) persona += n.text + "\n";
        std::string observations;
        for (const auto& e : buffer.events) {
            if (const auto* r = std::get_if<InsightRecord>(&e)) {
                observations += structured_lines(r->structured);
                if (!r->narrative.empty()) observations += r->narrative + "\n";
            }
        }
        const std::string prompt = render_template(asset("prompts/consolidate.txt"),
                                                   {{"persona", persona.empty() ? "(none)" : persona},
                                                    {"scenario_id", buffer.scenario_id},
                                                    {"observations", observations.empty() ? "(none)" : observations}});
        std::string reply = model->complete(prompt);
        while (!reply.empty() && (reply.back() == '\n' || reply.back() == ' ')) reply.pop_back();
        if (reply.empty()) throw Error(ErrorCode::ModelFailure, "empty consolidation reply");
        return reply;
    };
}

CommonsenseRuleSet seed_rules() {
    const auto doc = nlohmann::json::parse(asset("commonsense_seed.json"));
    CommonsenseRuleSet out;
    for (const auto& r : doc.at("rules")) {
        auto rule = r.get<CommonsenseRule>();
        rule.source = RuleSource::seed;
        out.add(std::move(rule));
    }
    return out;
}

SoftConstraintSet to_soft_constraints(const UserPersona& p) {
    SoftConstraintSet s;
    for (const auto& [k, v] : p.structured) {
        if (k == insight_keys::spending_level) {
            s.spending_level = parse_spending_level(v);
        } else if (k == insight_keys::attraction_preference) {
            s.attraction_preference = v;
        } else if (k == insight_keys::restaurant_preference) {
            s.restaurant_preference = v;
        } else {
            s.extra[k] = v;
        }
    }
    return s;
}

nlohmann::json user_document(const std::string& user_id, const UserPersona* persona, const ShortTermBuffer* buffer) {
    nlohmann::json j = nlohmann::json::object();
    j["user_id"] = user_id;
    nlohmann::json narratives = nlohmann::json::array();
    if (persona != nullptr) {
        for (const auto& [k, v] : persona->structured) j[k] = v;
        for (const auto& n : persona->narratives) narratives.push_back(n);
    }
    j["narratives"] = narratives;
    if (buffer != nullptr) j["short_term"] = *buffer;
    return j;
}

std::pair<UserPersona, std::optional<ShortTermBuffer>> parse_user_document(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("user_id")) {
        throw Error(ErrorCode::MalformedDocument, "user document needs a user_id");
    }
    UserPersona p;
    std::optional<ShortTermBuffer> buffer;
    try {
        p.user_id = id_text(doc.at("user_id"));
        for (const auto& [k, v] : doc.items()) {
            if (reserved_field(k)) continue;
            if (!v.is_string()) throw Error(ErrorCode::MalformedDocument, "field '" + k + "' must be text");
            p.structured[k] = v.get<std::string>();
        }
        if (auto it = doc.find("narratives"); it != doc.end()) {
            for (const auto& n : *it) p.narratives.push_back(n.get<NarrativeEntry>());
        }
        if (auto it = doc.find("short_term"); it != doc.end() && !it->is_null()) buffer = it->get<ShortTermBuffer>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("bad user document: ") + e.what());
    }
    if (auto it = p.structured.find(std::string(insight_keys::spending_level)); it != p.structured.end()) {
        if (!parse_spending_level(it->second)) {
            throw Error(ErrorCode::MalformedDocument, "unknown spending level '" + it->second + "'");
        }
    }
    return {std::move(p), std::move(buffer)};
}

MemoryStore::MemoryStore(std::shared_ptr<DocumentStore> store, MemoryConfig cfg)
    : store_(std::move(store)), cfg_(cfg) {
    if (!store_) throw Error(ErrorCode::InvalidValue, "memory store needs a document store");
    if (cfg_.narrative_cap == 0) throw Error(ErrorCode::InvalidValue, "narrative cap must be positive");
    load();
}

void MemoryStore::load() {
    if (auto doc = store_->read(std::string(kCommonsenseKey))) {
        try {
            state_.commonsense = CommonsenseRuleSet(nlohmann::json::parse(*doc).at("rules").get<std::vector<CommonsenseRule>>());
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, std::string("bad commonsense document: ") + e.what());
        }
    } else {
        state_.commonsense = seed_rules();
    }
    for (const auto& key : store_->keys()) {
        if (key.rfind(kUserPrefix, 0) != 0) continue;
        auto text = store_->read(key);
        if (!text) continue;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(*text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, key + ": " + e.what());
        }
        auto [persona, buffer] = parse_user_document(doc);
        const std::string id = persona.user_id;
        if (buffer) state_.short_term[id] = std::move(*buffer);
        if (!persona.structured.empty() || !persona.narratives.empty()) state_.long_term[id] = std::move(persona);
    }
}

void MemoryStore::persist_user(const std::string& user_id) {
    auto p = state_.long_term.find(user_id);
    auto b = state_.short_term.find(user_id);
    const auto doc = user_document(user_id, p == state_.long_term.end() ? nullptr : &p->second,
                                   b == state_.short_term.end() ? nullptr : &b->second);
    store_->write(user_key(user_id), doc.dump(2));
}

void MemoryStore::persist_commonsense() {
    store_->write(std::string(kCommonsenseKey), nlohmann::json{{"rules", state_.commonsense.rules()}}.dump(2));
}

void MemoryStore::begin_scenario(const std::string& user_id, const std::string& scenario_id) {
    if (user_id.empty()) throw Error(ErrorCode::InvalidValue, "empty user id");
    std::unique_lock lock(mu_);
    state_.short_term[user_id] = ShortTermBuffer{scenario_id, {}};
    persist_user(user_id);
}

std::optional<std::string> MemoryStore::active_scenario(const std::string& user_id) const {
    std::shared_lock lock(mu_);
    auto it = state_.short_term.find(user_id);
    if (it == state_.short_term.end()) return std::nullopt;
    return it->second.scenario_id;
}

void MemoryStore::append_short_term(const std::string& user_id, MemoryEvent event) {
    std::unique_lock lock(mu_);
    auto it = state_.short_term.find(user_id);
    if (it == state_.short_term.end()) {
        throw Error(ErrorCode::NoActiveScenario, "user " + user_id + " has no active scenario");
    }
    it->second.events.push_back(std::move(event));
    persist_user(user_id);
}

ShortTermBuffer MemoryStore::short_term(const std::string& user_id) const {
    std::shared_lock lock(mu_);
    auto it = state_.short_term.find(user_id);
    if (it == state_.short_term.end()) {
        throw Error(ErrorCode::NoActiveScenario, "user " + user_id + " has no active scenario");
    }
    return it->second;
}

UserPersona MemoryStore::consolidate(const std::string& user_id, const NarrativeMerger& merger) {
    std::unique_lock lock(mu_);
    auto it = state_.short_term.find(user_id);
    if (it == state_.short_term.end()) {
        throw Error(ErrorCode::NoActiveScenario, "user " + user_id + " has no active scenario");
    }
    const ShortTermBuffer& buffer = it->second;
    if (buffer.events.empty()) throw Error(ErrorCode::EmptyBuffer, "nothing to consolidate for " + user_id);

    UserPersona next = state_.long_term.contains(user_id) ? state_.long_term[user_id] : UserPersona{user_id, {}, {}};
    std::int64_t latest = 0;
    bool learned_rule = false;
    for (const auto& e : buffer.events) {
        if (const auto* f = std::get_if<rec::Feedback>(&e)) {
            latest = std::max(latest, f->timestamp);
            continue;
        }
        const auto& r = std::get<InsightRecord>(e);
        latest = std::max(latest, r.created_at);
        if (r.kind == InsightKind::soft) {
            for (const auto& [k, v] : r.structured) {
                if (!reserved_field(k)) next.structured[k] = v;
            }
        } else if (r.structured.contains("id")) {
            state_.commonsense.upsert(CommonsenseRule{r.structured.at("id"),
                                                      r.structured.contains("condition") ? r.structured.at("condition") : "",
                                                      r.structured.contains("effect") ? r.structured.at("effect") : r.narrative,
                                                      RuleSource::learned});
            learned_rule = true;
        }
    }
    std::optional<std::string> narrative;
    if (merger) {
        try {
            narrative = merger(state_.long_term.contains(user_id) ? state_.long_term[user_id] : UserPersona{user_id, {}, {}},
                               buffer);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ModelFailure) throw;
        }
    }
    if (narrative && !narrative->empty()) {
        next.narratives.push_back({buffer.scenario_id, *narrative, latest});
        while (next.narratives.size() > cfg_.narrative_cap) next.narratives.erase(next.narratives.begin());
    }
    state_.long_term[user_id] = next;
    state_.short_term.erase(it);
    persist_user(user_id);
    if (learned_rule) persist_commonsense();
    return next;
}

RetrievedInsights MemoryStore::retrieve_insights(const std::string& user_id, const TravelRequest*) const {
    std::shared_lock lock(mu_);
    RetrievedInsights out;
    out.commonsense = state_.commonsense;
    if (auto it = state_.long_term.find(user_id); it != state_.long_term.end()) {
        out.soft = to_soft_constraints(it->second);
    }
    return out;
}

std::optional<UserPersona> MemoryStore::persona(const std::string& user_id) const {
    std::shared_lock lock(mu_);
    auto it = state_.long_term.find(user_id);
    if (it == state_.long_term.end()) return std::nullopt;
    return it->second;
}

MemorySnapshot MemoryStore::snapshot() const {
    std::shared_lock lock(mu_);
    return state_;
}

void MemoryStore::put_persona(UserPersona persona) {
    if (persona.user_id.empty()) throw Error(ErrorCode::InvalidValue, "persona needs a user id");
    std::unique_lock lock(mu_);
    const std::string id = persona.user_id;
    state_.long_term[id] = std::move(persona);
    persist_user(id);
}

nlohmann::json snapshot_to_json(const MemorySnapshot& s) {
    nlohmann::json users = nlohmann::json::object();
    std::set<std::string> ids;
    for (const auto& [id, p] : s.long_term) ids.insert(id);
    for (const auto& [id, b] : s.short_term) ids.insert(id);
    for (const auto& id : ids) {
        auto p = s.long_term.find(id);
        auto b = s.short_term.find(id);
        auto doc = user_document(id, p == s.long_term.end() ? nullptr : &p->second,
                                 b == s.short_term.end() ? nullptr : &b->second);
        doc["has_persona"] = p != s.long_term.end();
        users[id] = std::move(doc);
    }
    return nlohmann::json{{"users", users}, {"commonsense", s.commonsense.rules()}};
}

MemorySnapshot snapshot_from_json(const nlohmann::json& j) {
    MemorySnapshot s;
    try {
        s.commonsense = CommonsenseRuleSet(j.at("commonsense").get<std::vector<CommonsenseRule>>());
        for (const auto& [id, doc] : j.at("users").items()) {
            auto copy = doc;
            const bool has_persona = copy.value("has_persona", true);
            copy.erase("has_persona");
            auto [persona, buffer] = parse_user_document(copy);
            if (has_persona) s.long_term[id] = std::move(persona);
            if (buffer) s.short_term[id] = std::move(*buffer);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("bad memory snapshot: ") + e.what());
    }
    return s;
}

void save_snapshot(DocumentStore& store, const std::string& key, const MemorySnapshot& s) {
    store.write(key, snapshot_to_json(s).dump(2));
}

MemorySnapshot load_snapshot(const DocumentStore& store, const std::string& key) {
    auto text = store.read(key);
    if (!text) throw Error(ErrorCode::NotFound, "no snapshot '" + key + "'");
    try {
        return snapshot_from_json(nlohmann::json::parse(*text));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, std::string("bad memory snapshot: ") + e.what());
    }
}

} // namespace travel::memory
