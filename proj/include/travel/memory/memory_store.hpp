#pragma once

#include "travel/core/text_model.hpp"
#include "travel/domain/constraints.hpp"
#include "travel/domain/insight.hpp"
#include "travel/memory/document_store.hpp"
#include "travel/recommend/recommender.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

namespace travel::memory {

// One short-term entry: a user interaction or an insight drawn from it.
using MemoryEvent = std::variant<rec::Feedback, InsightRecord>;

struct ShortTermBuffer {
    std::string scenario_id;
    std::vector<MemoryEvent> events;

    bool operator==(const ShortTermBuffer&) const = default;
};

struct NarrativeEntry {
    std::string scenario_id;
    std::string text;
    std::int64_t created_at = 0;

    bool operator==(const NarrativeEntry&) const = default;
};

struct UserPersona {
    std::string user_id;
    // Keys as in the soft insights, e.g. "user_spending_level".
    std::map<std::string, std::string> structured;
    std::vector<NarrativeEntry> narratives; // oldest first

    bool operator==(const UserPersona&) const = default;
};

struct MemorySnapshot {
    std::map<std::string, ShortTermBuffer> short_term; // active scenario per user
    std::map<std::string, UserPersona> long_term;
    CommonsenseRuleSet commonsense;

    bool operator==(const MemorySnapshot&) const = default;
};

struct MemoryConfig {
    std::size_t narrative_cap = 20;
};

// Turns a buffer's insights into one narrative paragraph. Throws ModelFailure.
using NarrativeMerger = std::function<std::string(const UserPersona& before, const ShortTermBuffer& buffer)>;

// Joins the narratives of the buffered soft insights.
NarrativeMerger concatenating_merger();
// Asks a text model to fold the new insights into the persona.
NarrativeMerger text_model_merger(std::shared_ptr<const TextModel> model);

struct RetrievedInsights {
    SoftConstraintSet soft;
    CommonsenseRuleSet commonsense;

    bool operator==(const RetrievedInsights&) const = default;
};

// Rules bundled with the library.
CommonsenseRuleSet seed_rules();

// Short- and long-term memory over a document store: one "user-<id>"
// document per user and one "commonsense" document. Every mutation is
// written through, so a new instance over the same store resumes where the
// old one stopped.
class MemoryStore {
  public:
    explicit MemoryStore(std::shared_ptr<DocumentStore> store, MemoryConfig cfg = {});

    // Opens (or replaces) the user's active scenario with an empty buffer.
    void begin_scenario(const std::string& user_id, const std::string& scenario_id);
    [[nodiscard]] std::optional<std::string> active_scenario(const std::string& user_id) const;

    // Throws NoActiveScenario.
    void append_short_term(const std::string& user_id, MemoryEvent event);
    [[nodiscard]] ShortTermBuffer short_term(const std::string& user_id) const;

    // Merges the buffer into the persona: structured fields last-writer-wins,
    // one narrative entry tagged with the scenario (oldest evicted past the
    // cap), commonsense insights upserted as learned rules. Clears the
    // buffer and closes the scenario. When the merger fails with
    // ModelFailure only the structured fields are merged.
    // Throws NoActiveScenario, EmptyBuffer.
    UserPersona consolidate(const std::string& user_id, const NarrativeMerger& merger = concatenating_merger());

    // Persona as soft constraints plus the global rule set. Unknown users
    // get an empty soft set. The scenario context is currently unused.
    [[nodiscard]] RetrievedInsights retrieve_insights(const std::string& user_id,
                                                      const TravelRequest* scenario = nullptr) const;

    [[nodiscard]] std::optional<UserPersona> persona(const std::string& user_id) const;
    [[nodiscard]] MemorySnapshot snapshot() const;

    // Replaces a persona wholesale (e.g. imported records).
    void put_persona(UserPersona persona);

  private:
    void persist_user(const std::string& user_id);
    void persist_commonsense();
    void load();

    std::shared_ptr<DocumentStore> store_;
    MemoryConfig cfg_;
    mutable std::shared_mutex mu_;
    MemorySnapshot state_;
};

SoftConstraintSet to_soft_constraints(const UserPersona& p);

// Document layout of one user: the structured fields at top level next to
// "user_id", "narratives" and (when a scenario is open) "short_term".
nlohmann::json user_document(const std::string& user_id, const UserPersona* persona, const ShortTermBuffer* buffer);
// Accepts the flat record layout, with numeric or string user ids. Throws
// MalformedDocument.
std::pair<UserPersona, std::optional<ShortTermBuffer>> parse_user_document(const nlohmann::json& doc);

nlohmann::json snapshot_to_json(const MemorySnapshot& s);
MemorySnapshot snapshot_from_json(const nlohmann::json& j);

// Writes the whole snapshot as one document and reads it back.
void save_snapshot(DocumentStore& store, const std::string& key, const MemorySnapshot& s);
MemorySnapshot load_snapshot(const DocumentStore& store, const std::string& key);

void to_json(nlohmann::json& j, const MemoryEvent& e);
void from_json(const nlohmann::json& j, MemoryEvent& e);

} // namespace travel::memory
