#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace travel {

// Prompt in, text out. Implementations must tolerate concurrent calls and
// report failures as Error(ModelFailure).
class TextModel {
  public:
    virtual ~TextModel() = default;
    virtual std::string complete(const std::string& prompt) const = 0;
};

struct TranscriptEntry {
    std::string prompt;
    std::string response;

    bool operator==(const TranscriptEntry&) const = default;
};

// Forwards to another model and appends every exchange to a JSON-lines file.
class RecordingTextModel final : public TextModel {
  public:
    RecordingTextModel(std::shared_ptr<const TextModel> inner, std::filesystem::path transcript);
    std::string complete(const std::string& prompt) const override;

  private:
    std::shared_ptr<const TextModel> inner_;
    std::filesystem::path path_;
    mutable std::mutex mu_;
};

// Serves responses from a recorded transcript. Identical prompts are answered
// in recording order; an unknown prompt raises ModelFailure.
class ReplayTextModel final : public TextModel {
  public:
    explicit ReplayTextModel(std::vector<TranscriptEntry> entries);
    static ReplayTextModel from_file(const std::filesystem::path& transcript);

    std::string complete(const std::string& prompt) const override;

  private:
    std::map<std::string, std::vector<std::string>> responses_;
    mutable std::map<std::string, std::size_t> cursor_;
    mutable std::mutex mu_;
};

std::vector<TranscriptEntry> read_transcript(const std::filesystem::path& file);

// Replaces every "{name}" with vars.at(name). Throws InvalidValue when the
// template names a placeholder that is not supplied.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& vars);

// Pulls the first JSON object or array out of free-form model output
// (tolerates surrounding prose and code fences). Throws ModelFailure.
std::string extract_json_block(std::string_view text);

} // namespace travel
