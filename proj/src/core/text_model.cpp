#include "travel/core/text_model.hpp"

#include "travel/core/error.hpp"

#include <json.hpp>

#include <fstream>

namespace travel {

RecordingTextModel::RecordingTextModel(std::shared_ptr<const TextModel> inner, std::filesystem::path transcript)
    : inner_(std::move(inner)), path_(std::move(transcript)) {
    if (!inner_) throw Error(ErrorCode::InvalidValue, "recording model needs an inner model");
}

std::string RecordingTextModel::complete(const std::string& prompt) const {
    std::string response = inner_->complete(prompt);
    nlohmann::json line = {{"prompt", prompt}, {"response", response}};
    std::lock_guard lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot append transcript " + path_.string());
    out << line.dump() << '\n';
    return response;
}

ReplayTextModel::ReplayTextModel(std::vector<TranscriptEntry> entries) {
    for (auto& e : entries) responses_[e.prompt].push_back(std::move(e.response));
}

ReplayTextModel ReplayTextModel::from_file(const std::filesystem::path& transcript) {
    return ReplayTextModel(read_transcript(transcript));
}

std::string ReplayTextModel::complete(const std::string& prompt) const {
    std::lock_guard lock(mu_);
    auto it = responses_.find(prompt);
    if (it == responses_.end()) throw Error(ErrorCode::ModelFailure, "prompt not found in transcript");
    std::size_t& pos = cursor_[prompt];
    if (pos >= it->second.size()) throw Error(ErrorCode::ModelFailure, "transcript exhausted for prompt");
    return it->second[pos++];
}

std::vector<TranscriptEntry> read_transcript(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::Io, "cannot read transcript " + file.string());
    std::vector<TranscriptEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            out.push_back({j.at("prompt").get<std::string>(), j.at("response").get<std::string>()});
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedDocument, "transcript line: " + std::string(e.what()));
        }
    }
    return out;
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& vars) {
    std::string out;
    out.reserve(tmpl.size());
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            auto close = tmpl.find('}', i + 1);
            if (close != std::string_view::npos) {
                std::string key(tmpl.substr(i + 1, close - i - 1));
                auto it = vars.find(key);
                if (it == vars.end()) throw Error(ErrorCode::InvalidValue, "template placeholder not supplied: " + key);
                out += it->second;
                i = close + 1;
                continue;
            }
        }
        out.push_back(tmpl[i++]);
    }
    return out;
}

std::string extract_json_block(std::string_view text) {
    auto start = text.find_first_of("[{");
    while (start != std::string_view::npos) {
        const char open = text[start];
        const char close = open == '{' ? '}' : ']';
        int depth = 0;
        bool in_string = false;
        for (std::size_t i = start; i < text.size(); ++i) {
            char c = text[i];
            if (in_string) {
                if (c == '\\') ++i;
                else if (c == '"') in_string = false;
                continue;
            }
            if (c == '"') in_string = true;
            else if (c == open) ++depth;
            else if (c == close && --depth == 0) {
                auto candidate = text.substr(start, i - start + 1);
                if (nlohmann::json::accept(candidate)) return std::string(candidate);
                break;
            }
        }
        start = text.find_first_of("[{", start + 1);
    }
    throw Error(ErrorCode::ModelFailure, "no JSON value in model output");
}

} // namespace travel
