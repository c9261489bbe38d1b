#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace travel::memory {

// Key -> JSON text. Implementations are safe for concurrent use and replace
// documents atomically.
class DocumentStore {
  public:
    virtual ~DocumentStore() = default;
    [[nodiscard]] virtual std::optional<std::string> read(const std::string& key) const = 0;
    virtual void write(const std::string& key, const std::string& text) = 0;
    virtual void remove(const std::string& key) = 0;
    [[nodiscard]] virtual std::vector<std::string> keys() const = 0;
};

class InMemoryStore final : public DocumentStore {
  public:
    [[nodiscard]] std::optional<std::string> read(const std::string& key) const override;
    void write(const std::string& key, const std::string& text) override;
    void remove(const std::string& key) override;
    [[nodiscard]] std::vector<std::string> keys() const override;

  private:
    mutable std::mutex mu_;
    std::map<std::string, std::string> docs_;
};

// One "<key>.json" file per document. Writes go to a temporary file that is
// then renamed over the target. Characters outside [A-Za-z0-9_.-] in keys
// are percent-encoded in file names.
class DirectoryStore final : public DocumentStore {
  public:
    explicit DirectoryStore(std::filesystem::path root);

    [[nodiscard]] std::optional<std::string> read(const std::string& key) const override;
    void write(const std::string& key, const std::string& text) override;
    void remove(const std::string& key) override;
    [[nodiscard]] std::vector<std::string> keys() const override;

    [[nodiscard]] const std::filesystem::path& root() const noexcept { return root_; }

  private:
    std::filesystem::path file_for(const std::string& key) const;

    std::filesystem::path root_;
    mutable std::mutex mu_;
};

std::string encode_key(const std::string& key);
std::string decode_key(const std::string& name);

} // namespace travel::memory
