#include "travel/memory/document_store.hpp"

#include "travel/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace travel::memory {
namespace fs = std::filesystem;

std::optional<std::string> InMemoryStore::read(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = docs_.find(key);
    if (it == docs_.end()) return std::nullopt;
    return it->second;
}

void InMemoryStore::write(const std::string& key, const std::string& text) {
    std::lock_guard lock(mu_);
    docs_[key] = text;
}

void InMemoryStore::remove(const std::string& key) {
    std::lock_guard lock(mu_);
    docs_.erase(key);
}

std::vector<std::string> InMemoryStore::keys() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [k, v] : docs_) out.push_back(k);
    return out;
}

std::string encode_key(const std::string& key) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : key) {
        if (std::isalnum(c) || c == '_' || c == '-' || c == '.') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        }
    }
    return out;
}

std::string decode_key(const std::string& name) {
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '%' && i + 2 < name.size()) {
            out += static_cast<char>(std::stoi(name.substr(i + 1, 2), nullptr, 16));
            i += 2;
        } else {
            out += name[i];
        }
    }
    return out;
}

DirectoryStore::DirectoryStore(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_)) {
        throw Error(ErrorCode::Io, "cannot use memory directory " + root_.string() + ": " + ec.message());
    }
}

fs::path DirectoryStore::file_for(const std::string& key) const {
    if (key.empty()) throw Error(ErrorCode::InvalidValue, "empty document key");
    return root_ / (encode_key(key) + ".json");
}

std::optional<std::string> DirectoryStore::read(const std::string& key) const {
    const auto path = file_for(key);
    std::lock_guard lock(mu_);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void DirectoryStore::write(const std::string& key, const std::string& text) {
    const auto path = file_for(key);
    auto tmp = path;
    tmp += ".tmp";
    std::lock_guard lock(mu_);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot replace " + path.string() + ": " + ec.message());
}

void DirectoryStore::remove(const std::string& key) {
    const auto path = file_for(key);
    std::lock_guard lock(mu_);
    std::error_code ec;
    fs::remove(path, ec);
}

std::vector<std::string> DirectoryStore::keys() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(root_)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        out.push_back(decode_key(e.path().stem().string()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace travel::memory
