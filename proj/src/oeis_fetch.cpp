#include "gapbal/errors.hpp"
#include "gapbal/oeis.hpp"

#include "httplib.h"

#include <fstream>
#include <map>
#include <memory>
#include <mutex>

namespace gapbal::oeis {

std::string expand_url(const std::string& url_template, const std::string& id) {
    if (!is_valid_id(id)) throw DomainError("not an OEIS id: '" + id + "'");
    std::string url = url_template;
    auto replace_all = [&url](const std::string& key, const std::string& value) {
        for (std::size_t pos = url.find(key); pos != std::string::npos; pos = url.find(key, pos + value.size())) {
            url.replace(pos, key.size(), value);
        }
    };
    replace_all("{id}", id);
    replace_all("{num}", id.substr(1));
    return url;
}

namespace {

std::mutex& id_mutex(const std::string& id) {
    static std::mutex registry_mutex;
    static std::map<std::string, std::unique_ptr<std::mutex>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[id];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

std::optional<SplitUrl> split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return SplitUrl{url, "/"};
    return SplitUrl{url.substr(0, path_start), url.substr(path_start)};
}

RefreshResult fall_back(const std::filesystem::path& dir, const std::string& id, std::string why) {
    RefreshResult res;
    res.message = std::move(why);
    try {
        res.bfile = load_fixture(dir, id);
        res.message += "; kept existing fixture";
    } catch (const std::exception& e) {
        res.message += "; no usable fixture either (" + std::string(e.what()) + ")";
    }
    return res;
}

}  // namespace

RefreshResult refresh_fixture(const std::filesystem::path& dir, const std::string& id, const FetchOptions& opts) {
    const std::string url = expand_url(opts.url_template, id);
    std::lock_guard single_flight(id_mutex(id));

    const auto parts = split_url(url);
    if (!parts) return fall_back(dir, id, "malformed URL " + url);

    std::string body;
    try {
        httplib::Client client(parts->origin);
        client.set_connection_timeout(opts.timeout);
        client.set_read_timeout(opts.timeout);
        client.set_follow_location(true);
        auto response = client.Get(parts->path);
        if (!response) return fall_back(dir, id, "fetch of " + url + " failed: " + httplib::to_string(response.error()));
        if (response->status != 200) {
            return fall_back(dir, id, "fetch of " + url + " returned HTTP " + std::to_string(response->status));
        }
        body = std::move(response->body);
    } catch (const std::exception& e) {
        return fall_back(dir, id, "fetch of " + url + " failed: " + e.what());
    }

    BFile parsed;
    try {
        parsed = parse_bfile(body, id);
    } catch (const ParseError& e) {
        return fall_back(dir, id, "downloaded b-file for " + id + " is malformed: " + e.what());
    }
    if (parsed.entries.empty()) return fall_back(dir, id, "downloaded b-file for " + id + " has no entries");

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = fixture_path(dir, id);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return fall_back(dir, id, "cannot write " + tmp);
        out << serialize_bfile(parsed);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) return fall_back(dir, id, "cannot replace " + path.string() + ": " + ec.message());

    RefreshResult res;
    res.fetched = true;
    res.message = "wrote " + std::to_string(parsed.entries.size()) + " terms to " + path.string();
    res.bfile = std::move(parsed);
    return res;
}

}  // namespace gapbal::oeis
