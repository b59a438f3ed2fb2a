#include "craftbench/record.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "craftbench/error.hpp"

namespace craftbench {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'R', 'T', 'R'};

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

auto get_u32(const std::uint8_t *p) noexcept -> std::uint32_t {
    return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

[[noreturn]] void bad(const std::string &why) {
    throw CraftError(ErrorCode::invalid_record, "invalid episode record: " + why);
}

template <typename T>
auto field(const nlohmann::json &header, const char *key) -> T {
    const auto it = header.find(key);
    if (it == header.end()) {
        bad(std::string("missing header field ") + key);
    }
    if constexpr (std::is_same_v<T, bool>) {
        if (!it->is_boolean()) {
            bad(std::string("header field ") + key + " is not a boolean");
        }
    } else {
        if (!it->is_number_unsigned()) {
            bad(std::string("header field ") + key + " is not an unsigned integer");
        }
    }
    return it->get<T>();
}

}    // namespace

void EpisodeRecord::append(Action action, double reward, bool done, const Observation *obs) {
    actions.push_back(static_cast<std::uint8_t>(action));
    rewards.push_back(static_cast<float>(reward));
    dones.push_back(done ? 1 : 0);
    if (obs != nullptr) {
        images.insert(images.end(), obs->begin(), obs->end());
    }
}

auto encode_record(const EpisodeRecord &rec) -> std::vector<std::uint8_t> {
    const std::size_t t = rec.length();
    if (rec.rewards.size() != t || rec.dones.size() != t || (rec.has_images() && rec.images.size() != t * kObsBytes)) {
        throw CraftError(ErrorCode::invalid_argument, "episode record arrays have inconsistent lengths");
    }
    nlohmann::ordered_json header;
    header["length"] = t;
    header["has_images"] = rec.has_images();
    header["run_seed"] = rec.run_seed;
    header["episode_index"] = rec.episode_index;
    header["config_hash"] = rec.config_hash;
    const std::string text = header.dump();

    std::vector<std::uint8_t> out;
    out.reserve(9 + text.size() + t * 6 + rec.images.size());
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kRecordVersion);
    put_u32(out, static_cast<std::uint32_t>(text.size()));
    out.insert(out.end(), text.begin(), text.end());
    out.insert(out.end(), rec.actions.begin(), rec.actions.end());
    for (float r : rec.rewards) {
        put_u32(out, std::bit_cast<std::uint32_t>(r));
    }
    out.insert(out.end(), rec.dones.begin(), rec.dones.end());
    out.insert(out.end(), rec.images.begin(), rec.images.end());
    return out;
}

auto decode_record(std::span<const std::uint8_t> bytes) -> EpisodeRecord {
    if (bytes.size() < 9 || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        bad("bad magic");
    }
    if (bytes[4] != kRecordVersion) {
        bad("unsupported version " + std::to_string(bytes[4]));
    }
    const std::size_t header_len = get_u32(bytes.data() + 5);
    if (header_len > bytes.size() - 9) {
        bad("truncated header");
    }
    const auto *header_begin = reinterpret_cast<const char *>(bytes.data() + 9);
    const auto header = nlohmann::json::parse(header_begin, header_begin + header_len, nullptr, false);
    if (header.is_discarded() || !header.is_object()) {
        bad("header is not a JSON object");
    }

    EpisodeRecord rec;
    const auto t = field<std::uint64_t>(header, "length");
    const bool images = field<bool>(header, "has_images");
    rec.run_seed = field<std::uint64_t>(header, "run_seed");
    rec.episode_index = field<std::uint64_t>(header, "episode_index");
    rec.config_hash = field<std::uint64_t>(header, "config_hash");
    if (images && t == 0) {
        bad("has_images set on an empty episode");
    }

    const std::size_t body = bytes.size() - 9 - header_len;
    const std::size_t per_step = 6 + (images ? kObsBytes : 0);
    if (t > body / per_step || body != t * per_step) {
        bad("body size does not match length " + std::to_string(t));
    }
    const std::uint8_t *p = bytes.data() + 9 + header_len;
    rec.actions.assign(p, p + t);
    p += t;
    rec.rewards.resize(t);
    for (std::size_t i = 0; i < t; ++i, p += 4) {
        rec.rewards[i] = std::bit_cast<float>(get_u32(p));
    }
    rec.dones.assign(p, p + t);
    p += t;
    if (images) {
        rec.images.assign(p, p + t * kObsBytes);
    }
    for (auto a : rec.actions) {
        if (a >= kNumActions) {
            bad("action byte out of range");
        }
    }
    for (auto d : rec.dones) {
        if (d > 1) {
            bad("done byte is not 0 or 1");
        }
    }
    return rec;
}

auto record_filename(const EpisodeRecord &rec) -> std::string {
    return "episode-" + std::to_string(rec.episode_index) + "-" + std::to_string(rec.length()) + ".crtr";
}

auto save_record(const EpisodeRecord &rec, const std::filesystem::path &dir) -> std::filesystem::path {
    const auto bytes = encode_record(rec);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / record_filename(rec);
    std::ofstream f(path, std::ios::binary);
    f.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    f.close();
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot write " + path.string());
    }
    return path;
}

auto load_record(const std::filesystem::path &path) -> EpisodeRecord {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw CraftError(ErrorCode::io_failure, "cannot open " + path.string());
    }
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad()) {
        throw CraftError(ErrorCode::io_failure, "cannot read " + path.string());
    }
    return decode_record(bytes);
}

}    // namespace craftbench
