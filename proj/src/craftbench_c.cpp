#include "craftbench/craftbench_c.h"

#include <charconv>
#include <cstring>
#include <new>
#include <string>

#include "craftbench/env.hpp"
#include "craftbench/error.hpp"

using namespace craftbench;

struct crafter_env {
    explicit crafter_env(BalanceConfig config) : env(std::move(config)) { info.reserve(16 * 1024); }

    Env env;
    std::uint64_t run_seed = 0;
    std::uint64_t next_episode = 0;
    std::string info;
};

namespace {

thread_local std::string last_error;

auto fail(int code, const std::string &message) -> int {
    last_error = message;
    return code;
}

// Runs `body`, translating exceptions into return codes.
template <typename F>
auto guarded(F &&body) -> int {
    try {
        return body();
    } catch (const CraftError &e) {
        return fail(static_cast<int>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(CRAFTER_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception &e) {
        return fail(CRAFTER_INTERNAL_ERROR, e.what());
    }
}

void append_int(std::string &out, long long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void append_key(std::string &out, std::string_view key) {
    out += '"';
    out += key;
    out += "\":";
}

template <typename Names, typename Values>
void append_counts(std::string &out, std::string_view key, int n, Names name, const Values &values) {
    append_key(out, key);
    out += '{';
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            out += ',';
        }
        append_key(out, name(i));
        append_int(out, values[static_cast<std::size_t>(i)]);
    }
    out += '}';
}

// Hand-formatted so steady-state stepping reuses one buffer.
void format_info(const Info &info, std::string &out) {
    out.clear();
    out.append(4, '\0');
    out += '{';
    append_key(out, "step");
    append_int(out, info.step);
    out += ',';
    append_key(out, "discount");
    out += info.discount == 0.0 ? "0.0" : "1.0";
    out += ',';
    append_key(out, "sleeping");
    out += info.sleeping ? "true" : "false";
    out += ',';
    append_key(out, "day_tick");
    append_int(out, info.day_tick);
    out += ',';
    append_key(out, "player_pos");
    out += '[';
    append_int(out, info.player_pos.x);
    out += ',';
    append_int(out, info.player_pos.y);
    out += "],";
    append_key(out, "facing");
    static constexpr std::array<std::string_view, 4> kFacing = {"\"north\"", "\"south\"", "\"east\"", "\"west\""};
    out += kFacing[static_cast<std::size_t>(info.facing)];
    out += ',';
    append_counts(out, "vitals", kNumVitals, [](int i) { return vital_name(static_cast<Vital>(i)); }, info.vitals);
    out += ',';
    append_counts(out, "inventory", kNumItems, [](int i) { return item_name(static_cast<Item>(i)); }, info.inventory);
    out += ',';
    append_counts(
        out, "achievements", kNumAchievements, [](int i) { return achievement_name(static_cast<Achievement>(i)); },
        info.achievements.counts());
    out += ',';
    // Row-major material indices, 64 rows of 64.
    append_key(out, "semantic");
    out += '[';
    for (int i = 0; i < kNumCells; ++i) {
        if (i > 0) {
            out += ',';
        }
        append_int(out, static_cast<int>(info.semantic[static_cast<std::size_t>(i)]));
    }
    out += "]}";
    const auto n = static_cast<std::uint32_t>(out.size() - 4);
    for (int i = 0; i < 4; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<char>((n >> (8 * i)) & 0xFF);
    }
}

auto copy_info(const std::string &info, std::uint8_t *buf, std::size_t cap, std::size_t *len) -> int {
    if (len != nullptr) {
        *len = info.size();
    }
    if (buf == nullptr) {
        return CRAFTER_OK;
    }
    if (cap < info.size()) {
        return fail(CRAFTER_BUFFER_TOO_SMALL,
                    "info needs " + std::to_string(info.size()) + " bytes, buffer has " + std::to_string(cap));
    }
    std::memcpy(buf, info.data(), info.size());
    return CRAFTER_OK;
}

}    // namespace

extern "C" {

int crafter_create(uint64_t run_seed, const char *config_path, crafter_env **out) {
    return guarded([&]() -> int {
        if (out == nullptr) {
            return fail(CRAFTER_INVALID_ARGUMENT, "out pointer is NULL");
        }
        *out = nullptr;
        BalanceConfig config = config_path != nullptr ? BalanceConfig::load(config_path) : BalanceConfig{};
        auto *env = new crafter_env(std::move(config));
        env->run_seed = run_seed;
        *out = env;
        return CRAFTER_OK;
    });
}

int crafter_reset(crafter_env *env, uint8_t *obs) {
    return guarded([&]() -> int {
        if (env == nullptr) {
            return fail(CRAFTER_INVALID_HANDLE, "NULL environment handle");
        }
        const auto &o = env->env.reset(env->run_seed, env->next_episode);
        ++env->next_episode;
        format_info(env->env.last().info, env->info);
        if (obs != nullptr) {
            std::memcpy(obs, o.data(), o.size());
        }
        return CRAFTER_OK;
    });
}

int crafter_step(crafter_env *env, int action, uint8_t *obs, float *reward, uint8_t *done, uint8_t *info,
                 size_t info_cap, size_t *info_len) {
    return guarded([&]() -> int {
        if (env == nullptr) {
            return fail(CRAFTER_INVALID_HANDLE, "NULL environment handle");
        }
        const auto &r = env->env.step(action);
        if (obs != nullptr) {
            std::memcpy(obs, r.observation.data(), r.observation.size());
        }
        if (reward != nullptr) {
            *reward = static_cast<float>(r.reward);
        }
        if (done != nullptr) {
            *done = r.done ? 1 : 0;
        }
        format_info(r.info, env->info);
        return copy_info(env->info, info, info_cap, info_len);
    });
}

int crafter_last_info(crafter_env *env, uint8_t *info, size_t info_cap, size_t *info_len) {
    return guarded([&]() -> int {
        if (env == nullptr) {
            return fail(CRAFTER_INVALID_HANDLE, "NULL environment handle");
        }
        if (!env->env.is_reset()) {
            return fail(CRAFTER_NOT_RESET, "no step or reset yet");
        }
        return copy_info(env->info, info, info_cap, info_len);
    });
}

int crafter_close(crafter_env *env) {
    delete env;
    return CRAFTER_OK;
}

const char *crafter_last_error(void) {
    return last_error.c_str();
}

}    // extern "C"
