#include "craftbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "craftbench/atlas.hpp"
#include "craftbench/error.hpp"
#include "craftbench/png.hpp"

namespace craftbench {

namespace {

struct Color {
    std::uint8_t r, g, b;
};

constexpr Color kWhite{255, 255, 255};
constexpr Color kBlack{0, 0, 0};
constexpr Color kGrid{220, 220, 220};
constexpr Color kAxis{90, 90, 90};
constexpr std::array<Color, 6> kSeries = {{
    {31, 119, 180},
    {255, 127, 14},
    {44, 160, 44},
    {214, 39, 40},
    {148, 103, 189},
    {140, 86, 75},
}};

// 3x5 glyphs, rows top to bottom; digits come from the atlas.
auto letter_glyph(char c) noexcept -> Glyph {
    static constexpr std::array<std::string_view, 26> kLetters = {
        ".X.X.XXXXX.XX.X", "XX.X.XXX.X.XXX.", ".XXX..X..X...XX", "XX.X.XX.XX.XXX.", "XXXX..XX.X..XXX",
        "XXXX..XX.X..X..", ".XXX..X.XX.X.XX", "X.XX.XXXXX.XX.X", "XXX.X..X..X.XXX", "..X..X..XX.X.X.",
        "X.XX.XXX.X.XX.X", "X..X..X..X..XXX", "X.XXXXXXXX.XX.X", "XX.X.XX.XX.XX.X", ".X.X.XX.XX.X.X.",
        "XX.X.XXX.X..X..", ".X.X.XX.XXX..XX", "XX.X.XXX.X.XX.X", ".XXX...X...XXX.", "XXX.X..X..X..X.",
        "X.XX.XX.XX.XXXX", "X.XX.XX.XX.X.X.", "X.XX.XXXXXXXX.X", "X.XX.X.X.X.XX.X", "X.XX.X.X..X..X.",
        "XXX..X.X.X..XXX",
    };
    auto bits = [](std::string_view rows) {
        Glyph g = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] == 'X') {
                g = static_cast<Glyph>(g | (1U << i));
            }
        }
        return g;
    };
    if (c >= '0' && c <= '9') {
        return TextureAtlas::digit_glyph(c - '0');
    }
    if (c >= 'a' && c <= 'z') {
        c = static_cast<char>(c - 'a' + 'A');
    }
    if (c >= 'A' && c <= 'Z') {
        return bits(kLetters[static_cast<std::size_t>(c - 'A')]);
    }
    switch (c) {
        case '.': return bits(".............X.");
        case '%': return bits("X.X..X.X.X..X.X");
        case '-': return bits("......XXX......");
        case '+': return bits("....X.XXX.X....");
        case ':': return bits("....X.....X....");
        case '_': return bits("............XXX");
        case '/': return bits("..X..X.X.X..X..");
        case '(': return bits(".X.X..X..X...X.");
        case ')': return bits(".X...X..X..X.X.");
        default: return 0;
    }
}

class Canvas {
public:
    Canvas(int w, int h) : img_{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w * h * 3), 255)} {}

    void pixel(int x, int y, Color c) {
        if (x < 0 || y < 0 || x >= img_.width || y >= img_.height) {
            return;
        }
        auto *p = img_.rgb.data() + (static_cast<std::size_t>(y) * static_cast<std::size_t>(img_.width) +
                                     static_cast<std::size_t>(x)) * 3;
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }

    void rect(int x0, int y0, int x1, int y1, Color c) {
        for (int y = std::max(0, y0); y < std::min(img_.height, y1); ++y) {
            for (int x = std::max(0, x0); x < std::min(img_.width, x1); ++x) {
                pixel(x, y, c);
            }
        }
    }

    void line(int x0, int y0, int x1, int y1, Color c) {
        const int dx = std::abs(x1 - x0);
        const int dy = -std::abs(y1 - y0);
        const int sx = x0 < x1 ? 1 : -1;
        const int sy = y0 < y1 ? 1 : -1;
        int err = dx + dy;
        while (true) {
            pixel(x0, y0, c);
            if (x0 == x1 && y0 == y1) {
                break;
            }
            const int e2 = 2 * err;
            if (e2 >= dy) {
                err += dy;
                x0 += sx;
            }
            if (e2 <= dx) {
                err += dx;
                y0 += sy;
            }
        }
    }

    // Horizontal text with its top-left at (x, y).
    void text(int x, int y, std::string_view s, Color c, int scale = 2) {
        for (char ch : s) {
            glyph(letter_glyph(ch), x, y, c, scale, false);
            x += 4 * scale;
        }
    }

    // Text reading bottom to top, its first character's bottom-left at (x, y).
    void text_up(int x, int y, std::string_view s, Color c, int scale = 2) {
        for (char ch : s) {
            glyph(letter_glyph(ch), x, y, c, scale, true);
            y -= 4 * scale;
        }
    }

    static auto text_width(std::string_view s, int scale = 2) -> int {
        return static_cast<int>(s.size()) * 4 * scale - scale;
    }

    auto image() && -> Image { return std::move(img_); }

private:
    void glyph(Glyph g, int x, int y, Color c, int scale, bool rotated) {
        for (int row = 0; row < 5; ++row) {
            for (int col = 0; col < 3; ++col) {
                if (((g >> (row * 3 + col)) & 1U) == 0) {
                    continue;
                }
                // Rotated a quarter turn counter-clockwise: columns run upward.
                const int gx = rotated ? row : col;
                const int gy = rotated ? -col - 1 : row;
                rect(x + gx * scale, y + gy * scale, x + gx * scale + scale, y + gy * scale + scale, c);
            }
        }
    }

    Image img_;
};

auto format_number(double v, int decimals) -> std::string {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

auto summaries(std::span<const RunLog> runs) -> std::vector<RunSummary> {
    std::vector<RunSummary> out;
    out.reserve(runs.size());
    for (const auto &r : runs) {
        out.push_back(summarize(r.episodes, r.seed));
    }
    return out;
}

void legend(Canvas &canvas, std::span<const RunLog> runs, int x, int y) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Color c = kSeries[i % kSeries.size()];
        canvas.rect(x, y, x + 10, y + 10, c);
        canvas.text(x + 14, y, runs[i].name, kBlack);
        x += 24 + Canvas::text_width(runs[i].name);
    }
}

}    // namespace

auto format_score_table(std::span<const RunLog> runs) -> std::string {
    if (runs.empty()) {
        throw CraftError(ErrorCode::empty_input, "no runs to report");
    }
    const auto sums = summaries(runs);
    constexpr int kLabel = 21;
    constexpr int kColumn = 12;
    auto pad_left = [](std::string s, std::size_t w) {
        return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
    };
    auto pad_right = [](std::string s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };

    std::string out = pad_right("Achievement", kLabel);
    for (const auto &r : runs) {
        out += pad_left(r.name, kColumn);
    }
    out += '\n';
    out += std::string(kLabel + kColumn * runs.size(), '-') + '\n';
    for (auto a : all_achievements()) {
        out += pad_right(achievement_title(a), kLabel);
        for (const auto &s : sums) {
            out += pad_left(format_number(s.rates[static_cast<std::size_t>(a)], 1) + "%", kColumn);
        }
        out += '\n';
    }
    out += std::string(kLabel + kColumn * runs.size(), '-') + '\n';
    out += pad_right("Score", kLabel);
    for (const auto &s : sums) {
        out += pad_left(format_number(s.score, 1) + "%", kColumn);
    }
    out += '\n';
    out += pad_right("Return (last 1e5)", kLabel);
    for (const auto &s : sums) {
        out += pad_left(format_number(s.mean_return_last, 1), kColumn);
    }
    out += '\n';
    out += pad_right("Episodes", kLabel);
    for (const auto &s : sums) {
        out += pad_left(std::to_string(s.episodes), kColumn);
    }
    out += '\n';
    const auto agg = aggregate_runs(sums);
    out += "\nScore over " + std::to_string(agg.runs) + (agg.runs == 1 ? " seed: " : " seeds: ") +
           format_number(agg.mean, 1) + " +- " + format_number(agg.standard_error, 1) + "%\n";
    return out;
}

auto render_spectrum_chart(std::span<const RunLog> runs) -> Image {
    if (runs.empty()) {
        throw CraftError(ErrorCode::empty_input, "no runs to chart");
    }
    const auto sums = summaries(runs);
    constexpr int kLeft = 70;
    constexpr int kTop = 40;
    constexpr int kPlotH = 300;
    constexpr int kGroup = 36;
    constexpr int kBottom = 170;
    constexpr double kFloor = -2.0;    // log10 of 0.01 %
    constexpr double kCeil = 2.0;      // log10 of 100 %
    const int plot_w = kGroup * kNumAchievements;
    Canvas canvas(kLeft + plot_w + 20, kTop + kPlotH + kBottom);

    auto y_of = [&](double log_rate) {
        const double t = (log_rate - kFloor) / (kCeil - kFloor);
        return kTop + kPlotH - static_cast<int>(std::lround(t * kPlotH));
    };
    for (int e = -2; e <= 2; ++e) {
        const int y = y_of(e);
        canvas.line(kLeft, y, kLeft + plot_w, y, kGrid);
        const std::string label = e < 0 ? (e == -2 ? "0.01" : "0.1") : format_number(std::pow(10.0, e), 0);
        canvas.text(kLeft - 8 - Canvas::text_width(label), y - 5, label, kBlack);
    }
    canvas.text_up(14, kTop + kPlotH / 2 + 70, "SUCCESS RATE (%)", kBlack);
    legend(canvas, runs, kLeft, 10);

    const int bar_w = std::max(2, (kGroup - 6) / static_cast<int>(runs.size()));
    for (int a = 0; a < kNumAchievements; ++a) {
        const int gx = kLeft + a * kGroup + 3;
        for (std::size_t r = 0; r < sums.size(); ++r) {
            const double rate = sums[r].rates[static_cast<std::size_t>(a)];
            const int x0 = gx + static_cast<int>(r) * bar_w;
            const int floor_y = y_of(kFloor);
            // Zero (and sub-floor) rates still get a visible stub.
            const int top = rate > 0.0 ? std::min(floor_y - 2, y_of(std::clamp(std::log10(rate), kFloor, kCeil)))
                                       : floor_y - 2;
            canvas.rect(x0, top, x0 + bar_w - 1, floor_y, kSeries[r % kSeries.size()]);
        }
        const std::string name(achievement_name(static_cast<Achievement>(a)));
        canvas.text_up(kLeft + a * kGroup + kGroup / 2 - 5, kTop + kPlotH + 8 + Canvas::text_width(name), name, kBlack);
    }
    canvas.line(kLeft, kTop, kLeft, kTop + kPlotH, kAxis);
    canvas.line(kLeft, kTop + kPlotH, kLeft + plot_w, kTop + kPlotH, kAxis);
    return std::move(canvas).image();
}

auto render_reward_curve(std::span<const RunLog> runs) -> Image {
    if (runs.empty()) {
        throw CraftError(ErrorCode::empty_input, "no runs to chart");
    }
    constexpr int kLeft = 70;
    constexpr int kTop = 40;
    constexpr int kPlotW = 720;
    constexpr int kPlotH = 300;
    constexpr std::size_t kSmooth = 50;
    Canvas canvas(kLeft + kPlotW + 20, kTop + kPlotH + 50);

    struct Point {
        double step;
        double value;
    };
    std::vector<std::vector<Point>> series;
    double max_step = 1.0;
    double lo = 0.0;
    double hi = 1.0;
    for (const auto &run : runs) {
        std::vector<Point> pts;
        double step = 0.0;
        double window = 0.0;
        for (std::size_t i = 0; i < run.episodes.size(); ++i) {
            const auto &e = run.episodes[i];
            step += e.length;
            window += e.episode_return();
            if (i >= kSmooth) {
                window -= run.episodes[i - kSmooth].episode_return();
            }
            const double avg = window / static_cast<double>(std::min(i + 1, kSmooth));
            pts.push_back({step, avg});
            lo = std::min(lo, avg);
            hi = std::max(hi, avg);
        }
        max_step = std::max(max_step, step);
        series.push_back(std::move(pts));
    }
    lo = std::floor(lo);
    hi = std::ceil(hi);

    auto px = [&](double step) { return kLeft + static_cast<int>(std::lround(step / max_step * kPlotW)); };
    auto py = [&](double v) { return kTop + kPlotH - static_cast<int>(std::lround((v - lo) / (hi - lo) * kPlotH)); };
    for (int i = 0; i <= 4; ++i) {
        const double v = lo + (hi - lo) * i / 4.0;
        canvas.line(kLeft, py(v), kLeft + kPlotW, py(v), kGrid);
        const auto label = format_number(v, 1);
        canvas.text(kLeft - 8 - Canvas::text_width(label), py(v) - 5, label, kBlack);
    }
    for (int i = 0; i <= 4; ++i) {
        const double s = max_step * i / 4.0;
        const auto label = format_number(s, 0);
        canvas.text(px(s) - Canvas::text_width(label) / 2, kTop + kPlotH + 8, label, kBlack);
    }
    canvas.text(kLeft + kPlotW / 2 - 40, kTop + kPlotH + 28, "ENV STEPS", kBlack);
    canvas.text_up(14, kTop + kPlotH / 2 + 24, "RETURN", kBlack);
    for (std::size_t r = 0; r < series.size(); ++r) {
        const Color c = kSeries[r % kSeries.size()];
        const auto &pts = series[r];
        for (std::size_t i = 1; i < pts.size(); ++i) {
            canvas.line(px(pts[i - 1].step), py(pts[i - 1].value), px(pts[i].step), py(pts[i].value), c);
        }
        if (pts.size() == 1) {
            canvas.rect(px(pts[0].step) - 1, py(pts[0].value) - 1, px(pts[0].step) + 2, py(pts[0].value) + 2, c);
        }
    }
    canvas.line(kLeft, kTop, kLeft, kTop + kPlotH, kAxis);
    canvas.line(kLeft, kTop + kPlotH, kLeft + kPlotW, kTop + kPlotH, kAxis);
    legend(canvas, runs, kLeft, 10);
    return std::move(canvas).image();
}

auto summary_json(std::span<const RunLog> runs) -> std::string {
    const auto sums = summaries(runs);
    nlohmann::ordered_json j;
    auto &arr = j["runs"];
    arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto &s = sums[i];
        nlohmann::ordered_json r;
        r["name"] = runs[i].name;
        r["seed"] = s.seed;
        r["episodes"] = s.episodes;
        r["steps"] = s.total_steps;
        r["score"] = s.score;
        r["mean_return_last"] = s.mean_return_last;
        auto &rates = r["success_rates"];
        rates = nlohmann::ordered_json::object();
        for (auto a : all_achievements()) {
            rates[std::string(achievement_name(a))] = s.rates[static_cast<std::size_t>(a)];
        }
        arr.push_back(std::move(r));
    }
    const auto agg = aggregate_runs(sums);
    j["aggregate"] = {{"score_mean", agg.mean}, {"score_stderr", agg.standard_error}, {"runs", agg.runs}};
    return j.dump(2) + "\n";
}

auto write_report(std::span<const RunLog> runs, const std::filesystem::path &out_dir) -> ReportFiles {
    if (runs.empty()) {
        throw CraftError(ErrorCode::empty_input, "no runs to report");
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    ReportFiles files{out_dir / "scores.txt", out_dir / "spectrum.png", out_dir / "reward_curve.png",
                      out_dir / "summary.json"};
    auto write_text = [](const std::filesystem::path &p, const std::string &text) {
        std::ofstream f(p, std::ios::binary);
        f << text;
        f.close();
        if (!f) {
            throw CraftError(ErrorCode::io_failure, "cannot write " + p.string());
        }
    };
    write_text(files.table, format_score_table(runs));
    write_png(files.spectrum, render_spectrum_chart(runs));
    write_png(files.reward_curve, render_reward_curve(runs));
    write_text(files.summary, summary_json(runs));
    return files;
}

auto load_run_log(const std::filesystem::path &dir) -> RunLog {
    RunLog log;
    log.name = dir.filename().string();
    if (log.name.empty()) {
        log.name = dir.parent_path().filename().string();
    }
    log.episodes = read_stats(dir / "stats.jsonl");
    std::ifstream meta(dir / "run.json");
    if (meta) {
        const auto j = nlohmann::json::parse(meta, nullptr, false);
        if (!j.is_discarded() && j.contains("seed") && j["seed"].is_number_unsigned()) {
            log.seed = j["seed"].get<std::uint64_t>();
        }
    }
    return log;
}

}    // namespace craftbench
