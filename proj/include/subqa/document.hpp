#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subqa {

enum class SubtitleFormat { VTT, SRT };

// Milliseconds since file start, capped at 99:59:59.999.
struct Timestamp {
    std::int64_t millis = 0;

    static constexpr std::int64_t kMax = 359'999'999;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

// Formats as HH:MM:SS.mmm (VTT) or HH:MM:SS,mmm (SRT).
std::string format_timestamp(Timestamp ts, SubtitleFormat format);

struct Cue {
    std::optional<std::uint64_t> index; // written SRT cue number
    std::optional<std::string> vtt_id;  // VTT cue identifier line, verbatim
    Timestamp start;
    Timestamp end;
    std::string settings;               // VTT cue settings, opaque
    std::vector<std::string> lines;     // payload lines, markup preserved verbatim

    // Payload reconstructed by joining lines with '\n'. Equals the source bytes.
    std::string raw() const;

    double duration_seconds() const { return static_cast<double>(end.millis - start.millis) / 1000.0; }
};

struct SubtitleDocument {
    SubtitleFormat format = SubtitleFormat::VTT;
    bool had_bom = false;
    std::optional<std::string> header; // VTT preamble after the WEBVTT line
    std::vector<Cue> cues;
};

} // namespace subqa
