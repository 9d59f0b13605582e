#pragma once

// Deterministic random generators shared by the property tests.

#include "subqa/document.hpp"

#include <random>
#include <string>

namespace testsupport {

inline std::string random_payload_line(std::mt19937& rng)
{
    static const std::string pool =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,!?'-";
    std::uniform_int_distribution<std::size_t> len_dist(1, 40);
    std::uniform_int_distribution<std::size_t> ch_dist(0, pool.size() - 1);
    const std::size_t len = len_dist(rng);
    std::string line;
    for (std::size_t i = 0; i < len; ++i)
        line += pool[ch_dist(rng)];
    // Keep lines structurally inert: non-blank, no cue separator.
    if (line.find_first_not_of(' ') == std::string::npos)
        line[0] = 'x';
    std::size_t arrow;
    while ((arrow = line.find("-->")) != std::string::npos)
        line[arrow] = 'x';
    return line;
}

inline subqa::SubtitleDocument random_document(std::mt19937& rng, subqa::SubtitleFormat format,
                                               std::size_t max_cues = 8)
{
    subqa::SubtitleDocument doc;
    doc.format = format;
    std::uniform_int_distribution<int> coin(0, 1);
    doc.had_bom = coin(rng) == 1;
    if (format == subqa::SubtitleFormat::VTT && coin(rng) == 1)
        doc.header = "Kind: captions\nLanguage: de";

    std::uniform_int_distribution<std::size_t> cue_dist(1, max_cues);
    std::uniform_int_distribution<long long> gap_dist(0, 4000);
    std::uniform_int_distribution<long long> dur_dist(400, 7000);
    std::uniform_int_distribution<std::size_t> line_dist(1, 3);

    const std::size_t n = cue_dist(rng);
    long long t = gap_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        subqa::Cue cue;
        cue.start = {t};
        cue.end = {t + dur_dist(rng)};
        t = cue.end.millis + gap_dist(rng);
        if (format == subqa::SubtitleFormat::VTT) {
            if (coin(rng) == 1)
                cue.vtt_id = "cue-" + std::to_string(i) + "a";
            if (coin(rng) == 1)
                cue.settings = "align:start";
        }
        const std::size_t lines = line_dist(rng);
        for (std::size_t l = 0; l < lines; ++l)
            cue.lines.push_back(random_payload_line(rng));
        doc.cues.push_back(std::move(cue));
    }
    return doc;
}

// Well-formed markup line: nested known/unknown tags plus occasional void tags.
inline std::string random_balanced_line(std::mt19937& rng, int depth = 0)
{
    static const std::string pool = "abcdefghijklmnopqrstuvwxyz .,!?'-";
    static const char* tags[] = {"i", "b", "u", "v Speaker", "c.loud", "ruby"};
    std::uniform_int_distribution<std::size_t> ch_dist(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> piece_dist(1, 4);
    std::uniform_int_distribution<int> kind_dist(0, depth >= 3 ? 1 : 3);
    std::uniform_int_distribution<std::size_t> tag_dist(0, std::size(tags) - 1);

    std::string out;
    const std::size_t pieces = piece_dist(rng);
    for (std::size_t p = 0; p < pieces; ++p) {
        switch (kind_dist(rng)) {
        case 2: { // tag pair
            const std::string tag = tags[tag_dist(rng)];
            const std::string name = tag.substr(0, tag.find(' '));
            out += "<" + tag + ">" + random_balanced_line(rng, depth + 1) + "</" + name + ">";
            break;
        }
        case 3: // void tag
            out += "<00:01:02.000/>";
            break;
        default: {
            std::uniform_int_distribution<std::size_t> len_dist(1, 12);
            const std::size_t len = len_dist(rng);
            for (std::size_t i = 0; i < len; ++i)
                out += pool[ch_dist(rng)];
            break;
        }
        }
    }
    return out.empty() ? "x" : out;
}

} // namespace testsupport
