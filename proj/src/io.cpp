#include "patience/io.hpp"

#include <algorithm>

#include "patience/errors.hpp"

namespace patience {

namespace {

bool holds_object(const Json& array) {
    return std::any_of(array.begin(), array.end(), [](const Json& v) { return v.is_object(); });
}

void write(const Json& v, std::string& out) {
    if (v.is_object()) {
        out += '{';
        bool first = true;
        for (const auto& [key, member] : v.items()) {
            if (!first) out += ", ";
            first = false;
            out += Json(key).dump();
            out += ": ";
            write(member, out);
        }
        out += '}';
    } else if (v.is_array()) {
        const char* sep = holds_object(v) ? ", " : ",";
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += sep;
            write(v[i], out);
        }
        out += ']';
    } else {
        out += v.dump();
    }
}

std::vector<Pile> read_piles(const Json& piles, const char* name) {
    if (!piles.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of piles");
    std::vector<Pile> out;
    for (const Json& pile : piles) {
        if (!pile.is_array()) throw ParseError(std::string("\"") + name + "\" piles must be arrays");
        Pile p;
        for (const Json& v : pile) {
            if (!v.is_number_integer()) throw ParseError(std::string("\"") + name + "\" entries must be integers");
            p.push_back(v.get<int>());
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::string to_json_text(const Json& value) {
    std::string out;
    write(value, out);
    return out;
}

Json stable_pair_json(const StablePair& pair) {
    Json j;
    j["n"] = pair.size();
    j["R"] = pair.insertion.piles();
    j["S"] = arrival_order(pair.recording);
    return j;
}

std::string stable_pair_to_json(const StablePair& pair) { return to_json_text(stable_pair_json(pair)); }

StablePair stable_pair_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("stable pair JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("R") || !j.contains("S")) {
        throw ParseError("stable pair JSON needs \"R\" and \"S\"");
    }
    StablePair pair;
    try {
        pair.insertion = PileConfig(read_piles(j["R"], "R"));
        pair.recording = recording_from_arrival_order(read_piles(j["S"], "S"));
    } catch (const InvalidPileConfig& e) {
        throw MalformedPair(e.what());
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<int>() != pair.size()) {
            throw MalformedPair("\"n\" does not match the number of cards");
        }
    }
    if (pair.recording.size() != pair.insertion.size()) throw MalformedPair("R and S hold different numbers of entries");
    return pair;
}

std::string pile_config_to_json(const PileConfig& r) {
    Json j;
    j["n"] = r.size();
    j["R"] = r.piles();
    return to_json_text(j);
}

}  // namespace patience
