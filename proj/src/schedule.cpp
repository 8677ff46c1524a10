#include "schedule.hpp"

#include <json.hpp>
#include <map>
#include <stdexcept>

namespace rearr {

namespace {

using nlohmann::json;

json site_list(const std::vector<Site>& sites) {
    json arr = json::array();
    for (Site s : sites) arr.push_back({s.row, s.col});
    return arr;
}

const char* stage_name(Stage s) {
    return s == Stage::Compression ? "compression" : "postprocess";
}

} // namespace

std::string export_schedule(const MoveLog& log, const GridSpec& spec, const TimeModel& tm,
                            bool continuous_release) {
    const Metrics m = tally(log, continuous_release);

    json records = json::array();
    // Pending releases per op, coalesced when the tweezer row drops atoms
    // without stopping.
    int pending_op = -1;
    Stage pending_stage = Stage::Compression;
    std::vector<Site> pending_sites;
    auto flush_pending = [&]() {
        if (pending_op < 0) return;
        records.push_back({{"op", pending_op},
                           {"stage", stage_name(pending_stage)},
                           {"event", "release"},
                           {"sites", site_list(pending_sites)},
                           {"tones", pending_sites.size()},
                           {"duration_us", tm.t1_us}});
        pending_op = -1;
        pending_sites.clear();
    };

    for (const LogEvent& e : log.events()) {
        if (pending_op >= 0 && e.op_id != pending_op) flush_pending();
        switch (e.kind) {
            case LogEvent::Kind::Capture:
                records.push_back({{"op", e.op_id},
                                   {"stage", stage_name(e.stage)},
                                   {"event", "capture"},
                                   {"sites", site_list(e.sites)},
                                   {"tones", e.sites.size()},
                                   {"duration_us", tm.t1_us}});
                break;
            case LogEvent::Kind::Sweep:
                records.push_back({{"op", e.op_id},
                                   {"stage", stage_name(e.stage)},
                                   {"event", "sweep"},
                                   {"dir", {e.drow, e.dcol}},
                                   {"steps", e.steps},
                                   {"sites", site_list(e.sites)},
                                   {"tones", e.sites.size()},
                                   {"duration_us", e.steps * tm.t2_us()}});
                break;
            case LogEvent::Kind::Release:
                if (continuous_release) {
                    pending_op = e.op_id;
                    pending_stage = e.stage;
                    pending_sites.insert(pending_sites.end(), e.sites.begin(), e.sites.end());
                } else {
                    records.push_back({{"op", e.op_id},
                                       {"stage", stage_name(e.stage)},
                                       {"event", "release"},
                                       {"sites", site_list(e.sites)},
                                       {"tones", e.sites.size()},
                                       {"duration_us", tm.t1_us}});
                }
                break;
        }
    }
    flush_pending();

    json doc;
    doc["grid"] = {{"rows", spec.array_len}, {"cols", spec.array_len}};
    doc["target"] = {{"row", spec.offset}, {"col", spec.offset}, {"side", spec.target_len}};
    doc["time_model"] = {{"t1_us", tm.t1_us},
                         {"t2_us", tm.t2_us()},
                         {"trap_um", tm.trap_um},
                         {"speed_um_per_ms", tm.speed_um_per_ms}};
    doc["counts"] = {{"C", m.C()}, {"R", m.R()}, {"D", m.D()}, {"M", m.M()}};
    doc["continuous_release"] = continuous_release;
    doc["records"] = std::move(records);
    doc["total_us"] = time_of(m, tm);
    return doc.dump(1);
}

namespace {

Site parse_site(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("schedule: malformed site");
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

Occupancy replay_schedule(const std::string& schedule_json, const Occupancy& initial) {
    json doc;
    try {
        doc = json::parse(schedule_json);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("schedule: not valid JSON: ") + e.what());
    }
    if (!doc.contains("grid") || !doc.contains("records"))
        throw std::invalid_argument("schedule: missing grid or records");
    if (doc["grid"]["rows"].get<int>() != initial.height() ||
        doc["grid"]["cols"].get<int>() != initial.width())
        throw std::invalid_argument("schedule: grid dimensions do not match the board");

    // Rebuild the event stream and run it through the same collision checks
    // the in-memory log uses.
    MoveLog log;
    std::map<int, int> op_ids;
    for (const json& rec : doc["records"]) {
        const std::string event = rec.at("event").get<std::string>();
        const Stage stage = rec.at("stage").get<std::string>() == "postprocess"
                                ? Stage::Postprocess
                                : Stage::Compression;
        const int file_op = rec.at("op").get<int>();
        if (!op_ids.count(file_op)) op_ids[file_op] = log.begin_op(stage);
        const int op = op_ids[file_op];

        std::vector<Site> sites;
        for (const json& js : rec.at("sites")) sites.push_back(parse_site(js));

        if (event == "capture") {
            log.capture(op, std::move(sites));
        } else if (event == "sweep") {
            const auto& dir = rec.at("dir");
            log.sweep(op, std::move(sites), dir[0].get<int>(), dir[1].get<int>(),
                      rec.at("steps").get<int>());
        } else if (event == "release") {
            log.release(op, std::move(sites));
        } else {
            throw std::invalid_argument("schedule: unknown event '" + event + "'");
        }
    }
    return replay(initial, log);
}

double schedule_total_us(const std::string& schedule_json) {
    json doc = json::parse(schedule_json);
    return doc.at("total_us").get<double>();
}

} // namespace rearr
