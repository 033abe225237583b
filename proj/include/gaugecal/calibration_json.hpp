/**
 * @file calibration_json.hpp
 * @brief JSON form of a CalibrationModel
 *
 *     {"method": "m4",
 *      "entries": [{"pixels": 49.378, "millimeters": 1.0}, ...],
 *      "slope": 0.0193..., "intercept": 0.0448...}
 *
 * `slope`/`intercept` appear only for m4. Numbers are written in shortest
 * round-trip form, so a model reads back bit-identical.
 */

#pragma once

#include <gaugecal/calibration.hpp>
#include <gaugecal/io.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>

namespace gaugecal {

inline nlohmann::json to_json(const CalibrationModel& model) {
    nlohmann::json j;
    j["method"] = method_tag(model.method());
    auto entries = nlohmann::json::array();
    for (const auto& e : model.table().entries()) {
        entries.push_back({{"pixels", e.pixels}, {"millimeters", e.millimeters}});
    }
    j["entries"] = std::move(entries);
    if (model.slope()) {
        j["slope"] = *model.slope();
        j["intercept"] = *model.intercept();
    }
    return j;
}

inline CalibrationModel model_from_json(const nlohmann::json& j) {
    try {
        const auto method = parse_method(j.at("method").get<std::string>());
        std::vector<std::pair<double, double>> refs;
        for (const auto& e : j.at("entries")) {
            refs.emplace_back(e.at("pixels").get<double>(), e.at("millimeters").get<double>());
        }
        CalibrationTable table(std::move(refs));
        if (method.kind == MethodKind::M4 && j.contains("slope")) {
            return CalibrationModel(std::move(table), j.at("slope").get<double>(), j.at("intercept").get<double>());
        }
        return CalibrationModel(method, std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed calibration model: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw DataError(std::string("invalid calibration model: ") + e.what());
    }
}

inline void save_model(const CalibrationModel& model, const std::filesystem::path& path) {
    io::write_file_atomic(path, to_json(model).dump(2) + "\n");
}

inline CalibrationModel load_model(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("'" + path.string() + "': " + e.what());
    }
    return model_from_json(j);
}

}  // namespace gaugecal
