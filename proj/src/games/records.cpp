#include <json.hpp>

#include "gaars/error.hpp"
#include "gaars/games.hpp"

namespace gaars::games {

std::string to_json_line(const GameRecord& record) {
  const nlohmann::ordered_json j = {
      {"game", record.game}, {"trial", record.trial}, {"outcome", record.outcome}, {"rewinds", record.rewinds}};
  return j.dump();
}

GameRecord parse_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    return GameRecord{j.at("game").get<std::string>(), j.at("trial").get<std::size_t>(),
                      j.at("outcome").get<std::string>(), j.at("rewinds").get<std::size_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_encoding, std::string("bad game record: ") + e.what());
  }
}

}  // namespace gaars::games
