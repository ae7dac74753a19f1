// Copyright 2026 The Altruist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of games, network games and rationals. Rationals travel as
// strings ("3", "12/5"); decimal strings such as "2.4" are accepted on input
// and converted exactly.

#ifndef ALTRUIST_GAME_IO_HPP_
#define ALTRUIST_GAME_IO_HPP_

#include <filesystem>
#include <string>

#include "altruist/game.hpp"
#include "altruist/network.hpp"
#include "json.hpp"

namespace altruist {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

DelayFunction delay_from_json(const Json& j);
Json delay_to_json(const DelayFunction& d);

Game game_from_json(const Json& j);
Json game_to_json(const Game& game);

NetworkGame network_from_json(const Json& j);
Json network_to_json(const NetworkGame& net);

bool is_network_json(const Json& j);

// Either document shape; network games are expanded with the given cap.
Game load_game(const Json& j, std::size_t path_cap);

Json read_json_file(const std::filesystem::path& path);

CongestionVector congestion_from_json(const Game& game, const Json& j);
Json congestion_to_json(const Game& game, const CongestionVector& loads);

}  // namespace altruist

#endif  // ALTRUIST_GAME_IO_HPP_
