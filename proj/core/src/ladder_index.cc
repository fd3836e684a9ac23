// Copyright 2026 The qladder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qladder/ladder_index.h"

#include <cctype>

#include "qladder/errors.h"

namespace qladder {

int linearize(LadderIndex idx, int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (idx.site < 1 || idx.site > n) {
        throw DomainError("site " + std::to_string(idx.site) + " outside [1, " + std::to_string(n) + "]");
    }
    return idx.chain == Chain::down ? idx.site : idx.site + n;
}

LadderIndex delinearize(int qubit, int n) {
    if (n < 1) {
        throw DomainError("chain length must be >= 1, got " + std::to_string(n));
    }
    if (qubit < 1 || qubit > 2 * n) {
        throw DomainError("qubit " + std::to_string(qubit) + " outside [1, " + std::to_string(2 * n) + "]");
    }
    if (qubit <= n) {
        return {qubit, Chain::down};
    }
    return {qubit - n, Chain::up};
}

std::string to_string(Chain chain) {
    return chain == Chain::up ? "up" : "down";
}

std::string to_string(LadderIndex idx) {
    return std::to_string(idx.site) + (idx.chain == Chain::up ? "u" : "d");
}

LadderIndex parse_ladder_index(const std::string &text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == 0 || pos == text.size()) {
        throw DomainError("bad ladder index '" + text + "' (expected e.g. 3u or 2down)");
    }
    int site = std::stoi(text.substr(0, pos));
    std::string rest = text.substr(pos);
    if (rest == "u" || rest == "up") {
        return {site, Chain::up};
    }
    if (rest == "d" || rest == "down") {
        return {site, Chain::down};
    }
    throw DomainError("bad chain in ladder index '" + text + "'");
}

}  // namespace qladder
