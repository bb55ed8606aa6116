#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dycos {

// Tokenizer contract for all text inputs: lowercase, split on
// non-alphanumeric bytes, drop tokens shorter than min_len. Bytes outside
// ASCII [A-Za-z0-9] act as separators, which keeps the contract
// deterministic for arbitrary UTF-8 input.
inline std::vector<std::string> tokenize(std::string_view text, std::size_t min_len = 2) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            current.push_back(static_cast<char>(c));
        } else if (c >= 'A' && c <= 'Z') {
            current.push_back(static_cast<char>(c - 'A' + 'a'));
        } else {
            if (current.size() >= min_len) tokens.push_back(current);
            current.clear();
        }
    }
    if (current.size() >= min_len) tokens.push_back(current);
    return tokens;
}

}  // namespace dycos
