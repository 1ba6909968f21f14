// Copyright 2026 The qccs Authors
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

#include "qccs/parse/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace qccs::parse {

LexResult lex(const std::string& text) {
  LexResult r;
  std::size_t i = 0, line = 1, col = 1;
  const std::size_t n = text.size();

  auto push = [&](Tok k, std::string t, double num = 0.0) {
    r.tokens.push_back({k, std::move(t), num, line, col});
  };
  auto fail = [&](const std::string& msg) {
    r.error = msg;
    r.error_line = line;
    r.error_col = col;
  };

  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_')) {
        ++j;
      }
      push(Tok::Ident, text.substr(i, j - i));
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < n && text[j] == '.' && j + 1 < n &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < n && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
          ++k;
          while (k < n && std::isdigit(static_cast<unsigned char>(text[k])))
            ++k;
          j = k;
        }
      }
      const std::string t = text.substr(i, j - i);
      push(Tok::Number, t, std::strtod(t.c_str(), nullptr));
      col += j - i;
      i = j;
      continue;
    }
    switch (c) {
      case ';': push(Tok::Semi, ";"); break;
      case ',': push(Tok::Comma, ","); break;
      case ':': push(Tok::Colon, ":"); break;
      case '=': push(Tok::Assign, "="); break;
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '[': push(Tok::LBracket, "["); break;
      case ']': push(Tok::RBracket, "]"); break;
      case '{': push(Tok::LBrace, "{"); break;
      case '}': push(Tok::RBrace, "}"); break;
      case '+': push(Tok::Plus, "+"); break;
      case '-': push(Tok::Minus, "-"); break;
      case '?': push(Tok::Query, "?"); break;
      case '!': push(Tok::Bang, "!"); break;
      case '.': push(Tok::Dot, "."); break;
      case '\\': push(Tok::Backslash, "\\"); break;
      case '<': push(Tok::Less, "<"); break;
      case '>': push(Tok::Greater, ">"); break;
      case '|':
        if (i + 1 < n && text[i + 1] == '|') {
          push(Tok::Parallel, "||");
          ++i;
          ++col;
        } else {
          push(Tok::Pipe, "|");
        }
        break;
      case '#':
        fail("'#' begins the reserved fresh-variable namespace and cannot "
             "appear in source files");
        return r;
      default:
        fail(std::string("unexpected character '") + c + "'");
        return r;
    }
    ++i;
    ++col;
  }
  push(Tok::End, "");
  return r;
}

}  // namespace qccs::parse
