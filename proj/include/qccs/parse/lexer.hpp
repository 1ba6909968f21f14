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

#ifndef QCCS_PARSE_LEXER_HPP
#define QCCS_PARSE_LEXER_HPP

#include <string>
#include <vector>

namespace qccs::parse {

enum class Tok {
  Ident,
  Number,
  Semi,      // ;
  Comma,     // ,
  Colon,     // :
  Assign,    // =
  LParen,    // (
  RParen,    // )
  LBracket,  // [
  RBracket,  // ]
  LBrace,    // {
  RBrace,    // }
  Plus,      // +
  Minus,     // -
  Query,     // ?
  Bang,      // !
  Dot,       // .
  Pipe,      // |
  Parallel,  // ||
  Backslash, // backslash
  Less,      // <
  Greater,   // >
  End,
  Error,
};

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  std::size_t line = 0, col = 0;
};

struct LexResult {
  std::vector<Token> tokens;  // terminated by End
  std::string error;          // nonempty on lexical failure
  std::size_t error_line = 0, error_col = 0;
};

/// Tokenizes UTF-8 text; '//' starts a line comment.
LexResult lex(const std::string& text);

}  // namespace qccs::parse

#endif
